#!/usr/bin/env python3

"""Wall-clock timer for checks and table rendering."""

import contextlib
import time


class Timer(object):
    """Accumulating timer with optional named laps."""

    def __init__(self):
        self.total_time = 0.0
        self.calls = 0
        self.start_time = None
        self.diff = 0.0
        self.laps = {}

    @property
    def average_time(self):
        return self.total_time / self.calls if self.calls else 0.0

    def tic(self):
        self.start_time = time.perf_counter()

    def toc(self):
        assert self.start_time is not None, "Timer.toc() called before tic()"
        self.diff = time.perf_counter() - self.start_time
        self.total_time += self.diff
        self.calls += 1
        self.start_time = None
        return self.diff

    @contextlib.contextmanager
    def lap(self, name):
        """Times the enclosed block and records it under name."""
        self.tic()
        try:
            yield self
        finally:
            self.laps[name] = self.laps.get(name, 0.0) + self.toc()

    def reset(self):
        self.total_time = 0.0
        self.calls = 0
        self.start_time = None
        self.diff = 0.0
        self.laps = {}
