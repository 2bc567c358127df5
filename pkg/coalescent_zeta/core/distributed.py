#!/usr/bin/env python3

"""Multiprocessing helpers."""

import multiprocessing
import traceback


class ChildException(Exception):
    """Wraps an exception from a child process."""

    def __init__(self, child_trace):
        super(ChildException, self).__init__(child_trace)


def _run(fun, args):
    """Runs a function from a child process, capturing any traceback."""
    try:
        return True, fun(*args)
    except Exception:
        return False, traceback.format_exc()


def multi_proc_map(num_proc, fun, args_list):
    """Applies fun to each argument tuple, in order (in a pool unless num_proc == 1).

    fun must be a module-level function. Results come back in input order; an
    exception in a worker is re-raised in the parent as ChildException.
    """
    args_list = list(args_list)
    # There is no need for multi-proc in the single-proc case
    if num_proc == 1 or len(args_list) <= 1:
        return [fun(*args) for args in args_list]
    with multiprocessing.Pool(processes=min(num_proc, len(args_list))) as pool:
        outputs = pool.starmap(_run, [(fun, args) for args in args_list])
    results = []
    for ok, value in outputs:
        if not ok:
            raise ChildException(value)
        results.append(value)
    return results
