#!/usr/bin/env python3

"""Shared pytest setup: import path and a clean config for every test."""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import coalescent_zeta.core.config as config  # noqa: E402


@pytest.fixture(autouse=True)
def clean_cfg():
    config.reset_cfg()
    yield
    config.reset_cfg()
