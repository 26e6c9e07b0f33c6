from __future__ import annotations

import functools

import pytest

from divides import builtin_entries, gen_a, gen_depth1, gen_e6
from divides.report import run_pipeline


@functools.lru_cache(maxsize=None)
def entry(name: str):
    if name == "e6":
        return gen_e6()
    if name == "depth1":
        return gen_depth1()
    assert name.startswith("a")
    return gen_a(int(name[1:]))


@functools.lru_cache(maxsize=None)
def pipeline(name: str):
    return run_pipeline(entry(name).divide)


CORPUS_NAMES = [e.name for e in builtin_entries(12)]


@pytest.fixture(scope="session")
def corpus_names():
    return CORPUS_NAMES
