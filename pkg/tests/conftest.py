from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import settings

from dcut.io import read_graph6_file

DATA = Path(__file__).parent / "data"

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@lru_cache(maxsize=None)
def corpus(n):
    """All connected graphs on n vertices up to isomorphism (n <= 8)."""
    return tuple(read_graph6_file(DATA / f"connected{n}.g6"))


def corpus_upto(n_max, n_min=1):
    for n in range(n_min, n_max + 1):
        yield from corpus(n)


@pytest.fixture
def small_corpus():
    return list(corpus_upto(7))
