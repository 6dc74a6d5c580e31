import os

import pytest

from bettilab.graphs import ga_prime
from bettilab.hochster import hochster_betti


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("BETTI_LAB_THREADS", "1")))
    except ValueError:
        return 1


class DiagramCache:
    """Session-wide cache of engine diagrams keyed by (t, k, char)."""

    def __init__(self):
        self._store = {}

    def get(self, t, k, char=2):
        key = (t, k, char)
        if key not in self._store:
            self._store[key] = hochster_betti(ga_prime(t, k), char, threads=_threads())
        return self._store[key]


@pytest.fixture(scope="session")
def diagrams():
    return DiagramCache()
