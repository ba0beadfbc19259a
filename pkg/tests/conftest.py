import random

import pytest
from hypothesis import strategies as st

from ybe_aut import catalog
from ybe_aut.algebra import Permutation
from ybe_aut.cocycle import StructureGroup

SMALL = ["four", "g2", "g3", "zg2", "cyclic5", "trivial2", "trivial3", "trivial4"]


@pytest.fixture(scope="session")
def groups():
    return {name: StructureGroup(catalog.NAMED[name]()) for name in SMALL}


def permutations(n):
    return st.permutations(range(n)).map(lambda imgs: Permutation(tuple(imgs)))


solution_names = st.sampled_from(SMALL)


def words(n, max_len=6):
    return st.lists(st.tuples(st.integers(0, n - 1), st.sampled_from([1, -1])),
                    max_size=max_len).map(tuple)


def vectors(n, lo=-5, hi=5):
    return st.lists(st.integers(lo, hi), min_size=n, max_size=n).map(tuple)


@pytest.fixture
def rng():
    return random.Random(1234)
