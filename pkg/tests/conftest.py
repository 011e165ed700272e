from itertools import permutations

import pytest
from hypothesis import strategies as st

from descentkit.perm import Permutation


def all_perms(n):
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def perms_up_to(n):
    return [p for k in range(1, n + 1) for p in all_perms(k)]


@st.composite
def perm_strategy(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return Permutation(draw(st.permutations(range(1, n + 1))))


@pytest.fixture(scope="session")
def s6():
    return perms_up_to(6)
