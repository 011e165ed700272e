import random

import pytest

from conftest import all_perms
from descentkit._guard import GuardExceeded
from descentkit.oracle import (
    LsProfile, boundary_words, brute_greene, brute_lds, brute_len_w, brute_lis, brute_profile,
    reconstruct_triangle_from_profile,
)
from descentkit.perm import Permutation, parse_permutation
from descentkit.rsk import greene_sums
from descentkit.stats import ls_D
from descentkit.growth import stat_triangle

P = parse_permutation


def test_profile_worked_examples():
    prof = brute_profile(P("42783561"))
    assert prof[{3}] == 6
    assert prof[{1, 2, 3}] == 0
    assert prof[{1, 3, 4}] == 5


def test_profile_identity():
    prof = brute_profile(Permutation.identity(5))
    assert prof[()] == 5
    assert all(v == 0 for m, v in enumerate(prof.key()) if m)


def test_profile_ls_d():
    assert brute_profile(P("1573426")).ls_d(1) == 6


def test_profile_invariants():
    for p in all_perms(6):
        prof = brute_profile(p)
        assert 1 <= prof[()] <= 6
        for mask, v in prof.values.items():
            assert v <= 6
            if mask:
                assert v >= mask.bit_length() + 1


def test_guard(monkeypatch):
    monkeypatch.setenv("DESCENTKIT_MAX_N", "4")
    with pytest.raises(GuardExceeded):
        brute_profile(P("21534"))


def test_len_w_examples():
    assert brute_len_w(P("31452867"), "UUD") == 6
    assert brute_len_w(P("1573426"), "DU") == 5
    assert brute_len_w(P("31452"), "U") == brute_lis(P("31452"))


def test_quadratic_helpers():
    assert brute_lis(P("234615")) == 4
    assert brute_lds(P("42783561")) == 3
    assert brute_lis(()) == 0


def test_greene_against_rsk():
    for n in range(1, 7):
        for p in all_perms(n):
            for k in range(1, 4):
                assert brute_greene(p, k) == greene_sums(p, k)


def test_boundary_words():
    words = boundary_words(P("314526"))
    assert words(2, 5) == ("", "")
    assert words(3, 4) == ("D", "U")
    assert words(1, 3) == ("", "DU")


def _reconstruct(p):
    prof = brute_profile(p)
    return reconstruct_triangle_from_profile(len(p), lambda D: prof[D], boundary_words(p))


def test_reconstruct_examples():
    tri = _reconstruct(P("314526"))
    assert tri[2, 5][0] == 3
    assert all(tri[i, i] == (1, 1) for i in range(1, 7))
    p = P("3247516")
    assert _reconstruct(p) == stat_triangle(p)


@pytest.mark.parametrize("n", range(1, 6))
def test_reconstruct_all(n):
    for p in all_perms(n):
        assert _reconstruct(p).key() == stat_triangle(p).key()


@pytest.mark.parametrize("n", [8, 9, 10])
def test_random_agreement(n):
    rng = random.Random(n)
    for _ in range(1000):
        p = Permutation(rng.sample(range(1, n + 1), n))
        prof = brute_profile(p)
        for _ in range(50):
            D = {i for i in range(1, n) if rng.random() < 0.4}
            assert ls_D(p, D) == prof[D]


def test_profile_type():
    prof = LsProfile(3, {0: 2, 1: 2})
    assert prof[()] == 2 and prof[{1}] == 2 and prof[{2}] == 0
    assert prof.key() == (2, 2, 0, 0)
