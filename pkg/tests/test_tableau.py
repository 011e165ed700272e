from itertools import permutations
from math import factorial

import pytest

from descentkit.perm import ParseError
from descentkit.tableau import (
    BijectionError, Partition, StandardTableau, chain_decode, chain_encode, conjugate,
    descent_count_bijection_check, enumerate_ssyt, enumerate_syt, format_tableau,
    parse_partition, parse_tableau, partitions, replacement_map, ssyt_count, syt_count,
    tableau_descents,
)
from descentkit._guard import GuardExceeded


def T(*rows):
    return StandardTableau.from_rows(rows)


def brute_syt(shape):
    """Fill the shape with every permutation of 1..n and keep the standard ones."""
    n = sum(shape)
    count = 0
    for values in permutations(range(1, n + 1)):
        rows, k = [], 0
        for length in shape:
            rows.append(values[k:k + length])
            k += length
        try:
            StandardTableau.from_rows(rows)
        except ValueError:
            continue
        count += 1
    return count


class TestPartition:
    def test_validation(self):
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((2, 0))
        assert Partition() == () and Partition().size == 0

    def test_conjugate(self):
        assert conjugate((3, 2, 2)) == (3, 3, 1)
        assert conjugate(()) == ()

    @pytest.mark.parametrize("n", range(0, 9))
    def test_conjugate_involution_and_fsym(self, n):
        for lam in partitions(n):
            assert conjugate(conjugate(lam)) == lam
            assert syt_count(lam) == syt_count(conjugate(lam))

    def test_partition_counts(self):
        assert [len(list(partitions(n))) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]

    def test_plus_one(self):
        assert Partition((2, 1)).plus_one() == (3, 1)
        assert Partition().plus_one() == (1,)

    def test_parse(self):
        assert parse_partition("3 2 2") == (3, 2, 2)
        with pytest.raises(ParseError):
            parse_partition("2 3")


class TestTableau:
    def test_validation(self):
        with pytest.raises(ValueError):
            T((1, 3), (2, 4), (5, 6, 7))
        with pytest.raises(ValueError):
            T((2, 1))
        with pytest.raises(ValueError):
            T((1, 2), (2,))
        with pytest.raises(ValueError):
            T((1, 3), (4,), (2,))

    def test_structural_equality(self):
        assert T((1, 2), (3,)) == T((1, 2), (3,))
        assert T((1, 2), (3,)) != T((1, 3), (2,))

    def test_parse_and_format(self):
        t = parse_tableau("[1 3 6][2 4][5 7]")
        assert t.rows == ((1, 3, 6), (2, 4), (5, 7))
        assert format_tableau(t) == "[1 3 6][2 4][5 7]"
        assert t.at(1, 2) == 3
        with pytest.raises(ParseError):
            parse_tableau("[1 2][2]")
        with pytest.raises(ParseError):
            parse_tableau("1 2 3")


class TestChain:
    def test_worked_insertion_tableau(self):
        p_tab = T((1, 2, 7), (3, 5), (4, 6))
        assert [tuple(lam) for lam in chain_encode(p_tab)] == [
            (), (1,), (2,), (2, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 2)]

    def test_single_cell(self):
        assert chain_encode(T((1,))) == ((), (1,))

    def test_hand_example(self):
        q = T((1, 2, 4), (3,), (5,))
        assert chain_encode(q) == ((), (1,), (2,), (2, 1), (3, 1), (3, 1, 1))
        assert chain_decode(chain_encode(q)) == q

    @pytest.mark.parametrize("n", range(1, 9))
    def test_roundtrip(self, n):
        for lam in partitions(n):
            for t in enumerate_syt(lam):
                assert chain_decode(chain_encode(t)) == t

    def test_decode_rejects_bad_chain(self):
        with pytest.raises(ValueError):
            chain_decode([(), (2,)])


class TestDescents:
    def test_worked_recording(self):
        assert tableau_descents(T((1, 3, 6), (2, 4), (5, 7))) == {1, 3, 4, 6}

    def test_single_row(self):
        assert tableau_descents(T((1, 2, 3, 4))) == frozenset()

    def test_hand_example(self):
        assert tableau_descents(T((1, 2, 4), (3,), (5,))) == {2, 4}


class TestCounts:
    @pytest.mark.parametrize("shape", [(1,), (2, 1), (3, 2), (2, 2), (3, 1, 1), (2, 2, 1), (4, 2)])
    def test_hook_length_matches_brute_fillings(self, shape):
        assert syt_count(shape) == brute_syt(shape)

    def test_frozen_values(self):
        assert syt_count((1,)) == 1
        assert syt_count((2, 1)) == 2
        assert syt_count((3, 2)) == 5

    @pytest.mark.parametrize("n", range(1, 9))
    def test_enumeration_count(self, n):
        for lam in partitions(n):
            tabs = list(enumerate_syt(lam))
            assert len(tabs) == syt_count(lam)
            assert len(set(tabs)) == len(tabs)
            assert all(t.shape == lam for t in tabs)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_sum_of_squares(self, n):
        assert sum(syt_count(lam) ** 2 for lam in partitions(n)) == factorial(n)

    def test_enumerate_examples(self):
        assert len(list(enumerate_syt((1, 1, 1)))) == 1
        assert len(list(enumerate_syt((2, 1)))) == 2
        assert len(list(enumerate_syt((2, 2)))) == 2

    def test_enumerate_cap(self):
        with pytest.raises(GuardExceeded):
            next(enumerate_syt((13,)))

    def test_ssyt_examples(self):
        for k in range(6):
            assert ssyt_count((1,), k) == k
        assert ssyt_count((1, 1), 2) == 1
        assert ssyt_count((2, 1), 2) == 2
        assert ssyt_count((2, 1), 2) == len(list(enumerate_ssyt((2, 1), 2)))
        assert ssyt_count((1, 1, 1), 2) == 0
        assert ssyt_count((), 3) == 1

    @pytest.mark.parametrize("n", range(1, 7))
    def test_ssyt_matches_enumeration(self, n):
        for lam in partitions(n):
            for k in range(5):
                assert ssyt_count(lam, k) == len(list(enumerate_ssyt(lam, k)))


class TestBijection:
    def test_worked_instance(self):
        q = T((1, 3, 6), (2, 4), (5, 7))
        assert len(tableau_descents(q)) + 3 == 7
        assert replacement_map(q) == ((1, 2, 3), (1, 2), (2, 3))

    def test_single_row(self):
        assert descent_count_bijection_check((5,)) == (1, 1)

    def test_two_by_two(self):
        direct, formula = descent_count_bijection_check((2, 2))
        assert direct == formula == ssyt_count((2, 2), 2) == 1

    @pytest.mark.parametrize("n", range(1, 8))
    def test_all_shapes(self, n):
        for lam in partitions(n):
            direct, formula = descent_count_bijection_check(lam)
            assert direct == formula

    def test_error_type(self):
        assert issubclass(BijectionError, AssertionError)
