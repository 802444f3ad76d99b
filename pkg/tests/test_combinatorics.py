import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nleib.bounds import binom
from nleib.combinatorics import (
    EnumerationCapExceeded,
    count_nondecreasing,
    decomposition_table,
    enumerate_nondecreasing,
    figurate,
    pascal_identity_check,
    pascal_identity_classes,
    rhombus_cells,
    rhombus_sum,
    sequences,
)

T = [1, 3, 6, 10, 15, 21]
H = [1, 4, 10, 20, 35, 56]
P4 = [1, 5, 15, 35, 70, 126]


def test_binom_values():
    assert binom(10, 5) == 252
    assert binom(3, 5) == 0 and binom(3, -1) == 0


def test_figurate_values():
    assert figurate(4, 2) == 10
    assert figurate(6, 3) == 56
    assert figurate(6, 4) == 126
    assert [figurate(k, 2) for k in range(1, 7)] == T
    assert [figurate(k, 3) for k in range(1, 7)] == H
    assert [figurate(k, 4) for k in range(1, 7)] == P4
    assert all(figurate(1, r) == 1 for r in range(1, 10))
    with pytest.raises(ValueError):
        figurate(0, 2)


def test_figurate_recurrence():
    for r in range(2, 7):
        for k in range(1, 13):
            assert figurate(k, r) == sum(figurate(j, r - 1) for j in range(1, k + 1))


def test_count_nondecreasing():
    assert count_nondecreasing(4, 3) == 20
    assert count_nondecreasing(7, 0) == 1
    # n-1 slots over n letters: C(2n-2, n-1)
    assert count_nondecreasing(3, 2) == binom(4, 2)


def test_enumerate_nondecreasing():
    seqs = enumerate_nondecreasing(4, 3)
    assert len(seqs) == 20 == count_nondecreasing(4, 3)
    assert seqs == sorted(seqs)
    assert all(list(s) == sorted(s) for s in seqs)
    assert enumerate_nondecreasing(3, 0) == [()]


@given(st.integers(1, 6), st.integers(0, 5))
def test_enumeration_matches_brute_force(t, s):
    brute = [p for p in itertools.product(range(1, t + 1), repeat=s) if list(p) == sorted(p)]
    assert enumerate_nondecreasing(t, s) == brute


def test_enumeration_cap():
    with pytest.raises(EnumerationCapExceeded):
        enumerate_nondecreasing(4, 3, cap=79)
    assert len(enumerate_nondecreasing(4, 3, cap=80)) == 20


def test_pascal_identity_examples():
    assert pascal_identity_check(3, 2) == (20, 20, True)
    assert pascal_identity_check(4, 3) == (70, 70, True)
    assert pascal_identity_check(5, 4) == (252, 252, True)


def test_pascal_identity_sweep():
    for n in range(2, 13):
        for r in range(1, n):
            assert pascal_identity_check(n, r)[2]


def test_pascal_identity_bad_r():
    for r in (0, 4):
        with pytest.raises(ValueError):
            pascal_identity_check(4, r)
    with pytest.raises(ValueError):
        pascal_identity_classes(3, 3)


def test_classes_small():
    classes = pascal_identity_classes(2, 1)
    assert [c.i for c in classes] == [0, 1, 2]
    assert sum(c.enumerated for c in classes) == 6
    assert all(c.predicted == c.enumerated for c in classes)


def test_classes_match_enumeration():
    for n in range(2, 9):
        for r in range(1, n):
            classes = pascal_identity_classes(n, r)
            assert all(c.predicted == c.enumerated for c in classes), (n, r)
            assert sum(c.enumerated for c in classes) == binom(2 * n, n)


def test_rhombus_small_figures():
    assert [rhombus_sum(n) for n in (2, 3, 4, 5)] == [5, 19, 69, 251]
    assert sorted(rhombus_cells(2)) == [(0, 0), (1, 0), (1, 1), (2, 1)]


def test_rhombus_closed_form():
    for n in range(2, 16):
        assert rhombus_sum(n) == binom(2 * n, n) - 1
        cells = list(rhombus_cells(n))
        assert len(cells) == n * n == len(set(cells))


def _coeffs(n, r):
    return [c for c, _, _ in decomposition_table(n, r)]


def _terms(n, r):
    return [p for _, p, _ in decomposition_table(n, r)]


def test_decomposition_tables():
    # rows run i = 0..n against P_1..P_{n+1}
    assert _coeffs(3, 2) == [1, 1, 1, 1] and _terms(3, 2) == T[:4]
    assert _coeffs(4, 2) == [5, 4, 3, 2, 1] and _terms(4, 2) == T[:5]
    assert _coeffs(4, 3) == [1] * 5 and _terms(4, 3) == H[:5]
    assert _coeffs(5, 2) == [21, 15, 10, 6, 3, 1] and _terms(5, 2) == T
    assert _coeffs(5, 3) == [6, 5, 4, 3, 2, 1] and _terms(5, 3) == H
    assert _coeffs(5, 4) == [1] * 6 and _terms(5, 4) == P4


def test_decomposition_totals():
    for n in range(2, 11):
        for r in range(1, n):
            rows = decomposition_table(n, r)
            assert all(c * p == prod for c, p, prod in rows)
            assert sum(prod for _, _, prod in rows) == binom(2 * n, n)


def test_sequences():
    assert sequences("central_binomial", 6) == [2, 6, 20, 70, 252, 924]
    assert sequences("central_binomial_minus_one", 4) == [1, 5, 19, 69]
    with pytest.raises(ValueError):
        sequences("catalan", 3)
    with pytest.raises(ValueError):
        sequences("central_binomial", 0)


def test_minus_one_sequence_is_rhombus_shifted():
    seq = sequences("central_binomial_minus_one", 10)
    assert seq[1:] == [rhombus_sum(n) for n in range(2, 11)]
