from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nleib.linalg import (
    DimensionError,
    full_space,
    intersect,
    kernel,
    mat_vec,
    member,
    rank,
    rref,
    span,
    subspace_sum,
    vec,
    zero_subspace,
)


def test_rref_examples():
    assert rref([[2, 4], [1, 2]]) == (vec(1, 2),)
    assert rref([[0, 1], [1, 0]]) == (vec(1, 0), vec(0, 1))
    # by hand: R2 -= R1 -> (0,1,2); R1 -= R2 -> (1,0,-1)
    assert rref([[1, 1, 1], [1, 2, 3]]) == (vec(1, 0, -1), vec(0, 1, 2))
    assert rref([]) == ()


def test_rref_fractions():
    assert rref([[2, 3]]) == ((Fraction(1), Fraction(3, 2)),)


def test_span_examples():
    S = span([vec(1, 2), vec(2, 4)], 2)
    assert S.basis == (vec(1, 2),) and S.dim == 1
    assert span([], 3).dim == 0
    assert span([vec(1, 0, 0), vec(1, 1, 0)], 3).basis == (vec(1, 0, 0), vec(0, 1, 0))


def test_span_dimension_mismatch():
    with pytest.raises(DimensionError):
        span([vec(1, 2)], 3)


def test_member_examples():
    S = span([vec(1, 2)], 2)
    assert member(S, vec(3, 6))
    assert not member(S, vec(1, 0))
    assert member(zero_subspace(2), vec(0, 0))
    with pytest.raises(DimensionError):
        member(S, vec(1, 2, 3))


def test_sum_examples():
    assert subspace_sum(span([vec(1, 0)], 2), span([vec(0, 1)], 2)) == full_space(2)
    A = span([vec(1, 1)], 2)
    assert subspace_sum(A, zero_subspace(2)) == A
    assert subspace_sum(A, span([vec(1, -1)], 2)).dim == 2
    with pytest.raises(DimensionError):
        subspace_sum(A, zero_subspace(3))


def test_intersect_examples():
    xy = span([vec(1, 0, 0), vec(0, 1, 0)], 3)
    yz = span([vec(0, 1, 0), vec(0, 0, 1)], 3)
    assert intersect(xy, yz) == span([vec(0, 1, 0)], 3)
    assert intersect(xy, xy) == xy
    # 1 + 1 - dim(sum)=2 gives 0
    assert intersect(span([vec(1, 1)], 2), span([vec(1, -1)], 2)).dim == 0


def test_kernel_examples():
    assert kernel([[1, 1]]) == span([vec(1, -1)], 2)
    assert kernel([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).dim == 0
    assert kernel([[1, 2, 3]]).dim == 2
    assert kernel([], 3) == full_space(3)


def test_subspace_order_and_contains():
    A = span([vec(1, 1, 0)], 3)
    B = span([vec(1, 0, 0), vec(0, 1, 0)], 3)
    assert A <= B and not B <= A
    assert vec(2, 2, 0) in A


small = st.integers(min_value=-3, max_value=3)


@st.composite
def vectors(draw, m, max_count=5):
    k = draw(st.integers(0, max_count))
    return [vec(*draw(st.lists(small, min_size=m, max_size=m))) for _ in range(k)]


@st.composite
def subspace_pairs(draw):
    m = draw(st.integers(1, 5))
    return m, span(draw(vectors(m)), m), span(draw(vectors(m)), m)


@settings(max_examples=150, deadline=None)
@given(subspace_pairs())
def test_dimension_formula(data):
    m, A, B = data
    S, I = subspace_sum(A, B), intersect(A, B)
    assert S.dim + I.dim == A.dim + B.dim
    assert I <= A and I <= B and A <= S and B <= S


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5).flatmap(lambda m: st.tuples(st.just(m), vectors(m))))
def test_span_canonical(data):
    m, vs = data
    S = span(vs, m)
    assert rref(S.basis) == S.basis
    assert span(S.basis, m) == S
    assert all(member(S, v) for v in vs)
    # canonical form: independent of input order
    assert span(list(reversed(vs)), m) == S
    piv = S.pivots
    assert list(piv) == sorted(set(piv))
    for row, p in zip(S.basis, piv):
        assert row[p] == 1
        assert all(other[p] == 0 for other in S.basis if other is not row)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5).flatmap(lambda m: st.tuples(st.just(m), vectors(m, 4))))
def test_kernel_rank_nullity(data):
    m, rows = data
    K = kernel(rows, m)
    assert K.dim == m - rank(rows)
    for v in K.basis:
        assert all(x == 0 for x in mat_vec(rows, v))
