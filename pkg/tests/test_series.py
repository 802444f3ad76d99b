import pytest

from helpers import builtins, random_leibniz_algebras
from nleib.algebra import NotAnIdealError, StructureConstants, is_ideal
from nleib.io import builtin_algebra, ternary_maximal_class, two_dim_leibniz, lie_filiform_four
from nleib.linalg import full_space, intersect, span, unit_vector, zero_subspace
from nleib.series import (
    IdentityError,
    classify,
    lie_center,
    lie_product_subspace,
    lower_lie_series,
    lower_series,
    relative_gap,
    upper_lie_series,
)


def e(m, i):
    return unit_vector(m, i - 1)


def dims(terms):
    return [S.dim for S in terms]


def test_lie_product_examples():
    assert lie_product_subspace(two_dim_leibniz(), full_space(2)) == span([e(2, 2)], 2)
    q = lie_filiform_four()
    assert lie_product_subspace(q, span([e(4, 3), e(4, 4)], 4)) == span([e(4, 4)], 4)
    assert lie_product_subspace(q, zero_subspace(4)).is_zero()


def test_lower_lie_series_examples():
    assert dims(lower_lie_series(ternary_maximal_class(5))) == [5, 4, 3, 2, 1, 0]
    terms = lower_lie_series(lie_filiform_four())
    assert dims(terms) == [4, 2, 1, 0]
    assert terms[1] == span([e(4, 3), e(4, 4)], 4)
    assert terms[2] == span([e(4, 4)], 4)
    assert dims(lower_lie_series(StructureConstants(3, 3, {}))) == [3, 0]


def test_lower_series_examples():
    assert dims(lower_series(ternary_maximal_class(4))) == [4, 3, 2, 1, 0]
    # q^2 = <y>, q^3 = 0
    assert dims(lower_series(two_dim_leibniz())) == [2, 1, 0]
    assert dims(lower_series(StructureConstants(2, 4, {}))) == [4, 0]


def test_lower_series_basis_of_ternary_family():
    m = 6
    for i, S in enumerate(lower_series(ternary_maximal_class(m)), 1):
        assert S == span([e(m, j) for j in range(i, m + 1)], m)


def test_lie_center_examples():
    assert lie_center(two_dim_leibniz()) == span([e(2, 2)], 2)
    assert lie_center(ternary_maximal_class(5)) == span([e(5, 5)], 5)
    assert lie_center(StructureConstants(2, 3, {})) == full_space(3)


def test_upper_lie_series_examples():
    assert dims(upper_lie_series(ternary_maximal_class(4))) == [0, 1, 2, 3, 4]
    assert dims(upper_lie_series(two_dim_leibniz())) == [0, 1, 2]
    assert dims(upper_lie_series(StructureConstants(2, 3, {}))) == [0, 3]


def test_classify_examples():
    r = classify(ternary_maximal_class(5))
    assert r.lie_maximal_class and r.maximal_class and r.lie_class == 5
    r = classify(lie_filiform_four())
    assert r.lie_filiform and r.lie_class == 3
    r = classify(two_dim_leibniz())
    assert not r.lie_abelian and r.lie_class == 2 and r.lie_center_dim == 1


def test_classify_raises_on_identity_violation():
    bad = StructureConstants(2, 2, {(0, 0): {1: 1}, (1, 0): {0: 1}})
    with pytest.raises(IdentityError):
        classify(bad)


def test_relative_gap_examples():
    assert relative_gap(two_dim_leibniz(), span([e(2, 2)], 2)) == (1, 0, 1)
    assert relative_gap(lie_filiform_four(), span([e(4, 4)], 4)) == (1, 0, 1)
    assert relative_gap(lie_filiform_four(), zero_subspace(4)) == (0, 0, 0)
    with pytest.raises(NotAnIdealError):
        relative_gap(lie_filiform_four(), span([e(4, 1)], 4))


def test_filippov_is_lie_abelian_n_lie():
    r = classify(builtin_algebra("filippov:3"))
    assert r.n_lie and r.lie_abelian and r.lie_class == 1
    # ordinary brackets of a simple algebra never shrink
    assert r.series_dims == [4] and not r.nilpotent


def _check_invariants(q):
    m, n = q.dim, q.arity
    r = classify(q, check_identity=False)
    lie_terms = lower_lie_series(q)
    for S in lie_terms + lower_series(q):
        assert is_ideal(q, S)
    Z = lie_center(q)
    assert is_ideal(q, Z)
    for a, b in zip(lie_terms, lie_terms[1:]):
        assert b <= a and b.dim < a.dim
    q2 = lie_product_subspace(q, full_space(m))
    assert r.lie_abelian == q2.is_zero() == (Z.dim == m)
    upper = upper_lie_series(q)
    if r.lie_nilpotent:
        assert len(upper) - 1 == r.lie_class and upper[-1] == full_space(m)
    else:
        assert upper[-1] != full_space(m)
    if r.lie_filiform and m > n:
        last = lie_terms[m - n]
        assert last.dim == 1 and last <= Z
        if r.n_lie:
            assert Z == last
    if r.lie_maximal_class:
        assert intersect(q2, Z).dim == 1
    for I in (Z, q2):
        a, b, gap = relative_gap(q, I)
        assert gap == a - b >= 0
        assert lie_product_subspace(q, I) <= intersect(I, q2)


@pytest.mark.parametrize("name,q", builtins())
def test_invariants_on_builtins(name, q):
    _check_invariants(q)


def test_invariants_on_random_algebras():
    for q in random_leibniz_algebras(100):
        _check_invariants(q)


def test_lie_filiform_center_four_dim():
    q = lie_filiform_four()
    assert lie_center(q) == lower_lie_series(q)[2] == span([e(4, 4)], 4)


def test_lie_filiform_center_can_be_larger():
    # [x1,x1] = x3: q^2_Lie = <x3> so Lie-filiform, yet x2 is Lie-central too
    q = StructureConstants(2, 3, {(0, 0): {2: 1}})
    r = classify(q)
    assert r.lie_filiform and r.lie_series_dims == [3, 1, 0]
    assert lie_center(q) == span([e(3, 2), e(3, 3)], 3)


def test_filiform_definitions():
    from nleib.series import is_filiform_dims, is_maximal_class_dims

    assert is_filiform_dims([4, 2, 1, 0], 4, 2)
    assert not is_filiform_dims([4, 3, 2, 1, 0], 4, 2)
    assert is_maximal_class_dims([4, 3, 2, 1, 0], 4)
    # m = n: Lie-filiform means Lie-abelian
    assert is_filiform_dims([3, 0], 3, 3)
    assert not is_filiform_dims([2, 0], 2, 3)
