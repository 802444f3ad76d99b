"""Lie-central series, Lie-center and classification flags."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import (
    NotAnIdealError,
    StructureConstants,
    check_fundamental_identity,
    is_ideal,
    leibnizator,
    leibnizator_generators,
    preimage,
    quotient,
)
from .linalg import (
    ZERO,
    DimensionError,
    Subspace,
    full_space,
    intersect,
    kernel,
    span,
    zero_subspace,
)


class IdentityError(ValueError):
    """The structure constants do not satisfy the fundamental identity."""

    def __init__(self, violations):
        self.violations = violations
        first = violations[0]
        super().__init__(
            f"fundamental identity fails ({len(violations)}+ violations), "
            f"first at x={first.x_tuple}, y={first.y_tuple}"
        )


def _lie_images(sc: StructureConstants, v) -> list:
    """``[v, e_J]_Lie`` for every non-decreasing ``J`` of length n-1."""
    m = sc.dim
    out = []
    for J in itertools.combinations_with_replacement(range(m), sc.arity - 1):
        acc = [ZERO] * m
        for k, c in enumerate(v):
            if c:
                for t, ct in enumerate(sc.basis_lie_bracket((k,) + J)):
                    if ct:
                        acc[t] += c * ct
        out.append(tuple(acc))
    return out


def lie_product_subspace(sc: StructureConstants, A: Subspace) -> Subspace:
    """``[A, q, ..., q]_Lie``.

    The Lie bracket is fully symmetric, so ``A`` may sit in the first slot and
    the remaining slots range over non-decreasing basis tuples only.
    """
    if A.ambient != sc.dim:
        raise DimensionError("subspace and algebra dimensions differ")
    vs = []
    for a in A.basis:
        vs.extend(_lie_images(sc, a))
    return span(vs, sc.dim)


def product_subspace(sc: StructureConstants, A: Subspace, all_slots: bool = False) -> Subspace:
    """``[A, q, ..., q]`` with ordinary brackets (``A`` in slot 1 unless ``all_slots``)."""
    n, m = sc.arity, sc.dim
    slots = range(n) if all_slots else (0,)
    vs = []
    for a in A.basis:
        for slot in slots:
            for others in itertools.product(range(m), repeat=n - 1):
                acc = [ZERO] * m
                for j, c in enumerate(a):
                    if c:
                        key = others[:slot] + (j,) + others[slot:]
                        for k, ck in sc.table.get(key, {}).items():
                            acc[k] += c * ck
                vs.append(tuple(acc))
    return span(vs, m)


def _descending(sc: StructureConstants, step) -> list[Subspace]:
    terms = [full_space(sc.dim)]
    for _ in range(sc.dim + 1):
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
        if nxt.is_zero():
            break
    return terms


def lower_lie_series(sc: StructureConstants) -> list[Subspace]:
    """``q^1_Lie = q``, ``q^i_Lie = [q^{i-1}_Lie, q, ..., q]_Lie`` until stable.

    A stabilized nonzero term is listed once; the series reaches the zero
    subspace exactly when the algebra is Lie-nilpotent.
    """
    return _descending(sc, lambda A: lie_product_subspace(sc, A))


def lower_series(sc: StructureConstants, all_slots: bool = False) -> list[Subspace]:
    """Ordinary lower central series, first-slot convention by default."""
    return _descending(sc, lambda A: product_subspace(sc, A, all_slots))


def lie_center(sc: StructureConstants) -> Subspace:
    """``Z_Lie(q) = {x : [x, q, ..., q]_Lie = 0}``."""
    m = sc.dim
    rows = []
    for J in itertools.combinations_with_replacement(range(m), sc.arity - 1):
        cols = [sc.basis_lie_bracket((k,) + J) for k in range(m)]
        for t in range(m):
            row = tuple(cols[k][t] for k in range(m))
            if any(row):
                rows.append(row)
    return kernel(rows, m)


def upper_lie_series(sc: StructureConstants) -> list[Subspace]:
    """``Z_0 = 0`` and ``Z_{i+1}`` the preimage of ``Z_Lie(q / Z_i)``, until stable."""
    m = sc.dim
    terms = [zero_subspace(m)]
    for _ in range(m + 1):
        Z = terms[-1]
        if Z.dim == m:
            break
        if Z.is_zero():
            nxt = lie_center(sc)
        else:
            qz, _ = quotient(sc, Z)
            nxt = preimage(Z, lie_center(qz))
        if nxt == Z:
            break
        terms.append(nxt)
    return terms


def _dim_at(dims: list[int], i: int) -> int:
    """``dim`` of the i-th term (1-based), extending a stabilized series."""
    return dims[i - 1] if i <= len(dims) else dims[-1]


def _class_of(dims: list[int]) -> int | None:
    if dims[-1] != 0:
        return None
    return len(dims) - 1


def is_filiform_dims(dims: list[int], m: int, n: int) -> bool:
    if m < n:
        return False
    return all(_dim_at(dims, i) == m - n + 2 - i for i in range(2, m - n + 3))


def is_maximal_class_dims(dims: list[int], m: int) -> bool:
    return all(_dim_at(dims, i) == m + 1 - i for i in range(1, m + 2))


@dataclass
class ClassificationReport:
    dim: int
    arity: int
    lie_series_dims: list[int]
    series_dims: list[int]
    series_dims_all_slots: list[int]
    upper_lie_series_dims: list[int]
    lie_center_dim: int
    leibnizator_dim: int
    leibnizator_closure_enlarged: bool
    lie_class: int | None
    nilpotency_class: int | None
    lie_abelian: bool
    lie_nilpotent: bool
    nilpotent: bool
    lie_filiform: bool
    filiform: bool
    lie_maximal_class: bool
    maximal_class: bool
    n_lie: bool
    # dim of (q/Z_Lie)/(q/Z_Lie)^2_Lie; None when Z_Lie(q) = q
    m_central: int | None = None

    @property
    def lie_commutator_dim(self) -> int:
        return _dim_at(self.lie_series_dims, 2)

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["lie_commutator_dim"] = self.lie_commutator_dim
        return d


def central_quotient_abelianization_dim(sc: StructureConstants, Z: Subspace | None = None) -> int | None:
    """``dim (q/Z_Lie(q)) / (q/Z_Lie(q))^2_Lie``, or None when ``Z_Lie(q) = q``."""
    Z = lie_center(sc) if Z is None else Z
    if Z.dim == sc.dim:
        return None
    qz, _ = quotient(sc, Z)
    return qz.dim - lie_product_subspace(qz, full_space(qz.dim)).dim


def classify(sc: StructureConstants, check_identity: bool = True) -> ClassificationReport:
    """Series dimensions and every classification flag of ``sc``."""
    if check_identity:
        bad = check_fundamental_identity(sc, max_violations=1)
        if bad:
            raise IdentityError(bad)
    n, m = sc.arity, sc.dim
    lie_dims = [S.dim for S in lower_lie_series(sc)]
    dims = [S.dim for S in lower_series(sc)]
    dims_all = [S.dim for S in lower_series(sc, all_slots=True)]
    Z = lie_center(sc)
    try:
        upper = [S.dim for S in upper_lie_series(sc)]
    except NotAnIdealError:
        upper = []
    gens = leibnizator_generators(sc)
    leib = leibnizator(sc)
    return ClassificationReport(
        dim=m,
        arity=n,
        lie_series_dims=lie_dims,
        series_dims=dims,
        series_dims_all_slots=dims_all,
        upper_lie_series_dims=upper,
        lie_center_dim=Z.dim,
        leibnizator_dim=leib.dim,
        leibnizator_closure_enlarged=leib != gens,
        lie_class=_class_of(lie_dims),
        nilpotency_class=_class_of(dims),
        lie_abelian=_dim_at(lie_dims, 2) == 0,
        lie_nilpotent=lie_dims[-1] == 0,
        nilpotent=dims[-1] == 0,
        lie_filiform=is_filiform_dims(lie_dims, m, n),
        filiform=is_filiform_dims(dims, m, n),
        lie_maximal_class=is_maximal_class_dims(lie_dims, m),
        maximal_class=is_maximal_class_dims(dims, m),
        n_lie=leib.is_zero(),
        m_central=central_quotient_abelianization_dim(sc, Z),
    )


def relative_gap(sc: StructureConstants, I: Subspace) -> tuple[int, int, int]:
    """``dim(I ∩ q^2_Lie)``, ``dim [I, q, ..., q]_Lie`` and their difference."""
    if not is_ideal(sc, I):
        raise NotAnIdealError("subspace is not an ideal")
    q2 = lie_product_subspace(sc, full_space(sc.dim))
    a = intersect(I, q2).dim
    b = lie_product_subspace(sc, I).dim
    return a, b, a - b
