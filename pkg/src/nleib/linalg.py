"""Exact linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction`, matrices are tuples of
such rows, and subspaces of ``Q^m`` are kept in reduced row-echelon form so
that two subspaces are equal exactly when their bases are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]
Matrix = tuple  # tuple[Vector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionError(ValueError):
    """Raised when vectors or subspaces live in different ambient spaces."""


def vec(*coords) -> Vector:
    """Build a rational vector from ints, strings or fractions."""
    return tuple(Fraction(c) for c in coords)


def zero_vector(m: int) -> Vector:
    return (ZERO,) * m


def unit_vector(m: int, i: int) -> Vector:
    """The standard basis vector ``e_i`` (0-based) of ``Q^m``."""
    v = [ZERO] * m
    v[i] = ONE
    return tuple(v)


def is_zero(v: Sequence[Fraction]) -> bool:
    return not any(v)


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def mat_vec(M: Sequence[Sequence[Fraction]], v: Vector) -> Vector:
    return tuple(sum((a * b for a, b in zip(row, v)), ZERO) for row in M)


def _rref_rows(rows: Iterable[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Row-reduce a copy of ``rows``; return nonzero rows and pivot columns."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    if any(len(r) != ncols for r in m):
        raise DimensionError("matrix is not rectangular")
    pivots = []
    r = 0
    for c in range(ncols):
        # first nonzero entry at or below row r
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rref(M: Sequence[Sequence]) -> Matrix:
    """Reduced row-echelon form of ``M`` with zero rows dropped."""
    rows, _ = _rref_rows(M)
    return tuple(tuple(r) for r in rows)


def rank(M: Sequence[Sequence]) -> int:
    return len(_rref_rows(M)[0])


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``Q^ambient`` stored by its canonical RREF basis."""

    ambient: int
    basis: Matrix = ()

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(row) if x != 0) for row in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """Residual of ``v`` after eliminating along this subspace's pivots.

        The residual vanishes at every pivot column and is zero iff ``v``
        lies in the subspace.
        """
        w = [Fraction(x) for x in v]
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c != 0:
                w = [a - c * b for a, b in zip(w, row)]
        return tuple(w)

    def __contains__(self, v) -> bool:
        return member(self, v)

    def __le__(self, other: "Subspace") -> bool:
        _check_same(self, other)
        return all(member(other, b) for b in self.basis)

    def __repr__(self) -> str:
        rows = ", ".join("(" + ", ".join(str(x) for x in r) + ")" for r in self.basis)
        return f"Subspace(ambient={self.ambient}, dim={self.dim}, basis=[{rows}])"


def _check_same(A: Subspace, B: Subspace) -> None:
    if A.ambient != B.ambient:
        raise DimensionError(f"ambient dimensions differ: {A.ambient} != {B.ambient}")


def zero_subspace(m: int) -> Subspace:
    return Subspace(m, ())


def full_space(m: int) -> Subspace:
    return Subspace(m, tuple(unit_vector(m, i) for i in range(m)))


def span(vs: Iterable[Sequence], ambient: int) -> Subspace:
    """Canonical subspace of ``Q^ambient`` spanned by ``vs``."""
    vs = list(vs)
    for v in vs:
        if len(v) != ambient:
            raise DimensionError(f"vector of length {len(v)} in Q^{ambient}")
    return Subspace(ambient, rref(vs))


def member(S: Subspace, v: Sequence) -> bool:
    if len(v) != S.ambient:
        raise DimensionError(f"vector of length {len(v)} in Q^{S.ambient}")
    return is_zero(S.reduce(v))


def subspace_sum(A: Subspace, B: Subspace) -> Subspace:
    _check_same(A, B)
    return span(A.basis + B.basis, A.ambient)


def kernel(M: Sequence[Sequence], ncols: int | None = None) -> Subspace:
    """Right null space ``{v : M v = 0}``.

    ``ncols`` is required when ``M`` has no rows.
    """
    if ncols is None:
        if not M:
            raise DimensionError("ncols is required for an empty matrix")
        ncols = len(M[0])
    rows, pivots = _rref_rows(M)
    if rows and len(rows[0]) != ncols:
        raise DimensionError(f"matrix has {len(rows[0])} columns, expected {ncols}")
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        basis.append(v)
    return span(basis, ncols)


def intersect(A: Subspace, B: Subspace) -> Subspace:
    """``A ∩ B`` via the null space of ``[A^T | -B^T]``."""
    _check_same(A, B)
    if A.is_zero() or B.is_zero():
        return zero_subspace(A.ambient)
    a, b = A.dim, B.dim
    cols = list(A.basis) + [scale(-1, v) for v in B.basis]
    system = [tuple(col[i] for col in cols) for i in range(A.ambient)]
    K = kernel(system, a + b)
    out = []
    for coeffs in K.basis:
        w = zero_vector(A.ambient)
        for c, v in zip(coeffs[:a], A.basis):
            if c != 0:
                w = add(w, scale(c, v))
        out.append(w)
    return span(out, A.ambient)


def coordinates(S: Subspace, v: Sequence) -> Vector:
    """Coordinates of ``v`` in the RREF basis of ``S`` (``v`` must lie in ``S``)."""
    if not member(S, v):
        raise ValueError("vector is not in the subspace")
    return tuple(Fraction(v[p]) for p in S.pivots)
