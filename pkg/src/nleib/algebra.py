"""Leibniz n-algebras given by structure constants.

Indices are 0-based internally; the text format (:mod:`nleib.io`) is 1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import (
    ZERO,
    DimensionError,
    Subspace,
    Vector,
    is_zero,
    span,
    subspace_sum,
    unit_vector,
    zero_subspace,
    zero_vector,
)

#: Refuse identity checks above this many (x, y) basis tuples unless forced.
IDENTITY_TUPLE_LIMIT = 10**7


class IdentityCheckTooLarge(RuntimeError):
    pass


class NotAnIdealError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class StructureConstants:
    """An n-linear bracket on ``Q^dim`` given on basis tuples.

    ``table`` maps an ``arity``-tuple of basis indices to a mapping
    ``{target index: nonzero coefficient}``. Missing tuples bracket to zero.
    """

    arity: int
    dim: int
    table: Mapping[tuple, Mapping[int, Fraction]] = field(default_factory=dict)
    names: tuple | None = None

    def __post_init__(self):
        if self.arity < 2:
            raise ValueError(f"arity must be >= 2, got {self.arity}")
        if self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        clean = {}
        for key, out in self.table.items():
            key = tuple(key)
            if len(key) != self.arity or not all(0 <= i < self.dim for i in key):
                raise ValueError(f"bad bracket index tuple {key}")
            row = {}
            for k, c in dict(out).items():
                if not 0 <= k < self.dim:
                    raise ValueError(f"bad target index {k}")
                c = Fraction(c)
                if c != 0:
                    row[k] = c
            if row:
                clean[key] = row
        object.__setattr__(self, "table", clean)
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != self.dim:
                raise ValueError(f"expected {self.dim} basis names, got {len(names)}")
            object.__setattr__(self, "names", names)

    @classmethod
    def from_brackets(cls, arity, dim, brackets, names=None):
        """Build from ``(indices, target, coeff)`` triples (0-based)."""
        table: dict = {}
        for key, k, c in brackets:
            row = table.setdefault(tuple(key), {})
            if k in row:
                raise ValueError(f"duplicate bracket {tuple(key)} -> {k}")
            row[k] = Fraction(c)
        return cls(arity, dim, table, names)

    def __eq__(self, other):
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return (
            self.arity == other.arity
            and self.dim == other.dim
            and self.table == other.table
            and self.names == other.names
        )

    def __hash__(self):
        return hash((self.arity, self.dim, tuple(self.entries())))

    def entries(self):
        """Nonzero constants as sorted ``(indices, target, coeff)`` triples."""
        for key in sorted(self.table):
            for k in sorted(self.table[key]):
                yield key, k, self.table[key][k]

    def basis_bracket(self, idx: Sequence[int]) -> Vector:
        """``[e_{i1}, ..., e_{in}]`` as a dense vector."""
        v = [ZERO] * self.dim
        for k, c in self.table.get(tuple(idx), {}).items():
            v[k] = c
        return tuple(v)

    def basis_lie_bracket(self, idx: Sequence[int]) -> Vector:
        """Symmetrized bracket of basis vectors: sum over all n! orderings."""
        acc: dict[int, Fraction] = {}
        for perm in itertools.permutations(idx):
            for k, c in self.table.get(perm, {}).items():
                acc[k] = acc.get(k, ZERO) + c
        v = [ZERO] * self.dim
        for k, c in acc.items():
            v[k] = c
        return tuple(v)


@dataclass(frozen=True)
class IdentityViolation:
    """Basis tuple where the fundamental identity fails (0-based indices)."""

    x_tuple: tuple
    y_tuple: tuple
    defect: Vector


def _check_args(sc: StructureConstants, args) -> list:
    if len(args) != sc.arity:
        raise DimensionError(f"expected {sc.arity} arguments, got {len(args)}")
    out = []
    for a in args:
        if len(a) != sc.dim:
            raise DimensionError(f"argument of length {len(a)} for a {sc.dim}-dim algebra")
        out.append(tuple(Fraction(x) for x in a))
    return out


def eval_bracket(sc: StructureConstants, args: Sequence[Sequence]) -> Vector:
    """Evaluate the n-linear bracket on arbitrary vectors."""
    args = _check_args(sc, args)
    v = [ZERO] * sc.dim
    for key, out in sc.table.items():
        c = Fraction(1)
        for a, i in zip(args, key):
            c *= a[i]
            if c == 0:
                break
        if c == 0:
            continue
        for k, ck in out.items():
            v[k] += c * ck
    return tuple(v)


def eval_lie_bracket(sc: StructureConstants, args: Sequence[Sequence]) -> Vector:
    """Sum of the bracket over all permutations of ``args``."""
    args = _check_args(sc, args)
    v = zero_vector(sc.dim)
    for perm in itertools.permutations(range(sc.arity)):
        w = eval_bracket(sc, [args[p] for p in perm])
        v = tuple(a + b for a, b in zip(v, w))
    return v


def eval_lie_bracket_alt(sc: StructureConstants, args: Sequence[Sequence]) -> Vector:
    """Lie bracket as ``[s,...,s]`` minus every non-injective substitution.

    ``s`` is the sum of the arguments; the subtracted terms run over all
    non-injective maps ``{1..n} -> {1..n}``.
    """
    args = _check_args(sc, args)
    n = sc.arity
    s = tuple(sum(col, ZERO) for col in zip(*args))
    v = eval_bracket(sc, [s] * n)
    for theta in itertools.product(range(n), repeat=n):
        if len(set(theta)) == n:
            continue
        w = eval_bracket(sc, [args[t] for t in theta])
        v = tuple(a - b for a, b in zip(v, w))
    return v


def _sparse_add(acc: dict, k: int, c: Fraction) -> None:
    t = acc.get(k, ZERO) + c
    if t:
        acc[k] = t
    else:
        acc.pop(k, None)


def _identity_defect(sc: StructureConstants, x: tuple, y: tuple) -> dict:
    table = sc.table
    acc: dict = {}
    # [[x_1..x_n], y_2..y_n]
    for k, c in table.get(x, {}).items():
        for t, ct in table.get((k,) + y, {}).items():
            _sparse_add(acc, t, c * ct)
    # - sum_i [x_1.., [x_i, y_2..y_n], .., x_n]
    for i, xi in enumerate(x):
        for k, c in table.get((xi,) + y, {}).items():
            for t, ct in table.get(x[:i] + (k,) + x[i + 1:], {}).items():
                _sparse_add(acc, t, -c * ct)
    return acc


def check_fundamental_identity(
    sc: StructureConstants,
    max_violations: int | None = None,
    force: bool = False,
) -> list[IdentityViolation]:
    """All basis tuples where the fundamental identity fails, in lexicographic order.

    By multilinearity it is enough to test basis vectors, so an empty list
    means ``sc`` is a Leibniz n-algebra.
    """
    n, m = sc.arity, sc.dim
    total = m ** (2 * n - 1)
    if total > IDENTITY_TUPLE_LIMIT and not force:
        raise IdentityCheckTooLarge(
            f"{total} tuples exceeds the limit of {IDENTITY_TUPLE_LIMIT}; pass force=True"
        )
    found = []
    for x in itertools.product(range(m), repeat=n):
        for y in itertools.product(range(m), repeat=n - 1):
            acc = _identity_defect(sc, x, y)
            if acc:
                defect = [ZERO] * m
                for k, c in acc.items():
                    defect[k] = c
                found.append(IdentityViolation(x, y, tuple(defect)))
                if max_violations is not None and len(found) >= max_violations:
                    return found
    return found


def identity_defect_dense(sc: StructureConstants, x: Sequence[Sequence], y: Sequence[Sequence]) -> Vector:
    """Defect LHS - RHS of the fundamental identity on arbitrary vectors."""
    n = sc.arity
    if len(x) != n or len(y) != n - 1:
        raise DimensionError("need n x-arguments and n-1 y-arguments")
    lhs = eval_bracket(sc, [eval_bracket(sc, x)] + list(y))
    rhs = zero_vector(sc.dim)
    for i in range(n):
        inner = eval_bracket(sc, [x[i]] + list(y))
        term = eval_bracket(sc, list(x[:i]) + [inner] + list(x[i + 1:]))
        rhs = tuple(a + b for a, b in zip(rhs, term))
    return tuple(a - b for a, b in zip(lhs, rhs))


def _bracket_with_slot(sc: StructureConstants, v: Vector, slot: int, others: tuple) -> Vector:
    """Bracket with ``v`` in ``slot`` and basis vectors ``others`` elsewhere."""
    acc = [ZERO] * sc.dim
    for j, c in enumerate(v):
        if c == 0:
            continue
        key = others[:slot] + (j,) + others[slot:]
        for k, ck in sc.table.get(key, {}).items():
            acc[k] += c * ck
    return tuple(acc)


def ideal_closure(sc: StructureConstants, S: Subspace) -> Subspace:
    """Smallest ideal containing ``S``."""
    if S.ambient != sc.dim:
        raise DimensionError("subspace and algebra dimensions differ")
    n, m = sc.arity, sc.dim
    current = S
    frontier = list(S.basis)
    while frontier:
        new = []
        for v in frontier:
            for slot in range(n):
                for others in itertools.product(range(m), repeat=n - 1):
                    w = _bracket_with_slot(sc, v, slot, others)
                    if not is_zero(w) and not is_zero(current.reduce(w)):
                        new.append(w)
                        current = span(current.basis + (w,), m)
        frontier = new
    return current


def is_ideal(sc: StructureConstants, S: Subspace) -> bool:
    return ideal_closure(sc, S) == S


def leibnizator_generators(sc: StructureConstants) -> Subspace:
    """Span of all brackets having two equal arguments.

    Over characteristic zero this is spanned by the brackets with ``e_a`` in
    two slots together with the polarized sums ``[..e_a..e_b..] + [..e_b..e_a..]``.
    """
    n, m = sc.arity, sc.dim
    gens = []
    for p, q in itertools.combinations(range(n), 2):
        for rest in itertools.product(range(m), repeat=n - 2):
            def key(a, b):
                k = list(rest)
                k.insert(p, a)
                k.insert(q, b)
                return tuple(k)

            for a in range(m):
                v = sc.basis_bracket(key(a, a))
                if not is_zero(v):
                    gens.append(v)
                for b in range(a + 1, m):
                    v = tuple(
                        s + t for s, t in zip(sc.basis_bracket(key(a, b)), sc.basis_bracket(key(b, a)))
                    )
                    if not is_zero(v):
                        gens.append(v)
    return span(gens, m)


def leibnizator(sc: StructureConstants) -> Subspace:
    """The ideal generated by brackets with two equal arguments."""
    return ideal_closure(sc, leibnizator_generators(sc))


def is_alternating(sc: StructureConstants) -> bool:
    """True iff basis brackets change sign under every adjacent transposition
    and vanish when two adjacent arguments coincide."""
    n, m = sc.arity, sc.dim
    for idx in itertools.product(range(m), repeat=n):
        v = sc.basis_bracket(idx)
        for i in range(n - 1):
            swapped = idx[:i] + (idx[i + 1], idx[i]) + idx[i + 2:]
            w = sc.basis_bracket(swapped)
            if any(a + b for a, b in zip(v, w)):
                return False
    return True


def is_n_lie(sc: StructureConstants) -> bool:
    return leibnizator(sc).is_zero()


def quotient(sc: StructureConstants, I: Subspace) -> tuple[StructureConstants, tuple]:
    """Quotient algebra ``sc / I`` and the projection matrix.

    The quotient basis is the images of the standard basis vectors at the
    non-pivot columns of ``I``. The projection is returned as a
    ``(dim - dim I) x dim`` matrix.
    """
    if not is_ideal(sc, I):
        raise NotAnIdealError("subspace is not an ideal")
    m = sc.dim
    pivots = set(I.pivots)
    keep = [j for j in range(m) if j not in pivots]
    if not keep:
        raise ValueError("quotient by the whole algebra is the zero algebra")
    pos = {j: i for i, j in enumerate(keep)}

    def project(v):
        r = I.reduce(v)
        return tuple(r[j] for j in keep)

    cols = [project(unit_vector(m, j)) for j in range(m)]
    proj = tuple(tuple(cols[j][i] for j in range(m)) for i in range(len(keep)))

    table = {}
    for key in itertools.product(keep, repeat=sc.arity):
        if key not in sc.table:
            continue
        img = project(sc.basis_bracket(key))
        row = {k: c for k, c in enumerate(img) if c != 0}
        if row:
            table[tuple(pos[j] for j in key)] = row
    names = None
    if sc.names is not None:
        names = tuple(sc.names[j] for j in keep)
    return StructureConstants(sc.arity, len(keep), table, names), proj


def lift(I: Subspace, v: Sequence) -> Vector:
    """Representative in the parent of a quotient vector (see :func:`quotient`)."""
    pivots = set(I.pivots)
    keep = [j for j in range(I.ambient) if j not in pivots]
    w = [ZERO] * I.ambient
    for j, c in zip(keep, v):
        w[j] = Fraction(c)
    return tuple(w)


def preimage(I: Subspace, S: Subspace) -> Subspace:
    """Preimage in the parent algebra of a subspace ``S`` of the quotient by ``I``."""
    return subspace_sum(I, span([lift(I, v) for v in S.basis], I.ambient))


def zero_algebra(n: int, m: int) -> StructureConstants:
    return StructureConstants(n, m, {})


__all__ = [
    "IDENTITY_TUPLE_LIMIT",
    "IdentityCheckTooLarge",
    "IdentityViolation",
    "NotAnIdealError",
    "StructureConstants",
    "check_fundamental_identity",
    "eval_bracket",
    "eval_lie_bracket",
    "eval_lie_bracket_alt",
    "ideal_closure",
    "identity_defect_dense",
    "is_alternating",
    "is_ideal",
    "is_n_lie",
    "leibnizator",
    "leibnizator_generators",
    "lift",
    "preimage",
    "quotient",
    "zero_algebra",
    "zero_subspace",
]
