"""Figurate numbers, non-decreasing sequences and a Pascal-triangle identity.

The identity checked here is

    C(2n, n) = sum_{i=0..n} C(2n-r-1-i, n-r-1) * P^(r)_{i+1},   1 <= r <= n-1,

where ``P^(r)_k = C(k+r-1, r)`` is the k-th r-dimensional figurate number.
:func:`pascal_identity_classes` confirms it term by term by enumerating the
non-decreasing sequences each term counts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bounds import binom

#: Default ceiling on ``t * count`` for explicit enumeration.
ENUMERATION_CAP = 10**6


class EnumerationCapExceeded(ValueError):
    pass


def figurate(k: int, r: int) -> int:
    """``P^(r)_k``; r = 2 gives triangular numbers, r = 3 tetrahedral."""
    if k < 1 or r < 1:
        raise ValueError("figurate numbers need k >= 1 and r >= 1")
    return binom(k + r - 1, r)


def count_nondecreasing(t: int, s: int) -> int:
    """Number of non-decreasing sequences of length ``s`` over ``{1..t}``."""
    if t < 1 or s < 0:
        raise ValueError("need t >= 1 and s >= 0")
    return binom(t + s - 1, s)


def enumerate_nondecreasing(t: int, s: int, cap: int = ENUMERATION_CAP) -> list[tuple]:
    """All non-decreasing length-``s`` sequences over ``{1..t}``, lexicographically."""
    if t * count_nondecreasing(t, s) > cap:
        raise EnumerationCapExceeded(f"t={t}, s={s} exceeds enumeration cap {cap}")
    return list(itertools.combinations_with_replacement(range(1, t + 1), s))


def _check_r(n, r):
    if n < 2:
        raise ValueError("need n >= 2")
    if not 1 <= r <= n - 1:
        raise ValueError(f"r must lie in [1, {n - 1}], got {r}")


def _term(n, r, i):
    return binom(2 * n - r - 1 - i, n - r - 1), figurate(i + 1, r)


def pascal_identity_check(n: int, r: int) -> tuple[int, int, bool]:
    _check_r(n, r)
    lhs = binom(2 * n, n)
    rhs = 0
    for i in range(n + 1):
        c, p = _term(n, r, i)
        rhs += c * p
    return lhs, rhs, lhs == rhs


@dataclass(frozen=True)
class ClassCount:
    i: int
    predicted: int
    enumerated: int


def pascal_identity_classes(n: int, r: int, cap: int = ENUMERATION_CAP) -> list[ClassCount]:
    """Per-term enumeration of the identity.

    Class ``i`` holds the non-decreasing sequences of length ``n`` over
    ``{1..n+1}`` whose first ``n - r`` entries reach exactly ``n + 1 - i``.
    """
    _check_r(n, r)
    seqs = enumerate_nondecreasing(n + 1, n, cap)
    counts = [0] * (n + 1)
    for s in seqs:
        counts[n + 1 - max(s[: n - r])] += 1
    out = []
    for i in range(n + 1):
        c, p = _term(n, r, i)
        out.append(ClassCount(i, c * p, counts[i]))
    return out


def rhombus_cells(n: int):
    """Pascal-triangle positions ``(row, col)`` in the rhombus of size ``n``.

    The rhombus has row 0 at its top and the central entry of row ``2n-2``
    at its bottom.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    for k in range(2 * n - 1):
        for j in range(max(0, k - n + 1), min(k, n - 1) + 1):
            yield k, j


def rhombus_sum(n: int) -> int:
    return sum(binom(k, j) for k, j in rhombus_cells(n))


def decomposition_table(n: int, r: int) -> list[tuple[int, int, int]]:
    """Rows ``(coefficient, P^(r)_{i+1}, product)`` for ``i = 0..n``."""
    _check_r(n, r)
    rows = []
    for i in range(n + 1):
        c, p = _term(n, r, i)
        rows.append((c, p, c * p))
    return rows


SEQUENCE_KINDS = ("central_binomial", "central_binomial_minus_one")


def sequences(kind: str, count: int) -> list[int]:
    """First ``count`` terms of ``C(2n-2, n-1)`` (or that minus one), from n = 2."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if kind not in SEQUENCE_KINDS:
        raise ValueError(f"unknown sequence {kind!r}; choose from {', '.join(SEQUENCE_KINDS)}")
    shift = 1 if kind == "central_binomial_minus_one" else 0
    return [binom(2 * n - 2, n - 1) - shift for n in range(2, count + 2)]
