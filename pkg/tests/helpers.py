"""Shared fixtures-as-functions for the test suite."""

import itertools
import random
from fractions import Fraction

from nleib.algebra import StructureConstants, check_fundamental_identity
from nleib.io import builtin_algebra

BUILTIN_NAMES = (
    [f"ex3_3:{m}" for m in range(2, 9)]
    + ["ex3_18", "ex3_20", "zero:2:2", "zero:2:3", "zero:3:4", "filippov:2", "filippov:3"]
)

_COEFFS = [Fraction(c) for c in ("1", "-1", "2", "-2", "1/2", "3")]


def random_table(rng, n, m, entries):
    table = {}
    for _ in range(entries):
        key = tuple(rng.randrange(m) for _ in range(n))
        if rng.random() < 0.6 and max(key) + 1 < m:
            k = rng.randrange(max(key) + 1, m)
        else:
            k = rng.randrange(m)
        table.setdefault(key, {})[k] = rng.choice(_COEFFS)
    return StructureConstants(n, m, table)


def random_leibniz_algebras(count=100, seed=20261018, max_n=3, max_m=4):
    """``count`` random sparse tables that satisfy the fundamental identity.

    Rejection sampling from a seeded generator, so the list is reproducible.
    Tables with no brackets at all are skipped.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_n)
        m = rng.randint(2, max_m)
        sc = random_table(rng, n, m, rng.randint(1, 4))
        if sc.table and not check_fundamental_identity(sc, max_violations=1):
            out.append(sc)
    return out


def builtins():
    return [(name, builtin_algebra(name)) for name in BUILTIN_NAMES]


def basis_tuples(sc, length=None):
    length = sc.arity if length is None else length
    return itertools.product(range(sc.dim), repeat=length)
