"""Plain-text algebra files and the built-in example library.

File grammar, one statement per line::

    # comment
    arity <n>
    dim <m>
    names <l1> ... <lm>            (optional)
    b <i1> ... <in> <k> <coeff>    [e_i1, ..., e_in] has coefficient coeff on e_k

Indices are 1-based. ``coeff`` is ``p`` or ``p/q`` with ``q > 0``.
``arity`` and ``dim`` must come before the first ``b`` line.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction

from .algebra import StructureConstants

_COEFF = re.compile(r"^[+-]?\d+(/\d+)?$")
_INT = re.compile(r"^\d+$")


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}")


def _parse_int(tok, lineno, what):
    if not _INT.match(tok):
        raise ParseError(lineno, f"expected a nonnegative integer for {what}, got {tok!r}")
    return int(tok)


def _parse_coeff(tok, lineno):
    if not _COEFF.match(tok):
        raise ParseError(lineno, f"bad coefficient {tok!r}")
    if "/" in tok and int(tok.split("/")[1]) == 0:
        raise ParseError(lineno, "zero denominator")
    return Fraction(tok)


def parse_algebra(text: str) -> StructureConstants:
    arity = dim = None
    names = None
    names_line = 0
    table: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, *rest = line.split()
        if head == "arity":
            if arity is not None:
                raise ParseError(lineno, "duplicate arity")
            if len(rest) != 1:
                raise ParseError(lineno, "arity takes one value")
            arity = _parse_int(rest[0], lineno, "arity")
            if arity < 2:
                raise ParseError(lineno, "arity must be >= 2")
        elif head == "dim":
            if dim is not None:
                raise ParseError(lineno, "duplicate dim")
            if len(rest) != 1:
                raise ParseError(lineno, "dim takes one value")
            dim = _parse_int(rest[0], lineno, "dim")
            if dim < 1:
                raise ParseError(lineno, "dim must be >= 1")
        elif head == "names":
            if names is not None:
                raise ParseError(lineno, "duplicate names")
            names, names_line = tuple(rest), lineno
        elif head == "b":
            if arity is None or dim is None:
                raise ParseError(lineno, "arity and dim must precede bracket lines")
            if len(rest) != arity + 2:
                raise ParseError(lineno, f"expected {arity} indices, a target and a coefficient")
            idx = [_parse_int(t, lineno, "index") for t in rest[: arity + 1]]
            for i in idx:
                if not 1 <= i <= dim:
                    raise ParseError(lineno, f"index {i} out of range 1..{dim}")
            coeff = _parse_coeff(rest[-1], lineno)
            if coeff == 0:
                raise ParseError(lineno, "zero coefficient")
            key = tuple(i - 1 for i in idx[:arity])
            k = idx[arity] - 1
            row = table.setdefault(key, {})
            if k in row:
                raise ParseError(lineno, "duplicate bracket line")
            row[k] = coeff
        else:
            raise ParseError(lineno, f"unknown statement {head!r}")
    if arity is None or dim is None:
        raise ParseError(0, "missing arity or dim header")
    if names is not None and len(names) != dim:
        raise ParseError(names_line, f"expected {dim} names, got {len(names)}")
    return StructureConstants(arity, dim, table, names)


def format_coeff(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_algebra(sc: StructureConstants, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"arity {sc.arity}")
    lines.append(f"dim {sc.dim}")
    if sc.names is not None:
        lines.append("names " + " ".join(sc.names))
    for key, k, c in sc.entries():
        idx = " ".join(str(i + 1) for i in key)
        lines.append(f"b {idx} {k + 1} {format_coeff(c)}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ builtins


def ternary_maximal_class(m: int) -> StructureConstants:
    """Leibniz 3-algebra with ``[x_i, x_1, x_1] = x_{i+1}``; nilpotent of maximal class."""
    if m < 2:
        raise ValueError("ex3_3 needs m >= 2")
    return StructureConstants(3, m, {(i, 0, 0): {i + 1: 1} for i in range(m - 1)})


def two_dim_leibniz() -> StructureConstants:
    """2-dim Leibniz algebra with ``[x, x] = y``."""
    return StructureConstants(2, 2, {(0, 0): {1: 1}}, ("x", "y"))


def lie_filiform_four() -> StructureConstants:
    """4-dim Lie-filiform Leibniz algebra."""
    return StructureConstants(
        2, 4,
        {(0, 0): {2: 1}, (0, 1): {3: 1}, (1, 0): {2: 1}, (2, 0): {3: 1}},
    )


def filippov(n: int) -> StructureConstants:
    """Simple (n+1)-dim n-Lie algebra: ``[e_1..^e_i..e_{n+1}] = (-1)^(n+1+i) e_i``,
    extended to all orderings by alternation."""
    if n < 2:
        raise ValueError("filippov needs n >= 2")
    m = n + 1
    table = {}
    for i in range(m):
        rest = tuple(j for j in range(m) if j != i)
        # 1-based sign (-1)^(n+1+i)
        base = 1 if (n + 1 + i + 1) % 2 == 0 else -1
        for perm in itertools.permutations(rest):
            table[perm] = {i: base * _perm_sign(perm)}
    return StructureConstants(n, m, table)


def _perm_sign(seq) -> int:
    inv = sum(1 for a, b in itertools.combinations(seq, 2) if a > b)
    return -1 if inv % 2 else 1


BUILTIN_NAMES = ("ex3_3:<m>", "ex3_18", "ex3_20", "zero:<n>:<m>", "filippov:<n>")


def builtin_algebra(name: str) -> StructureConstants:
    head, *params = name.split(":")
    try:
        args = [int(p) for p in params]
    except ValueError:
        raise ValueError(f"bad parameter in {name!r}") from None
    if head == "ex3_3" and len(args) == 1:
        return ternary_maximal_class(args[0])
    if head == "ex3_18" and not args:
        return two_dim_leibniz()
    if head == "ex3_20" and not args:
        return lie_filiform_four()
    if head == "zero" and len(args) == 2:
        return StructureConstants(args[0], args[1], {})
    if head == "filippov" and len(args) == 1:
        return filippov(args[0])
    raise ValueError(f"unknown example {name!r}; choose from {', '.join(BUILTIN_NAMES)}")


def builtin(name: str) -> str:
    """Text of a built-in algebra file."""
    return format_algebra(builtin_algebra(name), comment=f"builtin {name}")
