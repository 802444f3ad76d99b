"""Upper bounds and relative constraints for the dimension of the Schur
Lie-multiplier ``M_Lie(q)`` of a finite-dimensional Leibniz n-algebra.

Nothing here computes ``M_Lie(q)`` itself; every function works from the
integer invariants collected in :class:`AlgebraParams`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or a < b:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class AlgebraParams:
    n: int
    m: int
    d: int
    lie_class: int | None = None
    lie_filiform: bool = False
    lie_maximal_class: bool = False
    lie_abelian: bool = False
    m_central: int | None = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("arity n must be >= 2")
        if self.m < 1:
            raise ValueError("dimension m must be >= 1")
        if not 0 <= self.d <= self.m:
            raise ValueError("need 0 <= d <= m")
        if self.lie_abelian and self.d != 0:
            raise ValueError("a Lie-abelian algebra has d = 0")
        if self.lie_class is not None and self.lie_class < 1:
            raise ValueError("Lie-nilpotency class must be >= 1")

    @property
    def m_bar(self) -> int:
        return self.m - self.d

    @property
    def lie_nilpotent(self) -> bool:
        return (
            self.lie_class is not None
            or self.lie_abelian
            or self.lie_filiform
            or self.lie_maximal_class
        )

    @property
    def effective_class(self) -> int | None:
        if self.lie_class is not None:
            return self.lie_class
        if self.lie_abelian:
            return 1
        if self.lie_maximal_class:
            return self.m
        if self.lie_filiform:
            return self.m - self.n + 1
        return None

    @classmethod
    def from_report(cls, report) -> "AlgebraParams":
        """Parameters of an algebra from its :class:`ClassificationReport`."""
        return cls(
            n=report.arity,
            m=report.dim,
            d=report.lie_commutator_dim,
            lie_class=report.lie_class,
            lie_filiform=report.lie_filiform,
            lie_maximal_class=report.lie_maximal_class,
            lie_abelian=report.lie_abelian,
            m_central=report.m_central,
        )


@dataclass(frozen=True)
class BoundItem:
    id: str
    applicable: bool
    reason: str
    value: int | None = None
    exact: bool = False
    # un-floored value for the half formulas
    rational_value: Fraction | None = None

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "applicable": self.applicable,
            "reason": self.reason,
            "value": self.value,
            "exact": self.exact,
            "rational_value": None if self.rational_value is None else str(self.rational_value),
        }


@dataclass(frozen=True)
class RelativeConstraint:
    id: str
    applicable: bool
    reason: str
    description: str = ""
    coefficients: Mapping[str, int] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "applicable": self.applicable,
            "reason": self.reason,
            "description": self.description,
            "coefficients": dict(self.coefficients),
        }


@dataclass(frozen=True)
class BoundReport:
    items: tuple
    best_value: int | None
    best_id: str | None
    best_exact: bool
    relative: tuple = ()

    def item(self, id: str) -> BoundItem:
        for it in self.items:
            if it.id == id:
                return it
        raise KeyError(id)

    def value(self, id: str) -> int | None:
        return self.item(id).value

    def as_dict(self) -> dict:
        return {
            "best": {"id": self.best_id, "value": self.best_value, "exact": self.best_exact},
            "items": [it.as_dict() for it in self.items],
            "relative": [r.as_dict() for r in self.relative],
        }


class UnknownBoundError(KeyError):
    pass


def _na(id, why):
    return BoundItem(id, False, why)


def _ok(id, why, value, exact=False, rational=None):
    return BoundItem(id, True, why, int(value), exact, rational)


def general_bound_sum(n: int, m: int) -> int:
    """``sum_{i=1..n} C(n-1, i-1) C(m, i)``."""
    return sum(binom(n - 1, i - 1) * binom(m, i) for i in range(1, n + 1))


def _thm_general(p):
    closed = binom(p.m + p.n - 1, p.n)
    summed = general_bound_sum(p.n, p.m)
    if closed != summed:
        raise ArithmeticError(f"Vandermonde mismatch {closed} != {summed}")
    return _ok("THM_GENERAL", "any Leibniz n-algebra", closed - p.d)


def _thm_n2(p):
    if p.n != 2:
        return _na("THM_N2", "requires n = 2")
    return _ok("THM_N2", "Leibniz algebra (n = 2)", p.m * (p.m + 1) // 2 - p.d)


def _cor_dm1(p):
    if not p.lie_nilpotent:
        return _na("COR_DM1", "requires Lie-nilpotent")
    if p.d != p.m - 1:
        return _na("COR_DM1", "requires d = m - 1")
    return _ok("COR_DM1", "Lie-nilpotent with d = m - 1", 1)


def _cor_nilp(p):
    if not p.lie_nilpotent:
        return _na("COR_NILP", "requires Lie-nilpotent")
    mb = p.m_bar
    v = binom(mb + p.n - 1, p.n) + p.d * binom(mb + p.n - 2, p.n - 1) - p.d
    return _ok("COR_NILP", "Lie-nilpotent", v)


def cor_nilp_n2_rational(m: int, d: int) -> Fraction:
    return Fraction(m * m + m - m * d, 2) - d


def cor_half_rational(n: int, m: int, d: int) -> Fraction:
    return Fraction((m + d - 1) * binom(m - d + n - 2, n - 1) - d, 2)


def cor_half_n2_rational(m: int, d: int) -> Fraction:
    return Fraction(m * m - m - d * d, 2)


def _cor_nilp_n2(p):
    if p.n != 2:
        return _na("COR_NILP_N2", "requires n = 2")
    if not p.lie_nilpotent:
        return _na("COR_NILP_N2", "requires Lie-nilpotent")
    r = cor_nilp_n2_rational(p.m, p.d)
    return _ok("COR_NILP_N2", "Lie-nilpotent Leibniz algebra", math.floor(r), rational=r)


def _cor_half(p):
    if not p.lie_nilpotent:
        return _na("COR_HALF", "requires Lie-nilpotent")
    if p.d < 1:
        return _na("COR_HALF", "requires d >= 1")
    r = cor_half_rational(p.n, p.m, p.d)
    return _ok("COR_HALF", "Lie-nilpotent with d >= 1", math.floor(r), rational=r)


def _cor_half_n2(p):
    if p.n != 2:
        return _na("COR_HALF_N2", "requires n = 2")
    if not p.lie_nilpotent:
        return _na("COR_HALF_N2", "requires Lie-nilpotent")
    if p.d < 1:
        return _na("COR_HALF_N2", "requires d >= 1")
    r = cor_half_n2_rational(p.m, p.d)
    return _ok("COR_HALF_N2", "Lie-nilpotent Leibniz algebra with d >= 1", math.floor(r), rational=r)


def filiform_branches(n: int, m: int) -> tuple[Fraction, int]:
    """The two candidate bounds for a Lie-filiform algebra (small-m, large-m)."""
    c = binom(2 * n - 2, n - 1)
    return Fraction(m * c, 2) - 1, binom(2 * n - 1, n) + c - 1


def _cor_filiform(p):
    if not p.lie_filiform:
        return _na("COR_FILIFORM", "requires Lie-filiform")
    if p.m <= p.n:
        return _na("COR_FILIFORM", "requires m > n")
    small, large = filiform_branches(p.n, p.m)
    if p.m <= 5:
        return _ok("COR_FILIFORM", "Lie-filiform, m > n, m <= 5", small)
    return _ok("COR_FILIFORM", "Lie-filiform, m > n, m >= 6", large)


def _cor_filiform_n2(p):
    if p.n != 2:
        return _na("COR_FILIFORM_N2", "requires n = 2")
    if not p.lie_filiform:
        return _na("COR_FILIFORM_N2", "requires Lie-filiform")
    if p.m == 2:
        return _ok("COR_FILIFORM_N2", "Lie-filiform with m = 2 (Lie-abelian)", 3, exact=True)
    return _ok("COR_FILIFORM_N2", "Lie-filiform Leibniz algebra, m > 2", p.m - 1 if p.m <= 5 else 4)


def _remark_abelian(p):
    if p.n == 2 and p.lie_abelian:
        return _ok("REMARK_ABELIAN", "Lie-abelian Leibniz algebra", p.m * (p.m + 1) // 2, exact=True)
    if p.lie_filiform and p.m == p.n:
        return _ok("REMARK_ABELIAN", "n-dimensional Lie-filiform (Lie-abelian)", binom(2 * p.n - 1, p.n))
    return _na("REMARK_ABELIAN", "requires n = 2 Lie-abelian or m = n Lie-filiform")


def _cor_maxclass(p):
    if not p.lie_maximal_class:
        return _na("COR_MAXCLASS", "requires Lie-nilpotent of maximal class")
    return _ok("COR_MAXCLASS", "Lie-nilpotent of maximal class", 1)


CATALOG = {
    "THM_GENERAL": _thm_general,
    "THM_N2": _thm_n2,
    "COR_DM1": _cor_dm1,
    "COR_NILP": _cor_nilp,
    "COR_NILP_N2": _cor_nilp_n2,
    "COR_HALF": _cor_half,
    "COR_HALF_N2": _cor_half_n2,
    "COR_FILIFORM": _cor_filiform,
    "COR_FILIFORM_N2": _cor_filiform_n2,
    "REMARK_ABELIAN": _remark_abelian,
    "COR_MAXCLASS": _cor_maxclass,
}

# Tie-break among equal values: exact results first, then narrower hypotheses.
PRIORITY = (
    "REMARK_ABELIAN",
    "COR_FILIFORM_N2",
    "COR_HALF_N2",
    "COR_NILP_N2",
    "THM_N2",
    "COR_MAXCLASS",
    "COR_DM1",
    "COR_FILIFORM",
    "COR_HALF",
    "COR_NILP",
    "THM_GENERAL",
)


def bound_value(id: str, p: AlgebraParams) -> BoundItem:
    try:
        fn = CATALOG[id]
    except KeyError:
        raise UnknownBoundError(id) from None
    return fn(p)


def best_bounds(p: AlgebraParams, extras: Mapping | None = None, order=None) -> BoundReport:
    """Evaluate the whole catalog and pick the smallest applicable bound."""
    ids = list(CATALOG) if order is None else list(order)
    evaluated = {i: bound_value(i, p) for i in ids}
    items = tuple(evaluated[i] for i in CATALOG if i in evaluated)
    live = [it for it in items if it.applicable]
    best = None
    if live:
        best = min(live, key=lambda it: (it.value, not it.exact, PRIORITY.index(it.id)))
    return BoundReport(
        items=items,
        best_value=None if best is None else best.value,
        best_id=None if best is None else best.id,
        best_exact=False if best is None else best.exact,
        relative=tuple(relative_constraints(p, extras)),
    )


# ---------------------------------------------------------------- relative

RELATIVE_IDS = ("T34", "T39", "T313", "T321", "L22IV")


class MissingExtrasError(ValueError):
    pass


def _t34(p, ex):
    c = binom(2 * p.n - 2, p.n - 1)
    desc = "dim M_Lie(q) = dim M_Lie(q/Z_Lie(q)) + k, {lo} <= k <= {hi}"
    if p.lie_maximal_class:
        return RelativeConstraint(
            "T34", True, "Lie-nilpotent of maximal class",
            desc.format(lo=-1, hi=0), {"k_min": -1, "k_max": 0},
        )
    if p.lie_filiform and p.m > p.n:
        return RelativeConstraint(
            "T34", True, "Lie-filiform with m > n",
            desc.format(lo=-1, hi=c - 1), {"k_min": -1, "k_max": c - 1},
        )
    return RelativeConstraint("T34", False, "requires Lie-filiform with m > n or maximal class")


def _need(ex, id, keys):
    missing = [k for k in keys if k not in ex]
    if missing:
        raise MissingExtrasError(f"{id} needs {', '.join(missing)}")
    return [ex[k] for k in keys]


def _t39(p, ex):
    if not p.lie_nilpotent:
        return RelativeConstraint("T39", False, "requires Lie-nilpotent")
    (dim_qj,) = _need(ex, "T39", ["dim_qj"])
    i, j = ex.get("i", "i"), ex.get("j", "j")
    per = binom(p.m_bar + p.n - 2, p.n - 1) - 1
    add = dim_qj * per
    return RelativeConstraint(
        "T39", True, "Lie-nilpotent",
        f"dim M_Lie(q) <= dim M_Lie(q/q^{i}_Lie) + {add}  (dim q^{j}_Lie = {dim_qj})",
        {"dim_qj": dim_qj, "per_dim": per, "additive": add, "m_bar": p.m_bar},
    )


def _t313(p, ex):
    c = p.effective_class
    if c is None:
        return RelativeConstraint("T313", False, "requires Lie-nilpotent")
    if c < 2:
        return RelativeConstraint("T313", False, "requires Lie-nilpotency class >= 2")
    i = ex.get("i", "i")
    rhs = (p.m - 1) * binom(p.m_bar + p.n - 2, p.n - 1)
    return RelativeConstraint(
        "T313", True, f"Lie-nilpotent of class {c} >= 2",
        f"dim M_Lie(q) + dim M_Lie(q/q^{i}_Lie) <= {rhs}",
        {"rhs": rhs, "m_bar": p.m_bar},
    )


def _t321(p, ex):
    if not p.lie_nilpotent:
        return RelativeConstraint("T321", False, "requires Lie-nilpotent")
    if p.m_central is None:
        return RelativeConstraint("T321", False, "requires m_central")
    (dim_qj,) = _need(ex, "T321", ["dim_qj"])
    i, j = ex.get("i", "i"), ex.get("j", "j")
    per = binom(p.m_central + p.n - 2, p.n - 1) - 1
    add = dim_qj * per
    return RelativeConstraint(
        "T321", True, "Lie-nilpotent",
        f"dim M_Lie(q) <= dim M_Lie(q/q^{i}_Lie) + {add}  (dim q^{j}_Lie = {dim_qj})",
        {"dim_qj": dim_qj, "per_dim": per, "additive": add, "m_central": p.m_central},
    )


def _l22iv(p, ex):
    dim_I, dim_cap = _need(ex, "L22IV", ["dim_I", "dim_I_cap_q2"])
    rhs = dim_I * p.m_bar ** (p.n - 1)
    label = ex.get("I", "I")
    return RelativeConstraint(
        "L22IV", True, f"{label} contained in Z_Lie(q) (asserted by caller)",
        f"dim M_Lie(q) + {dim_cap} <= dim M_Lie(q/{label}) + {rhs}",
        {"dim_I": dim_I, "dim_I_cap_q2": dim_cap, "rhs_additive": rhs},
    )


_RELATIVE = {"T34": _t34, "T39": _t39, "T313": _t313, "T321": _t321, "L22IV": _l22iv}


def relative_constraints(
    p: AlgebraParams,
    extras: Mapping | None = None,
    requested=None,
) -> list[RelativeConstraint]:
    """Relative constraints with fully evaluated integer coefficients.

    ``extras`` maps a constraint id to its inputs (``dim_qj`` for T39/T321,
    ``dim_I`` and ``dim_I_cap_q2`` for L22IV; optional ``i``/``j`` labels).
    Ids listed in ``requested`` raise :class:`MissingExtrasError` when their
    inputs are absent; others are reported as inapplicable instead.
    """
    extras = extras or {}
    requested = set(requested or ())
    unknown = requested - set(_RELATIVE)
    if unknown:
        raise UnknownBoundError(", ".join(sorted(unknown)))
    out = []
    for id, fn in _RELATIVE.items():
        try:
            out.append(fn(p, extras.get(id, {})))
        except MissingExtrasError as e:
            if id in requested:
                raise
            out.append(RelativeConstraint(id, False, f"missing input: {e}"))
    return out
