"""Full analysis of one algebra and its text/JSON rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .algebra import StructureConstants, check_fundamental_identity
from .bounds import AlgebraParams, BoundReport, best_bounds
from .linalg import full_space, intersect
from .series import (
    ClassificationReport,
    classify,
    lie_center,
    lie_product_subspace,
)


@dataclass
class AnalysisReport:
    arity: int
    dim: int
    identity_status: str  # "ok", "violated" or "skipped"
    violation_count: int = 0
    first_violation: dict | None = None
    classification: ClassificationReport | None = None
    bounds: BoundReport | None = None
    warnings: list = field(default_factory=list)

    def as_dict(self) -> dict:
        d = {
            "algebra": {"arity": self.arity, "dim": self.dim},
            "identity": {
                "status": self.identity_status,
                "violation_count": self.violation_count,
                "first_violation": self.first_violation,
            },
            "warnings": list(self.warnings),
        }
        if self.classification is not None:
            d["classification"] = self.classification.as_dict()
        if self.bounds is not None:
            d["bounds"] = self.bounds.as_dict()
        return d


def _extras(sc: StructureConstants, report: ClassificationReport) -> dict:
    """Inputs for the relative constraints, read off the algebra itself."""
    extras = {}
    c = report.lie_class
    if c is not None and c >= 2:
        # j = c gives the smallest dim q^j_Lie and so the tightest additive term
        dim_qc = report.lie_series_dims[c - 1]
        extras["T39"] = {"dim_qj": dim_qc, "i": 2, "j": c}
        extras["T321"] = {"dim_qj": dim_qc, "i": 2, "j": c}
        extras["T313"] = {"i": 2}
    Z = lie_center(sc)
    q2 = lie_product_subspace(sc, full_space(sc.dim))
    extras["L22IV"] = {"dim_I": Z.dim, "dim_I_cap_q2": intersect(Z, q2).dim, "I": "Z_Lie(q)"}
    return extras


def analyze(sc: StructureConstants, skip_identity: bool = False) -> AnalysisReport:
    """Identity check, classification and the bound catalog.

    Bounds are only attached when the identity holds or ``skip_identity``
    is set, in which case a warning is recorded.
    """
    rep = AnalysisReport(sc.arity, sc.dim, "skipped")
    if not skip_identity:
        bad = check_fundamental_identity(sc)
        if bad:
            first = bad[0]
            rep.identity_status = "violated"
            rep.violation_count = len(bad)
            rep.first_violation = {
                "x": [i + 1 for i in first.x_tuple],
                "y": [i + 1 for i in first.y_tuple],
                "defect": [str(c) for c in first.defect],
            }
            return rep
        rep.identity_status = "ok"
    else:
        rep.warnings.append("fundamental identity not checked; bounds assume it holds")
    rep.classification = classify(sc, check_identity=False)
    cr = rep.classification
    if cr.lie_filiform and sc.dim > sc.arity and cr.lie_center_dim != 1:
        # e.g. [x1,x1] = x3 in dimension 3: Lie-filiform with dim Z_Lie = 2
        rep.warnings.append(
            f"Lie-filiform but dim Z_Lie = {cr.lie_center_dim} != 1; "
            "T34, COR_FILIFORM and COR_FILIFORM_N2 assume a one-dimensional Lie-center"
        )
    params = AlgebraParams.from_report(rep.classification)
    rep.bounds = best_bounds(params, _extras(sc, rep.classification))
    return rep


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    return str(v)


def _render_text(rep: AnalysisReport) -> str:
    out = ["[algebra]", f"arity: {rep.arity}", f"dim: {rep.dim}", "", "[identity]"]
    out.append(f"status: {rep.identity_status}")
    if rep.identity_status == "violated":
        fv = rep.first_violation
        out.append(f"violation_count: {rep.violation_count}")
        out.append(f"first_violation: x={_fmt(fv['x'])} y={_fmt(fv['y'])} defect={_fmt(fv['defect'])}")
    for w in rep.warnings:
        out.append(f"warning: {w}")
    if rep.classification is not None:
        out += ["", "[classification]"]
        for k, v in rep.classification.as_dict().items():
            out.append(f"{k}: {_fmt(v)}")
    if rep.bounds is not None:
        b = rep.bounds
        out += ["", "[bounds]"]
        out.append(f"best_bound: {_fmt(b.best_value)} ({b.best_id})")
        if b.best_exact:
            out.append(f"exact_multiplier_dim: {b.best_value}")
        for it in b.items:
            if it.applicable:
                tag = " exact" if it.exact else ""
                extra = ""
                if it.rational_value is not None and it.rational_value != it.value:
                    extra = f" (unfloored {it.rational_value})"
                out.append(f"{it.id}: {it.value}{tag}{extra}  # {it.reason}")
            else:
                out.append(f"{it.id}: n/a  # {it.reason}")
        out += ["", "[relative]"]
        for r in b.relative:
            if r.applicable:
                out.append(f"{r.id}: {r.description}")
            else:
                out.append(f"{r.id}: n/a  # {r.reason}")
    return "\n".join(out) + "\n"


def render_report(rep, format: str = "text") -> str:
    """Render an :class:`AnalysisReport` or a bare :class:`BoundReport`."""
    if format == "json":
        return json.dumps(rep.as_dict(), sort_keys=True, indent=2) + "\n"
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    if isinstance(rep, BoundReport):
        return render_bounds_text(rep)
    return _render_text(rep)


def render_bounds_text(b: BoundReport) -> str:
    shell = AnalysisReport(0, 0, "skipped", bounds=b)
    text = _render_text(shell)
    return text[text.index("[bounds]"):]


__all__ = ["AnalysisReport", "analyze", "render_report", "render_bounds_text"]
