"""Command-line entry point (``nleib`` / ``python -m nleib``).

Exit codes: 0 on success, 1 for domain failures (identity violations,
parse errors, failed checks), 2 for usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import combinatorics as comb
from .algebra import IdentityCheckTooLarge, check_fundamental_identity
from .bounds import AlgebraParams, best_bounds, binom
from .io import ParseError, builtin, builtin_algebra, parse_algebra
from .report import analyze, render_report


class CommandFailed(Exception):
    pass


def _load(source: str):
    """Read an algebra from a path, ``-`` for stdin, or a built-in name."""
    if source == "-":
        return parse_algebra(sys.stdin.read())
    if os.path.exists(source):
        with open(source, encoding="utf-8") as f:
            return parse_algebra(f.read())
    try:
        return builtin_algebra(source)
    except ValueError:
        raise CommandFailed(f"no such file or built-in example: {source}") from None


def cmd_verify(args, out):
    sc = _load(args.file)
    bad = check_fundamental_identity(sc, max_violations=args.max_violations, force=args.force)
    if not bad:
        out.write("identity: ok\n")
        return 0
    out.write(f"identity: violated ({len(bad)} shown)\n")
    for v in bad:
        x = " ".join(str(i + 1) for i in v.x_tuple)
        y = " ".join(str(i + 1) for i in v.y_tuple)
        d = " ".join(str(c) for c in v.defect)
        out.write(f"x=({x}) y=({y}) defect=({d})\n")
    return 1


def cmd_analyze(args, out):
    sc = _load(args.file)
    rep = analyze(sc, skip_identity=args.skip_identity)
    out.write(render_report(rep, args.format))
    return 0 if rep.identity_status != "violated" else 1


def cmd_bounds(args, out):
    p = AlgebraParams(
        n=args.n, m=args.m, d=args.d, lie_class=args.lie_class,
        lie_filiform=args.lie_filiform, lie_maximal_class=args.maximal_class,
        lie_abelian=args.abelian, m_central=args.m_central,
    )
    out.write(render_report(best_bounds(p), args.format))
    return 0


def cmd_identity(args, out):
    ok = True
    oracle_max = args.oracle_max_n if args.oracle_max_n is not None else 0
    for n in range(2, args.max_n + 1):
        for r in range(1, n):
            lhs, rhs, eq = comb.pascal_identity_check(n, r)
            line = f"n={n} r={r} C(2n,n)={lhs} sum={rhs} {'ok' if eq else 'MISMATCH'}"
            ok &= eq
            if n <= oracle_max:
                classes = comb.pascal_identity_classes(n, r)
                cls_ok = all(c.predicted == c.enumerated for c in classes)
                total = sum(c.enumerated for c in classes)
                cls_ok &= total == lhs
                ok &= cls_ok
                line += f" enumerated={total} classes {'ok' if cls_ok else 'MISMATCH'}"
            out.write(line + "\n")
    out.write("identity sweep: " + ("ok" if ok else "FAILED") + "\n")
    return 0 if ok else 1


def cmd_rhombus(args, out):
    s = comb.rhombus_sum(args.n)
    expected = binom(2 * args.n, args.n) - 1
    out.write(f"{s}\n")
    out.write(f"C(2n,n)-1 = {expected}: {'ok' if s == expected else 'MISMATCH'}\n")
    return 0 if s == expected else 1


def cmd_decompose(args, out):
    rows = comb.decomposition_table(args.n, args.r)
    total = 0
    for i, (c, p, prod) in enumerate(rows):
        out.write(f"{c} * P^({args.r})_{i + 1} = {c} * {p} = {prod}\n")
        total += prod
    expected = binom(2 * args.n, args.n)
    out.write(f"total: {total} (C({2 * args.n},{args.n}) = {expected})\n")
    return 0 if total == expected else 1


def cmd_sequence(args, out):
    out.write(", ".join(str(x) for x in comb.sequences(args.kind, args.count)) + "\n")
    return 0


def cmd_example(args, out):
    text = builtin(args.name)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        out.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nleib", description="Leibniz n-algebra analysis and bounds.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the fundamental identity")
    p.add_argument("file", help="algebra file, '-' for stdin, or a built-in name")
    p.add_argument("--max-violations", type=int, default=None)
    p.add_argument("--force", action="store_true", help="ignore the tuple-count limit")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="series, flags and multiplier bounds")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--skip-identity", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bounds", help="bound catalog from parameters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--class", dest="lie_class", type=int, default=None)
    p.add_argument("--lie-filiform", action="store_true")
    p.add_argument("--maximal-class", action="store_true")
    p.add_argument("--abelian", action="store_true")
    p.add_argument("--m-central", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("identity", help="Pascal-triangle identity sweep")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--oracle-max-n", type=int, default=None)
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("rhombus", help="rhombus sum of Pascal's triangle")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_rhombus)

    p = sub.add_parser("decompose", help="figurate decomposition of C(2n,n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("sequence", help="central binomial sequences")
    p.add_argument("kind", choices=comb.SEQUENCE_KINDS)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("example", help="print a built-in algebra file")
    p.add_argument("name")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_example)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except (ParseError, CommandFailed, IdentityCheckTooLarge, ValueError, OSError) as e:
        sys.stderr.write(f"nleib: error: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
