"""Command line front end.

Exit codes: 0 when every requested check passes, 1 when a verification or
internal identity fails, 2 for usage errors (bad flags, bad theorem name,
violated input hypotheses).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import __version__
from .bondal import VARIANT_CURVE, VARIANT_STRUCTURE, E2Page, e2_page, reconstruct
from .catalog import CaseSpec, case_to_json, list_cases, verify_all
from .cohomology import BundleNumerics, cohomology_q2, euler_char
from .errors import NefQ2Error, ReconstructionError
from .ktheory import ses_quotient_chern, sum_of_lines, to_chern, twist_chern
from .picard import BiDegree


def _bidegree(text: str) -> BiDegree:
    try:
        a, b = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b' integers, got {text!r}")
    return BiDegree(a, b)


def _line_term(text: str) -> tuple[BiDegree, int]:
    deg, _, mult = text.partition(":")
    try:
        count = int(mult) if mult else 1
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad multiplicity in {text!r}")
    if count < 0:
        raise argparse.ArgumentTypeError(f"negative multiplicity in {text!r}")
    return (_bidegree(deg), count)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nefq2",
        description="Exact cohomology, K-theory and classification checks on the quadric surface.",
    )
    parser.add_argument("--version", action="version", version=f"nefq2 {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("cohomology", help="h^i of the line bundle O(a,b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = commands.add_parser("chi", help="Euler characteristic of a twisted bundle")
    p.add_argument("rank", type=int)
    p.add_argument("c1a", type=int)
    p.add_argument("c1b", type=int)
    p.add_argument("c2", type=int)
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)

    p = commands.add_parser("twist", help="Chern data of E tensor O(la,lb)")
    p.add_argument("rank", type=int)
    p.add_argument("c1a", type=int)
    p.add_argument("c1b", type=int)
    p.add_argument("c2", type=int)
    p.add_argument("la", type=int)
    p.add_argument("lb", type=int)

    p = commands.add_parser(
        "ses",
        help="quotient Chern data for 0 -> sub -> mid -> Q -> 0 of line bundle sums",
    )
    p.add_argument(
        "--sub",
        action="append",
        default=[],
        type=_line_term,
        metavar="A,B[:MULT]",
        help="line bundle summand of the sub (repeatable; use --sub=-1,-2 for negatives)",
    )
    p.add_argument(
        "--mid",
        action="append",
        default=[],
        type=_line_term,
        metavar="A,B[:MULT]",
        help="line bundle summand of the middle (repeatable)",
    )

    p = commands.add_parser("bondal", help="second page and module-profile reconstruction")
    p.add_argument("c2", type=int)
    p.add_argument("rank", type=int)
    p.add_argument(
        "--variant",
        choices=[VARIANT_CURVE, VARIANT_STRUCTURE],
        help="required meaning for c2=8; omitted there, both variants print",
    )

    p = commands.add_parser("catalog", help="the classification tables")
    catalog_commands = p.add_subparsers(dest="catalog_command", required=True)
    p = catalog_commands.add_parser("list", help="list the cases of a table")
    p.add_argument(
        "--theorem",
        choices=["main22", "quadric21", "halfmax", "nearmax", "all"],
        default="all",
        help="table to list ('all' = both parameter-free tables)",
    )
    p.add_argument("--c1", type=_bidegree, metavar="A,B", help="determinant for parametric tables")
    p.add_argument("--b-param", type=int, dest="b_param", help="splitting degree for halfmax")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = commands.add_parser("verify", help="recompute and check a table")
    p.add_argument("theorem", choices=["main22", "quadric21", "halfmax", "nearmax", "all"])
    p.add_argument("--rank-min", type=int, default=None)
    p.add_argument("--rank-max", type=int, default=10)
    p.add_argument("--c1", type=_bidegree, metavar="A,B")
    p.add_argument("--b-param", type=int, dest="b_param")
    p.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _dump(document: dict[str, Any]) -> str:
    return json.dumps(document, sort_keys=True, indent=2)


def _line_label(deg: BiDegree, mult: object) -> str:
    base = "O" if deg == BiDegree(0, 0) else f"O({deg.a},{deg.b})"
    text = str(mult)
    if text == "1":
        return base
    if "+" in text or "-" in text:
        return f"{base}^({text})"
    return f"{base}^{text}"


def _case_line(case: CaseSpec) -> str:
    sub = "+".join(_line_label(d, m) for d, m in case.sub_terms) or "0"
    mid = "+".join(_line_label(d, m) for d, m in case.mid_terms)
    coker = case.coker.label() if case.coker is not None else "0"
    twin = f" twin_of={case.twin_of}" if case.twin_of else ""
    return (
        f"{case.id}: 0 -> {sub} -> {mid} -> E -> {coker} -> 0"
        f"  [min_rank {case.min_rank}, c2 {case.expected_c2}]{twin}"
    )


def _print_page(page: E2Page) -> None:
    print(f"second page for c2={page.c2}, rank r={page.rank}" + (f", variant {page.variant}" if page.variant else ""))
    for pos in ((0, 0), (-1, 1), (-2, 1)):
        entry = page.entries.get(pos)
        label = entry.label if entry is not None else "0"
        print(f"  (p,q)=({pos[0]},{pos[1]}): {label}")
    print("  four-term identity: PASS")
    abutment = to_chern(page.convergence_class())
    print(f"  converges to {abutment}: PASS")


def _run_bondal(args: argparse.Namespace) -> int:
    variants: list[str | None]
    if args.c2 == 8 and args.variant is None:
        variants = [VARIANT_CURVE, VARIANT_STRUCTURE]
    else:
        variants = [args.variant]
    for variant in variants:
        _print_page(e2_page(args.c2, args.rank, variant))
    rebuilt = reconstruct(BundleNumerics(args.rank, BiDegree(2, 2), args.c2))
    print(f"module-profile reconstruction: {rebuilt}: PASS")
    return 0


def _gather_verify_cases(args: argparse.Namespace) -> list[tuple[str, dict[str, Any]]]:
    theorems = ["main22", "quadric21"] if args.theorem == "all" else [args.theorem]
    return [(t, {"c1": args.c1, "b": args.b_param}) for t in theorems]


def _run_verify(args: argparse.Namespace) -> int:
    reports = []
    for theorem, params in _gather_verify_cases(args):
        reports.extend(
            verify_all(theorem, args.rank_min, args.rank_max, c1=params["c1"], b=params["b"])
        )
    passed = sum(1 for r in reports if r.passed)
    failed = len(reports) - passed
    if args.format == "json":
        document = {
            "tool_version": __version__,
            "invocation": "nefq2 " + " ".join(args.raw_argv),
            "results": [r.to_json() for r in reports],
            "summary": {"total": len(reports), "passed": passed, "failed": failed},
        }
        print(_dump(document))
    else:
        by_case: dict[str, list[Any]] = {}
        order: list[str] = []
        for r in reports:
            if r.case_id not in by_case:
                order.append(r.case_id)
            by_case.setdefault(r.case_id, []).append(r)
        for case_id in order:
            group = by_case[case_id]
            ranks = f"r={group[0].rank_tested}..{group[-1].rank_tested}"
            ok = all(r.passed for r in group)
            sample = group[0]
            flags = sample.flags
            print(
                f"{case_id}  c2={sample.computed.c2}  {ranks}  "
                f"weak_fano={'yes' if flags['weak_fano'] else 'no'}  "
                f"{'PASS' if ok else 'FAIL'}"
            )
            if not ok:
                for r in group:
                    for check in r.checks:
                        if not check.passed:
                            print(f"    r={r.rank_tested} {check.name}: {check.detail}")
        print(f"summary: {passed}/{len(reports)} checks passed, {failed} failed")
    return 0 if failed == 0 else 1


def _run_catalog_list(args: argparse.Namespace) -> int:
    theorems = ["main22", "quadric21"] if args.theorem == "all" else [args.theorem]
    cases: list[CaseSpec] = []
    for theorem in theorems:
        cases.extend(list_cases(theorem, c1=args.c1, b=args.b_param))
    if args.format == "json":
        print(_dump({"cases": [case_to_json(c) for c in cases]}))
    else:
        for case in cases:
            print(_case_line(case))
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    raw_argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    args = parser.parse_args(raw_argv)
    args.raw_argv = raw_argv
    try:
        if args.command == "cohomology":
            v = cohomology_q2(BiDegree(args.a, args.b))
            print(f"h0={v.h0} h1={v.h1} h2={v.h2} chi={v.chi}")
            return 0
        if args.command == "chi":
            e = BundleNumerics(args.rank, BiDegree(args.c1a, args.c1b), args.c2)
            print(euler_char(e, args.p, args.q))
            return 0
        if args.command == "twist":
            e = BundleNumerics(args.rank, BiDegree(args.c1a, args.c1b), args.c2)
            print(twist_chern(e, BiDegree(args.la, args.lb)))
            return 0
        if args.command == "ses":
            if not args.sub or not args.mid:
                parser.error("ses needs at least one --sub and one --mid term")
            sub = to_chern(sum_of_lines(args.sub))
            mid = to_chern(sum_of_lines(args.mid))
            print(ses_quotient_chern(sub, mid))
            return 0
        if args.command == "bondal":
            return _run_bondal(args)
        if args.command == "catalog":
            return _run_catalog_list(args)
        if args.command == "verify":
            return _run_verify(args)
    except ReconstructionError as exc:
        print(f"internal identity failed: {exc}", file=sys.stderr)
        return 1
    except (NefQ2Error, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable command dispatch")


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
