"""Command-line front end.

Subcommands: ``diagram`` (build and export), ``verify-family`` (grid
verification stream as JSON lines), ``group`` (presentation), and
``homology`` (abelian invariants).  Exit codes: 0 success / all checks
pass, 1 a verification verdict failed, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .diagram import (
    Diagram,
    DunwoodyParams,
    InadmissibleDiagramError,
    ParameterError,
    build_diagram,
    closed_presentation,
    family_params,
    heegaard_presentation,
    to_dot,
    to_json,
    validate_params,
)
from .presentation import homology
from .verify import verify_grid

USAGE_ERROR = 2
VERIFICATION_FAILURE = 1


def _parse_ints(text: str, count: int, flag: str) -> list[int]:
    parts = [piece.strip() for piece in text.split(",")]
    if len(parts) != count:
        raise ParameterError(f"{flag} expects {count} comma-separated values")
    try:
        return [int(piece) for piece in parts]
    except ValueError as exc:
        raise ParameterError(f"{flag}: {exc}") from None


def _parse_sign(token: str) -> int:
    if token in ("+", "+1"):
        return 1
    if token in ("-", "-1"):
        return -1
    raise ParameterError(f"sign must be + or -, got {token!r}")


def _parse_family(text: str) -> tuple[int, int, int]:
    parts = [piece.strip() for piece in text.split(",")]
    if len(parts) != 3:
        raise ParameterError("--family expects p,m,SIGN")
    try:
        p, m = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise ParameterError(f"--family: {exc}") from None
    return p, m, _parse_sign(parts[2])


def _parse_range(text: str, flag: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        low = int(lo)
        high = int(hi) if sep else low
    except ValueError as exc:
        raise ParameterError(f"{flag}: {exc}") from None
    if high < low:
        raise ParameterError(f"{flag}: empty range {text!r}")
    return range(low, high + 1)


def _selected_params(args: argparse.Namespace) -> DunwoodyParams:
    if args.params is not None and args.family is not None:
        raise ParameterError("give either --params or --family, not both")
    if args.params is not None:
        a, b, c, n, r, s = _parse_ints(args.params, 6, "--params")
        return validate_params(a, b, c, n, r, s)
    if args.family is not None:
        p, m, sign = _parse_family(args.family)
        return family_params(p, m, sign, args.n)
    raise ParameterError("one of --params or --family is required")


def _add_selector(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--params", help="a,b,c,n,r,s (raw integers, normalized)")
    parser.add_argument("--family", help="p,m,SIGN with SIGN one of + -")
    parser.add_argument("--n", type=int, default=1,
                        help="covering degree for --family (default 1)")


def cmd_diagram(args: argparse.Namespace) -> int:
    diagram = build_diagram(_selected_params(args))
    if args.format == "json":
        print(json.dumps(to_json(diagram), indent=2))
    else:
        print(to_dot(diagram), end="")
    if args.render:
        from .figures import render_diagram

        render_diagram(diagram, args.render)
        print(f"rendered {args.render}", file=sys.stderr)
    return 0


def _diagram_presentation(diagram: Diagram):
    if diagram.params.n == 1:
        return closed_presentation(diagram)
    return heegaard_presentation(diagram)


def cmd_group(args: argparse.Namespace) -> int:
    pres = _diagram_presentation(build_diagram(_selected_params(args)))
    if args.format == "json":
        print(json.dumps(pres.to_json(), indent=2))
    else:
        print(pres.to_text())
    return 0


def cmd_homology(args: argparse.Namespace) -> int:
    invariants = homology(_diagram_presentation(build_diagram(_selected_params(args))))
    if args.format == "json":
        doc = {
            "free_rank": invariants.free_rank,
            "torsion": list(invariants.torsion),
            "pretty": str(invariants),
        }
        print(json.dumps(doc))
    else:
        print(invariants)
    return 0


def cmd_verify_family(args: argparse.Namespace) -> int:
    sign = _parse_sign(args.sign)
    p_range = _parse_range(args.p_range, "--p-range")
    m_range = _parse_range(args.m_range, "--m-range")
    min_m = 1 if sign == 1 else 2
    if p_range.start <= 1:
        raise ParameterError("p must be greater than 1")
    if m_range.start < min_m:
        raise ParameterError(
            "m must be positive for sign +" if sign == 1
            else "m must be greater than 1 for sign -"
        )
    reports = []
    for report in verify_grid(p_range, m_range, sign, args.n_max):
        print(json.dumps(report, sort_keys=True))
        reports.append(report)
    if args.figure:
        from .figures import render_verification_grid

        render_verification_grid(reports, args.figure)
        print(f"rendered {args.figure}", file=sys.stderr)
    return 0 if all(rep["verdict"] == "pass" for rep in reports) else VERIFICATION_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dunwoody",
        description="Dunwoody diagrams, their presentations, and torus-knot verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_diagram = sub.add_parser("diagram", help="build a diagram and export it")
    _add_selector(p_diagram)
    p_diagram.add_argument("--format", choices=("json", "dot"), default="json")
    p_diagram.add_argument("--render", metavar="PATH",
                           help="also draw a schematic image to PATH")
    p_diagram.set_defaults(func=cmd_diagram)

    p_group = sub.add_parser("group", help="print the fundamental-group presentation")
    _add_selector(p_group)
    p_group.add_argument("--format", choices=("text", "json"), default="text")
    p_group.set_defaults(func=cmd_group)

    p_homology = sub.add_parser("homology", help="print the first homology")
    _add_selector(p_homology)
    p_homology.add_argument("--format", choices=("text", "json"), default="text")
    p_homology.set_defaults(func=cmd_homology)

    p_verify = sub.add_parser(
        "verify-family",
        help="verify torus-knot families over a (p, m) grid; JSON lines out",
    )
    p_verify.add_argument("--p-range", required=True, help="e.g. 2..5 or 3")
    p_verify.add_argument("--m-range", required=True, help="e.g. 1..3 or 2")
    p_verify.add_argument("--sign", required=True, help="+ or -")
    p_verify.add_argument("--n-max", type=int, default=8,
                          help="largest covering degree to check (default 8)")
    p_verify.add_argument("--figure", metavar="PATH",
                          help="also render a pass/fail grid image to PATH")
    p_verify.set_defaults(func=cmd_verify_family)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParameterError, InadmissibleDiagramError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
