"""Command-line entry point: ``wittvanish classify|enumerate|render|selfcheck``.

Exit codes: 0 on success (an Inconclusive verdict is a success), 1 if the
self-check finds a failing invariant, 2 on usage or validation errors.
"""

from __future__ import annotations

import argparse
import sys

from .enumeration import DEFAULT_RANK_LIMIT, enumerate_decorations, filter_rows
from .errors import WittError
from .parsing import parse_bundle, parse_diagram, parse_vertex_list
from .picard import lambda_of, lambda_to_class, line_bundle, parabolic
from .report import record_line, render_dot, table_records, table_text, text_report, to_record
from .selfcheck import run_checks
from .vanishing import classify
from .weights import Weight


def _decorate(args):
    """Resolve diagram, Theta and the bundle class from the parsed flags."""
    d = parse_diagram(args.diagram)
    theta = parse_vertex_list(args.theta or "", d)
    p = parabolic(d, theta)
    if args.bundle is not None:
        bundle = line_bundle(p, Weight(d, parse_bundle(args.bundle, d)))
    else:
        bundle = lambda_to_class(p, parse_vertex_list(args.lam or "", d))
    return d, theta, bundle


def cmd_classify(args, out):
    d, theta, bundle = _decorate(args)
    verdict = classify(bundle)
    lam = lambda_of(bundle)
    if args.format == "records":
        out.write(record_line(to_record(d, theta, lam, verdict)) + "\n")
    elif args.format == "dot":
        out.write(render_dot(d, theta, lam, verdict))
    else:
        out.write(text_report(d, theta, lam, verdict))
    return 0


def cmd_enumerate(args, out):
    d = parse_diagram(args.diagram)
    theta = parse_vertex_list(args.theta, d) if args.theta is not None else None
    lam = parse_vertex_list(args.lam, d) if args.lam is not None else None
    table = enumerate_decorations(d, rank_limit=args.rank_limit)
    if theta is not None or lam is not None:
        table = filter_rows(
            table,
            lambda t, l, _v: (theta is None or t == theta) and (lam is None or l == lam),
        )
    if args.format == "records":
        out.write(table_records(table))
    else:
        out.write(table_text(table))
    return 0


def cmd_render(args, out):
    d, theta, bundle = _decorate(args)
    out.write(render_dot(d, theta, lambda_of(bundle), classify(bundle)))
    return 0


def cmd_selfcheck(args, out):
    results = run_checks()
    for name, ok, detail in results:
        out.write(f"{'PASS' if ok else 'FAIL'} {name}: {detail}\n")
    return 0 if all(ok for _, ok, _ in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wittvanish",
        description="Decide vanishing of twisted Witt groups of G/P from Dynkin data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def decoration_flags(p, with_bundle=True):
        p.add_argument("diagram", help='diagram spec, e.g. "D4" or "A3xB2"')
        p.add_argument("--theta", help="comma-separated vertices of Theta")
        group = p.add_mutually_exclusive_group()
        group.add_argument("--lambda", dest="lam", help="comma-separated vertices of Lambda")
        if with_bundle:
            group.add_argument("--bundle", help="weight coefficients of the line bundle")

    p = sub.add_parser("classify", help="classify one decoration")
    decoration_flags(p)
    p.add_argument("--format", choices=["text", "records", "dot"], default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="classify every decoration of a diagram")
    decoration_flags(p, with_bundle=False)
    p.add_argument("--format", choices=["text", "records"], default="text")
    p.add_argument("--rank-limit", type=int, default=DEFAULT_RANK_LIMIT)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("render", help="emit a DOT drawing of a decoration")
    decoration_flags(p)
    p.add_argument("--format", choices=["dot"], default="dot")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("selfcheck", help="run the built-in invariant suite")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv=None, out=None) -> int:
    if out is None:
        out = sys.stdout
        # verdicts carry a non-ASCII caveat
        if hasattr(out, "reconfigure"):
            out.reconfigure(encoding="utf-8")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except WittError as exc:
        print(f"wittvanish: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
