"""Command-line front end.

Exit codes: 0 member (or success), 1 non-member, 2 usage or domain error.
All numbers are exact rationals written as ``a`` or ``a/b``; decimals are
refused.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import atlas as atlas_mod
from .classifier import Frame, decide, kind_of, to_frames
from .commutator import DilationPair, QuadrantError, trace, verify_nonneg
from .exactnum import lowest_terms_neg, parse_rational
from .symmetry import phi_orbit

EXIT_MEMBER, EXIT_NON_MEMBER, EXIT_USAGE = 0, 1, 2

_NEG_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _window(text: str) -> tuple[Fraction, ...]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"window needs xmin,xmax,ymin,ymax, got {text!r}")
    return tuple(_rational(p) for p in parts)


def _r_range(text: str) -> list[int]:
    m = re.match(r"^(\d+)(?:\.\.|:)(\d+)$", text)
    if m is None:
        raise argparse.ArgumentTypeError(f"r range must look like 1..4, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"need 1 <= r_min <= r_max, got {text!r}")
    return list(range(lo, hi + 1))


def _dump(obj, stream) -> None:
    stream.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def report(pair: DilationPair) -> dict:
    verdict, found = decide(pair)
    oracle = verify_nonneg(pair)
    return {
        "alpha": str(pair.alpha),
        "beta": str(pair.beta),
        "in_S": verdict.holds,
        "kind": kind_of(pair).value,
        "witnesses": [w.as_dict() for w in found],
        "frames": to_frames(pair).as_dict(),
        "oracle": {
            "holds": oracle.holds,
            "counterexample": None if oracle.counterexample is None else str(oracle.counterexample),
            "min_value": oracle.min_value,
        },
    }


def cmd_check(args, out) -> int:
    result = report(DilationPair(args.alpha, args.beta))
    _dump(result, out)
    return EXIT_MEMBER if result["in_S"] else EXIT_NON_MEMBER


def cmd_classify(args, out) -> int:
    _dump(report(DilationPair(args.alpha, args.beta)), out)
    return 0


def cmd_oracle(args, out) -> int:
    pair = DilationPair(args.alpha, args.beta)
    header = ["x", "floor(beta*x)", "floor(alpha*floor(beta*x))",
              "floor(alpha*x)", "floor(beta*floor(alpha*x))", "commutator"]
    rows = [[str(r[0]), *r[1:]] for r in trace(pair)]
    if args.trace:
        with open(args.trace, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return EXIT_MEMBER if verify_nonneg(pair).holds else EXIT_NON_MEMBER


def cmd_orbit(args, out) -> int:
    if args.p < 1 or args.q < 1:
        raise QuadrantError("p and q must be positive integers")
    alpha = Fraction(-args.q, args.p)
    if lowest_terms_neg(alpha) != (args.p, args.q):
        raise ValueError(f"p={args.p} and q={args.q} must be coprime")
    DilationPair(alpha, args.beta0)
    items, seen = [], set()
    # phi_orbit order is r order, so the first r reaching each image is kept
    for r in args.r:
        (beta,) = phi_orbit(args.p, args.beta0, [r])
        if beta not in seen:
            seen.add(beta)
            items.append({"r": r, "beta": str(beta), "kind_of": kind_of(alpha, beta).value})
    _dump(items, out)
    return 0


def cmd_atlas(args, out) -> int:
    window = atlas_mod.AtlasWindow(
        Frame(args.frame), *args.window,
        max_denominator=args.max_den, max_index=args.max_index,
    )
    features = atlas_mod.enumerate_all(window)
    if args.svg:
        Path(args.svg).write_text(atlas_mod.render_svg(features, window))
    payload = [f.as_dict() for f in features]
    if args.json:
        with open(args.json, "w") as fh:
            _dump(payload, fh)
    if not args.svg and not args.json:
        _dump(payload, out)
    return 0


def cmd_enumerate(args, out) -> int:
    if args.window is None:
        window = atlas_mod.AtlasWindow(
            Frame.PRIMED, Fraction(0), Fraction(args.q, args.p) + 1, Fraction(0), Fraction(2),
            max_index=args.max_index,
        )
    else:
        window = atlas_mod.AtlasWindow(Frame(args.frame), *args.window, max_index=args.max_index)
    features = atlas_mod.enumerate_sporadic(args.p, args.q, window)
    _dump([f.as_dict() for f in features], out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="floorcomm",
        description="Exact checks of floor(a*floor(b*x)) >= floor(b*floor(a*x)) for negative a, b.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_ in (
        ("check", cmd_check, "decide membership; exit 0 member, 1 non-member"),
        ("classify", cmd_classify, "report witnesses, kind and frames"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("alpha", type=_rational)
        p.add_argument("beta", type=_rational)
        p.set_defaults(func=func)

    p = sub.add_parser("oracle", help="period scan with a CSV trace of every sample")
    p.add_argument("alpha", type=_rational)
    p.add_argument("beta", type=_rational)
    p.add_argument("--trace", metavar="PATH", help="write the CSV here instead of stdout")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("orbit", help="images of beta0 under phi_p^r on alpha = -q/p")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("beta0", type=_rational)
    p.add_argument("--r", type=_r_range, default=_r_range("1..4"), metavar="MIN..MAX")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("atlas", help="enumerate features in a window; SVG and/or JSON output")
    p.add_argument("--frame", choices=[f.value for f in Frame], default="primed")
    p.add_argument("--window", type=_window, default=_window("0,8/5,0,6/5"),
                   metavar="XMIN,XMAX,YMIN,YMAX")
    p.add_argument("--max-den", type=int, default=8)
    p.add_argument("--max-index", type=int, default=8)
    p.add_argument("--svg", metavar="PATH")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("enumerate", help="sporadic points on the line alpha = -q/p")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--max-index", type=int, default=8)
    p.add_argument("--frame", choices=[f.value for f in Frame], default="primed")
    p.add_argument("--window", type=_window, default=None, metavar="XMIN,XMAX,YMIN,YMAX")
    p.set_defaults(func=cmd_enumerate)

    # let "-3/2" through as a value rather than an option
    for p in [parser, *sub.choices.values()]:
        p._negative_number_matcher = _NEG_RATIONAL
        p._has_negative_number_optionals = []
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args, out)
    except (QuadrantError, ValueError) as exc:
        print(f"floorcomm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
