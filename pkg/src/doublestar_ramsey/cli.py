"""Command-line front end.

Exit codes: 0 found / success, 1 none found, 2 usage or input error,
3 counterexample alarm.  Every subcommand ends its output with one
``key=value`` summary line.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .bounds import bounds_report
from .colouring import ColouringFormatError, read_colouring, serialize_colouring, write_colouring
from .constructions import canonical_colouring
from .doublestar import DoubleStarSpec, PreconditionError, find_monochromatic, format_certificate
from .extract import CounterexampleAlarm, extract_trace
from .search import DEFAULT_PREFIX_DEPTH, random_witness_search, ramsey_exact

EXIT_OK, EXIT_NONE, EXIT_ERROR, EXIT_ALARM = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_spec(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m1", type=_positive, required=True, help="leaves on the first centre")
    p.add_argument("--m2", type=_positive, required=True, help="leaves on the second centre")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="doublestar-ramsey", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bounds", help="evaluate every bound for S(m1, m2)")
    _add_spec(p)

    p = sub.add_parser("verify", help="look for a monochromatic S(m1, m2) in a colouring file")
    _add_spec(p)
    p.add_argument("--input", required=True)

    p = sub.add_parser("extract", help="extract a witness by replaying the upper-bound argument")
    _add_spec(p)
    p.add_argument("--input", required=True)
    p.add_argument("--trace", action="store_true", help="also print the step-by-step trace")

    p = sub.add_parser("construct", help="emit the canonical lower-bound colouring")
    _add_spec(p)
    p.add_argument("--out")

    search = sub.add_parser("search", help="exhaustive or randomized search")
    ssub = search.add_subparsers(dest="mode", required=True, parser_class=_Parser)
    p = ssub.add_parser("exact", help="determine R(S(m1, m2)) by exhaustive search")
    _add_spec(p)
    p.add_argument("--max-n", type=_positive)
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--budget", type=_positive, help="node limit per n")
    p.add_argument("--prefix-depth", type=_positive, default=DEFAULT_PREFIX_DEPTH)
    p.add_argument("--witness-dir", help="write each good colouring found as n<N>.txt")
    p = ssub.add_parser("witness", help="local search for a good colouring of K_n")
    _add_spec(p)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=_positive, default=10_000)
    p.add_argument("--out")
    return parser


def _spec(args) -> DoubleStarSpec:
    return DoubleStarSpec(args.m1, args.m2)


def _cmd_bounds(args) -> int:
    report = bounds_report(_spec(args))
    print(report.render(), end="")
    print(report.record())
    return EXIT_OK


def _cmd_verify(args) -> int:
    spec = _spec(args)
    c = read_colouring(args.input)
    e = find_monochromatic(c, spec)
    if e is None:
        print("none")
        print(f"result=none n={c.n} m1={spec.m1} m2={spec.m2}")
        return EXIT_NONE
    print(format_certificate(e), end="")
    print(f"result=found n={c.n} m1={spec.m1} m2={spec.m2} colour={e.colour.value} "
          f"centre1={e.centre1} centre2={e.centre2}")
    return EXIT_OK


def _cmd_extract(args) -> int:
    spec = _spec(args)
    c = read_colouring(args.input)
    try:
        trace = extract_trace(c, spec)
    except CounterexampleAlarm as alarm:
        print(f"COUNTEREXAMPLE: no monochromatic {spec} on n={c.n}", file=sys.stderr)
        print(alarm.colouring_text, end="", file=sys.stderr)
        print(f"result=alarm n={c.n} m1={spec.m1} m2={spec.m2}")
        return EXIT_ALARM
    e = trace.embedding
    print(format_certificate(e), end="")
    if args.trace:
        print("# trace")
        print(trace.render(), end="")
    print(f"result=found n={c.n} m1={spec.m1} m2={spec.m2} colour={e.colour.value} "
          f"centre1={e.centre1} centre2={e.centre2} step={trace.step} "
          f"used_fallback={'true' if trace.used_fallback else 'false'}")
    return EXIT_OK


def _cmd_construct(args) -> int:
    spec = _spec(args)
    c = canonical_colouring(spec)
    summary = f"kind=canonical n={c.n} m1={spec.m1} m2={spec.m2}"
    if args.out:
        write_colouring(args.out, c)
        print(f"wrote {args.out}")
        print(summary)
    else:
        # summary as a comment keeps stdout a valid colouring file
        print(serialize_colouring(c), end="")
        print(f"# {summary}")
    return EXIT_OK


def _cmd_search_exact(args) -> int:
    spec = _spec(args)
    outcome = ramsey_exact(
        spec,
        max_n=args.max_n,
        budget=args.budget,
        threads=args.threads,
        prefix_depth=args.prefix_depth,
    )
    if args.witness_dir:
        os.makedirs(args.witness_dir, exist_ok=True)
        for n, w in sorted(outcome.witnesses.items()):
            write_colouring(os.path.join(args.witness_dir, f"n{n}.txt"), w)
    print(outcome.report(), end="")
    print(outcome.record())
    return EXIT_OK if outcome.ramsey_value is not None else EXIT_NONE


def _cmd_search_witness(args) -> int:
    spec = _spec(args)
    c = random_witness_search(args.n, spec, seed=args.seed, iterations=args.iters)
    summary = f"n={args.n} m1={spec.m1} m2={spec.m2} seed={args.seed} iters={args.iters}"
    if c is None:
        print("not found")
        print(f"result=none {summary}")
        return EXIT_NONE
    if args.out:
        write_colouring(args.out, c)
        print(f"wrote {args.out}")
        print(f"result=found {summary}")
    else:
        print(serialize_colouring(c), end="")
        print(f"# result=found {summary}")
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    handler = {
        "bounds": _cmd_bounds,
        "verify": _cmd_verify,
        "extract": _cmd_extract,
        "construct": _cmd_construct,
        "search": lambda a: (_cmd_search_exact if a.mode == "exact" else _cmd_search_witness)(a),
    }[args.command]
    try:
        return handler(args)
    except (OSError, ColouringFormatError, PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())
