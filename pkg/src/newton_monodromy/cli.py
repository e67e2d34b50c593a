"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 degenerate at infinity (report still
printed), 3 selftest failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import selftest
from .errors import ParseError
from .localmono import LocalScene
from .poly import parse_polynomial
from .report import analyze, analyze_local, render_local_text, render_text

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DEGENERATE = 2
EXIT_SELFTEST = 3


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def cmd_analyze(args) -> int:
    if args.file:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read().strip()
        except OSError as exc:
            print(f"error: cannot read {args.file}: {exc}", file=sys.stderr)
            return EXIT_INPUT
    else:
        text = args.poly
    try:
        poly = parse_polynomial(text, args.n, laurent=args.laurent)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        if exc.position is not None:
            print(f"  {text}\n  {' ' * exc.position}^", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    report, code = analyze(poly, text=text, trials=args.nondeg_trials, seed=args.seed,
                           skip_nondeg=args.skip_nondeg)
    print(_dump(report) if args.json else render_text(report))
    return code


def cmd_local(args) -> int:
    try:
        scene = LocalScene.load(args.scene)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: malformed scene {args.scene}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = analyze_local(scene, trials=args.nondeg_trials, seed=args.seed)
    print(_dump(report) if args.json else render_local_text(report))
    return EXIT_OK


def cmd_selftest(args) -> int:
    fixtures = selftest.select(args.filter, args.inject_failure)
    if not fixtures:
        print(f"no fixtures match {args.filter!r}", file=sys.stderr)
        return EXIT_SELFTEST
    results = selftest.run(fixtures)
    width = max(len(fx.name) for fx, *_ in results)
    for fx, ok, secs, err in results:
        line = f"{'PASS' if ok else 'FAIL'}  {fx.name:<{width}}  {secs * 1000:8.1f} ms"
        print(line + (f"  {err}" if err else ""))
    failed = sum(1 for _, ok, _, _ in results if not ok)
    print(f"{len(results) - failed}/{len(results)} passed")
    return EXIT_SELFTEST if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="newton-monodromy",
        description="Newton polyhedra at infinity, monodromy zeta functions and Jordan block counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one polynomial")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly", help='polynomial text, e.g. "x^2 + y^3"')
    src.add_argument("--file", help="file containing the polynomial text")
    p.add_argument("--n", type=int, required=True, help="number of variables")
    p.add_argument("--laurent", action="store_true", help="allow negative exponents")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--nondeg-trials", type=int, default=64, help="random trials per face of dim >= 2")
    p.add_argument("--seed", type=int, default=0, help="seed for the randomized non-degeneracy test")
    p.add_argument("--skip-nondeg", action="store_true", help="do not test non-degeneracy")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("local", help="local atypical eigenvalues at a fiber")
    p.add_argument("--scene", required=True, help='JSON file {"n": int, "interior": [...], "boundary": [...]}')
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--nondeg-trials", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_local)

    p = sub.add_parser("selftest", help="run the built-in fixture suite")
    p.add_argument("--filter", help="fixture name substring or tag")
    p.add_argument("--inject-failure", action="store_true", help="add a fixture that must fail")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
