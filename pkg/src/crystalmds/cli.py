"""Command-line front end: compute crystal polynomials, run verification
suites, export fixtures.

Exit codes: 0 success, 1 assertion or verification failure, 2 invalid
configuration.  Output is fully assembled before printing, so a failure
never leaves partial JSON on stdout.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .conventions import DEFAULT
from .decorations import decorate, render
from .patterns import enumerate_patterns
from .roots import CartanSpec, build_root_system, is_strongly_dominant
from .series import character_via_patterns, p_part, polynomial_json_obj
from .verification import SUITES


def _parse_lambda(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad weight {text!r}: {exc}")


def _parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _default_threads() -> int:
    env = os.environ.get("CRYSTALMDS_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crystalmds",
        description="exact crystal sums: characters and prime-power parts of "
                    "Weyl group multiple Dirichlet series")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--family", required=True, choices=("A", "B", "C", "D"))
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--lambda", dest="lam", required=True, type=_parse_lambda,
                       metavar="M1,M2,...", help="highest weight, fundamental-weight coordinates")
        p.add_argument("--n", type=int, default=1, help="metaplectic cover degree")
        p.add_argument("--threads", type=int, default=None,
                       help="worker threads (default: available parallelism; "
                            "env CRYSTALMDS_THREADS overrides)")

    pc = sub.add_parser("compute", help="print a crystal polynomial")
    add_common(pc)
    pc.add_argument("--character", action="store_true",
                    help="sum with unit coefficients (the character) instead of the p-part")
    pc.add_argument("--json", action="store_true", help="JSON output (default: text table)")
    pc.add_argument("--allow-dominant", action="store_true",
                    help="accept dominant but not strongly dominant weights for the p-part")

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("--suite", required=True, choices=sorted(SUITES))
    pv.add_argument("--max-dim", type=int, default=5000)
    pv.add_argument("--primes", type=_parse_int_list, default=(5, 7, 13))
    pv.add_argument("--n", dest="degrees", type=_parse_int_list, default=(1, 2, 3, 4),
                    help="cover degrees for the gauss suite, comma separated")
    pv.add_argument("--lambdas", type=str, default=None,
                    help="semicolon-separated weights for the tokuyama suite, "
                         "e.g. '1,1;2,1;2,2'")
    pv.add_argument("--shift", choices=("minus_rho", "same"), default=None)

    pe = sub.add_parser("export", help="write pattern/decoration/polynomial fixtures")
    add_common(pe)
    pe.add_argument("--character", action="store_true")
    pe.add_argument("--allow-dominant", action="store_true")
    pe.add_argument("--out", required=True, help="output directory")
    return parser


def _compute_poly(args):
    rs = build_root_system(CartanSpec(args.family, args.rank))
    if len(args.lam) != args.rank:
        raise ValueError(f"lambda has {len(args.lam)} coordinates, rank is {args.rank}")
    threads = args.threads if args.threads is not None else _default_threads()
    if args.character:
        return rs, character_via_patterns(rs, args.lam)
    if not is_strongly_dominant(args.lam) and not args.allow_dominant:
        raise ValueError(
            "p-part semantics require a strongly dominant lambda; "
            "pass --allow-dominant to sum over a boundary crystal anyway")
    return rs, p_part(rs, args.lam, args.n, DEFAULT,
                      allow_dominant=args.allow_dominant, threads=threads)


def cmd_compute(args) -> int:
    rs, poly = _compute_poly(args)
    obj = polynomial_json_obj(poly, args.family, args.rank, args.n, args.lam)
    if args.json:
        out = json.dumps(obj)
    else:
        lines = [f"family {args.family} rank {args.rank} n {args.n} "
                 f"lambda {','.join(map(str, args.lam))} ({len(poly)} terms)"]
        width = max((len(str(list(w))) for w in poly.sorted_weights()), default=4)
        for w in poly.sorted_weights():
            lines.append(f"  {str(list(w)):<{width}}  {poly.terms[w]!r}")
        out = "\n".join(lines)
    print(out)
    return 0


def cmd_verify(args) -> int:
    suite = SUITES[args.suite]
    if args.suite == "character":
        report = suite(max_dim=args.max_dim)
    elif args.suite == "gauss":
        report = suite(primes=tuple(args.primes), degrees=tuple(args.degrees))
    elif args.suite == "tokuyama":
        lambdas = None
        if args.lambdas:
            lams = [tuple(int(x) for x in part.split(","))
                    for part in args.lambdas.split(";")]
            lambdas = {}
            for lam in lams:
                lambdas.setdefault(len(lam), []).append(lam)
            lambdas = {r: tuple(v) for r, v in lambdas.items()}
        report = suite(lambdas=lambdas, shift=args.shift)
    else:
        report = suite()
    print(json.dumps(report))
    return 0 if report["ok"] else 1


def cmd_export(args) -> int:
    rs, poly = _compute_poly(args)
    outdir = Path(args.out)
    try:
        outdir.mkdir(parents=True, exist_ok=True)
        patterns = list(enumerate_patterns(rs, args.lam))
        (outdir / "patterns.txt").write_text(
            "".join(L.to_text() + "\n" for L in patterns), encoding="utf-8")
        blocks = [render(decorate(L, args.lam)) for L in patterns]
        (outdir / "decorated.txt").write_text(
            "\n\n".join(blocks) + "\n", encoding="utf-8")
        obj = polynomial_json_obj(poly, args.family, args.rank, args.n, args.lam)
        (outdir / "polynomial.json").write_text(json.dumps(obj) + "\n", encoding="utf-8")
    except OSError as exc:
        print(f"export failed at {exc.filename or outdir}: {exc.strerror or exc}",
              file=sys.stderr)
        return 1
    print(f"wrote {len(patterns)} patterns to {outdir}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            return cmd_compute(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_export(args)
    except (ValueError, argparse.ArgumentTypeError) as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
