"""Command-line front end.

Exit codes: 0 success, 1 a verification found a mismatch, 2 usage or input
error, 3 resource limit exceeded, 4 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import FORMAT_VERSION, __version__
from .classify import classify_max_height
from .errors import (
    FreimanError,
    InternalInvariantError,
    InvalidArgument,
    ResourceLimit,
)
from .families import (
    VeroneseSpec,
    borel_3vars_delta,
    borel_closure,
    borel_deg2_delta,
    hibi_freiman_predicate,
    hibi_ideal,
    katzman_multiplicity,
    poset_downsets,
    squarefree_veronese_mu2,
    veronese_topminus1_f,
    veronese_type,
)
from .ideal import MonomialIdeal, height, ideal_power, is_equigenerated
from .invariants import delta, h_vector_prefix, power_counts
from .kernels import BACKEND
from .search import DEFAULT_CAP, EnumerationOptions, THEOREMS, freiman_census, verify_theorem
from .textio import format_monomial, parse_ideal, parse_monomial, parse_poset

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE, EXIT_INTERNAL = 0, 1, 2, 3, 4


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InvalidArgument(f"cannot read {path}: {exc.strerror}") from exc


def _flatten(data, prefix: str = "") -> list[str]:
    if isinstance(data, dict):
        lines = []
        for key in sorted(data):
            lines += _flatten(data[key], f"{prefix}{key}.")
        return lines
    return [f"{prefix[:-1]}: {json.dumps(data)}"]


def _emit(data: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print("\n".join(_flatten(data)))


def _ideal_summary(ideal: MonomialIdeal, echo: bool) -> dict:
    out = delta(ideal).to_dict()
    if height(ideal) == ideal.n:
        out["classification"] = classify_max_height(ideal).to_dict()
    if echo:
        out["generators"] = [format_monomial(g) for g in ideal]
    return out


def cmd_analyze(args) -> int:
    ideal = parse_ideal(_read(args.file), args.n)
    out = _ideal_summary(ideal, args.echo)
    out["height"] = height(ideal)
    _emit(out, args.format)
    return EXIT_OK


def cmd_power(args) -> int:
    ideal = parse_ideal(_read(args.file), args.n)
    if args.k < 1:
        raise InvalidArgument("-k must be at least 1")
    out = {"n": ideal.n, "k": args.k}
    if is_equigenerated(ideal)[0]:
        out["mu"] = power_counts(ideal, args.k)[1:]
    power = ideal_power(ideal, args.k)
    out["mu_k"] = power.mu
    if args.echo:
        out["generators"] = [format_monomial(g) for g in power]
    _emit(out, args.format)
    return EXIT_OK


def cmd_hvec(args) -> int:
    ideal = parse_ideal(_read(args.file), args.n)
    if args.K < 0:
        raise InvalidArgument("-K must be non-negative")
    out = h_vector_prefix(ideal, args.K).to_dict()
    out["n"] = ideal.n
    out["mu"] = power_counts(ideal, args.K)
    _emit(out, args.format)
    return EXIT_OK


def cmd_borel(args) -> int:
    seed = parse_monomial(args.monomial, args.n)
    ideal = borel_closure(seed.n, [seed])
    out = _ideal_summary(ideal, args.echo)
    closed = {}
    if seed.degree == 2 and seed.max_var == seed.n:
        i = min(j + 1 for j in seed.support)
        closed["borel_deg2_delta"] = borel_deg2_delta(i, seed.n)
    if seed.n == 3 and seed[2] >= 1:
        closed["borel_3vars_delta"] = borel_3vars_delta(seed[1], seed[2])
    if closed:
        out["closed_form"] = closed
    _emit(out, args.format)
    return EXIT_OK


def cmd_hibi(args) -> int:
    poset = parse_poset(_read(args.file))
    freiman, witness = hibi_freiman_predicate(poset)
    ideal = hibi_ideal(poset)
    out = _ideal_summary(ideal, args.echo)
    out.update(
        size=poset.size,
        rank=poset.rank(),
        downsets=len(poset_downsets(poset)),
        predicate=freiman,
        witness=witness,
    )
    _emit(out, args.format)
    return EXIT_OK


def cmd_veronese(args) -> int:
    if args.bounds is None:
        bounds = (args.d,) * args.n
    else:
        try:
            bounds = tuple(int(b) for b in args.bounds.split(","))
        except ValueError as exc:
            raise InvalidArgument(f"bad --bounds {args.bounds!r}") from exc
    spec = VeroneseSpec(args.n, args.d, bounds)
    ideal = veronese_type(spec)
    out = _ideal_summary(ideal, args.echo)
    out["bounds"] = list(bounds)
    out["katzman_multiplicity"] = katzman_multiplicity(spec)
    if set(bounds) == {1}:
        out["squarefree_mu2_formula"] = squarefree_veronese_mu2(args.n, args.d)
    if set(bounds) == {args.d - 1} and args.d >= 2:
        out["topminus1_f"] = veronese_topminus1_f(args.n, args.d)
    _emit(out, args.format)
    return EXIT_OK


def cmd_census(args) -> int:
    if args.jobs < 1:
        raise InvalidArgument("--jobs must be at least 1")
    opts = EnumerationOptions(
        height_max=args.height_max,
        up_to_symmetry=args.up_to_symmetry,
        primitive_only=args.primitive_only,
        cap=args.cap,
    )
    report = freiman_census(args.n, args.d, opts, jobs=args.jobs)
    _emit(report.to_dict(), args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_theorem(args.theorem, args.range)
    _emit(report.to_dict(), args.format)
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freiman",
        description="Exact invariants of equigenerated monomial ideals and Freiman checks.",
    )
    parser.add_argument(
        "--version", action="version",
        version=f"freiman {__version__} (format {FORMAT_VERSION}, kernels: {BACKEND})",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json", help="output mode")
    common.add_argument("--echo", action="store_true", help="include generators in the output")
    ideal_in = argparse.ArgumentParser(add_help=False)
    ideal_in.add_argument("file", help="monomial file, one generator per line ('-' for stdin)")
    ideal_in.add_argument("--n", type=int, default=None, help="ambient number of variables")

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("analyze", parents=[common, ideal_in], help="Freiman report of an ideal")
    p.set_defaults(func=cmd_analyze)
    p = sub.add_parser("power", parents=[common, ideal_in], help="generator count of I^k")
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=cmd_power)
    p = sub.add_parser("hvec", parents=[common, ideal_in], help="h-vector prefix of the fiber cone")
    p.add_argument("-K", type=int, required=True)
    p.set_defaults(func=cmd_hvec)
    p = sub.add_parser("borel", parents=[common], help="principal Borel ideal B(u)")
    p.add_argument("monomial", help="Borel generator, e.g. 'x2*x4'")
    p.add_argument("-n", type=int, default=None, help="ambient number of variables")
    p.set_defaults(func=cmd_borel)
    p = sub.add_parser("hibi", parents=[common], help="Hibi ideal of a poset file")
    p.add_argument("file")
    p.set_defaults(func=cmd_hibi)
    p = sub.add_parser("veronese", parents=[common], help="ideal of Veronese type")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--bounds", default=None, help="comma-separated a_1,...,a_n (default all d)")
    p.set_defaults(func=cmd_veronese)
    p = sub.add_parser("census", parents=[common], help="exhaustive Freiman census")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--height-max", action="store_true", help="only ideals containing all pure powers")
    p.add_argument("--up-to-symmetry", action="store_true", help="one ideal per relabeling orbit")
    p.add_argument("--primitive-only", action="store_true", help="skip proper pseudo-Frobenius powers")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum number of ideals to enumerate")
    p.set_defaults(func=cmd_census)
    p = sub.add_parser("verify", parents=[common], help="check a theorem against brute force")
    p.add_argument("theorem", choices=sorted(THEOREMS))
    p.add_argument("--range", default=None, help="e.g. 'i=1..6,n=i..6'")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"freiman: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InternalInvariantError as exc:
        print(f"freiman: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except FreimanError as exc:
        print(f"freiman: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
