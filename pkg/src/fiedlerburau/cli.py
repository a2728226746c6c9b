"""Command-line front end.

Exit codes: 0 success, 1 a mathematical mismatch, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from . import __version__
from ._text import PolynomialParseError
from .alexander import (
    BivariatePoly,
    RecoveryError,
    alexander_closed_braid_with_axis,
    general_link_invariant,
    recover_fiedler_from_alexander,
)
from .braidword import BraidError, BraidWord, parse_braid_word, writhe
from .burau import (
    SOFT_MAX_LENGTH,
    SOFT_MAX_STRANDS,
    burau_jet_matrix,
    burau_matrix,
    charpoly_newton,
    jet_expansion,
)
from .fiedler import FiedlerPoly, fiedler_from_burau, fiedler_statesum
from .harness import format_report, run_exhaustive, run_verify

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _colour(text: str, code: str, stream=None) -> str:
    stream = stream or sys.stdout
    if os.environ.get("NO_COLOR") is not None or not stream.isatty():
        return text
    return f"\x1b[{code}m{text}\x1b[0m"


def _bool_word(flag: bool) -> str:
    return _colour("true", "32") if flag else _colour("false", "31")


def _fiedler_json(F: FiedlerPoly) -> dict[str, Any]:
    return {"n": F.n, "coeffs": {str(m): c for m, c in F.items}}


def _exponents_json(F: FiedlerPoly) -> dict[str, int]:
    return {str(e): c for e, c in sorted(F.exponents().items())}


def _emit(payload: dict[str, Any]) -> None:
    print(json.dumps(payload, indent=2))


def _braid(args: argparse.Namespace) -> BraidWord:
    return parse_braid_word(args.braid, args.n)


def cmd_fiedler(args: argparse.Namespace) -> int:
    beta = _braid(args)
    results = {}
    if args.method in ("statesum", "both"):
        results["statesum"] = fiedler_statesum(beta)
    if args.method in ("burau", "both"):
        results["burau"] = fiedler_from_burau(beta)
    match = results["statesum"] == results["burau"] if args.method == "both" else None
    F = next(iter(results.values()))
    if args.format == "json":
        payload = {
            "n": beta.n,
            "word": beta.to_ints(),
            "writhe": writhe(beta),
            "fiedler": _fiedler_json(F),
            "fiedler_exponents": _exponents_json(F),
            "method": args.method,
            "match": match,
        }
        if args.method == "both" and not match:
            payload["burau"] = _fiedler_json(results["burau"])
        _emit(payload)
    else:
        if match is False:
            for name, value in results.items():
                print(f"F ({name}) = {value}")
        else:
            print(f"F = {F}")
        if match is not None:
            print(f"match = {_bool_word(match)}")
    return EXIT_MISMATCH if match is False else EXIT_OK


def cmd_burau(args: argparse.Namespace) -> int:
    beta = _braid(args)
    M = burau_jet_matrix(beta) if args.jet else burau_matrix(beta)
    if args.format == "json":
        _emit(
            {
                "n": beta.n,
                "word": beta.to_ints(),
                "jet": args.jet,
                "matrix": [[str(a) for a in row] for row in M.rows],
            }
        )
    else:
        print("B(e^h) mod h^2 =" if args.jet else "B(t) =")
        print(M.format())
    return EXIT_OK


def cmd_charpoly(args: argparse.Namespace) -> int:
    beta = _braid(args)
    cp = charpoly_newton(burau_matrix(beta))
    a0, a1 = jet_expansion(beta)
    flat = BivariatePoly.from_xpoly(cp)
    if args.format == "json":
        _emit(
            {
                "n": beta.n,
                "word": beta.to_ints(),
                "charpoly": str(flat),
                "coefficients": [str(cp[i]) for i in range(beta.n + 1)],
                "a0": a0.format(),
                "a1": a1.format(),
            }
        )
    else:
        print(f"det(I - x B(t)) = {cp.format()}")
        print(f"                = {flat}")
        print(f"a0(x) = {a0.format()}")
        print(f"a1(x) = {a1.format()}")
    return EXIT_OK


def cmd_alexander(args: argparse.Namespace) -> int:
    beta = _braid(args)
    delta = alexander_closed_braid_with_axis(beta)
    if args.format == "json":
        _emit({"n": beta.n, "word": beta.to_ints(), "alexander": str(delta)})
    else:
        print(f"Delta(t, x) = {delta}")
    return EXIT_OK


def _read_poly(args: argparse.Namespace) -> BivariatePoly:
    if (args.poly is None) == (args.file is None):
        raise UsageError("give exactly one of --poly or --file")
    if args.file is not None:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = args.poly
    return BivariatePoly.parse(text)


def cmd_recover(args: argparse.Namespace) -> int:
    delta = _read_poly(args)
    if args.general:
        inv = general_link_invariant(delta, axis_var=args.axis_var)
        reduced = None if inv.a1_reduced is None else inv.a1_reduced.format()
        if args.format == "json":
            _emit(
                {
                    "input": str(delta),
                    "a0": inv.a0.format(),
                    "a1": inv.a1.format(),
                    "a1_reduced": reduced,
                    "x_shift": inv.x_shift,
                }
            )
        else:
            print(f"a0(x) = {inv.a0.format()}")
            print(f"a1(x) = {inv.a1.format()}")
            print(f"a1 mod a0 = {reduced if reduced is not None else 'not reduced (a0 not monic up to sign)'}")
        return EXIT_OK
    if args.n is None:
        raise UsageError("--n is required for Fiedler recovery")
    res = recover_fiedler_from_alexander(delta, args.n)
    if args.format == "json":
        _emit(
            {
                "input": str(delta),
                "n": res.n,
                "fiedler": _fiedler_json(res.fiedler),
                "fiedler_exponents": _exponents_json(res.fiedler),
                "f": res.f,
                "f0": res.f0,
                "fn": res.fn,
                "x_shift": res.x_shift,
                "sign": res.sign,
            }
        )
    else:
        print(f"F = {res.fiedler}")
        print(f"f0 = {res.f0}")
        print(f"f{res.n} = {res.fn}")
        print(f"f0 + f{res.n} = {res.f0 + res.fn}")
    return EXIT_OK


def _range(text: str) -> tuple[int, int]:
    try:
        lo, _, hi = text.partition("..")
        pair = (int(lo), int(hi) if hi else int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like 2..8, got {text!r}") from None
    if pair[0] > pair[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return pair


def cmd_verify(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    try:
        if args.exhaustive:
            if args.n is None or args.max_len is None:
                raise UsageError("--exhaustive needs --n and --max-len")
            report = run_exhaustive(args.n, args.max_len, seed=args.seed, jobs=args.jobs)
        else:
            if args.count < 0:
                raise UsageError("--count must be >= 0")
            report = run_verify(args.count, args.seed, args.n_range, args.len_range, jobs=args.jobs)
    except ValueError as err:
        raise UsageError(str(err)) from None
    if args.format == "json":
        _emit(report)
    else:
        lines = format_report(report).splitlines()
        lines[-1] = _colour(lines[-1], "31" if report["failed"] else "32")
        print("\n".join(lines))
    return EXIT_MISMATCH if report["failed"] else EXIT_OK


def cmd_info(args: argparse.Namespace) -> int:
    info = {
        "version": __version__,
        "braid_word_format": "whitespace-separated signed integers; j means sigma_|j|^sign(j)",
        "conventions": [
            "letters read top to bottom, strands oriented downward",
            "sigma_i Burau block [[1 - t, t], [1, 0]] in rows/columns i, i+1",
            "F stored by bucket m = 1..n-1, displayed as X^(2m - n)",
        ],
        "soft_limits": {"max_strands": SOFT_MAX_STRANDS, "max_length": SOFT_MAX_LENGTH},
    }
    if args.format == "json":
        _emit(info)
    else:
        print(f"fiedlerburau {info['version']}")
        print(f"braid words: {info['braid_word_format']}")
        for line in info["conventions"]:
            print(f"  - {line}")
        print(f"exact soft limits: n <= {SOFT_MAX_STRANDS}, length <= {SOFT_MAX_LENGTH}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fiedlerburau",
        description="Fiedler's closed-braid invariant from state sums, Burau matrices and Alexander polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_braid(p: argparse.ArgumentParser) -> None:
        p.add_argument("--braid", required=True, help='braid word, e.g. "1 -2 1"')
        p.add_argument("--n", type=int, default=None, help="strand count (default: max|j| + 1)")

    def with_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("fiedler", help="Fiedler polynomial of a knot-closure braid")
    with_braid(p)
    p.add_argument("--method", choices=("statesum", "burau", "both"), default="statesum")
    with_format(p)
    p.set_defaults(func=cmd_fiedler)

    p = sub.add_parser("burau", help="Burau matrix B(t), or its jet at t = e^h")
    with_braid(p)
    p.add_argument("--jet", action="store_true")
    with_format(p)
    p.set_defaults(func=cmd_burau)

    p = sub.add_parser("charpoly", help="det(I - x B(t)) and its h-expansion")
    with_braid(p)
    with_format(p)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("alexander", help="Alexander polynomial of closed braid plus axis")
    with_braid(p)
    with_format(p)
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("recover", help="recover F from an Alexander polynomial given up to units")
    p.add_argument("--poly", help='inline polynomial, e.g. "1 + t^3*x"')
    p.add_argument("--file", help="UTF-8 file holding the polynomial")
    p.add_argument("--n", type=int, default=None, help="braid index")
    p.add_argument("--general", action="store_true", help="general 2-component link invariant a1 mod a0")
    p.add_argument("--axis-var", choices=("x", "t"), default="x")
    with_format(p)
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("verify", help="seeded batch verification of all identities")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--n-range", type=_range, default=(2, 8))
    p.add_argument("--len-range", type=_range, default=(1, 30))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--n", type=int, default=None, help="strand count for --exhaustive")
    p.add_argument("--max-len", type=int, default=None, help="maximum word length for --exhaustive")
    with_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("info", help="version and conventions")
    with_format(p)
    p.set_defaults(func=cmd_info)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BraidError, RecoveryError, PolynomialParseError, UsageError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
