"""Seeded batch verification of every identity the package relies on.

Each case is generated from ``(master seed, case index)`` alone, so any
failure can be replayed in isolation and parallel runs give exactly the
same report as serial ones.
"""

from __future__ import annotations

import hashlib
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Iterable, Iterator

from .alexander import alexander_closed_braid_with_axis, recover_fiedler_from_alexander, scramble_units
from .braidword import BraidWord, all_words, conjugate, is_knot_closure, random_braid, smoothed_pass_permutation
from .braidword import Permutation, writhe
from .burau import burau_matrix, charpoly_newton, f_from_traces, jet_expansion
from .fiedler import ascending_start, fiedler_statesum, fiedler_from_burau
from .polyring import LaurentPoly, XPoly

CHECKS = (
    "routes_agree",
    "determinant",
    "a0",
    "fn",
    "f_routes",
    "symmetry",
    "crossing_sum",
    "m_range",
    "exclusion",
    "writhe_parity",
    "conjugacy",
    "recovery",
    "recovery_f0_fn",
)

SCRAMBLE_RANGE = 5


def case_seed(master: int, index: int) -> int:
    digest = hashlib.sha256(f"{master}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


@dataclass(frozen=True)
class Case:
    index: int
    seed: int
    beta: BraidWord
    gamma: BraidWord
    scramble: tuple[int, int, int]


def valid_lengths(n: int, lo: int, hi: int) -> list[int]:
    """Word lengths in ``[lo, hi]`` that admit a knot closure in ``B_n``.

    An ``n``-cycle needs at least ``n - 1`` transpositions and has sign
    ``(-1)^(n-1)``, so ``k >= n - 1`` and ``k = n - 1 (mod 2)``.
    """
    return [k for k in range(max(lo, n - 1), hi + 1) if (k - n + 1) % 2 == 0]


def _aux(rng: random.Random, n: int, max_len: int) -> tuple[BraidWord, tuple[int, int, int]]:
    gamma = random_braid(n, rng.randint(0, max_len), rng.getrandbits(64)) if n >= 2 else BraidWord(n)
    scramble = (
        rng.randint(-SCRAMBLE_RANGE, SCRAMBLE_RANGE),
        rng.randint(-SCRAMBLE_RANGE, SCRAMBLE_RANGE),
        rng.choice((1, -1)),
    )
    return gamma, scramble


def random_case(master: int, index: int, n_range: tuple[int, int], len_range: tuple[int, int]) -> Case:
    seed = case_seed(master, index)
    rng = random.Random(seed)
    ns = [n for n in range(n_range[0], n_range[1] + 1) if valid_lengths(n, *len_range)]
    if not ns:
        raise ValueError(f"no knot-closure braids with n in {n_range} and length in {len_range}")
    n = rng.choice(ns)
    k = rng.choice(valid_lengths(n, *len_range))
    beta = random_braid(n, k, rng.getrandbits(64), require_knot=True)
    gamma, scramble = _aux(rng, n, len_range[1])
    return Case(index, seed, beta, gamma, scramble)


def exhaustive_words(n: int, max_len: int) -> Iterator[BraidWord]:
    """All knot-closure words in ``B_n`` of length ``<= max_len``, by length then lexicographically."""
    for length in range(max_len + 1):
        for beta in all_words(n, length):
            if is_knot_closure(beta):
                yield beta


def exhaustive_case(master: int, index: int, beta: BraidWord) -> Case:
    seed = case_seed(master, index)
    gamma, scramble = _aux(random.Random(seed), beta.n, max(beta.k, 1))
    return Case(index, seed, beta, gamma, scramble)


def pass_permutations(beta: BraidWord, r: int, max_m: int) -> list[Permutation]:
    """``pi^(1..max_m)``: ``m`` trips from below crossing ``r``, omitting its last occurrence.

    Built as ``rho, rho tau rho, ...`` with ``rho`` the smoothed pass and
    ``tau`` the transposition of crossing ``r``.
    """
    rho = smoothed_pass_permutation(beta, r)
    i = beta.letters[r - 1][0]
    tau_rho = Permutation.transposition(beta.n, i, i + 1).then(rho)
    out = [rho]
    for _ in range(max_m - 1):
        out.append(out[-1].then(tau_rho))
    return out


def check_braid(beta: BraidWord, gamma: BraidWord, scramble: tuple[int, int, int]) -> dict[str, tuple[bool, str, str]]:
    """Run every check on one knot-closure braid: ``{name: (ok, expected, got)}``."""
    n, w = beta.n, writhe(beta)
    res: dict[str, tuple[bool, str, str]] = {}

    def record(name: str, expected: Any, got: Any) -> None:
        res[name] = (expected == got, str(expected), str(got))

    F = fiedler_statesum(beta)
    record("routes_agree", F, fiedler_from_burau(beta))

    cp = charpoly_newton(burau_matrix(beta))
    record("determinant", LaurentPoly.monomial((-1) ** n * (-1) ** (w % 2), w), cp[n])

    a0 = cp.map(lambda c: LaurentPoly._coerce(c).eval_at_one())
    a1 = cp.map(lambda c: LaurentPoly._coerce(c).derivative_at_one())
    record("a0", XPoly([1] + [0] * (n - 1) + [-1]), a0)
    record("fn", -w, a1[n])
    ja0, ja1 = jet_expansion(beta)
    f_list = f_from_traces(beta)
    record("f_routes", (a0, a1, f_list), (ja0, ja1, [a1[m] for m in range(1, n)]))

    record("symmetry", True, F.is_symmetric())
    record("crossing_sum", w, F.total())

    bad_m, bad_excl = [], []
    for r in range(1, beta.k + 1):
        i = beta.letters[r - 1][0]
        asc = ascending_start(beta, r)
        passes = pass_permutations(beta, r, n - 1)
        m_r = passes[0].orbit_length(asc)
        if not 1 <= m_r <= n - 1:
            bad_m.append((r, m_r))
        for m, pi in enumerate(passes, start=1):
            if pi(i) == i + 1 or pi(i + 1) == i or (pi(asc) == asc) != (m == m_r):
                bad_excl.append((r, m))
    record("m_range", [], bad_m)
    record("exclusion", [], bad_excl)
    record("writhe_parity", (n - 1) % 2, w % 2)

    record("conjugacy", F, fiedler_statesum(conjugate(beta, gamma)))

    a, b, s = scramble
    delta = alexander_closed_braid_with_axis(beta)
    rec = recover_fiedler_from_alexander(scramble_units(delta, a, b, s), n)
    record("recovery", F, rec.fiedler)
    # a unit t^b shifts f_0 by +b and f_n by -b, so the sum is scramble-independent
    record("recovery_f0_fn", -w, rec.f0 + rec.fn)
    return res


def run_case(case: Case) -> dict[str, Any]:
    try:
        checks = check_braid(case.beta, case.gamma, case.scramble)
    except Exception as err:  # a crash is a failure to report, not to hide
        checks = {"exception": (False, "no exception", f"{type(err).__name__}: {err}")}
    failures = [
        {"check": name, "expected": exp, "got": got}
        for name, (ok, exp, got) in checks.items()
        if not ok
    ]
    return {
        "index": case.index,
        "seed": case.seed,
        "n": case.beta.n,
        "word": case.beta.to_ints(),
        "conjugator": case.gamma.to_ints(),
        "scramble": list(case.scramble),
        "checks": sorted(checks),
        "failures": failures,
    }


@dataclass(frozen=True)
class _RandomJob:
    master: int
    n_range: tuple[int, int]
    len_range: tuple[int, int]

    def __call__(self, index: int) -> dict[str, Any]:
        return run_case(random_case(self.master, index, self.n_range, self.len_range))


def _run_exhaustive_item(item: tuple[int, int, BraidWord]) -> dict[str, Any]:
    master, index, beta = item
    return run_case(exhaustive_case(master, index, beta))


def _map(fn, items: Iterable[Any], jobs: int) -> list[dict[str, Any]]:
    if jobs <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves input order regardless of completion order
        return list(pool.map(fn, items, chunksize=16))


def _summarise(command: str, config: dict[str, Any], results: list[dict[str, Any]]) -> dict[str, Any]:
    counts = {name: 0 for name in CHECKS}
    failures = []
    failed_cases = 0
    for res in results:
        if res["failures"]:
            failed_cases += 1
        for fail in res["failures"]:
            counts[fail["check"]] = counts.get(fail["check"], 0) + 1
            failures.append(
                {
                    "index": res["index"],
                    "seed": res["seed"],
                    "n": res["n"],
                    "word": res["word"],
                    "conjugator": res["conjugator"],
                    "scramble": res["scramble"],
                    **fail,
                }
            )
    return {
        "command": command,
        "config": config,
        "total": len(results),
        "passed": len(results) - failed_cases,
        "failed": failed_cases,
        "check_failures": counts,
        "failures": failures,
    }


def run_verify(
    count: int,
    seed: int,
    n_range: tuple[int, int] = (2, 8),
    len_range: tuple[int, int] = (1, 30),
    jobs: int = 1,
) -> dict[str, Any]:
    if n_range[0] < 2:
        raise ValueError("random verification needs n >= 2")
    config = {"count": count, "seed": seed, "n_range": list(n_range), "len_range": list(len_range)}
    results = _map(_RandomJob(seed, n_range, len_range), range(count), jobs)
    return _summarise("verify", config, results)


def run_exhaustive(n: int, max_len: int, seed: int = 0, jobs: int = 1) -> dict[str, Any]:
    config = {"exhaustive": True, "n": n, "max_len": max_len, "seed": seed}
    items = [(seed, i, beta) for i, beta in enumerate(exhaustive_words(n, max_len))]
    return _summarise("verify", config, _map(_run_exhaustive_item, items, jobs))


def format_report(report: dict[str, Any]) -> str:
    cfg = report["config"]
    if cfg.get("exhaustive"):
        head = f"exhaustive verification: B_{cfg['n']}, words of length <= {cfg['max_len']}, seed {cfg['seed']}"
    else:
        head = (
            f"random verification: {cfg['count']} cases, n in {cfg['n_range'][0]}..{cfg['n_range'][1]}, "
            f"length in {cfg['len_range'][0]}..{cfg['len_range'][1]}, seed {cfg['seed']}"
        )
    lines = [head]
    for name, bad in report["check_failures"].items():
        lines.append(f"  {name:<15} {report['total'] - bad}/{report['total']}")
    for fail in report["failures"]:
        lines.append(
            f"FAIL case {fail['index']} (seed {fail['seed']}) check {fail['check']}: "
            f"n={fail['n']} word={' '.join(map(str, fail['word']))!r} "
            f"expected {fail['expected']} got {fail['got']}"
        )
    summary = f"{report['passed']}/{report['total']} pass"
    if report["failed"]:
        summary += f", {report['failed']} fail"
    lines.append(summary)
    return "\n".join(lines)
