"""Fiedler's small state-sum invariant of a closed braid.

For each crossing ``r`` of a knot-closure braid ``beta`` in ``B_n``, smooth
the crossing and follow its ascending string (position ``i_r`` for a
positive crossing, ``i_r + 1`` for a negative one) round the closure until it
closes after ``m(r)`` turns. Then

    F(X) = sum_r eps_r X^(2 m(r) - n).

The invariant is stored by bucket ``m`` rather than by exponent so that the
half-integer substitution ``X = x^(1/2)`` never appears in the arithmetic.
The same coefficients come out of the ``h``-linear part of
``det(I - x B(e^h))``; :func:`verify_routes` compares the two routes.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from .braidword import (
    BraidError,
    BraidWord,
    closure_component_count,
    is_knot_closure,
    multi_pass_permutation,
    smoothed_pass_permutation,
)
from .burau import f_from_traces, jet_generator

__all__ = [
    "FiedlerPoly",
    "ascending_start",
    "m_of_crossing",
    "crossing_m_values",
    "fiedler_statesum",
    "fiedler_from_burau",
    "fiedler_from_crossing_traces",
    "crossing_trace_contribution",
    "RoutesReport",
    "verify_routes",
    "render_fiedler",
]


@dataclass(frozen=True)
class FiedlerPoly:
    """Coefficients ``c_m`` (``1 <= m <= n-1``) of ``X^(2m-n)``; zeros omitted."""

    n: int
    items: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        clean = tuple(sorted((int(m), int(c)) for m, c in self.items if c))
        for m, _ in clean:
            if not 1 <= m <= self.n - 1:
                raise ValueError(f"bucket {m} outside 1..{self.n - 1}")
        if len({m for m, _ in clean}) != len(clean):
            raise ValueError(f"repeated bucket in {self.items}")
        object.__setattr__(self, "items", clean)

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Mapping[int, int]) -> FiedlerPoly:
        return cls(n, tuple(coeffs.items()))

    @classmethod
    def from_list(cls, n: int, f: list[int]) -> FiedlerPoly:
        """From ``[f_1, ..., f_{n-1}]``."""
        return cls(n, tuple(enumerate(f, start=1)))

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self.items)

    def coeff(self, m: int) -> int:
        return self.coeffs.get(m, 0)

    def exponents(self) -> dict[int, int]:
        """``{2m - n: c_m}``."""
        return {2 * m - self.n: c for m, c in self.items}

    def is_symmetric(self) -> bool:
        c = self.coeffs
        return all(c.get(self.n - m, 0) == v for m, v in c.items())

    def total(self) -> int:
        return sum(c for _, c in self.items)

    def __bool__(self) -> bool:
        return bool(self.items)

    def __str__(self) -> str:
        return render_fiedler(self)


def render_fiedler(F: FiedlerPoly) -> str:
    """``X^-1 + X`` style, ascending exponent; the zero polynomial is ``"0"``."""
    pieces = []
    for exp, c in sorted(F.exponents().items()):
        if exp == 0:
            mono = str(abs(c))
        else:
            x = "X" if exp == 1 else f"X^{exp}"
            mono = x if abs(c) == 1 else f"{abs(c)}*{x}"
        if not pieces:
            pieces.append(mono if c > 0 else f"-{mono}")
        else:
            pieces.append(f"{'+' if c > 0 else '-'} {mono}")
    return " ".join(pieces) if pieces else "0"


def _require_knot(beta: BraidWord) -> None:
    if not is_knot_closure(beta):
        raise BraidError(
            f"closure has {closure_component_count(beta)} components; a knot closure is required"
        )


def ascending_start(beta: BraidWord, r: int) -> int:
    """Position of the string leaving the overcrossing at crossing ``r`` (1-based)."""
    if not 1 <= r <= beta.k:
        raise BraidError(f"crossing index {r} out of range 1..{beta.k}")
    i, s = beta.letters[r - 1]
    return i if s > 0 else i + 1


def m_of_crossing(beta: BraidWord, r: int) -> int:
    """Number of turns round the axis before the ascending string of smoothed crossing ``r`` closes."""
    _require_knot(beta)
    return smoothed_pass_permutation(beta, r).orbit_length(ascending_start(beta, r))


def crossing_m_values(beta: BraidWord) -> list[int]:
    _require_knot(beta)
    return [
        smoothed_pass_permutation(beta, r).orbit_length(ascending_start(beta, r))
        for r in range(1, beta.k + 1)
    ]


def fiedler_statesum(beta: BraidWord) -> FiedlerPoly:
    """The state sum over crossing smoothings."""
    ms = crossing_m_values(beta)
    coeffs: dict[int, int] = {}
    for m, (_, s) in zip(ms, beta.letters):
        coeffs[m] = coeffs.get(m, 0) + s
    return FiedlerPoly.from_coeffs(beta.n, coeffs)


def fiedler_from_burau(beta: BraidWord) -> FiedlerPoly:
    """``c_m = f_m`` read off ``tr(B(e^h)^m) = -m f_m h + O(h^2)``."""
    return FiedlerPoly.from_list(beta.n, f_from_traces(beta))


def crossing_trace_contribution(beta: BraidWord, r: int, m: int) -> int:
    """``tr(T P_{i_r}^(+-))`` where ``T`` is the permutation matrix of the other ``m*k - 1`` letters.

    Evaluates to ``-eps_r`` when ``m == m(r)`` and 0 otherwise for ``m < n``.
    """
    pi = multi_pass_permutation(beta, r, m)
    i, s = beta.letters[r - 1]
    P = jet_generator(i, s, beta.n)
    # T[a, b] = 1 iff a = pi^-1(b) (matrix products compose right to left),
    # so tr(T P) = sum_b P[b, a] over a = pi^-1(b), i.e. sum_a P[pi(a), a]
    return sum(P[pi(a) - 1, a - 1].c1 for a in range(1, beta.n + 1))


def fiedler_from_crossing_traces(beta: BraidWord) -> FiedlerPoly:
    """``f_m = -sum_r tr(T P_{i_r})``, one permutation-matrix trace per crossing."""
    _require_knot(beta)
    coeffs = {
        m: -sum(crossing_trace_contribution(beta, r, m) for r in range(1, beta.k + 1))
        for m in range(1, beta.n)
    }
    return FiedlerPoly.from_coeffs(beta.n, coeffs)


@dataclass(frozen=True)
class RoutesReport:
    word: BraidWord
    statesum: FiedlerPoly
    burau: FiedlerPoly
    match: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "match", self.statesum == self.burau)


def verify_routes(beta: BraidWord) -> RoutesReport:
    return RoutesReport(beta, fiedler_statesum(beta), fiedler_from_burau(beta))
