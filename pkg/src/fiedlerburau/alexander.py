"""Alexander polynomials of a closed braid together with its axis.

``(1 - x) Delta(t, x) = det(I - x B(t))`` where ``x`` is the meridian of the
axis and ``t`` that of the closed braid. Running this backwards recovers
Fiedler's invariant from an Alexander polynomial known only up to a unit
``+-x^a t^b``: multiply by ``1 - x``, put ``t = e^h``, normalise the ``h^0``
part to ``1 - x^n`` and read off the ``h`` coefficients ``f_0, ..., f_n``.
A unit ``t^b`` moves ``b`` between ``f_0`` and ``f_n`` and leaves
``f_1, ..., f_{n-1}`` alone.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Optional

from ._text import format_terms, parse_terms
from .braidword import BraidWord
from .burau import burau_matrix, charpoly_newton
from .fiedler import FiedlerPoly
from .polyring import LaurentPoly, XPoly, xpoly_divide_by_one_minus_x

__all__ = [
    "RecoveryError",
    "BivariatePoly",
    "RecoveryResult",
    "GeneralLinkInvariant",
    "alexander_closed_braid_with_axis",
    "scramble_units",
    "recover_fiedler_from_alexander",
    "general_link_invariant",
]


class RecoveryError(ValueError):
    """Input is not an axis-link polynomial of a knot closure on ``n`` strands."""


class BivariatePoly:
    """Sparse integer Laurent polynomial in ``x`` and ``t``: ``{(x_exp, t_exp): coeff}``."""

    __slots__ = ("_terms",)
    VARIABLES = ("x", "t")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, int], int] = {}
        for (a, b), c in items:
            key = (int(a), int(b))
            clean[key] = clean.get(key, 0) + int(c)
        self._terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def parse(cls, text: str) -> BivariatePoly:
        """Read ``"1 + t^3*x"``-style text; whitespace and term order are free."""
        return cls(parse_terms(text, cls.VARIABLES))

    @classmethod
    def from_xpoly(cls, p: XPoly) -> BivariatePoly:
        terms = {}
        for a, coeff in enumerate(p.coeffs):
            if isinstance(coeff, int):
                coeff = LaurentPoly.constant(coeff)
            for b, c in coeff.items():
                terms[(a, b)] = c
        return cls(terms)

    def to_xpoly(self) -> XPoly:
        """As an :class:`XPoly` over :class:`LaurentPoly`; needs ``x`` exponents >= 0."""
        if self.min_x() < 0:
            raise ValueError("negative x exponent; shift first")
        size = self.max_x() + 1 if self._terms else 0
        rows: list[dict[int, int]] = [{} for _ in range(size)]
        for (a, b), c in self._terms.items():
            rows[a][b] = c
        return XPoly(LaurentPoly(r) for r in rows)

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def min_x(self) -> int:
        return min((a for a, _ in self._terms), default=0)

    def max_x(self) -> int:
        return max((a for a, _ in self._terms), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: BivariatePoly) -> BivariatePoly:
        return BivariatePoly(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> BivariatePoly:
        return BivariatePoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: BivariatePoly) -> BivariatePoly:
        return self + (-other)

    def __mul__(self, other: BivariatePoly | int) -> BivariatePoly:
        if isinstance(other, int):
            return BivariatePoly({k: c * other for k, c in self._terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivariatePoly(out)

    __rmul__ = __mul__

    def monomial_shift(self, a: int, b: int) -> BivariatePoly:
        """Multiply by ``x^a t^b``."""
        return BivariatePoly({(x + a, t + b): c for (x, t), c in self._terms.items()})

    def swap_variables(self) -> BivariatePoly:
        return BivariatePoly({(t, x): c for (x, t), c in self._terms.items()})

    def h_expansion(self) -> tuple[dict[int, int], dict[int, int]]:
        """Put ``t = e^h``: ``({x_exp: h^0 coeff}, {x_exp: h^1 coeff})``, zeros dropped."""
        h0: dict[int, int] = {}
        h1: dict[int, int] = {}
        for (a, b), c in self._terms.items():
            h0[a] = h0.get(a, 0) + c
            h1[a] = h1.get(a, 0) + b * c
        return {a: c for a, c in h0.items() if c}, {a: c for a, c in h1.items() if c}

    def format(self) -> str:
        # sorted by (x, t) exponent, printed t-part first: "1 + t^3*x"
        return format_terms(self._terms, self.VARIABLES, order=(1, 0))

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"BivariatePoly({self.format()!r})"


_ONE_MINUS_X = BivariatePoly({(0, 0): 1, (1, 0): -1})


def alexander_closed_braid_with_axis(beta: BraidWord) -> BivariatePoly:
    """``Delta(t, x) = det(I - x B(t)) / (1 - x)`` for any closure."""
    cp = charpoly_newton(burau_matrix(beta))
    return BivariatePoly.from_xpoly(xpoly_divide_by_one_minus_x(cp))


def scramble_units(delta: BivariatePoly, a: int, b: int, sign: int) -> BivariatePoly:
    """``sign * x^a * t^b * delta``."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return delta.monomial_shift(a, b) * sign


@dataclass(frozen=True)
class RecoveryResult:
    fiedler: FiedlerPoly
    f0: int
    fn: int
    n: int
    x_shift: int = 0
    sign: int = 1

    @property
    def f(self) -> list[int]:
        """``[f_0, f_1, ..., f_n]``."""
        return [self.f0] + [self.fiedler.coeff(m) for m in range(1, self.n)] + [self.fn]


def recover_fiedler_from_alexander(delta: BivariatePoly, n: int) -> RecoveryResult:
    """Recover Fiedler's invariant from ``+-x^a t^b Delta(t, x)`` for an ``n``-strand knot closure.

    ``x_shift`` and ``sign`` in the result are the normalising unit that was
    applied after multiplying by ``1 - x``.
    """
    if n < 1:
        raise RecoveryError(f"strand count must be >= 1, got {n}")
    h0, h1 = (_ONE_MINUS_X * delta).h_expansion()
    # h^0 part is +-x^lo (1 - x^n); align by its extreme degrees, then check exactly
    if not h0:
        raise RecoveryError(f"not a knot-closure axis-link polynomial for n={n}: h^0 part vanishes")
    lo, hi = min(h0), max(h0)
    sign = h0[lo]
    if hi - lo != n or sign not in (1, -1) or h0 != {lo: sign, hi: -sign}:
        shown = XPoly([h0.get(a, 0) for a in range(lo, hi + 1)]).format()
        raise RecoveryError(
            f"not a knot-closure axis-link polynomial for n={n}: "
            f"h^0 part x^{lo}*({shown}) is not a unit times 1 - x^{n}"
        )
    f = [0] * (n + 1)
    for a, c in h1.items():
        d = a - lo
        if not 0 <= d <= n:
            raise RecoveryError(
                f"not a knot-closure axis-link polynomial for n={n}: h^1 term at x^{d} after normalising"
            )
        f[d] = sign * c
    fiedler = FiedlerPoly.from_list(n, f[1:n]) if n >= 2 else FiedlerPoly(n)
    return RecoveryResult(fiedler, f[0], f[n], n, x_shift=-lo, sign=sign)


@dataclass(frozen=True)
class GeneralLinkInvariant:
    a0: XPoly
    a1: XPoly
    a1_reduced: Optional[XPoly]
    x_shift: int = 0


def _remainder_monic(p: XPoly, q: XPoly) -> XPoly:
    # q's leading coefficient is +-1, so the remainder stays integral
    lead = q.coeffs[-1]
    dq = q.degree
    r = list(p.coeffs)
    for top in range(len(r) - 1, dq - 1, -1):
        c = r[top]
        if c == 0:
            continue
        factor = c * lead  # c / lead, as lead = +-1
        for j, qc in enumerate(q.coeffs):
            r[top - dq + j] -= factor * qc
    return XPoly(r[:dq])


def general_link_invariant(delta: BivariatePoly, axis_var: str = "x") -> GeneralLinkInvariant:
    """``a_1(x)`` modulo ``a_0(x)`` where ``Delta(x, e^h) = a_0(x) + a_1(x) h + O(h^2)``.

    ``axis_var`` names the variable of the component ``X`` (kept as ``x``);
    the other variable is substituted by ``e^h``. Negative ``x`` exponents
    are cleared by multiplying the whole of ``delta`` by ``x^x_shift``.
    The reduction is only carried out when ``a_0`` has leading coefficient
    ``+-1``; otherwise ``a1_reduced`` is ``None``.
    """
    if axis_var not in ("x", "t"):
        raise ValueError(f"axis_var must be 'x' or 't', got {axis_var!r}")
    if axis_var == "t":
        delta = delta.swap_variables()
    shift = -delta.min_x()
    h0, h1 = delta.monomial_shift(shift, 0).h_expansion()
    if not h0:
        raise RecoveryError("a_0 vanishes identically after t = e^h")
    top = max(list(h0) + list(h1))
    a0 = XPoly([h0.get(a, 0) for a in range(top + 1)])
    a1 = XPoly([h1.get(a, 0) for a in range(top + 1)])
    reduced = _remainder_monic(a1, a0) if a0.coeffs[-1] in (1, -1) else None
    return GeneralLinkInvariant(a0, a1, reduced, x_shift=shift)
