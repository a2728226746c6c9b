"""Exact coefficient rings.

Three rings are used throughout the package:

* :class:`LaurentPoly` -- integer Laurent polynomials in ``t``, stored sparsely.
* :class:`Jet1` -- ``c0 + c1*h`` with ``h**2 == 0``; the image of ``t = exp(h)``
  truncated after the linear term.
* :class:`XPoly` -- dense polynomials in ``x`` whose coefficients live in any
  of the above (or plain ``int``).

All values are immutable and all arithmetic is exact; Python ``int`` gives
arbitrary precision for free. Plain ints mix freely with every ring so that
``0`` and ``1`` can be used as ring constants.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Any, Callable, Union

from ._text import format_terms, parse_terms

__all__ = [
    "ExactDivisionError",
    "LaurentPoly",
    "Jet1",
    "XPoly",
    "laurent_add",
    "laurent_mul",
    "laurent_neg",
    "eval_at_one",
    "derivative_at_one",
    "to_jet",
    "exact_divide_by_integer",
    "xpoly_divide_by_one_minus_x",
]


class ExactDivisionError(ArithmeticError):
    """An exact division had a remainder.

    Raised only on internal-consistency failures: every division in the
    algorithms here is known to be exact, so this signals a bug.
    """


def _exact_int_div(value: int, m: int, where: str = "") -> int:
    q, r = divmod(value, m)
    if r:
        raise ExactDivisionError(f"{value}{where} is not divisible by {m}")
    return q


class LaurentPoly:
    """Integer Laurent polynomial in one variable, ``{exponent: coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        if terms is None:
            clean: dict[int, int] = {}
        else:
            items = terms.items() if isinstance(terms, Mapping) else terms
            clean = {}
            for e, c in items:
                clean[int(e)] = clean.get(int(e), 0) + int(c)
            clean = {e: c for e, c in clean.items() if c}
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPoly:
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> LaurentPoly:
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def t(cls, exp: int = 1) -> LaurentPoly:
        return cls._raw({exp: 1})

    @classmethod
    def parse(cls, text: str, var: str = "t") -> LaurentPoly:
        return cls((e[0], c) for e, c in parse_terms(text, [var]).items())

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    @property
    def min_exp(self) -> int | None:
        return min(self._terms) if self._terms else None

    @property
    def max_exp(self) -> int | None:
        return max(self._terms) if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @staticmethod
    def _coerce(other: Any) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return None

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if set(self._terms) <= {0}:
                self._hash = hash(self._terms.get(0, 0))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __pos__(self) -> LaurentPoly:
        return self

    def __add__(self, other: Any) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._terms:
            return self
        out = dict(self._terms)
        for e, c in o._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other: Any) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = ea + eb
                out[e] = get(e, 0) + ca * cb
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPoly._raw({e * k: c ** (-k)})
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t**k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def exact_div(self, m: int) -> LaurentPoly:
        return LaurentPoly._raw(
            {e: _exact_int_div(c, m, f" (coefficient of t^{e})") for e, c in self._terms.items()}
        )

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    def derivative_at_one(self) -> int:
        return sum(e * c for e, c in self._terms.items())

    def to_jet(self) -> Jet1:
        return Jet1(self.eval_at_one(), self.derivative_at_one())

    def l1_norm(self) -> int:
        return sum(abs(c) for c in self._terms.values())

    def format(self, var: str = "t") -> str:
        return format_terms({(e,): c for e, c in self._terms.items()}, [var])

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()!r})"


def laurent_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def laurent_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def laurent_neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def eval_at_one(p: LaurentPoly) -> int:
    """Value at ``t = 1``."""
    return p.eval_at_one()


def derivative_at_one(p: LaurentPoly) -> int:
    """``p'(1)``, which is the ``h`` coefficient of ``p(exp(h))``."""
    return p.derivative_at_one()


def to_jet(p: LaurentPoly) -> Jet1:
    return p.to_jet()


@dataclass(frozen=True)
class Jet1:
    """``c0 + c1*h`` modulo ``h**2``."""

    c0: int
    c1: int = 0

    @staticmethod
    def _coerce(other: Any) -> Jet1 | None:
        if isinstance(other, Jet1):
            return other
        if isinstance(other, int):
            return Jet1(other, 0)
        return None

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c0 == o.c0 and self.c1 == o.c1

    def __hash__(self) -> int:
        return hash(self.c0) if self.c1 == 0 else hash((self.c0, self.c1))

    def __add__(self, other: Any) -> Jet1:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Jet1(self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __neg__(self) -> Jet1:
        return Jet1(-self.c0, -self.c1)

    def __sub__(self, other: Any) -> Jet1:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Jet1(self.c0 - o.c0, self.c1 - o.c1)

    def __rsub__(self, other: Any) -> Jet1:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Any) -> Jet1:
        if isinstance(other, int):
            return Jet1(self.c0 * other, self.c1 * other)
        if not isinstance(other, Jet1):
            return NotImplemented
        return Jet1(self.c0 * other.c0, self.c0 * other.c1 + self.c1 * other.c0)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.c0 or self.c1)

    def exact_div(self, m: int) -> Jet1:
        return Jet1(_exact_int_div(self.c0, m, " (h^0 part)"), _exact_int_div(self.c1, m, " (h^1 part)"))

    def __str__(self) -> str:
        if self.c1 == 0:
            return str(self.c0)
        h = "h" if abs(self.c1) == 1 else f"{abs(self.c1)}*h"
        if self.c0 == 0:
            return h if self.c1 > 0 else f"-{h}"
        return f"{self.c0} {'+' if self.c1 > 0 else '-'} {h}"


Scalar = Union[int, Jet1, LaurentPoly]


def _is_zero(c: Any) -> bool:
    return c == 0


class XPoly:
    """Dense polynomial ``sum(coeffs[i] * x**i)`` over a coefficient ring.

    Trailing zero coefficients are stripped, so the zero polynomial has
    ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs: tuple[Any, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Any:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, XPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Jet1, LaurentPoly)):
            return self == XPoly([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @staticmethod
    def _coerce(other: Any) -> XPoly | None:
        if isinstance(other, XPoly):
            return other
        if isinstance(other, (int, Jet1, LaurentPoly)):
            return XPoly([other])
        return None

    def __add__(self, other: Any) -> XPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        size = max(len(self), len(o))
        return XPoly(self[i] + o[i] for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> XPoly:
        return XPoly(-c for c in self.coeffs)

    def __sub__(self, other: Any) -> XPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> XPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> XPoly:
        if not isinstance(other, XPoly):
            if isinstance(other, (int, Jet1, LaurentPoly)):
                return self.scale(other)
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return XPoly()
        out: list[Any] = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return XPoly(out)

    def __rmul__(self, other: Any) -> XPoly:
        if isinstance(other, (int, Jet1, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Any) -> XPoly:
        return XPoly(c * a for a in self.coeffs)

    def map(self, f: Callable[[Any], Any]) -> XPoly:
        return XPoly(f(c) for c in self.coeffs)

    def exact_div(self, m: int) -> XPoly:
        out = []
        for i, c in enumerate(self.coeffs):
            try:
                out.append(exact_divide_by_integer(c, m))
            except ExactDivisionError as err:
                raise ExactDivisionError(f"coefficient of x^{i}: {err}") from None
        return XPoly(out)

    def divide_by_one_minus_x(self) -> XPoly:
        return xpoly_divide_by_one_minus_x(self)

    def format(self, var: str = "x") -> str:
        """Group by powers of ``var``: ``1 + (-1 + t)*x - t*x^2``."""
        pieces: list[str] = []
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            text = str(c)
            compound = " " in text.strip()
            neg = not compound and text.startswith("-")
            if neg:
                text = text[1:]
            if compound and i > 0:
                text = f"({text})"
            xpart = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if xpart:
                text = xpart if text == "1" else f"{text}*{xpart}"
            if not pieces:
                pieces.append(f"-{text}" if neg else text)
            else:
                pieces.append(f"{'-' if neg else '+'} {text}")
        return " ".join(pieces) if pieces else "0"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"XPoly({self.format()!r})"


def exact_divide_by_integer(value: Any, m: int) -> Any:
    """Divide an int, jet, Laurent polynomial or x-polynomial by a nonzero int exactly."""
    if m == 0:
        raise ZeroDivisionError("exact division by zero")
    if isinstance(value, int):
        return _exact_int_div(value, m)
    return value.exact_div(m)


def xpoly_divide_by_one_minus_x(p: XPoly) -> XPoly:
    """Quotient of ``p`` by ``1 - x``; raises if the remainder is nonzero.

    Uses ``(1 - x) * q = sum((q[i] - q[i-1]) x^i)``, so ``q[i] = p[i] + q[i-1]``
    and the remainder is ``p(1)``.
    """
    if not p.coeffs:
        return XPoly()
    q: list[Any] = []
    run: Any = 0
    for c in p.coeffs[:-1]:
        run = run + c
        q.append(run)
    if not _is_zero(run + p.coeffs[-1]):
        raise ExactDivisionError(f"{p} is not divisible by 1 - x (remainder {run + p.coeffs[-1]})")
    return XPoly(q)
