"""Burau matrices, power-sum traces and characteristic polynomials.

The unreduced Burau representation sends ``sigma_i`` to the identity with
the 2x2 block ``[[1 - t, t], [1, 0]]`` in rows/columns ``i, i+1``. Putting
``t = e^h`` and truncating at ``h**2`` gives the jet matrices
``T_i + h P_i^(+-)`` where ``T_i`` is the permutation matrix of ``(i i+1)``.

Characteristic polynomials ``det(I - x M) = 1 + b_1 x + ... + b_n x^n`` are
computed from the traces ``p_m = tr(M^m)`` by Newton's identities, every
division being exact in the coefficient ring. A cofactor expansion is kept
as an independent check for small matrices.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .braidword import BraidError, BraidWord, is_knot_closure, permutation_of, closure_component_count
from .polyring import ExactDivisionError, Jet1, LaurentPoly, XPoly, exact_divide_by_integer

__all__ = [
    "ConsistencyError",
    "SizeWarning",
    "Matrix",
    "burau_generator",
    "burau_matrix",
    "jet_generator",
    "burau_jet_matrix",
    "power_sum_traces",
    "f_from_traces",
    "charpoly_newton",
    "charpoly_cofactor",
    "verify_determinant",
    "jet_expansion",
    "SOFT_MAX_STRANDS",
    "SOFT_MAX_LENGTH",
]

SOFT_MAX_STRANDS = 16
SOFT_MAX_LENGTH = 64

_T = LaurentPoly.t(1)
_T_INV = LaurentPoly.t(-1)
_ONE = LaurentPoly.constant(1)
_ZERO = LaurentPoly.constant(0)


class ConsistencyError(ArithmeticError):
    """A quantity that must vanish (or divide exactly) did not; indicates a bug."""


class SizeWarning(UserWarning):
    """Exact computation requested beyond the desk-scale soft limits."""


@dataclass(frozen=True)
class Matrix:
    """Square matrix over a commutative ring, stored row-major as nested tuples."""

    rows: tuple[tuple[Any, ...], ...]

    @classmethod
    def identity(cls, n: int, one: Any = 1, zero: Any = 0) -> Matrix:
        return cls(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[Any]]) -> Matrix:
        n = len(cols)
        return cls(tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Any:
        i, j = ij
        return self.rows[i][j]

    def columns(self) -> list[list[Any]]:
        return [[row[j] for row in self.rows] for j in range(self.n)]

    def __matmul__(self, other: Matrix) -> Matrix:
        cols = other.columns()
        out = []
        for row in self.rows:
            new_row = []
            for col in cols:
                acc: Any = 0
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                new_row.append(acc)
            out.append(tuple(new_row))
        return Matrix(tuple(out))

    def trace(self) -> Any:
        acc: Any = 0
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def map(self, f: Callable[[Any], Any]) -> Matrix:
        return Matrix(tuple(tuple(f(a) for a in row) for row in self.rows))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.n == other.n and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __hash__(self) -> int:
        return hash(self.rows)

    def format(self) -> str:
        cells = [[str(a) for a in row] for row in self.rows]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    def __str__(self) -> str:
        return self.format()


def _check_generator(i: int, sign: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise BraidError(f"generator index {i} out of range for B_{n}")
    if sign not in (1, -1):
        raise BraidError(f"generator sign must be +1 or -1, got {sign}")


def _generator(i: int, sign: int, n: int, block: Sequence[Sequence[Any]], one: Any, zero: Any) -> Matrix:
    rows = [[one if r == c else zero for c in range(n)] for r in range(n)]
    for a in range(2):
        for b in range(2):
            rows[i - 1 + a][i - 1 + b] = block[a][b]
    return Matrix(tuple(tuple(r) for r in rows))


def burau_generator(i: int, sign: int, n: int) -> Matrix:
    """Exact Burau matrix of ``sigma_i^sign`` in ``B_n``."""
    _check_generator(i, sign, n)
    if sign > 0:
        block = [[_ONE - _T, _T], [_ONE, _ZERO]]
    else:
        block = [[_ZERO, _ONE], [_T_INV, _ONE - _T_INV]]
    return _generator(i, sign, n, block, _ONE, _ZERO)


# jets of the block entries at t = e^h
_J_T = Jet1(1, 1)
_J_T_INV = Jet1(1, -1)
_J_ONE_MINUS_T = Jet1(0, -1)
_J_ONE_MINUS_T_INV = Jet1(0, 1)
_J_ONE = Jet1(1, 0)
_J_ZERO = Jet1(0, 0)


def jet_generator(i: int, sign: int, n: int) -> Matrix:
    """``T_i + h P_i^sign``: the Burau matrix of ``sigma_i^sign`` at ``t = e^h`` mod ``h^2``."""
    _check_generator(i, sign, n)
    if sign > 0:
        block = [[_J_ONE_MINUS_T, _J_T], [_J_ONE, _J_ZERO]]
    else:
        block = [[_J_ZERO, _J_ONE], [_J_T_INV, _J_ONE_MINUS_T_INV]]
    return _generator(i, sign, n, block, _J_ONE, _J_ZERO)


def _product_of_generators(beta: BraidWord, one: Any, zero: Any, consts: tuple[Any, Any, Any, Any]) -> Matrix:
    # right-multiplying by a generator only mixes columns i and i+1
    t, one_minus_t, t_inv, one_minus_t_inv = consts
    n = beta.n
    cols = [[one if r == c else zero for r in range(n)] for c in range(n)]
    for i, s in beta.letters:
        a, b = cols[i - 1], cols[i]
        if s > 0:
            cols[i - 1] = [x * one_minus_t + y for x, y in zip(a, b)]
            cols[i] = [x * t for x in a]
        else:
            cols[i - 1] = [y * t_inv for y in b]
            cols[i] = [x + y * one_minus_t_inv for x, y in zip(a, b)]
    return Matrix.from_columns(cols)


def _warn_if_large(beta: BraidWord) -> None:
    if beta.n > SOFT_MAX_STRANDS or beta.k > SOFT_MAX_LENGTH:
        warnings.warn(
            f"exact Burau computation for n={beta.n}, k={beta.k} exceeds the "
            f"soft limits n<={SOFT_MAX_STRANDS}, k<={SOFT_MAX_LENGTH}; this may be slow",
            SizeWarning,
            stacklevel=3,
        )


def burau_matrix(beta: BraidWord) -> Matrix:
    """Exact ``B(t)``: the ordered product of the letters' generator matrices."""
    _warn_if_large(beta)
    return _product_of_generators(beta, _ONE, _ZERO, (_T, _ONE - _T, _T_INV, _ONE - _T_INV))


def burau_jet_matrix(beta: BraidWord) -> Matrix:
    """``B(e^h)`` modulo ``h^2``, entries :class:`Jet1`."""
    return _product_of_generators(
        beta, _J_ONE, _J_ZERO, (_J_T, _J_ONE_MINUS_T, _J_T_INV, _J_ONE_MINUS_T_INV)
    )


def power_sum_traces(M: Matrix, max_m: int) -> list[Any]:
    """``[tr(M), tr(M^2), ..., tr(M^max_m)]`` by repeated multiplication."""
    if max_m < 1:
        raise ValueError(f"max_m must be >= 1, got {max_m}")
    traces = [M.trace()]
    power = M
    for _ in range(max_m - 1):
        power = power @ M
        traces.append(power.trace())
    return traces


def newton_elementary(traces: Sequence[Any]) -> list[Any]:
    """Elementary symmetric functions ``e_0..e_N`` from power sums ``p_1..p_N``.

    ``m e_m = sum_{i=1..m} (-1)^(i-1) e_(m-i) p_i``; each division is exact.
    """
    e: list[Any] = [1]
    for m in range(1, len(traces) + 1):
        acc: Any = 0
        for i in range(1, m + 1):
            term = e[m - i] * traces[i - 1]
            acc = acc + term if i % 2 else acc - term
        try:
            e.append(exact_divide_by_integer(acc, m))
        except ExactDivisionError as err:
            raise ExactDivisionError(f"Newton step m={m}: {err}") from None
    return e


def charpoly_newton(M: Matrix) -> XPoly:
    """``det(I - x M)`` as an :class:`XPoly` with constant term 1."""
    n = M.n
    if n == 0:
        return XPoly([1])
    e = newton_elementary(power_sum_traces(M, n))
    return XPoly([1] + [e[m] if m % 2 == 0 else -e[m] for m in range(1, n + 1)])


COFACTOR_MAX_DIM = 5


def _det(entries: list[list[XPoly]]) -> XPoly:
    size = len(entries)
    if size == 1:
        return entries[0][0]
    total = XPoly()
    for j in range(size):
        a = entries[0][j]
        if not a:
            continue
        minor = [row[:j] + row[j + 1 :] for row in entries[1:]]
        term = a * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def charpoly_cofactor(M: Matrix) -> XPoly:
    """``det(I - x M)`` by Laplace expansion; an oracle for :func:`charpoly_newton`."""
    n = M.n
    if n > COFACTOR_MAX_DIM:
        raise ValueError(f"cofactor expansion limited to n <= {COFACTOR_MAX_DIM}, got {n}")
    if n == 0:
        return XPoly([1])
    entries = [
        [XPoly([1 if i == j else 0, -M[i, j]]) for j in range(n)]
        for i in range(n)
    ]
    return _det(entries)


def _require_knot(beta: BraidWord) -> None:
    if not is_knot_closure(beta):
        raise BraidError(
            f"closure has {closure_component_count(beta)} components; a knot closure is required"
        )


def f_from_traces(beta: BraidWord) -> list[int]:
    """``[f_1, ..., f_{n-1}]`` from ``tr(B(e^h)^m) = -m f_m h + O(h^2)``.

    Also checks that the ``h^0`` part of each trace vanishes, as it must when
    the closure is a knot: ``beta^m`` then permutes with no fixed points.
    """
    _require_knot(beta)
    if beta.n < 2:
        return []
    traces = power_sum_traces(burau_jet_matrix(beta), beta.n - 1)
    out = []
    for m, p in enumerate(traces, start=1):
        p = Jet1._coerce(p)
        if p.c0 != 0:
            raise ConsistencyError(f"tr(B^{m}) has nonzero h^0 part {p.c0} for a knot closure {beta}")
        try:
            out.append(-exact_divide_by_integer(p.c1, m))
        except ExactDivisionError as err:
            raise ConsistencyError(f"h-coefficient of tr(B^{m}) not divisible by {m}: {err}") from None
    return out


def jet_expansion(beta: BraidWord) -> tuple[XPoly, XPoly]:
    """``(a_0(x), a_1(x))`` with ``det(I - x B(e^h)) = a_0 + a_1 h + O(h^2)``."""
    cp = charpoly_newton(burau_jet_matrix(beta))
    cp = cp.map(Jet1._coerce)
    return cp.map(lambda j: j.c0), cp.map(lambda j: j.c1)


def verify_determinant(beta: BraidWord) -> bool:
    """Check ``b_n(t) = (-1)^n (-t)^w`` on the exact characteristic polynomial."""
    cp = charpoly_newton(burau_matrix(beta))
    w = sum(s for _, s in beta.letters)
    expected = LaurentPoly.monomial((-1) ** beta.n * (-1) ** (w % 2), w)
    return cp[beta.n] == expected


def permutation_matrix_of(beta: BraidWord) -> Matrix:
    """The ``h^0`` part of ``B(e^h)``: row ``i`` has its 1 in column ``pi(i)``.

    Matrix products compose right to left while :func:`permutation_of` applies
    letters left to right, hence the row convention.
    """
    perm = permutation_of(beta)
    n = beta.n
    return Matrix(tuple(tuple(1 if j + 1 == perm(i + 1) else 0 for j in range(n)) for i in range(n)))
