"""Parsing and printing of sparse integer monomial sums such as ``3*x^2*t^-1 - t``."""

from __future__ import annotations

import re
from collections.abc import Mapping, Sequence

_TERM = re.compile(r"([+-]?)((?:\^[+-]|[^+-])+)")
_SPLIT_NUMBER = re.compile(r"\d\s+\d")
_FACTOR = re.compile(r"\*?(?:(\d+)|([A-Za-z])(?:\^([+-]?\d+))?)")


class PolynomialParseError(ValueError):
    pass


def parse_terms(text: str, variables: Sequence[str]) -> dict[tuple[int, ...], int]:
    """Parse ``text`` into ``{exponent tuple: coefficient}`` over ``variables``.

    Terms may come in any order and repeat; like terms are summed and zero
    coefficients dropped. Multiplication may be written with ``*`` or by
    juxtaposition (``3x``, ``x t``).
    """
    if _SPLIT_NUMBER.search(text):
        raise PolynomialParseError(f"digits separated by whitespace in {text!r}")
    body = "".join(text.split())
    if not body:
        raise PolynomialParseError("empty polynomial text")
    index = {v: i for i, v in enumerate(variables)}
    out: dict[tuple[int, ...], int] = {}
    pos = 0
    for match in _TERM.finditer(body):
        if match.start() != pos:
            raise PolynomialParseError(f"cannot parse {text!r} near {body[pos:]!r}")
        if match.group(1) == "" and pos != 0:
            raise PolynomialParseError(f"missing operator in {text!r}")
        pos = match.end()
        sign = -1 if match.group(1) == "-" else 1
        coeff, exps = _parse_monomial(match.group(2), index, text)
        out[exps] = out.get(exps, 0) + sign * coeff
    if pos != len(body):
        raise PolynomialParseError(f"cannot parse {text!r} near {body[pos:]!r}")
    return {e: c for e, c in out.items() if c}


def _parse_monomial(body: str, index: Mapping[str, int], text: str) -> tuple[int, tuple[int, ...]]:
    coeff = 1
    exps = [0] * len(index)
    pos = 0
    while pos < len(body):
        match = _FACTOR.match(body, pos)
        if match is None or match.end() == pos:
            raise PolynomialParseError(f"bad term {body!r} in {text!r}")
        if pos == 0 and body.startswith("*"):
            raise PolynomialParseError(f"bad term {body!r} in {text!r}")
        number, var, exp = match.groups()
        if number is not None:
            coeff *= int(number)
        else:
            if var not in index:
                raise PolynomialParseError(f"unknown variable {var!r} in {text!r}")
            exps[index[var]] += int(exp) if exp is not None else 1
        pos = match.end()
    return coeff, tuple(exps)


def format_terms(
    terms: Mapping[tuple[int, ...], int],
    variables: Sequence[str],
    order: Sequence[int] | None = None,
) -> str:
    """Render a term map; ``order`` gives the variable print order (default as given).

    Terms are emitted in ascending lexicographic exponent order over
    ``variables`` (not over the print order).
    """
    if not terms:
        return "0"
    order = range(len(variables)) if order is None else order
    pieces = []
    for exps in sorted(terms):
        coeff = terms[exps]
        factors = []
        for i in order:
            e = exps[i]
            if e == 1:
                factors.append(variables[i])
            elif e != 0:
                factors.append(f"{variables[i]}^{e}")
        mag = abs(coeff)
        if not factors:
            mono = str(mag)
        elif mag == 1:
            mono = "*".join(factors)
        else:
            mono = "*".join([str(mag), *factors])
        if not pieces:
            pieces.append(mono if coeff > 0 else f"-{mono}")
        else:
            pieces.append(f"+ {mono}" if coeff > 0 else f"- {mono}")
    return " ".join(pieces)
