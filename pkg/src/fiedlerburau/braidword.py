"""Braid words in Artin generators, their permutations and closures.

Conventions used everywhere in the package:

* letters are read top to bottom and strands are oriented downward;
* the closure joins bottom position ``j`` to top position ``j``;
* a letter ``sigma_i^(+-1)`` swaps positions ``i`` and ``i + 1``, so a
  braid's permutation maps each top position to the bottom position the
  strand starting there arrives at.

Positions are 1-based to match the generator indices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

__all__ = [
    "BraidError",
    "BraidWord",
    "Permutation",
    "parse_braid_word",
    "permutation_of",
    "writhe",
    "closure_component_count",
    "is_knot_closure",
    "concat",
    "inverse",
    "conjugate",
    "random_braid",
    "smoothed_pass_permutation",
    "multi_pass_permutation",
    "all_words",
    "RESAMPLE_CAP",
]

RESAMPLE_CAP = 10_000


class BraidError(ValueError):
    """Malformed braid word or an operation outside its domain."""


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..n}``; ``images[j - 1]`` is the image of ``j``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other`` (i.e. ``other o self``)."""
        return Permutation(tuple(other.images[p - 1] for p in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for j, p in enumerate(self.images, start=1):
            inv[p - 1] = j
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        result = Permutation.identity(self.n)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result.then(base)
        return result

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def orbit_length(self, j: int) -> int:
        length, p = 1, self(j)
        while p != j:
            p = self(p)
            length += 1
        return length

    def is_identity(self) -> bool:
        return all(p == j for j, p in enumerate(self.images, start=1))


@dataclass(frozen=True)
class BraidWord:
    """A word in ``B_n``; ``letters`` holds ``(index, sign)`` pairs."""

    n: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise BraidError(f"strand count must be >= 1, got {self.n}")
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 1 <= i <= self.n - 1:
                raise BraidError(f"generator index {i} out of range for B_{self.n}")
            if s not in (1, -1):
                raise BraidError(f"letter sign must be +1 or -1, got {s}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_ints(cls, word: Iterable[int], n: int | None = None) -> BraidWord:
        word = list(word)
        if any(j == 0 for j in word):
            raise BraidError("0 is not a braid generator")
        if n is None:
            n = max((abs(j) for j in word), default=0) + 1
        for j in word:
            if abs(j) >= n:
                raise BraidError(f"generator {j} out of range for B_{n}")
        return cls(n, tuple((abs(j), 1 if j > 0 else -1) for j in word))

    @property
    def k(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def to_ints(self) -> list[int]:
        return [i * s for i, s in self.letters]

    def __str__(self) -> str:
        return " ".join(str(j) for j in self.to_ints())

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def permutation(self) -> Permutation:
        return permutation_of(self)

    def writhe(self) -> int:
        return writhe(self)

    def is_knot_closure(self) -> bool:
        return is_knot_closure(self)


def parse_braid_word(text: str, n: int | None = None) -> BraidWord:
    """Parse ``"1 -2 1"`` style text: ``j`` means ``sigma_|j|`` with the sign of ``j``."""
    word = []
    for token in text.split():
        try:
            word.append(int(token))
        except ValueError:
            raise BraidError(f"not an integer braid letter: {token!r}") from None
    return BraidWord.from_ints(word, n)


def _letters_permutation(n: int, indices: Iterable[int]) -> Permutation:
    # track the strand at each top position; pos[j] = current position of strand j
    pos = list(range(1, n + 1))
    where = list(range(n + 1))  # where[p] = strand currently at position p
    for i in indices:
        a, b = where[i], where[i + 1]
        where[i], where[i + 1] = b, a
        pos[a - 1], pos[b - 1] = i + 1, i
    return Permutation(tuple(pos))


def permutation_of(beta: BraidWord) -> Permutation:
    return _letters_permutation(beta.n, (i for i, _ in beta.letters))


def writhe(beta: BraidWord) -> int:
    return sum(s for _, s in beta.letters)


def closure_component_count(beta: BraidWord) -> int:
    return len(permutation_of(beta).cycles())


def is_knot_closure(beta: BraidWord) -> bool:
    return closure_component_count(beta) == 1


def _same_n(*braids: BraidWord) -> int:
    ns = {b.n for b in braids}
    if len(ns) != 1:
        raise BraidError(f"braids live in different groups: n = {sorted(ns)}")
    return ns.pop()


def concat(beta1: BraidWord, beta2: BraidWord) -> BraidWord:
    return BraidWord(_same_n(beta1, beta2), beta1.letters + beta2.letters)


def inverse(beta: BraidWord) -> BraidWord:
    return BraidWord(beta.n, tuple((i, -s) for i, s in reversed(beta.letters)))


def conjugate(beta: BraidWord, gamma: BraidWord) -> BraidWord:
    """``gamma * beta * gamma^-1``."""
    _same_n(beta, gamma)
    return concat(concat(gamma, beta), inverse(gamma))


def random_braid(n: int, k: int, seed: int, require_knot: bool = False) -> BraidWord:
    """Uniform random word of length ``k`` in ``B_n``, reproducible from ``seed``.

    With ``require_knot`` whole words are redrawn until the closure is a knot,
    giving up after :data:`RESAMPLE_CAP` attempts.
    """
    if n < 2:
        raise BraidError(f"random_braid needs n >= 2, got {n}")
    if k < 0:
        raise BraidError(f"random_braid needs k >= 0, got {k}")
    rng = random.Random(seed)
    alphabet = [j for i in range(1, n) for j in (i, -i)]
    for _ in range(RESAMPLE_CAP):
        beta = BraidWord.from_ints((rng.choice(alphabet) for _ in range(k)), n)
        if not require_knot or is_knot_closure(beta):
            return beta
    raise BraidError(
        f"no knot-closure braid found after {RESAMPLE_CAP} attempts (n={n}, k={k}, seed={seed})"
    )


def _check_crossing(beta: BraidWord, r: int) -> None:
    if not 1 <= r <= beta.k:
        raise BraidError(f"crossing index {r} out of range 1..{beta.k}")


def smoothed_pass_permutation(beta: BraidWord, r: int) -> Permutation:
    """One trip round the closure starting just below crossing ``r``, which is smoothed.

    This is the permutation of the cyclic word ``r+1, ..., k, 1, ..., r-1``.
    """
    _check_crossing(beta, r)
    idx = [i for i, _ in beta.letters]
    return _letters_permutation(beta.n, idx[r:] + idx[: r - 1])


def multi_pass_permutation(beta: BraidWord, r: int, m: int) -> Permutation:
    """Permutation of ``m`` trips round the closure from just below crossing ``r``,
    passing through every letter except the final occurrence of crossing ``r``.

    These are the ``m*k - 1`` letters whose permutation matrices multiply
    ``P_{i_r}`` in the ``h``-coefficient of ``tr(B(e^h)^m)``.
    """
    _check_crossing(beta, r)
    if m < 1:
        raise BraidError(f"number of passes must be >= 1, got {m}")
    idx = [i for i, _ in beta.letters]
    cyclic = idx[r:] + idx[:r]
    return _letters_permutation(beta.n, (cyclic * m)[:-1])


def all_words(n: int, length: int) -> Iterable[BraidWord]:
    """Every word of exactly ``length`` letters in ``B_n``."""
    alphabet: Sequence[int] = [j for i in range(1, n) for j in (i, -i)]
    for word in product(alphabet, repeat=length):
        yield BraidWord.from_ints(word, n)
