"""Permutations of the infinite symmetric group with finite support.

A permutation is stored in one-line notation with trailing fixed points
trimmed, so S_n embeds in S_{n+1} transparently.  The product convention is
composition of functions: ``(u * v)(i) = u(v(i))``.

>>> w = Permutation.from_one_line([2, 1, 3])
>>> w.one_line
(2, 1)
>>> w.length()
1
>>> (w * w).is_identity()
True
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

__all__ = [
    "InvalidPermutationError",
    "Permutation",
    "all_permutations",
    "reduced_words",
    "reduced_factorizations",
    "triple_reduced_factorizations",
    "bruhat_leq",
]


class InvalidPermutationError(ValueError):
    """Raised for sequences that are not permutations of 1..m."""


@dataclass(frozen=True)
class Permutation:
    """One-line notation, canonically trimmed (last entry != its position)."""

    one_line: tuple[int, ...] = ()

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_one_line(values: Iterable[int]) -> "Permutation":
        """Validate, trim trailing fixed points, and build a permutation.

        >>> Permutation.from_one_line([1, 2, 3])
        Permutation(one_line=())
        >>> Permutation.from_one_line([3, 1, 2]).one_line
        (3, 1, 2)
        """
        vals = tuple(int(v) for v in values)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise InvalidPermutationError(
                f"not a permutation of 1..{len(vals)}: {list(vals)!r}"
            )
        while vals and vals[-1] == len(vals):
            vals = vals[:-1]
        return Permutation(vals)

    @staticmethod
    def identity() -> "Permutation":
        return Permutation(())

    @staticmethod
    def simple(i: int) -> "Permutation":
        """The simple reflection s_i swapping i and i+1."""
        if i < 1:
            raise InvalidPermutationError(f"simple reflection index must be >= 1: {i}")
        line = list(range(1, i + 2))
        line[i - 1], line[i] = line[i], line[i - 1]
        return Permutation(tuple(line))

    @staticmethod
    def longest_element(n: int) -> "Permutation":
        """w0 in S_n, i.e. [n, n-1, ..., 1]."""
        if n < 1:
            raise InvalidPermutationError(f"n must be positive: {n}")
        return Permutation.from_one_line(range(n, 0, -1))

    # -- basics ------------------------------------------------------------

    @property
    def size(self) -> int:
        """Smallest n with self in S_n (0 for the identity)."""
        return len(self.one_line)

    def is_identity(self) -> bool:
        return not self.one_line

    def __call__(self, i: int) -> int:
        if i < 1:
            raise InvalidPermutationError(f"argument must be >= 1: {i}")
        return self.one_line[i - 1] if i <= len(self.one_line) else i

    def in_sn(self, n: int) -> bool:
        return self.size <= n

    def length(self) -> int:
        """Number of inversions (= length of any reduced word)."""
        line = self.one_line
        return sum(
            1
            for a, b in itertools.combinations(range(len(line)), 2)
            if line[a] > line[b]
        )

    def __mul__(self, other: "Permutation") -> "Permutation":
        """(u * v)(i) = u(v(i))."""
        m = max(self.size, other.size)
        return Permutation.from_one_line(self(other(i)) for i in range(1, m + 1))

    def inverse(self) -> "Permutation":
        line = self.one_line
        inv = [0] * len(line)
        for pos, val in enumerate(line, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def times_simple(self, i: int) -> "Permutation":
        """Right multiplication by s_i (swaps positions i and i+1)."""
        m = max(self.size, i + 1)
        line = [self(j) for j in range(1, m + 1)]
        line[i - 1], line[i] = line[i], line[i - 1]
        while line and line[-1] == len(line):
            line.pop()
        return Permutation(tuple(line))

    # -- descents / words --------------------------------------------------

    def right_descents(self) -> list[int]:
        """All i with length(w s_i) = length(w) - 1, i.e. w(i) > w(i+1)."""
        return [i for i in range(1, self.size) if self(i) > self(i + 1)]

    def first_ascent(self) -> int | None:
        """Smallest i < size with w(i) < w(i+1); None for decreasing words."""
        for i in range(1, self.size):
            if self(i) < self(i + 1):
                return i
        return None

    def lehmer_code(self) -> tuple[int, ...]:
        line = self.one_line
        return tuple(
            sum(1 for j in range(i + 1, len(line)) if line[j] < line[i])
            for i in range(len(line))
        )

    # -- serialization -----------------------------------------------------

    def to_json(self) -> list[int]:
        return list(self.one_line)

    @staticmethod
    def from_json(data: Iterable[int]) -> "Permutation":
        return Permutation.from_one_line(data)

    def __str__(self) -> str:
        if self.is_identity():
            return "[]"
        return "[" + ",".join(str(v) for v in self.one_line) + "]"


def all_permutations(n: int) -> Iterator[Permutation]:
    """All elements of S_n (as trimmed permutations)."""
    for line in itertools.permutations(range(1, n + 1)):
        yield Permutation.from_one_line(line)


@lru_cache(maxsize=None)
def reduced_words(w: Permutation) -> frozenset[tuple[int, ...]]:
    """All reduced words (i1,...,il) with w = s_{i1} * ... * s_{il}.

    >>> sorted(reduced_words(Permutation.from_one_line([3, 2, 1])))
    [(1, 2, 1), (2, 1, 2)]
    >>> reduced_words(Permutation.from_one_line([2, 3, 1]))
    frozenset({(1, 2)})
    """
    if w.is_identity():
        return frozenset({()})
    words = set()
    for i in w.right_descents():
        # w s_i is shorter, and w = (w s_i) * s_i appends the letter i.
        for word in reduced_words(w.times_simple(i)):
            words.add(word + (i,))
    return frozenset(words)


@lru_cache(maxsize=None)
def reduced_factorizations(w: Permutation) -> frozenset[tuple[Permutation, Permutation]]:
    """All pairs (u, v) with u*v = w and length(u)+length(v) = length(w).

    Brute force over u in the smallest S_n containing w; adequate at desk
    scale (n <= 6).
    """
    n = max(w.size, 1)
    lw = w.length()
    pairs = set()
    for u in all_permutations(n):
        lu = u.length()
        if lu > lw:
            continue
        v = u.inverse() * w
        if lu + v.length() == lw:
            pairs.add((u, v))
    return frozenset(pairs)


@lru_cache(maxsize=None)
def triple_reduced_factorizations(
    w: Permutation,
) -> frozenset[tuple[Permutation, Permutation, Permutation]]:
    """All triples (a, b, c) with a*b*c = w and lengths adding to length(w)."""
    triples = set()
    for a, rest in reduced_factorizations(w):
        for b, c in reduced_factorizations(rest):
            triples.add((a, b, c))
    return frozenset(triples)


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Bruhat order via the Ehresmann tableau criterion.

    Equivalent to: some (every) reduced word of w contains a reduced word of
    u as a subword.

    >>> s1 = Permutation.simple(1)
    >>> bruhat_leq(s1, Permutation.from_one_line([2, 3, 1]))
    True
    >>> bruhat_leq(Permutation.from_one_line([3, 1, 2]),
    ...            Permutation.from_one_line([2, 3, 1]))
    False
    """
    if u.length() > w.length():
        return False
    n = max(u.size, w.size, 1)
    for i in range(1, n + 1):
        us = sorted(u(j) for j in range(1, i + 1))
        ws = sorted(w(j) for j in range(1, i + 1))
        if any(a > b for a, b in zip(us, ws)):
            return False
    return True


if __name__ == "__main__":
    import doctest

    doctest.testmod()
