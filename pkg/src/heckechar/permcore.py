"""
Permutations of [n] = {1, ..., n} in one-line notation, generator words,
Bruhat and weak orders, pattern avoidance, Young subgroups and ordered set
partitions.

Products compose left to right: ``(u * v)(i) = v(u(i))``. Under this
convention ``s_i * w`` swaps the letters in positions i, i+1 of w, and
``w * s_i`` swaps the values i, i+1. A word ``(i_1, ..., i_m)`` denotes the
product ``s_{i_1} * ... * s_{i_m}``; its one-line notation is obtained by
letting the letters act on ``1 2 ... n`` as position swaps, rightmost letter
first. This is also the type of the all-crossings path family of the wiring
diagram of the word (see `heckechar.wiring`).

>>> perm_from_word([1, 2], 3)
Perm(3, 1, 2)
>>> s1, s2 = Perm.simple(1, 3), Perm.simple(2, 3)
>>> s1 * s2 == perm_from_word([1, 2], 3)
True
>>> Perm.parse("234167589").length()
5
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "PreconditionError", "Perm", "OrderedSetPartition",
    "all_perms", "check_word", "check_partition", "parse_word", "format_word",
    "perm_from_word", "length", "bruhat_leq", "weak_leq", "is_reduced",
    "reduced_words", "avoids_patterns", "is_321_hexagon_avoiding",
    "HEXAGON_PATTERNS", "ordered_set_partitions", "u_of_I", "young_subgroup",
    "multinomial",
]


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


class Perm(tuple):
    """A permutation of [n], stored as its one-line notation (1-based)."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int]):
        t = tuple.__new__(cls, (int(x) for x in entries))
        if sorted(t) != list(range(1, len(t) + 1)):
            raise ValueError(f"not a permutation of 1..{len(t)}: {tuple(t)}")
        return t

    @classmethod
    def _raw(cls, entries: Iterable[int]) -> Perm:
        return tuple.__new__(cls, entries)

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls._raw(range(1, n + 1))

    @classmethod
    def simple(cls, i: int, n: int) -> Perm:
        if not 1 <= i < n:
            raise ValueError(f"generator index {i} out of range for n={n}")
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls._raw(w)

    @classmethod
    def parse(cls, text: str) -> Perm:
        """Parse ``"213"`` or ``"2,1,3"``."""
        text = text.strip()
        if "," in text:
            return cls(int(x) for x in text.split(","))
        return cls(int(ch) for ch in text)

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Perm{tuple(self)!r}" if len(self) != 1 else f"Perm(({self[0]},))"

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __mul__(self, other: Perm) -> Perm:
        if not isinstance(other, Perm):
            return NotImplemented
        if len(other) != len(self):
            raise ValueError("permutations of different sizes")
        return Perm._raw(other[x - 1] for x in self)

    __rmul__ = None  # tuple repetition makes no sense here

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def inverse(self) -> Perm:
        inv = [0] * len(self)
        for pos, val in enumerate(self, 1):
            inv[val - 1] = pos
        return Perm._raw(inv)

    def length(self) -> int:
        return _length(tuple(self))

    def lmul(self, i: int) -> Perm:
        """``s_i * self``: swap positions i, i+1."""
        w = list(self)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Perm._raw(w)

    def rmul(self, i: int) -> Perm:
        """``self * s_i``: swap values i, i+1."""
        return Perm._raw(i + 1 if x == i else i if x == i + 1 else x for x in self)

    def has_left_descent(self, i: int) -> bool:
        return self[i - 1] > self[i]

    def has_right_descent(self, i: int) -> bool:
        # values i+1 and i appear in that order
        return self.index(i + 1) < self.index(i)

    def left_descents(self) -> list[int]:
        return [i for i in range(1, len(self)) if self[i - 1] > self[i]]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cyc = []
            x = start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self[x - 1]
            out.append(tuple(cyc))
        return out


@lru_cache(maxsize=None)
def _length(w: tuple[int, ...]) -> int:
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


@lru_cache(maxsize=None)
def _all_perms(n: int) -> tuple[Perm, ...]:
    perms = [Perm._raw(p) for p in itertools.permutations(range(1, n + 1))]
    return tuple(sorted(perms, key=lambda w: (w.length(), tuple(w))))


def all_perms(n: int) -> tuple[Perm, ...]:
    """All of S_n, sorted by length then lexicographically (a Bruhat linear extension)."""
    return _all_perms(n)


def check_word(word: Sequence[int], n: int) -> tuple[int, ...]:
    word = tuple(int(i) for i in word)
    for i in word:
        if not 1 <= i < n:
            raise ValueError(f"letter {i} out of range 1..{n - 1}")
    return word


def parse_word(text: str) -> tuple[int, ...]:
    """Parse a comma-separated letter list; the empty string is the empty word."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def format_word(word: Sequence[int]) -> str:
    return ",".join(map(str, word))


def check_partition(lam: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if any(x <= 0 for x in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition must be weakly decreasing: {lam}")
    if n is not None and sum(lam) != n:
        raise ValueError(f"partition {lam} does not sum to n={n}")
    return lam


def perm_from_word(word: Sequence[int], n: int) -> Perm:
    """The product s_{i_1} * ... * s_{i_m}."""
    word = check_word(word, n)
    w = Perm.identity(n)
    for i in word:
        w = w.rmul(i)
    return w


def length(w: Perm) -> int:
    return w.length()


def is_reduced(word: Sequence[int], n: int) -> bool:
    return perm_from_word(word, n).length() == len(word)


def _rank_table(w: Perm) -> list[list[int]]:
    # r[i][j] = #{a <= i : w(a) >= j+1}, 0-based i, j
    n = len(w)
    table = []
    for i in range(n):
        row = [0] * n
        for a in range(i + 1):
            for j in range(w[a]):
                row[j] += 1
        table.append(row)
    return table


def bruhat_leq(u: Perm, v: Perm) -> bool:
    """Bruhat order by the Ehresmann rank criterion."""
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    if u.length() > v.length():
        return False
    ru, rv = _rank_table(u), _rank_table(v)
    return all(ru[i][j] <= rv[i][j] for i in range(len(u)) for j in range(len(u)))


def weak_leq(u: Perm, v: Perm) -> bool:
    """Left weak order: some reduced expression for v ends with one for u."""
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    x = v * u.inverse()
    return x.length() + u.length() == v.length()


def reduced_words(w: Perm) -> list[tuple[int, ...]]:
    """All reduced words for w, by recursion on left descents."""
    return [tuple(word) for word in _reduced_words(tuple(w))]


@lru_cache(maxsize=None)
def _reduced_words(w: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    perm = Perm._raw(w)
    descents = perm.left_descents()
    if not descents:
        return ((),)
    out = []
    for i in descents:
        for rest in _reduced_words(tuple(perm.lmul(i))):
            out.append((i,) + rest)
    return tuple(sorted(out))


def _pattern_of(seq: Sequence[int]) -> tuple[int, ...]:
    ranks = sorted(seq)
    return tuple(ranks.index(x) + 1 for x in seq)


def avoids_patterns(w: Perm, patterns: Iterable[Sequence[int]]) -> bool:
    """True iff w contains no subsequence order-isomorphic to any pattern."""
    for p in patterns:
        p = tuple(p)
        k = len(p)
        if k > len(w):
            continue
        for idx in itertools.combinations(range(len(w)), k):
            if _pattern_of([w[i] for i in idx]) == p:
                return False
    return True


HEXAGON_PATTERNS: tuple[Perm, ...] = tuple(
    Perm.parse(p) for p in ("321", "56781234", "56718234", "46781235", "46718235")
)


def is_321_hexagon_avoiding(w: Perm) -> bool:
    return avoids_patterns(w, HEXAGON_PATTERNS)


def multinomial(n: int, parts: Sequence[int]) -> int:
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


@dataclass(frozen=True)
class OrderedSetPartition:
    """Blocks (I_1, ..., I_r) of [n]; each block stored as a sorted tuple."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        flat = [x for b in blocks for x in b]
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        if sorted(flat) != list(range(1, len(flat) + 1)):
            raise ValueError(f"blocks do not partition [n]: {blocks}")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def type(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def block_of(self) -> dict[int, int]:
        """Map element -> 0-based block index."""
        return {x: k for k, b in enumerate(self.blocks) for x in b}

    def __str__(self) -> str:
        return "(" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + ")"


def ordered_set_partitions(n: int, lam: Sequence[int]) -> list[OrderedSetPartition]:
    """All ordered set partitions of [n] with block sizes lam."""
    lam = tuple(lam)
    if any(x <= 0 for x in lam) or sum(lam) != n:
        raise ValueError(f"{lam} is not a composition of n={n}")

    def rec(remaining: tuple[int, ...], k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k == len(lam):
            yield ()
            return
        for block in itertools.combinations(remaining, lam[k]):
            rest = tuple(x for x in remaining if x not in block)
            for tail in rec(rest, k + 1):
                yield (block,) + tail

    return [OrderedSetPartition(bs) for bs in rec(tuple(range(1, n + 1)), 0)]


def u_of_I(I: OrderedSetPartition) -> Perm:
    """Concatenation of the blocks of I, each listed increasingly."""
    return Perm(x for b in I.blocks for x in b)


def young_subgroup(lam: Sequence[int], n: int) -> list[Perm]:
    """S_lam: permutations preserving each consecutive segment of sizes lam."""
    lam = tuple(lam)
    if sum(lam) != n:
        raise ValueError(f"{lam} does not sum to n={n}")
    segments = []
    start = 1
    for part in lam:
        segments.append(list(range(start, start + part)))
        start += part
    out = []
    for pieces in itertools.product(*(itertools.permutations(seg) for seg in segments)):
        out.append(Perm._raw(x for piece in pieces for x in piece))
    return sorted(out, key=lambda w: (w.length(), tuple(w)))
