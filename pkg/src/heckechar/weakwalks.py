"""
Walks in the weak order along a reduced expression, and their generating
polynomials p_{u,v,t,w}(q_1; word).

Given a reduced word (i_1, ..., i_k) for u t^{-1}, a walk starts at v and at
step j either moves to s_{i_j} * pi or stays put. Staying is only allowed
when the move would go down in length. The q_1-degree of a walk is its
number of stays.

>>> s, e = Perm.parse("21"), Perm.parse("12")
>>> [str(wk) for wk in walk_enumerate(s, s, e, e, (1,))]
['21 -> 12']
>>> str(p_poly(s, s, e, s, (1,)))
'q1'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactalg import Q1Poly
from .permcore import Perm, PreconditionError, check_word, perm_from_word, weak_leq

__all__ = [
    "WeakWalk", "walk_enumerate", "walks_from", "p_poly", "p_poly_recursive", "p_polys",
    "check_walk_input",
]


@dataclass(frozen=True)
class WeakWalk:
    steps: tuple[Perm, ...]
    word: tuple[int, ...]

    @property
    def stays(self) -> int:
        return sum(1 for a, b in zip(self.steps, self.steps[1:]) if a == b)

    def is_valid(self) -> bool:
        if len(self.steps) != len(self.word) + 1:
            return False
        for i, a, b in zip(self.word, self.steps, self.steps[1:]):
            moved = a.lmul(i)
            if b not in (a, moved):
                return False
            if b == a and not a.has_left_descent(i):
                return False
        return True

    def __str__(self) -> str:
        parts = [str(self.steps[0])]
        for a, b in zip(self.steps, self.steps[1:]):
            parts.append(f"{b}(stay)" if a == b else str(b))
        return " -> ".join(parts)


def check_walk_input(u: Perm, t: Perm, word: Sequence[int]) -> tuple[int, ...]:
    """Validate that `word` is a reduced expression for u t^{-1} with t below u."""
    n = len(u)
    word = check_word(word, n)
    if not weak_leq(t, u):
        raise PreconditionError(f"{t} is not below {u} in the weak order")
    target = u * t.inverse()
    if len(word) != target.length() or perm_from_word(word, n) != target:
        raise PreconditionError(
            f"word {list(word)} is not a reduced expression for u t^-1 = {target}"
        )
    return word


def walk_enumerate(u: Perm, v: Perm, t: Perm, w: Perm, word: Sequence[int]) -> list[WeakWalk]:
    """All walks from v to w along `word`."""
    return [wk for wk in walks_from(u, v, t, word) if wk.steps[-1] == w]


def walks_from(u: Perm, v: Perm, t: Perm, word: Sequence[int]) -> list[WeakWalk]:
    """All walks starting at v, whatever their endpoint, by depth-first search."""
    word = check_walk_input(u, t, word)
    out: list[WeakWalk] = []

    def dfs(path: list[Perm]) -> None:
        j = len(path) - 1
        cur = path[-1]
        if j == len(word):
            out.append(WeakWalk(tuple(path), word))
            return
        i = word[j]
        path.append(cur.lmul(i))
        dfs(path)
        path.pop()
        if cur.has_left_descent(i):
            path.append(cur)
            dfs(path)
            path.pop()

    dfs([v])
    return out


def p_poly(u: Perm, v: Perm, t: Perm, w: Perm, word: Sequence[int]) -> Q1Poly:
    """Generating polynomial of walks by their number of stays (direct count)."""
    counts: dict[int, int] = {}
    for wk in walk_enumerate(u, v, t, w, word):
        counts[wk.stays] = counts.get(wk.stays, 0) + 1
    if not counts:
        return Q1Poly()
    return Q1Poly(counts.get(b, 0) for b in range(max(counts) + 1))


def p_poly_recursive(u: Perm, v: Perm, t: Perm, w: Perm, word: Sequence[int]) -> Q1Poly:
    """The same polynomial by peeling off the first letter of the word."""
    word = check_walk_input(u, t, word)

    def rec(u: Perm, v: Perm, k: int) -> Q1Poly:
        if k == len(word):
            return Q1Poly.const(1) if v == w else Q1Poly()
        s = word[k]
        su, sv = u.lmul(s), v.lmul(s)
        out = rec(su, sv, k + 1)
        if v.has_left_descent(s):
            out = out + rec(su, v, k + 1).shift(1)
        return out

    return rec(u, v, 0)


def p_polys(u: Perm, v: Perm, t: Perm, word: Sequence[int]) -> dict[Perm, Q1Poly]:
    """{w: p_{u,v,t,w}} for all endpoints at once (zero values omitted)."""
    word = check_walk_input(u, t, word)
    states: dict[Perm, Q1Poly] = {v: Q1Poly.const(1)}
    for i in word:
        nxt: dict[Perm, Q1Poly] = {}
        for cur, c in states.items():
            moved = cur.lmul(i)
            nxt[moved] = nxt.get(moved, Q1Poly()) + c
            if cur.has_left_descent(i):
                nxt[cur] = nxt.get(cur, Q1Poly()) + c.shift(1)
        states = {k: c for k, c in nxt.items() if c}
    return states
