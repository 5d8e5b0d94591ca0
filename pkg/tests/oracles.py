"""Brute-force reference implementations used only by the tests.

Everything here works on plain tuples and avoids the package's own
algorithms, so agreement with the package is meaningful.
"""

from __future__ import annotations

import itertools
import math


def inversions(w) -> int:
    return sum(1 for a, b in itertools.combinations(w, 2) if a > b)


def act(word, n) -> tuple[int, ...]:
    """Letters act on 1..n as position swaps, rightmost letter first."""
    w = list(range(1, n + 1))
    for i in reversed(word):
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def brute_reduced_words(w) -> set[tuple[int, ...]]:
    n = len(w)
    k = inversions(w)
    return {
        word for word in itertools.product(range(1, n), repeat=k)
        if act(word, n) == tuple(w)
    }


def brute_bruhat_leq(u, v) -> bool:
    """Subword property on one reduced word of v."""
    n = len(v)
    lu = inversions(u)
    word = min(brute_reduced_words(v))
    return any(
        act(sub, n) == tuple(u)
        for sub in itertools.combinations(word, lu)
    )


def brute_weak_leq(u, v) -> bool:
    """Some reduced word of v ends with a reduced word of u."""
    n = len(v)
    lu = inversions(u)
    return any(
        act(word[len(word) - lu:], n) == tuple(u)
        for word in brute_reduced_words(v)
    )


def brute_ordered_partitions(n, lam):
    """Assignments of 1..n to blocks with prescribed sizes."""
    out = []
    for labels in itertools.product(range(len(lam)), repeat=n):
        if all(labels.count(k) == lam[k] for k in range(len(lam))):
            out.append(tuple(
                tuple(x for x in range(1, n + 1) if labels[x - 1] == k)
                for k in range(len(lam))
            ))
    return out


def classical_epsilon(w, lam) -> int:
    """Sign times the number of type-lam ordered set partitions fixed blockwise by w."""
    n = len(w)
    count = 0
    for blocks in brute_ordered_partitions(n, lam):
        if all({w[x - 1] for x in b} == set(b) for b in blocks):
            count += 1
    return (-1) ** inversions(w) * count


def multinomial(n, parts) -> int:
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def group_algebra_product(word, n) -> dict[tuple[int, ...], int]:
    """Expand (1+s_{i_1})...(1+s_{i_m}) by summing over all 2^m subwords."""
    out: dict[tuple[int, ...], int] = {}
    for mask in itertools.product((0, 1), repeat=len(word)):
        w = act([i for i, b in zip(word, mask) if b], n)
        out[w] = out.get(w, 0) + 1
    return out
