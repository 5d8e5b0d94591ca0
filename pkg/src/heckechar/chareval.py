"""
Evaluation of the induced sign characters epsilon_q^lam at the Hecke algebra
element (1 + T_{s_{i_1}}) ... (1 + T_{s_{i_m}}).

Three independent routes are provided:

* `epsilon_eval_tableaux`: subtraction-free sum over column-strict tableaux
  built from identity-type covering path families;
* `epsilon_eval_immanant`: signed sum of sigma values over ordered set
  partitions and Young subgroup elements;
* `epsilon_eval_chartable`: natural-basis expansion paired with the
  character table read off from products of quantum determinants.

>>> d = WiringDiagram(3, (1, 2, 1))
>>> epsilon_eval_tableaux(d, (2, 1)).pretty()
'q + q^2'
>>> epsilon_classical(Perm.parse("234167589"), (5, 4))
-3
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from .exactalg import ONE, ZERO, LaurentPoly
from .heckealg import classical_product, product_one_plus_T
from .permcore import (
    OrderedSetPartition, Perm, PreconditionError, all_perms, avoids_patterns,
    check_partition, is_321_hexagon_avoiding, is_reduced, ordered_set_partitions,
    reduced_words, u_of_I, young_subgroup,
)
from .qmatrix import epsilon_char_table
from .wiring import PathFamily, WiringDiagram, _families_cached, sigma_dp

__all__ = [
    "GTableau", "enumerate_tableaux", "epsilon_eval_tableaux",
    "epsilon_eval_immanant", "epsilon_eval_chartable", "epsilon_eval",
    "epsilon_classical", "epsilon_classical_eval", "kl_eval_321hex",
    "inv_statistic_check", "signed_tableau_sums", "METHODS",
]

METHODS = ("tableaux", "immanant", "chartable")


def _check_lambda(d: WiringDiagram, lam: Sequence[int]) -> tuple[int, ...]:
    return check_partition(lam, d.n)


@dataclass(frozen=True)
class GTableau:
    """A covering path family arranged into columns given by an ordered set partition.

    Column k holds the paths whose sources lie in block k, listed bottom to top
    in increasing order.
    """

    family: PathFamily
    columns: OrderedSetPartition

    @property
    def shape(self) -> tuple[int, ...]:
        """Column heights."""
        return self.columns.type

    @cached_property
    def column_of(self) -> dict[int, int]:
        return self.columns.block_of()

    @property
    def cross(self) -> int:
        return self.family.cross

    @cached_property
    def incross(self) -> int:
        return self.family.incross(self.column_of)

    @cached_property
    def cdncross(self) -> int:
        """Defective noncrossings between two paths of the same column."""
        col = self.column_of
        return sum(
            1 for mt in self.family.meetings
            if not mt.crossing and mt.top < mt.bottom and col[mt.top] == col[mt.bottom]
        )

    def is_column_closed(self) -> bool:
        col = self.column_of
        return all(col[p] == col[self.family.type[p - 1]] for p in col)

    def is_column_strict(self) -> bool:
        col = self.column_of
        return all(col[mt.top] != col[mt.bottom] for mt in self.family.meetings)

    @property
    def inv(self) -> int:
        """Intersecting pairs whose larger path sits in an earlier column."""
        col = self.column_of
        return sum(
            1 for pair in self.family.intersecting_pairs
            if col[max(pair)] < col[min(pair)]
        )

    @property
    def weight_half_exp(self) -> int:
        return 2 * self.incross + self.cross

    def weight(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.weight_half_exp)

    def to_json(self) -> dict:
        return {
            **self.family.to_json(),
            "columns": [list(b) for b in self.columns.blocks],
            "incross": self.incross,
        }

    def __str__(self) -> str:
        mask = "".join(map(str, self.family.mask))
        return f"mask={mask} columns={self.columns} incross={self.incross} cross={self.cross}"


def enumerate_tableaux(d: WiringDiagram, lam: Sequence[int]) -> list[GTableau]:
    """Column-strict G-tableaux of type e whose column heights are lam."""
    lam = _check_lambda(d, lam)
    ident = Perm.identity(d.n)
    fams = [f for f in _families_cached(d) if f.type == ident]
    parts = ordered_set_partitions(d.n, lam)
    out = []
    for fam in fams:
        for I in parts:
            tab = GTableau(fam, I)
            if tab.is_column_strict():
                out.append(tab)
    return out


def epsilon_eval_tableaux(d: WiringDiagram, lam: Sequence[int]) -> LaurentPoly:
    counts: dict[int, int] = {}
    for tab in enumerate_tableaux(d, lam):
        e = tab.weight_half_exp
        counts[e] = counts.get(e, 0) + 1
    return LaurentPoly(counts)


def _signed_young(lam: tuple[int, ...], n: int) -> list[tuple[Perm, LaurentPoly]]:
    # (-1)^{l(y)} q^{-l(y)/2}
    return [
        (y, LaurentPoly.monomial(-y.length(), -1 if y.length() % 2 else 1))
        for y in young_subgroup(lam, n)
    ]


def epsilon_eval_immanant(d: WiringDiagram, lam: Sequence[int]) -> LaurentPoly:
    lam = _check_lambda(d, lam)
    signed = _signed_young(lam, d.n)
    total = ZERO
    for I in ordered_set_partitions(d.n, lam):
        u = u_of_I(I)
        sig = sigma_dp(d, u)
        for y, c in signed:
            val = sig.get(y * u)
            if val:
                total = total + c * val
    return total


def epsilon_eval_chartable(d: WiringDiagram, lam: Sequence[int]) -> LaurentPoly:
    lam = _check_lambda(d, lam)
    table = epsilon_char_table(lam, d.n)
    h = product_one_plus_T(d.word, d.n)
    total = ZERO
    for w, a in h.coords.items():
        val = table.get(w)
        if val:
            total = total + a * val
    return total


_DISPATCH = {
    "tableaux": epsilon_eval_tableaux,
    "immanant": epsilon_eval_immanant,
    "chartable": epsilon_eval_chartable,
}


def epsilon_eval(d: WiringDiagram, lam: Sequence[int], method: str = "tableaux") -> LaurentPoly:
    try:
        fn = _DISPATCH[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}") from None
    return fn(d, lam)


# -- the classical specialization ------------------------------------------------

def _count_labelings(cycle_lengths: Sequence[int], lam: Sequence[int]) -> int:
    @lru_cache(maxsize=None)
    def rec(k: int, remaining: tuple[int, ...]) -> int:
        if k == len(cycle_lengths):
            return 1 if not any(remaining) else 0
        c = cycle_lengths[k]
        total = 0
        for i, cap in enumerate(remaining):
            if cap >= c:
                nxt = remaining[:i] + (cap - c,) + remaining[i + 1:]
                total += rec(k + 1, nxt)
        return total

    return rec(0, tuple(lam))


def epsilon_classical(w: Perm, lam: Sequence[int]) -> int:
    """(-1)^{inv(w)} times the number of labelings of the cycles of w by 1..r
    in which the cycles labeled i contain lam_i letters in total."""
    lam = check_partition(lam, len(w))
    lengths = [len(c) for c in w.cycles()]
    sign = -1 if w.length() % 2 else 1
    return sign * _count_labelings(lengths, lam)


def epsilon_classical_eval(d: WiringDiagram, lam: Sequence[int]) -> int:
    """sum_w d_w epsilon^lam(w) over the expansion of (1+s_{i_1})...(1+s_{i_m})."""
    lam = _check_lambda(d, lam)
    return sum(c * epsilon_classical(w, lam) for w, c in classical_product(d.word, d.n).items())


# -- Kazhdan-Lusztig corollaries ---------------------------------------------------

def kl_eval_321hex(w: Perm, lam: Sequence[int], *, seed: int = 0,
                   exhaustive_limit: int = 1000, sample_size: int = 10) -> LaurentPoly:
    """epsilon_q^lam(q_w C'_w(q)) for a 321-hexagon-avoiding w.

    For such w the Kazhdan-Lusztig element equals the product of (1 + T_s)
    along any reduced word; the tableau evaluation is checked to agree on all
    reduced words (or a random sample when there are too many).
    """
    lam = check_partition(lam, len(w))
    if not is_321_hexagon_avoiding(w):
        raise PreconditionError(f"{w} is not 321-hexagon-avoiding")
    words = reduced_words(w)
    if len(words) > exhaustive_limit:
        words = random.Random(seed).sample(words, sample_size)
    values = {epsilon_eval_tableaux(WiringDiagram(len(w), word), lam) for word in words}
    if len(values) != 1:
        raise ArithmeticError(f"evaluation depends on the reduced word: {sorted(map(str, values))}")
    return values.pop()


_321_3412 = (Perm.parse("321"), Perm.parse("3412"))


def inv_statistic_check(d: WiringDiagram, lam: Sequence[int]) -> bool:
    """For a zig-zag diagram: every tableau has no crossings and incross = inv."""
    lam = _check_lambda(d, lam)
    if not is_reduced(d.word, d.n):
        raise PreconditionError(f"word {list(d.word)} is not reduced")
    if not avoids_patterns(d.product(), _321_3412):
        raise PreconditionError(f"{d.product()} contains 321 or 3412")
    return all(t.cross == 0 and t.incross == t.inv for t in enumerate_tableaux(d, lam))


# -- sign-reversing involution consequence ---------------------------------------

def signed_tableau_sums(d: WiringDiagram, I: OrderedSetPartition) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of the cancellation identity for one ordered set partition.

    The first value is the signed sum over all column-closed arrangements with
    columns I; the second is the sum over the column-strict identity-type ones.
    Also asserts that the single-row and column statistics are related by
    incross(U) = incross(W) + cdncross(W).
    """
    u = u_of_I(I)
    pos = {p: k for k, p in enumerate(u)}
    u_inv = u.inverse()
    ident = Perm.identity(d.n)
    signed, restricted = ZERO, ZERO
    for fam in _families_cached(d):
        tab = GTableau(fam, I)
        if not tab.is_column_closed():
            continue
        y = u * fam.type * u_inv
        ly = y.length()
        e = -ly + fam.cross + 2 * (tab.incross + tab.cdncross)
        signed = signed + LaurentPoly.monomial(e, -1 if ly % 2 else 1)
        if fam.incross(pos) != tab.incross + tab.cdncross:
            raise ArithmeticError(f"statistic bridge fails for mask {fam.mask} and {I}")
        if fam.type == ident and tab.is_column_strict():
            restricted = restricted + tab.weight()
    return signed, restricted


def all_classical_values(lam: Sequence[int], n: int) -> dict[Perm, int]:
    return {w: epsilon_classical(w, lam) for w in all_perms(n)}
