"""
Wiring diagrams, their covering path families, and the evaluation map sigma.

A diagram of the word (i_1, ..., i_m) has n horizontal wires (levels 1..n,
bottom to top) and, in column j, a central vertex where the wires at levels
i_j and i_j + 1 meet. A covering path family is determined by a binary mask:
``mask[j] == 1`` means the two paths meeting in column j cross there.

Paths are named by their source level. The type of a family is the
permutation w with path p ending at sink w(p).

sigma(x^{u,w}) is computed three independent ways:

* `sigma_dp`: prefix recursion over the letters, one generator at a time;
* `sigma_direct`: sum of q^{cross/2} q^{incross} over covering families;
* `sigma_zalgebra`: literal coefficient extraction of z_G from products of
  path-matrix entries in the quasicommuting edge-weight algebra.

>>> d = WiringDiagram(3, (1, 2, 1))
>>> u = Perm.parse("213")
>>> sigma_dp(d, u)[u].pretty()
'q + q^2'
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Mapping, Sequence

from .exactalg import ONE, Q, Q_HALF, ZERO, LaurentPoly
from .permcore import Perm, all_perms, check_word, format_word, perm_from_word

__all__ = [
    "WiringDiagram", "Meeting", "PathFamily", "family_from_mask", "families",
    "type_counts", "sigma_generator", "sigma_dp", "sigma_direct",
    "sigma_zalgebra", "zg_coefficient", "classical_eval", "MAX_MASK_BITS",
]

# hard ceiling on 2^m enumeration
MAX_MASK_BITS = 24


@dataclass(frozen=True)
class WiringDiagram:
    n: int
    word: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", check_word(self.word, self.n))

    @property
    def m(self) -> int:
        return len(self.word)

    def product(self) -> Perm:
        return perm_from_word(self.word, self.n)

    def split(self, k: int) -> tuple[WiringDiagram, WiringDiagram]:
        return WiringDiagram(self.n, self.word[:k]), WiringDiagram(self.n, self.word[k:])

    def __str__(self) -> str:
        return f"G[{format_word(self.word)}] (n={self.n})"

    def ascii(self) -> str:
        """Plain-text picture: wires are rows, X marks each meeting."""
        width = 3 * self.m + 2
        lines = []
        for h in range(self.n, 0, -1):
            lines.append(f"{h} " + "-" * width + f" {h}")
            if h > 1:
                gap = [" "] * width
                for j, i in enumerate(self.word):
                    if i == h - 1:
                        gap[3 * j + 2] = "X"
                lines.append("  " + "".join(gap).rstrip())
        return "\n".join(line.rstrip() for line in lines)


@dataclass(frozen=True)
class Meeting:
    """The two paths through the central vertex of one column."""

    column: int        # 0-based column index
    letter: int
    bottom: int        # path entering at level `letter`
    top: int           # path entering at level `letter + 1`
    crossing: bool
    defective: bool


@dataclass(frozen=True)
class PathFamily:
    diagram: WiringDiagram
    mask: tuple[int, ...]
    type: Perm
    meetings: tuple[Meeting, ...]
    # trajectories[p-1][j] = level of path p after j columns
    trajectories: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def cross(self) -> int:
        return sum(1 for mt in self.meetings if mt.crossing)

    @property
    def dfct(self) -> int:
        return sum(1 for mt in self.meetings if mt.defective)

    @property
    def defective_crossings(self) -> int:
        return sum(1 for mt in self.meetings if mt.defective and mt.crossing)

    @property
    def defective_noncrossings(self) -> int:
        return sum(1 for mt in self.meetings if mt.defective and not mt.crossing)

    @cached_property
    def intersecting_pairs(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset((mt.bottom, mt.top)) for mt in self.meetings)

    def incross(self, rank: Mapping[int, int]) -> int:
        """Noncrossings whose upper path has strictly smaller rank than the lower one.

        `rank` maps each path (source index) to its column or position in an
        arrangement.
        """
        return sum(
            1 for mt in self.meetings
            if not mt.crossing and rank[mt.top] < rank[mt.bottom]
        )

    def to_json(self) -> dict:
        return {
            "mask": "".join(map(str, self.mask)),
            "type": str(self.type),
            "cross": self.cross,
            "dfct": self.dfct,
        }


def family_from_mask(d: WiringDiagram, mask: Sequence[int]) -> PathFamily:
    mask = tuple(int(b) for b in mask)
    if len(mask) != d.m:
        raise ValueError(f"mask length {len(mask)} != word length {d.m}")
    if any(b not in (0, 1) for b in mask):
        raise ValueError("mask entries must be 0 or 1")
    n = d.n
    at_level = list(range(n + 1))       # at_level[h] = path at level h
    level_of = list(range(n + 1))       # level_of[p] = level of path p
    traj = [[p] for p in range(1, n + 1)]
    parity: dict[tuple[int, int], int] = {}
    meetings = []
    for j, (i, b) in enumerate(zip(d.word, mask)):
        lo, hi = at_level[i], at_level[i + 1]
        key = (min(lo, hi), max(lo, hi))
        odd = parity.get(key, 0)
        meetings.append(Meeting(j, i, lo, hi, bool(b), bool(odd)))
        if b:
            parity[key] = odd ^ 1
            at_level[i], at_level[i + 1] = hi, lo
            level_of[lo], level_of[hi] = i + 1, i
        for p in range(1, n + 1):
            traj[p - 1].append(level_of[p])
    return PathFamily(
        diagram=d,
        mask=mask,
        type=Perm._raw(level_of[1:]),
        meetings=tuple(meetings),
        trajectories=tuple(tuple(t) for t in traj),
    )


def _check_mask_budget(d: WiringDiagram) -> None:
    if d.m > MAX_MASK_BITS:
        raise ValueError(f"refusing to enumerate 2^{d.m} masks (limit 2^{MAX_MASK_BITS})")


def families(d: WiringDiagram) -> Iterator[PathFamily]:
    """All 2^m covering path families, masks in lexicographic order."""
    _check_mask_budget(d)
    for mask in itertools.product((0, 1), repeat=d.m):
        yield family_from_mask(d, mask)


@lru_cache(maxsize=4096)
def _families_cached(d: WiringDiagram) -> tuple[PathFamily, ...]:
    return tuple(families(d))


def type_counts(d: WiringDiagram) -> dict[Perm, int]:
    """Number of covering families of each type."""
    out: dict[Perm, int] = {}
    for fam in _families_cached(d):
        out[fam.type] = out.get(fam.type, 0) + 1
    return out


# -- sigma by dynamic programming ---------------------------------------------

def sigma_generator(j: int, u: Perm, v: Perm) -> LaurentPoly:
    """sigma(x^{u,v}) for the one-column diagram of s_j."""
    if u == v.rmul(j):
        return Q_HALF
    if u == v:
        return Q if v.has_right_descent(j) else ONE
    return ZERO


def sigma_dp(d: WiringDiagram, u: Perm) -> dict[Perm, LaurentPoly]:
    """sigma(x^{u,w}) for every w (zero values omitted)."""
    if len(u) != d.n:
        raise ValueError("permutation size does not match diagram")
    vals: dict[Perm, LaurentPoly] = {u: ONE}
    for s in d.word:
        nxt: dict[Perm, LaurentPoly] = {}
        for v, c in vals.items():
            # only w = v and w = v*s receive a nonzero single-column factor
            stay = c * sigma_generator(s, v, v)
            vs = v.rmul(s)
            move = c * sigma_generator(s, v, vs)
            nxt[v] = nxt.get(v, ZERO) + stay
            nxt[vs] = nxt.get(vs, ZERO) + move
        vals = {w: c for w, c in nxt.items() if c}
    return vals


# -- sigma by path-family statistics -----------------------------------------

def sigma_direct(d: WiringDiagram, u: Perm, w: Perm) -> LaurentPoly:
    """Sum over covering families of type u^{-1} w of q^{cross/2 + incross(U(pi,u,w))}."""
    target = u.inverse() * w
    position = {p: k for k, p in enumerate(u)}
    out: dict[int, int] = {}
    for fam in _families_cached(d):
        if fam.type != target:
            continue
        e = fam.cross + 2 * fam.incross(position)
        out[e] = out.get(e, 0) + 1
    return LaurentPoly(out)


# -- sigma in the quasicommuting edge-weight algebra ---------------------------

ZVar = tuple[int, int, int]   # (level, column, slot), column 1-based, slot 1 = left half


@lru_cache(maxsize=4096)
def _single_paths(d: WiringDiagram, source: int) -> dict[int, tuple[tuple[ZVar, ...], ...]]:
    """Every source-to-sink path from `source`, as its ordered list of z-weights."""
    partial: list[tuple[int, tuple[ZVar, ...]]] = [(source, ())]
    for j, i in enumerate(d.word, 1):
        nxt = []
        for level, zs in partial:
            if level in (i, i + 1):
                for exit_level in (i, i + 1):
                    nxt.append((exit_level, zs + ((level, j, 1), (exit_level, j, 2))))
            else:
                nxt.append((level, zs))
        partial = nxt
    by_sink: dict[int, list[tuple[ZVar, ...]]] = {}
    for level, zs in partial:
        by_sink.setdefault(level, []).append(zs)
    return {k: tuple(v) for k, v in by_sink.items()}


def _normal_order_half_exp(word: Sequence[ZVar]) -> int:
    """Powers of q^{1/2} collected when sorting a square-free z-word lexicographically.

    Only z_{h,j,k} and z_{h',j,k} in the same column and slot fail to commute,
    and z_{i+1,j,k} z_{i,j,k} = q^{1/2} z_{i,j,k} z_{i+1,j,k}.
    """
    seen: dict[tuple[int, int], int] = {}
    half = 0
    for h, j, k in word:
        prev = seen.get((j, k))
        if prev is not None and prev > h:
            half += 1
        seen[(j, k)] = h
    return half


@lru_cache(maxsize=65536)
def zg_coefficient(d: WiringDiagram, v: Perm) -> LaurentPoly:
    """[z_G] b_{1,v_1} b_{2,v_2} ... b_{n,v_n} after normal ordering."""
    paths = [_single_paths(d, r).get(v[r - 1], ()) for r in range(1, d.n + 1)]
    total = 4 * d.m
    out: dict[int, int] = {}

    def dfs(r: int, used: frozenset, word: tuple[ZVar, ...]) -> None:
        if r == d.n:
            if len(used) == total:
                e = _normal_order_half_exp(word)
                out[e] = out.get(e, 0) + 1
            return
        for zs in paths[r]:
            zset = frozenset(zs)
            if len(zset) == len(zs) and used.isdisjoint(zset):
                dfs(r + 1, used | zset, word + zs)

    dfs(0, frozenset(), ())
    return LaurentPoly(out)


def sigma_zalgebra(d: WiringDiagram, u: Perm, w: Perm) -> LaurentPoly:
    """Expand x^{u,w} over {x^{e,v}}, then substitute path-matrix entries."""
    from .qmatrix import zero_weight_expand

    expansion = zero_weight_expand(u, w, Perm.identity(d.n))
    total = ZERO
    for v, c in expansion.items():
        total = total + c * zg_coefficient(d, v)
    return total


# -- classical evaluation --------------------------------------------------------

def classical_eval(d: WiringDiagram, theta: Mapping[Perm, int]) -> int:
    """theta((1+s_{i_1})...(1+s_{i_m})) as a weighted count of covering families."""
    return sum(theta.get(w, 0) * c for w, c in type_counts(d).items())


def all_sigma_dp(d: WiringDiagram) -> dict[Perm, dict[Perm, LaurentPoly]]:
    return {u: sigma_dp(d, u) for u in all_perms(d.n)}
