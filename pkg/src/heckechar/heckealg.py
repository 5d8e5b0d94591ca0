"""
Natural-basis arithmetic in the Hecke algebra H_n(q), and the expansion of
products (1 + T_{s_{i_1}}) ... (1 + T_{s_{i_m}}).

Right multiplication by a generator follows the quadratic relation

    T_w T_s = T_{ws}                     if ws > w
    T_w T_s = (q - 1) T_w + q T_{ws}     if ws < w

>>> h = product_one_plus_T([1, 2, 1], 3)
>>> h.coeff(Perm.identity(3)).pretty()
'1 + q'
>>> sorted(classical_product([1, 1], 2).values())
[2, 2]
"""

from __future__ import annotations

import itertools
import json
from typing import Iterable, Mapping, Sequence

from .exactalg import ONE, Q, ZERO, LaurentPoly
from .permcore import Perm, check_word

__all__ = [
    "HeckeElement", "mul_by_generator", "product_one_plus_T",
    "mask_expansion_defects", "classical_product",
]


class HeckeElement:
    """A finite sum of `coeff * T_w` with `LaurentPoly` coefficients."""

    __slots__ = ("n", "coords")

    def __init__(self, n: int, coords: Mapping[Perm, LaurentPoly] | None = None):
        self.n = n
        self.coords: dict[Perm, LaurentPoly] = {}
        for w, c in (coords or {}).items():
            if len(w) != n:
                raise ValueError(f"permutation {w} is not in S_{n}")
            if c:
                self.coords[Perm(w)] = c

    @classmethod
    def basis(cls, w: Perm) -> HeckeElement:
        return cls(len(w), {w: ONE})

    @classmethod
    def one(cls, n: int) -> HeckeElement:
        return cls.basis(Perm.identity(n))

    def coeff(self, w: Perm) -> LaurentPoly:
        return self.coords.get(w, ZERO)

    def support(self) -> list[Perm]:
        return sorted(self.coords, key=lambda w: tuple(w))

    def __add__(self, other: HeckeElement) -> HeckeElement:
        if other.n != self.n:
            raise ValueError("elements of different Hecke algebras")
        out = dict(self.coords)
        for w, c in other.coords.items():
            out[w] = out.get(w, ZERO) + c
        return HeckeElement(self.n, out)

    def scale(self, c: LaurentPoly | int) -> HeckeElement:
        return HeckeElement(self.n, {w: v * c for w, v in self.coords.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.coords == other.coords

    def __repr__(self) -> str:
        body = " + ".join(f"({c.pretty()})*T[{w}]" for w, c in sorted(self.coords.items()))
        return f"HeckeElement(n={self.n}: {body or '0'})"

    def specialize(self) -> dict[Perm, int]:
        """Coefficients at q^{1/2} = 1 (nonzero values only)."""
        out = {w: c.at_one() for w, c in self.coords.items()}
        return {w: c for w, c in out.items() if c}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "coords": [
                {"perm": str(w), "poly": self.coords[w].to_json()}
                for w in sorted(self.coords, key=lambda w: tuple(w))
            ],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> HeckeElement:
        if isinstance(data, str):
            data = json.loads(data)
        coords = {
            Perm.parse(entry["perm"]): LaurentPoly.from_json(entry["poly"])
            for entry in data["coords"]
        }
        return cls(data["n"], coords)


def mul_by_generator(h: HeckeElement, i: int, side: str = "right") -> HeckeElement:
    """Multiply `h` by T_{s_i} on the given side."""
    if not 1 <= i < h.n:
        raise ValueError(f"generator index {i} out of range for n={h.n}")
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', not {side!r}")
    out: dict[Perm, LaurentPoly] = {}

    def add(w: Perm, c: LaurentPoly) -> None:
        out[w] = out.get(w, ZERO) + c

    for w, c in h.coords.items():
        ws = w.rmul(i) if side == "right" else w.lmul(i)
        descent = w.has_right_descent(i) if side == "right" else w.has_left_descent(i)
        if descent:
            add(w, c * (Q - 1))
            add(ws, c * Q)
        else:
            add(ws, c)
    return HeckeElement(h.n, out)


def product_one_plus_T(word: Sequence[int], n: int) -> HeckeElement:
    """Expand (1 + T_{s_{i_1}}) ... (1 + T_{s_{i_m}}) by folding right multiplications."""
    word = check_word(word, n)
    h = HeckeElement.one(n)
    for i in word:
        h = h + mul_by_generator(h, i)
    return h


def mask_expansion_defects(word: Sequence[int], n: int) -> HeckeElement:
    """The same expansion, summed as q^dfct over all 2^m covering path families."""
    from .wiring import WiringDiagram, family_from_mask

    d = WiringDiagram(n, word)
    out: dict[Perm, LaurentPoly] = {}
    for mask in itertools.product((0, 1), repeat=len(d.word)):
        fam = family_from_mask(d, mask)
        out[fam.type] = out.get(fam.type, ZERO) + LaurentPoly.monomial(2 * fam.dfct)
    return HeckeElement(n, out)


def classical_product(word: Sequence[int], n: int) -> dict[Perm, int]:
    """Expansion of (1 + s_{i_1}) ... (1 + s_{i_m}) in Z[S_n]."""
    word = check_word(word, n)
    d: dict[Perm, int] = {Perm.identity(n): 1}
    for i in word:
        nxt = dict(d)
        for w, c in d.items():
            ws = w.rmul(i)
            nxt[ws] = nxt.get(ws, 0) + c
        d = nxt
    return d


def hecke_from_classical(d: Mapping[Perm, int], n: int) -> HeckeElement:
    """Embed integer coefficients as constant Laurent polynomials."""
    return HeckeElement(n, {w: LaurentPoly.const(c) for w, c in d.items()})


def evaluate_trace(h: HeckeElement, values: Mapping[Perm, LaurentPoly]) -> LaurentPoly:
    """Apply a linear functional given on the natural basis."""
    total = ZERO
    for w, c in h.coords.items():
        total = total + c * values.get(w, ZERO)
    return total


def iter_words(n: int, max_m: int) -> Iterable[tuple[int, ...]]:
    """All words over 1..n-1 of length at most max_m."""
    letters = range(1, n)
    for m in range(max_m + 1):
        if n < 2 and m > 0:
            break
        yield from itertools.product(letters, repeat=m)
