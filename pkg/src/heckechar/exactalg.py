"""
Exact arithmetic in Z[q^{1/2}, q^{-1/2}] and in Z[q_1].

Exponents of a `LaurentPoly` are stored as integer counts of q^{1/2}, so q
itself has stored exponent 2. Coefficients are Python ints (unbounded).

>>> qh = LaurentPoly.q_half()
>>> (qh - qh.inv_monomial()) * (qh + qh.inv_monomial())
LaurentPoly('-1*q^(-2/2) + 1*q^(2/2)')
>>> q1_substitute(Q1Poly((0, 0, 1))).pretty()
'q^-1 - 2 + q'
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly", "Q1Poly",
    "laurent_arith", "q1_substitute", "laurent_specialize_q1",
    "ZERO", "ONE", "Q", "Q_HALF", "Q1",
]

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """An immutable element of Z[q^{1/2}, q^{-1/2}]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    clean[int(k)] = int(c)
        self._terms: dict[int, int] = dict(sorted(clean.items()))
        self._hash: int | None = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, half_exp: int, coeff: int = 1) -> LaurentPoly:
        """`coeff * q^(half_exp/2)`."""
        return cls({half_exp: coeff})

    @classmethod
    def q_half(cls) -> LaurentPoly:
        return cls({1: 1})

    @classmethod
    def q(cls) -> LaurentPoly:
        return cls({2: 1})

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]] | str) -> LaurentPoly:
        if isinstance(data, str):
            data = json.loads(data)
        out: dict[int, int] = {}
        for k, c in data:
            out[k] = out.get(k, 0) + c
        return cls(out)

    # -- inspection ---------------------------------------------------------

    def terms(self) -> list[tuple[int, int]]:
        """`(half_exponent, coefficient)` pairs, ascending by exponent."""
        return list(self._terms.items())

    def coeff(self, half_exp: int) -> int:
        return self._terms.get(half_exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_half_exp(self) -> int | None:
        return next(iter(self._terms), None)

    def max_half_exp(self) -> int | None:
        return next(reversed(self._terms), None) if self._terms else None

    def in_Nq(self) -> bool:
        """True iff this lies in N[q]: integer powers of q, nonneg coefficients."""
        return all(k >= 0 and k % 2 == 0 and c > 0 for k, c in self._terms.items())

    def at_one(self) -> int:
        """Value at q^{1/2} = 1."""
        return sum(self._terms.values())

    def inv_monomial(self) -> LaurentPoly:
        """Inverse of a monomial `c*q^(k/2)` with c = +-1."""
        if len(self._terms) != 1:
            raise ValueError("only a monomial can be inverted")
        (k, c), = self._terms.items()
        if c not in (1, -1):
            raise ValueError("coefficient is not a unit in Z")
        return LaurentPoly({-k: c})

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other: Scalar) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other: Scalar) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: Scalar) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> LaurentPoly:
        if e < 0:
            return self.inv_monomial() ** (-e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, half_exp: int) -> LaurentPoly:
        """Multiply by q^(half_exp/2)."""
        return LaurentPoly({k + half_exp: c for k, c in self._terms.items()})

    # -- comparison / hashing -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # -- text / json ------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = [f"{c}*q^({k}/2)" for k, c in self._terms.items()]
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def pretty(self) -> str:
        """Human form: `q + q^2`, `q^1/2 + q^3/2`, `-q^-1/2`."""
        if not self._terms:
            return "0"
        out = []
        for k, c in self._terms.items():
            if k == 0:
                mono = ""
            else:
                e = str(k // 2) if k % 2 == 0 else f"{k}/2"
                mono = "q" if e == "1" else f"q^{e}"
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> list[list[int]]:
        return [[k, c] for k, c in self._terms.items()]


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.q()
Q_HALF = LaurentPoly.q_half()


class Q1Poly:
    """An immutable polynomial in q_1 with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def const(cls, c: int) -> Q1Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> Q1Poly:
        return cls((0,) * degree + (coeff,))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def in_N(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __add__(self, other: Q1Poly | int) -> Q1Poly:
        if isinstance(other, int):
            other = Q1Poly.const(other)
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return Q1Poly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(size)
        )

    __radd__ = __add__

    def __neg__(self) -> Q1Poly:
        return Q1Poly(-c for c in self.coeffs)

    def __sub__(self, other: Q1Poly | int) -> Q1Poly:
        if isinstance(other, int):
            other = Q1Poly.const(other)
        return self + (-other)

    def __mul__(self, other: Q1Poly | int) -> Q1Poly:
        if isinstance(other, int):
            return Q1Poly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Q1Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Q1Poly(out)

    __rmul__ = __mul__

    def shift(self, d: int = 1) -> Q1Poly:
        """Multiply by q_1^d."""
        return Q1Poly((0,) * d + self.coeffs) if self.coeffs else self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Q1Poly.const(other)
        if not isinstance(other, Q1Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Q1Poly", self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            if d == 0:
                parts.append(str(c))
            else:
                mono = "q1" if d == 1 else f"q1^{d}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Q1Poly({self.coeffs!r})"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


Q1 = Q1Poly((0, 1))
_Q1_VALUE = LaurentPoly({1: 1, -1: -1})


def laurent_arith(a: LaurentPoly, b: LaurentPoly, kind: str) -> LaurentPoly:
    """Add or multiply two Laurent polynomials (`kind` is "add" or "mul")."""
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown kind {kind!r}")


def q1_substitute(p: Q1Poly) -> LaurentPoly:
    """Evaluate `p` at q_1 = q^{1/2} - q^{-1/2} (Horner)."""
    out = ZERO
    for c in reversed(p.coeffs):
        out = out * _Q1_VALUE + c
    return out


def laurent_specialize_q1(p: LaurentPoly) -> int:
    """Specialize at q^{1/2} = 1."""
    return p.at_one()
