"""
Straightening in the quantum matrix bialgebra A(n;q), expansions of the
zero-weight monomials x^{u,v} = x_{u_1,v_1} ... x_{u_n,v_n}, transition
polynomials r_{u,v,t,w}(q_1), quantum determinants and the induced sign
character table obtained from them.

For i < j and k < l the defining relations are

    x_{i,l} x_{i,k} = q^{1/2} x_{i,k} x_{i,l}
    x_{j,k} x_{i,k} = q^{1/2} x_{i,k} x_{j,k}
    x_{j,k} x_{i,l} = x_{i,l} x_{j,k}
    x_{j,l} x_{i,k} = x_{i,k} x_{j,l} + (q^{1/2} - q^{-1/2}) x_{i,l} x_{j,k}

and monomials with factors in lexicographic order form a basis.

>>> straighten(((2, 2), (1, 1)))
NCPolynomial('x[1,1] x[2,2] + (-q^-1/2 + q^1/2) x[1,2] x[2,1]')
>>> r = r_polys(Perm.parse("21"), Perm.parse("21"), Perm.parse("12"))
>>> {str(w): str(p) for w, p in sorted(r.items())}
{'12': '1', '21': 'q1'}
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .exactalg import ONE, Q_HALF, ZERO, LaurentPoly, Q1Poly, q1_substitute
from .permcore import (
    Perm, PreconditionError, all_perms, check_partition, ordered_set_partitions,
    weak_leq,
)

__all__ = [
    "Monomial", "NCPolynomial", "straighten", "format_monomial", "parse_monomial",
    "zero_weight_monomial", "zero_weight_expand", "zero_weight_expand_by_straightening",
    "r_polys", "qdet", "epsilon_char_table", "Q1_VALUE",
]

Monomial = tuple[tuple[int, int], ...]

# q_1 evaluated at q^{1/2} - q^{-1/2}
Q1_VALUE = Q_HALF - Q_HALF.inv_monomial()
_NEG_Q_MHALF = -Q_HALF.inv_monomial()


def format_monomial(m: Monomial) -> str:
    if not m:
        return "1"
    return " ".join(f"x[{i},{j}]" for i, j in m)


def parse_monomial(text: str) -> Monomial:
    """Inverse of `format_monomial`: ``"x[2,2] x[1,1]"`` -> ((2, 2), (1, 1))."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for tok in text.split():
        if not (tok.startswith("x[") and tok.endswith("]")):
            raise ValueError(f"bad factor {tok!r}; expected x[i,j]")
        i, j = tok[2:-1].split(",")
        out.append((int(i), int(j)))
    return tuple(out)


class NCPolynomial:
    """A finite sum of noncommutative monomials with `LaurentPoly` coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, LaurentPoly] | None = None):
        self.terms: dict[Monomial, LaurentPoly] = {}
        for m, c in (terms or {}).items():
            if c:
                self.terms[tuple(tuple(f) for f in m)] = c

    @classmethod
    def monomial(cls, m: Iterable[tuple[int, int]], coeff: LaurentPoly = ONE) -> NCPolynomial:
        return cls({tuple(m): coeff})

    def coeff(self, m: Monomial) -> LaurentPoly:
        return self.terms.get(tuple(m), ZERO)

    def is_normalized(self) -> bool:
        return all(list(m) == sorted(m) for m in self.terms)

    def __add__(self, other: NCPolynomial) -> NCPolynomial:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return NCPolynomial(out)

    def __sub__(self, other: NCPolynomial) -> NCPolynomial:
        return self + other.scale(-1)

    def scale(self, c: LaurentPoly | int) -> NCPolynomial:
        return NCPolynomial({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other: NCPolynomial) -> NCPolynomial:
        out: dict[Monomial, LaurentPoly] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                out[m] = out.get(m, ZERO) + c1 * c2
        return NCPolynomial(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            mono = format_monomial(m)
            if c == ONE:
                parts.append(mono)
            elif len(c.terms()) == 1 and c.terms()[0][1] == 1:
                parts.append(f"{c.pretty()} {mono}")
            else:
                parts.append(f"({c.pretty()}) {mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"NCPolynomial({str(self)!r})"

    def specialize(self) -> dict[tuple[tuple[int, int], ...], int]:
        """Commutative image at q^{1/2} = 1: sorted factor multisets -> integers."""
        out: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            key = tuple(sorted(m))
            out[key] = out.get(key, 0) + c.at_one()
        return {m: c for m, c in out.items() if c}

    def to_json(self) -> list[dict]:
        return [
            {"factors": [list(f) for f in m], "poly": self.terms[m].to_json()}
            for m in sorted(self.terms)
        ]

    @classmethod
    def from_json(cls, data: list | str) -> NCPolynomial:
        if isinstance(data, str):
            data = json.loads(data)
        out: dict[Monomial, LaurentPoly] = {}
        for entry in data:
            m = tuple((int(i), int(j)) for i, j in entry["factors"])
            out[m] = out.get(m, ZERO) + LaurentPoly.from_json(entry["poly"])
        return cls(out)


# -- straightening ----------------------------------------------------------------

def _violation(m: Monomial, strategy: str) -> int | None:
    idx = range(len(m) - 1) if strategy == "leftmost" else range(len(m) - 2, -1, -1)
    for p in idx:
        if m[p] > m[p + 1]:
            return p
    return None


def _rewrite(m: Monomial, p: int) -> list[tuple[Monomial, LaurentPoly]]:
    """Apply the unique relation to the out-of-order pair at positions p, p+1."""
    (a, b), (c, d) = m[p], m[p + 1]
    head, tail = m[:p], m[p + 2:]
    swapped = head + ((c, d), (a, b)) + tail
    if a == c or b == d:
        return [(swapped, Q_HALF)]
    if b < d:
        return [(swapped, ONE)]
    return [(swapped, ONE), (head + ((c, b), (a, d)) + tail, Q1_VALUE)]


@lru_cache(maxsize=None)
def _normal_form(m: Monomial, strategy: str) -> tuple[tuple[Monomial, LaurentPoly], ...]:
    p = _violation(m, strategy)
    if p is None:
        return ((m, ONE),)
    out: dict[Monomial, LaurentPoly] = {}
    for m2, c in _rewrite(m, p):
        for m3, c3 in _normal_form(m2, strategy):
            out[m3] = out.get(m3, ZERO) + c * c3
    return tuple((k, v) for k, v in out.items() if v)


def straighten(x: NCPolynomial | Sequence[tuple[int, int]], strategy: str = "leftmost") -> NCPolynomial:
    """Normal form in the lexicographic monomial basis."""
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if not isinstance(x, NCPolynomial):
        x = NCPolynomial.monomial(x)
    out: dict[Monomial, LaurentPoly] = {}
    for m, c in x.terms.items():
        for m2, c2 in _normal_form(m, strategy):
            out[m2] = out.get(m2, ZERO) + c * c2
    return NCPolynomial(out)


# -- the zero-weight space --------------------------------------------------------

def zero_weight_monomial(u: Perm, v: Perm) -> Monomial:
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    return tuple(zip(u, v))


@lru_cache(maxsize=None)
def _expand_to_identity(u: Perm, v: Perm) -> tuple[tuple[Perm, LaurentPoly], ...]:
    """x^{u,v} on the basis {x^{e,w}} by repeatedly moving a left descent of u."""
    if not u.left_descents():
        return ((v, ONE),)
    s = u.left_descents()[0]
    su, sv = u.lmul(s), v.lmul(s)
    out: dict[Perm, LaurentPoly] = dict(_expand_to_identity(su, sv))
    if v.has_left_descent(s):
        for w, c in _expand_to_identity(su, v):
            out[w] = out.get(w, ZERO) + Q1_VALUE * c
    return tuple((w, c) for w, c in out.items() if c)


def _solve_in_basis(target: dict[Perm, LaurentPoly], t: Perm, expand) -> dict[Perm, LaurentPoly]:
    """Write an element given on {x^{e,y}} in the basis {x^{t,w}}.

    x^{t,ty} has leading term x^{e,y} plus strictly Bruhat-larger terms, so
    peeling off the shortest remaining y solves a unitriangular system.
    """
    rest = {y: c for y, c in target.items() if c}
    out: dict[Perm, LaurentPoly] = {}
    while rest:
        y = min(rest, key=lambda p: (p.length(), tuple(p)))
        c = rest[y]
        w = t * y
        out[w] = c
        for y2, c2 in expand(t, w).items():
            rest[y2] = rest.get(y2, ZERO) - c * c2
            if not rest[y2]:
                del rest[y2]
    return out


def zero_weight_expand(u: Perm, v: Perm, t: Perm | None = None) -> dict[Perm, LaurentPoly]:
    """Coefficients of x^{u,v} on the basis {x^{t,w}} (t defaults to the identity)."""
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    if t is None:
        t = Perm.identity(len(u))
    e_coords = dict(_expand_to_identity(u, v))
    if t == Perm.identity(len(u)):
        return e_coords
    return _solve_in_basis(e_coords, t, lambda a, b: dict(_expand_to_identity(a, b)))


def _straightened_e_coords(u: Perm, v: Perm) -> dict[Perm, LaurentPoly]:
    nf = straighten(zero_weight_monomial(u, v))
    out = {}
    for m, c in nf.terms.items():
        # a lexicographically sorted zero-weight monomial is x^{e,w}
        out[Perm(j for _, j in m)] = c
    return out


def zero_weight_expand_by_straightening(u: Perm, v: Perm, t: Perm | None = None) -> dict[Perm, LaurentPoly]:
    """Same as `zero_weight_expand`, computed only from the defining relations."""
    if t is None:
        t = Perm.identity(len(u))
    e_coords = _straightened_e_coords(u, v)
    if t == Perm.identity(len(u)):
        return e_coords
    return _solve_in_basis(e_coords, t, _straightened_e_coords)


# -- transition polynomials ---------------------------------------------------------

@lru_cache(maxsize=None)
def _r(u: Perm, v: Perm, t: Perm) -> tuple[tuple[Perm, Q1Poly], ...]:
    descents = (u * t.inverse()).left_descents()
    if not descents:
        return ((v, Q1Poly.const(1)),)
    return _r_step(u, v, t, descents[0])


def _r_step(u: Perm, v: Perm, t: Perm, s: int) -> tuple[tuple[Perm, Q1Poly], ...]:
    su, sv = u.lmul(s), v.lmul(s)
    out: dict[Perm, Q1Poly] = dict(_r(su, sv, t))
    if v.has_left_descent(s):
        for w, c in _r(su, v, t):
            out[w] = out.get(w, Q1Poly()) + c.shift(1)
    return tuple((w, c) for w, c in out.items() if c)


def r_polys(u: Perm, v: Perm, t: Perm, first_descent: int | None = None) -> dict[Perm, Q1Poly]:
    """Transition polynomials {w: r_{u,v,t,w}(q_1)} (zero values omitted).

    The recursion peels the smallest left descent of u t^{-1}; `first_descent`
    overrides the choice at the top level only (for independence checks).
    """
    if not (len(u) == len(v) == len(t)):
        raise ValueError("permutations of different sizes")
    if not weak_leq(t, u):
        raise PreconditionError(f"{t} is not below {u} in the weak order")
    if first_descent is None:
        return dict(_r(u, v, t))
    if first_descent not in (u * t.inverse()).left_descents():
        raise PreconditionError(f"s_{first_descent} is not a left descent of u t^-1")
    return dict(_r_step(u, v, t, first_descent))


def r_polys_laurent(u: Perm, v: Perm, t: Perm) -> dict[Perm, LaurentPoly]:
    return {w: q1_substitute(p) for w, p in r_polys(u, v, t).items()}


# -- quantum determinants and the induced sign character table -------------------

def qdet(I: Iterable[int]) -> NCPolynomial:
    """Quantum determinant of the principal submatrix on rows and columns I."""
    cols = sorted(set(I))
    if not cols:
        raise ValueError("qdet needs a nonempty index set")
    k = len(cols)
    out: dict[Monomial, LaurentPoly] = {}
    for pi in itertools.permutations(range(k)):
        inv = sum(1 for a in range(k) for b in range(a + 1, k) if pi[a] > pi[b])
        m = tuple((cols[pi[a]], cols[a]) for a in range(k))
        out[m] = _NEG_Q_MHALF ** inv
    return NCPolynomial(out)


@lru_cache(maxsize=None)
def _char_table(lam: tuple[int, ...], n: int) -> tuple[tuple[Perm, LaurentPoly], ...]:
    total = NCPolynomial()
    for I in ordered_set_partitions(n, lam):
        prod = NCPolynomial.monomial(())
        for block in I.blocks:
            prod = prod * qdet(block)
        total = total + straighten(prod)
    out = []
    for w in all_perms(n):
        c = total.coeff(tuple(zip(range(1, n + 1), w)))
        if c:
            out.append((w, c.shift(w.length())))
    return tuple(out)


def epsilon_char_table(lam: Sequence[int], n: int) -> dict[Perm, LaurentPoly]:
    """epsilon_q^lam(T_w) for every w in S_n (zero values omitted)."""
    lam = check_partition(lam, n)
    return dict(_char_table(lam, n))
