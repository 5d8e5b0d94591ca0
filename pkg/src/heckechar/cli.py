"""
Command-line driver.

Examples::

    heckechar eval-epsilon --n 3 --word 1,2,1 --lambda 2,1 --method all
    heckechar sigma --n 3 --word 1,2,1 --u 213 --w 213
    heckechar expand-hecke --n 3 --word 1,2,1 --q1
    heckechar verify --seed 7 --json

Exit status: 0 on success, 1 when methods disagree or a check fails, 2 on
invalid input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Any, Callable, Sequence

from .chareval import (
    METHODS, enumerate_tableaux, epsilon_classical_eval, epsilon_eval,
)
from .exactalg import LaurentPoly, Q1Poly
from .heckealg import classical_product, mask_expansion_defects, product_one_plus_T
from .permcore import (
    Perm, PreconditionError, all_perms, check_partition, parse_word, reduced_words,
    weak_leq,
)
from .qmatrix import (
    format_monomial, parse_monomial, r_polys, straighten, zero_weight_expand,
    zero_weight_expand_by_straightening,
)
from .weakwalks import p_poly, p_poly_recursive, walk_enumerate
from .wiring import (
    MAX_MASK_BITS, WiringDiagram, family_from_mask, sigma_direct, sigma_dp,
    sigma_zalgebra,
)

__all__ = ["main", "build_parser", "InputError"]

SIGMA_METHODS = ("dp", "direct", "zalgebra")


class InputError(ValueError):
    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


# -- argument handling -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="ambient size of S_n")
    common.add_argument("--word", default=None, help="generator word, e.g. 1,2,1")
    common.add_argument("--lambda", dest="lam", default=None, help="partition, e.g. 2,1")
    common.add_argument("--method", default="all",
                        help="tableaux|immanant|chartable|all (sigma: dp|direct|zalgebra|all)")
    for name in ("u", "v", "t", "w"):
        common.add_argument(f"--{name}", default=None, help=f"permutation {name} in one-line notation")
    common.add_argument("--q1", action="store_true", help="also specialize results at q^(1/2) = 1")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--output", default=None, help="write the JSON report to this file")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--max-n", type=int, default=5)
    common.add_argument("--max-m", type=int, default=16)

    parser = argparse.ArgumentParser(prog="heckechar", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("eval-epsilon", parents=[common], help="evaluate epsilon_q^lam at a product of (1+T_s)")
    sub.add_parser("expand-hecke", parents=[common], help="expand a product of (1+T_s) in the natural basis")
    sub.add_parser("sigma", parents=[common], help="sigma(x^{u,w}) for a wiring diagram")
    sub.add_parser("r-poly", parents=[common], help="transition polynomials r_{u,v,t,w}")
    sub.add_parser("p-poly", parents=[common], help="weak-order walk polynomial p_{u,v,t,w}")
    s = sub.add_parser("straighten", parents=[common], help="normal form of a monomial in A(n;q)")
    s.add_argument("--monomial", required=True, help='factors such as "x[2,2] x[1,1]"')
    s.add_argument("--strategy", default="leftmost", choices=("leftmost", "rightmost"))
    sub.add_parser("list-tableaux", parents=[common], help="list column-strict tableaux of type e")
    v = sub.add_parser("verify", parents=[common], help="run randomized cross-checks")
    v.add_argument("--samples", type=int, default=20, help="random words per check")
    return parser


def _require(args: argparse.Namespace, field: str) -> Any:
    value = getattr(args, field)
    if value is None:
        flag = "--lambda" if field == "lam" else f"--{field}"
        raise InputError(flag, "required for this command")
    return value


def _n(args: argparse.Namespace) -> int:
    n = _require(args, "n")
    if n < 1:
        raise InputError("--n", "must be positive")
    if n > args.max_n:
        raise InputError("--n", f"{n} exceeds --max-n={args.max_n}")
    return n


def _diagram(args: argparse.Namespace) -> WiringDiagram:
    n = _n(args)
    try:
        word = parse_word(args.word or "")
        d = WiringDiagram(n, word)
    except ValueError as exc:
        raise InputError("--word", str(exc)) from None
    if d.m > MAX_MASK_BITS:
        raise InputError("--word", f"length {d.m} would need 2^{d.m} masks (hard limit 2^{MAX_MASK_BITS})")
    if d.m > args.max_m:
        raise InputError("--word", f"length {d.m} exceeds --max-m={args.max_m}")
    return d


def _lambda(args: argparse.Namespace, n: int) -> tuple[int, ...]:
    text = _require(args, "lam")
    try:
        return check_partition(parse_word(text), n)
    except ValueError as exc:
        raise InputError("--lambda", str(exc)) from None


def _perm(args: argparse.Namespace, name: str, n: int | None) -> Perm:
    text = _require(args, name)
    try:
        p = Perm.parse(text)
    except ValueError as exc:
        raise InputError(f"--{name}", str(exc)) from None
    if n is not None and len(p) != n:
        raise InputError(f"--{name}", f"{p} is not in S_{n}")
    return p


def _methods(args: argparse.Namespace, allowed: Sequence[str]) -> list[str]:
    if args.method == "all":
        return list(allowed)
    if args.method not in allowed:
        raise InputError("--method", f"{args.method!r} is not one of {', '.join(allowed)}, all")
    return [args.method]


# -- commands -----------------------------------------------------------------------

def _poly_entry(p: LaurentPoly, q1: bool) -> dict:
    out: dict[str, Any] = {"poly": p.to_json(), "text": p.pretty()}
    if q1:
        out["at_q_half_1"] = p.at_one()
    return out


def _timed(timings: dict, key: str, fn: Callable[[], Any]) -> Any:
    start = time.perf_counter()
    value = fn()
    timings[key] = round(time.perf_counter() - start, 6)
    return value


def cmd_eval_epsilon(args, timings):
    d = _diagram(args)
    lam = _lambda(args, d.n)
    methods = _methods(args, METHODS)
    values = {m: _timed(timings, m, lambda m=m: epsilon_eval(d, lam, m)) for m in methods}
    agree = len(set(values.values())) == 1
    results = {
        m: {**_poly_entry(p, args.q1), "method": m, "word": list(d.word), "lambda": list(lam), "n": d.n}
        for m, p in values.items()
    }
    lines = [f"{m}: {p.pretty()}" for m, p in values.items()]
    if args.q1:
        classical = epsilon_classical_eval(d, lam)
        results["classical"] = classical
        agree = agree and all(p.at_one() == classical for p in values.values())
        lines.append(f"at q^(1/2)=1: {classical} (classical cycle-labeling count)")
    if len(methods) > 1:
        lines.append("all methods agree" if agree else "METHODS DISAGREE")
    return results, agree, lines


def cmd_expand_hecke(args, timings):
    d = _diagram(args)
    h = _timed(timings, "product", lambda: product_one_plus_T(d.word, d.n))
    result: dict[str, Any] = {"hecke": h.to_json()}
    lines = [f"T[{w}]: {h.coords[w].pretty()}" for w in h.support()]
    agree = True
    if args.method in ("all", "masks"):
        oracle = _timed(timings, "masks", lambda: mask_expansion_defects(d.word, d.n))
        agree = oracle == h
        lines.append("defect-count oracle agrees" if agree else "DEFECT ORACLE DISAGREES")
    if args.q1:
        classical = classical_product(d.word, d.n)
        result["classical"] = {str(w): c for w, c in sorted(classical.items())}
        agree = agree and classical == h.specialize()
        lines.append("at q^(1/2)=1: " + " + ".join(
            f"{c}*[{w}]" for w, c in sorted(classical.items(), key=lambda kv: (kv[0].length(), tuple(kv[0])))
        ))
    return result, agree, lines


def cmd_sigma(args, timings):
    d = _diagram(args)
    u, w = _perm(args, "u", d.n), _perm(args, "w", d.n)
    methods = _methods(args, SIGMA_METHODS)
    impl = {
        "dp": lambda: sigma_dp(d, u).get(w, LaurentPoly()),
        "direct": lambda: sigma_direct(d, u, w),
        "zalgebra": lambda: sigma_zalgebra(d, u, w),
    }
    values = {m: _timed(timings, m, impl[m]) for m in methods}
    agree = len(set(values.values())) == 1
    results = {m: _poly_entry(p, args.q1) for m, p in values.items()}
    lines = [f"{m}: {p.pretty()}" for m, p in values.items()]
    if len(methods) > 1:
        lines.append("all methods agree" if agree else "METHODS DISAGREE")
    return results, agree, lines


def _q1_entry(p: Q1Poly, q1: bool) -> Any:
    # q_1 vanishes at q^(1/2) = 1
    return (p.coeffs[0] if p.coeffs else 0) if q1 else p.to_json()


def cmd_r_poly(args, timings):
    u = _perm(args, "u", args.n)
    v, t = _perm(args, "v", len(u)), _perm(args, "t", len(u))
    try:
        r = _timed(timings, "r_polys", lambda: r_polys(u, v, t))
    except PreconditionError as exc:
        raise InputError("--t", str(exc)) from None
    if args.w is not None:
        w = _perm(args, "w", len(u))
        r = {w: r.get(w, Q1Poly())}
    result = {str(w): _q1_entry(p, args.q1) for w, p in sorted(r.items())}
    lines = [f"r[{w}] = {p}" for w, p in sorted(r.items())]
    return result, True, lines


def cmd_p_poly(args, timings):
    u = _perm(args, "u", args.n)
    v, t, w = (_perm(args, k, len(u)) for k in ("v", "t", "w"))
    if not weak_leq(t, u):
        raise InputError("--t", f"{t} is not below {u} in the weak order")
    if args.word is None:
        word = reduced_words(u * t.inverse())[0]
    else:
        try:
            word = parse_word(args.word)
        except ValueError as exc:
            raise InputError("--word", str(exc)) from None
    try:
        walks = _timed(timings, "enumerate", lambda: walk_enumerate(u, v, t, w, word))
        direct = p_poly(u, v, t, w, word)
        recursive = _timed(timings, "recursion", lambda: p_poly_recursive(u, v, t, w, word))
    except (PreconditionError, ValueError) as exc:
        raise InputError("--word", str(exc)) from None
    agree = direct == recursive
    result = {
        "word": list(word),
        "p": _q1_entry(direct, args.q1),
        "recursion": _q1_entry(recursive, args.q1),
        "walks": [str(wk) for wk in walks],
    }
    lines = [f"p = {direct}   (word {','.join(map(str, word)) or 'empty'})"]
    lines += [f"  {wk}" for wk in walks]
    lines.append("enumeration and recursion agree" if agree else "ENUMERATION AND RECURSION DISAGREE")
    return result, agree, lines


def cmd_straighten(args, timings):
    try:
        m = parse_monomial(args.monomial)
    except ValueError as exc:
        raise InputError("--monomial", str(exc)) from None
    nf = _timed(timings, "straighten", lambda: straighten(m, args.strategy))
    result = {"monomial": format_monomial(m), "normal_form": nf.to_json(), "text": str(nf)}
    return result, True, [str(nf)]


def cmd_list_tableaux(args, timings):
    d = _diagram(args)
    lam = _lambda(args, d.n)
    tabs = _timed(timings, "enumerate", lambda: enumerate_tableaux(d, lam))
    result = {"count": len(tabs), "tableaux": [t.to_json() for t in tabs]}
    lines = [str(t) for t in tabs] + [f"{len(tabs)} tableaux"]
    return result, True, lines


def _random_word(rng: random.Random, n: int, max_m: int) -> tuple[int, ...]:
    return tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, max_m)))


def _random_partition(rng: random.Random, n: int) -> tuple[int, ...]:
    parts = []
    left = n
    while left:
        k = rng.randint(1, left)
        parts.append(k)
        left -= k
    return tuple(sorted(parts, reverse=True))


def cmd_verify(args, timings):
    rng = random.Random(args.seed)
    max_n = min(args.max_n, 4)
    max_m = min(args.max_m, 8)
    checks: dict[str, bool] = {}

    def check(name: str, fn: Callable[[], bool]) -> None:
        checks[name] = bool(_timed(timings, name, fn))

    samples = [
        (n, _random_word(rng, n, max_m))
        for n in (rng.randint(2, max_n) for _ in range(args.samples))
    ]

    def hecke_vs_masks():
        return all(product_one_plus_T(w, n) == mask_expansion_defects(w, n) for n, w in samples)

    def sigma_bridge():
        for n, w in samples:
            d = WiringDiagram(n, w)
            h = product_one_plus_T(w, n)
            sig = sigma_dp(d, Perm.identity(n))
            for x in all_perms(n):
                if sig.get(x, LaurentPoly()) != h.coeff(x).shift(x.length()):
                    return False
        return True

    def sigma_three_way():
        for n, w in samples:
            if n > 3 or len(w) > 5:
                continue
            d = WiringDiagram(n, w)
            for u in all_perms(n):
                dp = sigma_dp(d, u)
                for x in all_perms(n):
                    a = dp.get(x, LaurentPoly())
                    if a != sigma_direct(d, u, x) or a != sigma_zalgebra(d, u, x):
                        return False
        return True

    def epsilon_three_way():
        for n, w in samples:
            d = WiringDiagram(n, w)
            lam = _random_partition(rng, n)
            vals = {epsilon_eval(d, lam, m) for m in METHODS}
            if len(vals) != 1:
                return False
            (val,) = vals
            if not val.in_Nq() and val:
                return False
            if val.at_one() != epsilon_classical_eval(d, lam):
                return False
        return True

    def zero_weight_oracle():
        n = min(max_n, 3)
        return all(
            zero_weight_expand(u, v) == zero_weight_expand_by_straightening(u, v)
            for u in all_perms(n) for v in all_perms(n)
        )

    def walks_match_r():
        n = min(max_n, 3)
        for u in all_perms(n):
            for t in all_perms(n):
                if not weak_leq(t, u):
                    continue
                for word in reduced_words(u * t.inverse()):
                    for v in all_perms(n):
                        r = r_polys(u, v, t)
                        for w in all_perms(n):
                            if p_poly(u, v, t, w, word) != r.get(w, Q1Poly()):
                                return False
        return True

    def all_ones_type():
        for n, w in samples:
            d = WiringDiagram(n, w)
            if d.product().length() == d.m and family_from_mask(d, (1,) * d.m).type != d.product():
                return False
        return True

    check("hecke_product_vs_defect_masks", hecke_vs_masks)
    check("sigma_identity_row_vs_hecke", sigma_bridge)
    check("sigma_three_way", sigma_three_way)
    check("epsilon_three_way_and_classical", epsilon_three_way)
    check("zero_weight_vs_straightening", zero_weight_oracle)
    check("walk_polys_equal_r_polys", walks_match_r)
    check("all_crossings_type", all_ones_type)
    ok = all(checks.values())
    lines = [f"{'PASS' if v else 'FAIL'} {k}" for k, v in checks.items()]
    return {"checks": checks, "seed": args.seed, "samples": args.samples}, ok, lines


COMMANDS = {
    "eval-epsilon": cmd_eval_epsilon,
    "expand-hecke": cmd_expand_hecke,
    "sigma": cmd_sigma,
    "r-poly": cmd_r_poly,
    "p-poly": cmd_p_poly,
    "straighten": cmd_straighten,
    "list-tableaux": cmd_list_tableaux,
    "verify": cmd_verify,
}


def _job_record(args: argparse.Namespace) -> dict:
    keys = ("command", "n", "word", "lam", "method", "u", "v", "t", "w", "q1", "seed")
    rec = {("lambda" if k == "lam" else k): getattr(args, k, None) for k in keys}
    for extra in ("monomial", "strategy", "samples"):
        if hasattr(args, extra):
            rec[extra] = getattr(args, extra)
    return rec


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    timings: dict[str, float] = {}
    try:
        result, agree, lines = COMMANDS[args.command](args, timings)
    except InputError as exc:
        report = {"job": _job_record(args), "error": {"field": exc.field, "message": str(exc)}}
        if args.json:
            print(json.dumps(report, indent=2))
        print(f"heckechar: error: {exc}", file=sys.stderr)
        return 2
    report = {"job": _job_record(args), "result": result, "agreement": agree, "timings": timings}
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(lines))
    return 0 if agree else 1


if __name__ == "__main__":
    sys.exit(main())
