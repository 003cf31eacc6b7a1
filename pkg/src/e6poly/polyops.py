"""Sparse exact polynomials in x_1..x_27 and normal-ordered Weyl operators.

A monomial is a 27-tuple of exponents; a polynomial is a dict mapping
monomials to nonzero Fractions (the zero polynomial is the empty dict).
A Weyl operator is a dict mapping (x-exponent, d-exponent) pairs to
coefficients, always kept in normal order: all multiplications to the
left of all derivatives.  Composition uses

    d^n x^m  =  sum_k  C(n, k) * m!/(m-k)! * x^(m-k) d^(n-k)

applied coordinatewise, so products, commutators, and applications stay
exact.  The canonical monomial order is graded lexicographic with
x_1 > x_2 > ... > x_27; `lead_monomial` and the serialization helpers all
use it.  Variable indices in the public helpers are 1-based.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, perm
from typing import Iterable, Iterator

from .rootsys import NVARS

Monomial = tuple[int, ...]
Poly = dict[Monomial, Fraction]
OpKey = tuple[Monomial, Monomial]
WeylOp = dict[OpKey, Fraction]

MONO_ONE: Monomial = (0,) * NVARS


def monomial(powers: dict[int, int]) -> Monomial:
    """Monomial from {1-based variable: exponent}."""
    exps = [0] * NVARS
    for var, e in powers.items():
        if not 1 <= var <= NVARS:
            raise ValueError(f"variable index out of range: {var}")
        exps[var - 1] += e
    return tuple(exps)


def from_vars(*vars_: int) -> Monomial:
    exps = [0] * NVARS
    for var in vars_:
        exps[var - 1] += 1
    return tuple(exps)


def x(var: int, coeff: Fraction | int = 1) -> Poly:
    return {from_vars(var): Fraction(coeff)}


def poly(terms: Iterable[tuple[Monomial, Fraction | int]]) -> Poly:
    out: Poly = {}
    for m, c in terms:
        c = Fraction(c)
        if not c:
            continue
        w = out.get(m, Fraction(0)) + c
        if w:
            out[m] = w
        else:
            del out[m]
    return out


def padd(f: Poly, g: Poly) -> Poly:
    out = dict(f)
    for m, c in g.items():
        w = out.get(m, Fraction(0)) + c
        if w:
            out[m] = w
        else:
            del out[m]
    return out


def pscale(k: Fraction | int, f: Poly) -> Poly:
    k = Fraction(k)
    if not k:
        return {}
    return {m: k * c for m, c in f.items()}


def psub(f: Poly, g: Poly) -> Poly:
    return padd(f, pscale(-1, g))


def pmul(f: Poly, g: Poly) -> Poly:
    out: Poly = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            w = out.get(m, Fraction(0)) + c1 * c2
            if w:
                out[m] = w
            else:
                out.pop(m, None)
    return out


def ppow(f: Poly, n: int) -> Poly:
    out: Poly = {MONO_ONE: Fraction(1)}
    for _ in range(n):
        out = pmul(out, f)
    return out


def degree(f: Poly) -> int:
    return max((sum(m) for m in f), default=0)


def mono_key(m: Monomial) -> tuple:
    """Sort key: canonical order, biggest first when used with max()."""
    return (sum(m), m)


def lead_monomial(f: Poly) -> Monomial:
    if not f:
        raise ValueError("zero polynomial has no lead monomial")
    return max(f, key=mono_key)


def sorted_terms(f: Poly) -> list[tuple[Monomial, Fraction]]:
    return [(m, f[m]) for m in sorted(f, key=mono_key, reverse=True)]


def format_poly(f: Poly) -> str:
    if not f:
        return "0"
    chunks: list[str] = []
    for m, c in sorted_terms(f):
        vars_ = "*".join(
            f"x{i+1}" + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(m)
            if e
        )
        body = vars_ or "1"
        if c == 1 and vars_:
            term = body
        elif c == -1 and vars_:
            term = f"-{body}"
        else:
            term = f"{c}*{body}" if vars_ else str(c)
        if chunks and not term.startswith("-"):
            chunks.append("+" + term)
        else:
            chunks.append(term)
    return "".join(chunks)


def poly_to_json(f: Poly) -> list[dict]:
    # every number rides as a decimal string so JSON output stays exact
    return [
        {"exponents": [str(e) for e in m], "coefficient": str(c)}
        for m, c in sorted_terms(f)
    ]


def poly_from_json(data: list[dict]) -> Poly:
    return poly(
        (tuple(int(e) for e in entry["exponents"]),
         Fraction(entry["coefficient"]))
        for entry in data
    )


# -- Weyl operators ---------------------------------------------------------


def op(terms: Iterable[tuple[Monomial, Monomial, Fraction | int]]) -> WeylOp:
    out: WeylOp = {}
    for xe, de, c in terms:
        c = Fraction(c)
        if not c:
            continue
        key = (xe, de)
        w = out.get(key, Fraction(0)) + c
        if w:
            out[key] = w
        else:
            del out[key]
    return out


def op_zero() -> WeylOp:
    return {}


def op_identity() -> WeylOp:
    return {(MONO_ONE, MONO_ONE): Fraction(1)}


def op_add(a: WeylOp, b: WeylOp) -> WeylOp:
    out = dict(a)
    for k, c in b.items():
        w = out.get(k, Fraction(0)) + c
        if w:
            out[k] = w
        else:
            del out[k]
    return out


def op_scale(k: Fraction | int, a: WeylOp) -> WeylOp:
    k = Fraction(k)
    if not k:
        return {}
    return {key: k * c for key, c in a.items()}


def op_sub(a: WeylOp, b: WeylOp) -> WeylOp:
    return op_add(a, op_scale(-1, b))


def first_order(terms: Iterable[tuple[int, int, Fraction | int]]) -> WeylOp:
    """Operator sum of c * x_i d_j from 1-based (c, i, j) triples."""
    return op((from_vars(i), from_vars(j), c) for c, i, j in terms)


def euler_operator() -> WeylOp:
    return first_order((1, i, i) for i in range(1, NVARS + 1))


def multiplication(f: Poly) -> WeylOp:
    return {(m, MONO_ONE): c for m, c in f.items()}


def dualize(f: Poly) -> WeylOp:
    """Replace each x-monomial by the matching derivative monomial."""
    return {(MONO_ONE, m): c for m, c in f.items()}


def apply(a: WeylOp, f: Poly) -> Poly:
    out: Poly = {}
    for (xe, de), c in a.items():
        for m, cm in f.items():
            coeff = c * cm
            ok = True
            for i in range(NVARS):
                d = de[i]
                if d:
                    e = m[i]
                    if e < d:
                        ok = False
                        break
                    coeff *= perm(e, d)
            if not ok:
                continue
            target = tuple(e - d + xx for e, d, xx in zip(m, de, xe))
            w = out.get(target, Fraction(0)) + coeff
            if w:
                out[target] = w
            else:
                out.pop(target, None)
    return out


def _contractions(de: Monomial, xe: Monomial) -> Iterator[tuple[Monomial, Fraction]]:
    """Normal-order d^de x^xe: yield (k, multiplier) over contraction vectors."""
    hot = [i for i in range(NVARS) if de[i] and xe[i]]
    if not hot:
        yield MONO_ONE, Fraction(1)
        return

    def rec(pos: int, current: list[int], mult: int) -> Iterator[tuple[Monomial, Fraction]]:
        if pos == len(hot):
            k = [0] * NVARS
            for idx, i in enumerate(hot):
                k[i] = current[idx]
            yield tuple(k), Fraction(mult)
            return
        i = hot[pos]
        for ki in range(min(de[i], xe[i]) + 1):
            current.append(ki)
            yield from rec(pos + 1, current, mult * comb(de[i], ki) * perm(xe[i], ki))
            current.pop()

    yield from rec(0, [], 1)


def compose(a: WeylOp, b: WeylOp) -> WeylOp:
    """Normal-ordered product a . b (apply b first)."""
    out: WeylOp = {}
    for (xa, da), ca in a.items():
        for (xb, db), cb in b.items():
            c0 = ca * cb
            for k, mult in _contractions(da, xb):
                xnew = tuple(p + q - r for p, q, r in zip(xa, xb, k))
                dnew = tuple(p + q - r for p, q, r in zip(da, db, k))
                key = (xnew, dnew)
                w = out.get(key, Fraction(0)) + c0 * mult
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
    return out


def commutator(a: WeylOp, b: WeylOp) -> WeylOp:
    return op_sub(compose(a, b), compose(b, a))


def op_order(a: WeylOp) -> int:
    return max((sum(de) for (_, de) in a), default=0)


def op_to_json(a: WeylOp) -> list[dict]:
    keys = sorted(a, key=lambda k: (mono_key(k[0]), mono_key(k[1])), reverse=True)
    return [
        {"x": [str(e) for e in k[0]], "d": [str(e) for e in k[1]],
         "coefficient": str(a[k])}
        for k in keys
    ]


def format_op(a: WeylOp) -> str:
    if not a:
        return "0"
    keys = sorted(a, key=lambda k: (mono_key(k[0]), mono_key(k[1])), reverse=True)
    chunks = []
    for xe, de in keys:
        c = a[(xe, de)]
        xpart = "*".join(
            f"x{i+1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(xe) if e
        )
        dpart = "*".join(
            f"d{i+1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(de) if e
        )
        body = "*".join(p for p in (xpart, dpart) if p) or "1"
        if c == 1 and body != "1":
            term = body
        elif c == -1 and body != "1":
            term = f"-{body}"
        else:
            term = f"{c}*{body}" if body != "1" else str(c)
        if chunks and not term.startswith("-"):
            chunks.append("+" + term)
        else:
            chunks.append(term)
    return "".join(chunks)
