"""Kernel decomposition for the cubic invariant operator.

Phi_m is the kernel of D on the degree-m polynomials.  D preserves
weight, so its matrix is block-diagonal over weight classes; ranks are
accumulated block by block, with an early exit once a block reaches
full row rank.  That blocking, plus the fact that the rank is bounded
by the much smaller target space, is what keeps degree 5 tractable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .invariants import build_eta, x1_zeta1_power
from .linalg import FractionSpan, IntEchelon, kernel_basis
from .polyops import apply
from .rep import lowering_operator
from .singular import IdxMono, weight_buckets
from .weyl import weyl_dim

__all__ = [
    "KernelSummary",
    "WeylSumReport",
    "kernel_samples",
    "lowering_closure",
    "phi_dim",
    "weyl_sum_check",
]

CLOSURE_GUARD = 4  # cost guard on m1 + 2*m2 for lowering_closure


@dataclass(frozen=True)
class KernelSummary:
    degree: int
    dim_Am: int
    rank_D: int
    dim_phi: int
    weyl_sum: int
    direct_sum_ok: bool

    @property
    def ok(self) -> bool:
        # Full decomposition: the kernel complements eta * A_(m-3)
        # (direct_sum_ok plus rank matching the lower dimension) and the
        # kernel dimension matches the irreducible-sum count.
        lower = comb(self.degree + 23, 26) if self.degree >= 3 else 0
        return (
            self.dim_phi == self.dim_Am - self.rank_D
            and self.rank_D == lower
            and self.direct_sum_ok
            and self.dim_phi == self.weyl_sum
        )


@lru_cache(maxsize=1)
def _cubic_terms() -> tuple[tuple[int, tuple[int, ...]], ...]:
    """The 45 terms of eta as (coefficient, variable triple)."""
    out = []
    for mono, c in build_eta().items():
        vs = tuple(i + 1 for i, e in enumerate(mono) for _ in range(e))
        out.append((int(c), vs))
    return tuple(sorted(out, key=lambda t: t[1]))


def _apply_cubic(mono: IdxMono) -> dict[IdxMono, int]:
    """Image of a monomial under D, in sorted-index form."""
    exp: dict[int, int] = {}
    for v in mono:
        exp[v] = exp.get(v, 0) + 1
    out: dict[IdxMono, int] = {}
    for c, (a, b, d) in _cubic_terms():
        ea = exp.get(a, 0)
        eb = exp.get(b, 0)
        ed = exp.get(d, 0)
        if not (ea and eb and ed):
            continue
        rest = list(mono)
        rest.remove(a)
        rest.remove(b)
        rest.remove(d)
        key = tuple(rest)
        w = out.get(key, 0) + c * ea * eb * ed
        if w:
            out[key] = w
        else:
            out.pop(key, None)
    return out


def _block_rank(sources: list[IdxMono], full: int) -> int:
    ech = IntEchelon(lambda k: k)
    for mono in sources:
        if ech.rank == full:
            break
        img = _apply_cubic(mono)
        if img:
            ech.insert(img)
    return ech.rank


def _composite_full_rank(m: int) -> bool:
    """Rank check for g -> D(eta g) on degree m - 3, block by block."""
    for monos in weight_buckets(m - 3).values():
        ech = IntEchelon(lambda k: k)
        for g in monos:
            total: dict[IdxMono, int] = {}
            for c, vs in _cubic_terms():
                prod = tuple(sorted(g + vs))
                for k, v in _apply_cubic(prod).items():
                    w = total.get(k, 0) + c * v
                    if w:
                        total[k] = w
                    else:
                        total.pop(k, None)
            if total:
                ech.insert(total)
        if ech.rank < len(monos):
            return False
    return True


@lru_cache(maxsize=None)
def phi_dim(m: int) -> KernelSummary:
    """Kernel dimension of D on degree m, with decomposition checks."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    dim_am = comb(m + 26, 26)
    if m < 3:
        # D lowers degree by 3, so it vanishes identically here.
        rank = 0
        composite_ok = True
    else:
        targets = weight_buckets(m - 3)
        sources = weight_buckets(m)
        rank = sum(
            _block_rank(sources.get(w, []), len(t)) for w, t in targets.items()
        )
        composite_ok = _composite_full_rank(m)
    wsum = sum(weyl_dim(m - 2 * i, i) for i in range(m // 2 + 1))
    return KernelSummary(
        degree=m,
        dim_Am=dim_am,
        rank_D=rank,
        dim_phi=dim_am - rank,
        weyl_sum=wsum,
        direct_sum_ok=composite_ok,
    )


@dataclass(frozen=True)
class WeylSumReport:
    degree: int
    dim_phi: int
    weyl_sum: int
    terms: tuple[tuple[int, int, int], ...]  # (m1, m2, dim)

    @property
    def ok(self) -> bool:
        return self.dim_phi == self.weyl_sum


def weyl_sum_check(m: int) -> WeylSumReport:
    """Compare dim Phi_m with the sum of weyl_dim(m - 2i, i)."""
    summary = phi_dim(m)
    terms = tuple(
        (m - 2 * i, i, weyl_dim(m - 2 * i, i)) for i in range(m // 2 + 1)
    )
    return WeylSumReport(
        degree=m,
        dim_phi=summary.dim_phi,
        weyl_sum=summary.weyl_sum,
        terms=terms,
    )


def kernel_samples(m: int, max_blocks: int = 8) -> list[dict[IdxMono, int]]:
    """Explicit kernel vectors of D from the first few weight blocks.

    Blocks are taken in increasing size so the samples stay small; every
    returned vector is an exact integer kernel element.
    """
    if m < 3:
        raise ValueError("kernel is everything below degree 3")
    sources = weight_buckets(m)
    out: list[dict[IdxMono, int]] = []
    by_size = sorted(sources.items(), key=lambda kv: (len(kv[1]), kv[0]))
    for _, monos in by_size[:max_blocks]:
        rows: dict[IdxMono, dict[IdxMono, int]] = {}
        for mono in monos:
            for k, v in _apply_cubic(mono).items():
                rows.setdefault(k, {})[mono] = v
        out.extend(kernel_basis(rows.values(), monos))
    return out


def materialized_kernel_dim(m: int) -> int:
    """Dimension of Phi_m by explicit kernel bases over every block.

    Slower than phi_dim's rank route; used to cross-check it and to
    drive the materializing CLI path.
    """
    if m < 3:
        return comb(m + 26, 26)
    total = 0
    for monos in weight_buckets(m).values():
        rows: dict[IdxMono, dict[IdxMono, int]] = {}
        for mono in monos:
            for k, v in _apply_cubic(mono).items():
                rows.setdefault(k, {})[mono] = v
        total += len(kernel_basis(rows.values(), monos))
    return total


def lowering_closure(m1: int, m2: int, force: bool = False) -> int:
    """Dimension of the span generated from x_1^m1 zeta_1^m2 by the six
    simple lowering operators; expected to match weyl_dim(m1, m2)."""
    if m1 < 0 or m2 < 0:
        raise ValueError("powers must be nonnegative")
    if m1 + 2 * m2 > CLOSURE_GUARD and not force:
        raise ValueError(
            f"m1 + 2*m2 = {m1 + 2 * m2} exceeds the cost guard "
            f"{CLOSURE_GUARD}; pass force=True to run anyway"
        )
    ops = [lowering_operator(k).weyl() for k in range(1, 7)]
    span = FractionSpan(lambda k: k)
    start = {k: Fraction(c) for k, c in x1_zeta1_power(m1, m2).items()}
    span.add(start)
    queue = [start]
    while queue:
        vec = queue.pop()
        for w in ops:
            img = apply(w, vec)
            if not img:
                continue
            img = {k: Fraction(c) for k, c in img.items()}
            if span.add(img):
                queue.append(img)
    return span.dim
