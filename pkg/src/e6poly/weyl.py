"""Dimension oracle for highest weights m1 lambda_1 + m2 lambda_6.

This module is deliberately independent of the representation
machinery: dimensions come from the product formula over the 36
positive roots, and the series identity cross-checks them against pure
binomial counting of polynomial degrees.  Since all roots have norm 2,
pairings reduce to integer coordinate sums and no irrational
arithmetic is needed: for alpha = sum c_j alpha_j one has
(rho, alpha) = sum c_j and (m1 lambda_1 + m2 lambda_6, alpha)
= m1 c_1 + m2 c_6.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .rootsys import root_system

__all__ = [
    "DimCalculator",
    "SeriesReport",
    "calculator",
    "identity_check",
    "weyl_dim",
]


@dataclass(frozen=True)
class DimCalculator:
    """Positive-root data pinned once at construction.

    positive_roots holds simple-root coordinates (c_1..c_6); rho_pairing
    holds the matching values sum c_j.
    """

    positive_roots: tuple[tuple[int, ...], ...]
    rho_pairing: tuple[int, ...]

    def dim(self, m1: int, m2: int) -> int:
        if m1 < 0 or m2 < 0:
            raise ValueError("highest-weight labels must be nonnegative")
        num = 1
        den = 1
        for coords, rho in zip(self.positive_roots, self.rho_pairing):
            num *= m1 * coords[0] + m2 * coords[5] + rho
            den *= rho
        q, rem = divmod(num, den)
        if rem:
            raise ArithmeticError(f"non-integral dimension for ({m1}, {m2})")
        return q


@lru_cache(maxsize=1)
def calculator() -> DimCalculator:
    coords = tuple(v[:6] for v in root_system().e6_positive)
    rho = tuple(sum(c) for c in coords)
    # 36 positive roots, every height >= 1, highest root height 11
    if len(coords) != 36 or min(rho) < 1 or max(rho) != 11:
        raise ValueError("positive-root data out of shape")
    return DimCalculator(positive_roots=coords, rho_pairing=rho)


def weyl_dim(m1: int, m2: int) -> int:
    """dim V(m1 lambda_1 + m2 lambda_6), an exact integer."""
    return calculator().dim(m1, m2)


@dataclass(frozen=True)
class SeriesReport:
    """Truncated check that (1-q)^26 sum dim q^(m1+2m2) = 1 + q + q^2.

    binomial_ok covers the equivalent coefficient form: the dimension
    of degree-m polynomials in 27 variables, C(m+26, 26), equals the
    sum of weyl_dim(m1, m2) over 3m3 + m1 + 2m2 = m.
    """

    max_degree: int
    series_coefficients: tuple[int, ...]
    expected_series: tuple[int, ...]
    binomial_ok: bool
    first_failure: tuple[int, int, int] | None  # (degree, binomial, sum)

    @property
    def ok(self) -> bool:
        return self.series_coefficients == self.expected_series and self.binomial_ok


def identity_check(max_degree: int = 12) -> SeriesReport:
    """Verify the dimension generating identity through max_degree."""
    n = max_degree
    if n < 0:
        raise ValueError("max_degree must be nonnegative")
    dim_series = [0] * (n + 1)
    for m2 in range(n // 2 + 1):
        for m1 in range(n - 2 * m2 + 1):
            dim_series[m1 + 2 * m2] += weyl_dim(m1, m2)
    truncated = tuple(
        sum(
            (-1) ** j * comb(26, j) * dim_series[k - j]
            for j in range(min(k, 26) + 1)
        )
        for k in range(n + 1)
    )
    expected = tuple(1 if k <= 2 else 0 for k in range(n + 1))
    first = None
    for m in range(n + 1):
        lhs = comb(m + 26, 26)
        rhs = sum(dim_series[m - 3 * m3] for m3 in range(m // 3 + 1))
        if lhs != rhs:
            first = (m, lhs, rhs)
            break
    return SeriesReport(
        max_degree=n,
        series_coefficients=truncated,
        expected_series=expected,
        binomial_ok=first is None,
        first_failure=first,
    )
