"""Singular vector scan tests.

A singular vector is a polynomial killed by all 36 positive-root
operators; each one generates a highest-weight submodule.  The scan
enumerates them degree by degree over dominant weight spaces.
"""

import pytest

from e6poly.invariants import build_eta, build_zeta_family
from e6poly.polyops import pscale, x
from e6poly.singular import (
    dominant_weights,
    enumerate_singular,
    expected_line_count,
    idx_to_poly,
    monomial_weight,
    singular_dimension,
    singular_space,
    verify_annihilated,
    weight_buckets,
)

LAM1 = (1, 0, 0, 0, 0, 0)
LAM6 = (0, 0, 0, 0, 0, 1)
ZERO = (0, 0, 0, 0, 0, 0)


def test_weight_buckets_partition_monomials():
    from math import comb

    for degree in range(4):
        buckets = weight_buckets(degree)
        total = sum(len(v) for v in buckets.values())
        assert total == comb(degree + 26, 26)


def test_line_counts_through_degree_five():
    # solutions of a + 2b + 3c = m, one singular line each
    expected = [1, 1, 2, 3, 4, 5]
    for m, n in enumerate(expected):
        assert expected_line_count(m) == n
        assert enumerate_singular(m).total == n


def test_degree_one_generator_is_first_variable():
    assert singular_space(1, LAM1) == [{(1,): 1}]


def test_degree_two_generators():
    scan = enumerate_singular(2)
    assert dict(scan.lines) == {LAM6: 1, (2, 0, 0, 0, 0, 0): 1}
    (vec,) = singular_space(2, LAM6)
    assert idx_to_poly(vec) == build_zeta_family().zeta(1)
    (sq,) = singular_space(2, (2, 0, 0, 0, 0, 0))
    assert idx_to_poly(sq) == {(2,) + (0,) * 26: 1}


def test_degree_three_weight_zero_generator_is_the_cubic_invariant():
    (vec,) = singular_space(3, ZERO)
    f = idx_to_poly(vec)
    eta = build_eta()
    # same line; normalizations may differ
    k1 = min(eta)
    assert k1 in f
    assert pscale(eta[k1], f) == pscale(f[k1], eta)


def test_scanned_generators_are_annihilated():
    for degree in range(4):
        for w, _dim in enumerate_singular(degree).lines:
            for vec in singular_space(degree, w):
                assert verify_annihilated(vec)


def test_singular_weights_are_dominant():
    for degree in range(4):
        for w, _dim in enumerate_singular(degree).lines:
            assert all(c >= 0 for c in w)
            assert w in dominant_weights(degree)


def test_monomial_weight_is_additive():
    a = (1, 3)
    b = (2, 2, 5)
    combined = tuple(sorted(a + b))
    wa, wb = monomial_weight(a), monomial_weight(b)
    assert monomial_weight(combined) == tuple(p + q for p, q in zip(wa, wb))


def test_nondominant_weight_has_no_singular_vector():
    assert singular_dimension(1, (0, 0, 1, 0, 0, 0)) == 0


@pytest.mark.slow
def test_line_counts_degrees_six_and_seven():
    assert enumerate_singular(6).total == expected_line_count(6) == 7
    assert enumerate_singular(7).total == expected_line_count(7) == 8
