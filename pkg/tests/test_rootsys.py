"""Root enumeration and sign-factor law tests."""

from hypothesis import given, settings
import hypothesis.strategies as st

from e6poly.rootsys import (
    bar_basis,
    bilinear,
    check_cocycle_laws,
    cocycle_F,
    leading_minors_positive,
    root_system,
    vadd,
    vneg,
)


def test_form_is_positive_definite():
    assert leading_minors_positive()


def test_root_counts():
    rs = root_system()
    assert len(rs.roots) == 126
    assert len(rs.positive) == 63
    assert len(rs.e6_roots) == 72
    assert len(rs.e6_positive) == 36
    assert len(rs.bar_positive) == 27


def test_roots_have_norm_two():
    rs = root_system()
    assert all(bilinear(r, r) == 2 for r in rs.roots)


def test_roots_closed_under_negation():
    rs = root_system()
    roots = set(rs.roots)
    assert all(vneg(r) in roots for r in roots)


def test_positive_partition():
    rs = root_system()
    assert set(rs.positive) == set(rs.e6_positive) | set(rs.bar_positive)
    assert not set(rs.e6_positive) & set(rs.bar_positive)


def test_bar_basis_matches_positive_bar_set():
    rs = root_system()
    assert set(bar_basis()) == set(rs.bar_positive)
    assert len(bar_basis()) == 27


def test_cocycle_values_are_signs():
    rs = root_system()
    for a in rs.roots[:10]:
        for b in rs.roots:
            assert cocycle_F(a, b) in (1, -1)


def test_cocycle_full_report():
    rep = check_cocycle_laws()
    assert rep.ok
    assert rep.failures == ()
    assert rep.pairs_checked > 2000
    assert rep.triples_checked > 1000


_root_idx = st.integers(min_value=0, max_value=125)


@settings(max_examples=200)
@given(_root_idx, _root_idx, _root_idx)
def test_cocycle_bimultiplicative(i, j, k):
    roots = root_system().roots
    a, b, c = roots[i], roots[j], roots[k]
    assert cocycle_F(vadd(a, b), c) == cocycle_F(a, c) * cocycle_F(b, c)
    assert cocycle_F(a, vadd(b, c)) == cocycle_F(a, b) * cocycle_F(a, c)


@settings(max_examples=200)
@given(_root_idx, _root_idx)
def test_cocycle_symmetry_law(i, j):
    # commuting the two arguments costs exactly the parity of the pairing
    roots = root_system().roots
    a, b = roots[i], roots[j]
    assert cocycle_F(a, b) * cocycle_F(b, a) == (-1) ** bilinear(a, b)


@settings(max_examples=100)
@given(_root_idx)
def test_cocycle_diagonal_norm_law(i):
    a = root_system().roots[i]
    assert cocycle_F(a, a) == (-1) ** (bilinear(a, a) // 2)
