"""Bracket algebra tests."""

from hypothesis import given, settings
import hypothesis.strategies as st

from e6poly.liealg import (
    add,
    basis_elements,
    bracket,
    jacobi_check,
    scale,
)


def test_basis_size():
    # 7 diagonal directions plus one element per root
    assert len(basis_elements()) == 7 + 126


def test_jacobi_report():
    rep = jacobi_check(n_random=200)
    assert rep.ok
    assert rep.failures == ()


_idx = st.integers(min_value=0, max_value=132)


@settings(max_examples=150, deadline=None)
@given(_idx, _idx)
def test_bracket_antisymmetric(i, j):
    basis = basis_elements()
    x, y = basis[i], basis[j]
    assert add(bracket(x, y), bracket(y, x)).is_zero()


@settings(max_examples=100, deadline=None)
@given(_idx, _idx, _idx)
def test_bracket_bilinear(i, j, k):
    basis = basis_elements()
    x, y, z = basis[i], basis[j], basis[k]
    lhs = bracket(add(x, scale(3, y)), z)
    rhs = add(bracket(x, z), scale(3, bracket(y, z)))
    assert add(lhs, scale(-1, rhs)).is_zero()
