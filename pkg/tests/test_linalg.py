"""Exact linear algebra tests: echelon rank, kernel bases, spans."""

from fractions import Fraction

from hypothesis import given, settings
import hypothesis.strategies as st

from e6poly.linalg import FractionSpan, IntEchelon, int_det, kernel_basis, rank_of


def test_echelon_rank_of_identity():
    ech = IntEchelon(lambda k: k)
    for i in range(4):
        assert ech.insert({i: 1})
    assert ech.rank == 4
    assert not ech.insert({0: 2, 2: -5})  # dependent row


def test_kernel_basis_simple_relation():
    # x + y = 0 over columns (x, y): kernel is the line (1, -1)
    rows = [{"x": 1, "y": 1}]
    basis = kernel_basis(rows, ["x", "y"])
    assert len(basis) == 1
    (vec,) = basis
    assert vec["x"] * 1 + vec["y"] * 1 == 0
    assert sorted(vec.values()) == [-1, 1]


def test_kernel_basis_content_one():
    rows = [{"a": 2, "b": 4}]
    (vec,) = kernel_basis(rows, ["a", "b"])
    from math import gcd

    assert gcd(*[abs(v) for v in vec.values()]) == 1


def test_rank_of_dependent_rows():
    rows = [{0: 1, 1: 2}, {0: 2, 1: 4}, {1: 1}]
    assert rank_of(rows, lambda c: c) == 2


def test_fraction_span_dedup():
    span = FractionSpan(lambda k: k)
    assert span.add({0: Fraction(1), 1: Fraction(2)})
    assert not span.add({0: Fraction(2), 1: Fraction(4)})
    assert span.add({1: Fraction(1)})
    assert span.dim == 2
    assert span.reduce({0: Fraction(3), 1: Fraction(7)}) == {}


_dim = 4


@st.composite
def square_matrices(draw):
    return [
        [draw(st.integers(min_value=-5, max_value=5)) for _ in range(_dim)]
        for _ in range(_dim)
    ]


@settings(max_examples=100)
@given(square_matrices())
def test_det_zero_iff_rank_deficient(mat):
    rows = [
        {j: v for j, v in enumerate(row) if v}
        for row in mat
    ]
    rank = rank_of([r for r in rows if r], lambda c: c)
    det = int_det([row[:] for row in mat])
    assert (det == 0) == (rank < _dim)


@settings(max_examples=60)
@given(square_matrices(), square_matrices())
def test_det_multiplicative(a, b):
    prod = [
        [sum(a[i][k] * b[k][j] for k in range(_dim)) for j in range(_dim)]
        for i in range(_dim)
    ]
    assert int_det(prod) == int_det([r[:] for r in a]) * int_det([r[:] for r in b])


@settings(max_examples=60)
@given(square_matrices())
def test_kernel_vectors_annihilate_rows(mat):
    rows = [
        {j: v for j, v in enumerate(row) if v}
        for row in mat
    ]
    rows = [r for r in rows if r]
    for vec in kernel_basis(rows, list(range(_dim))):
        for row in rows:
            assert sum(row.get(j, 0) * vec.get(j, 0) for j in range(_dim)) == 0