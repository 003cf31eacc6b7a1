"""Weight spaces and singular vectors of the polynomial module.

Monomials of degree m are handled as sorted index tuples (one entry per
variable occurrence, values 1..27), which keeps degree-m enumeration and
weight bucketing cheap.  A singular vector is a polynomial killed by all
six simple raising operators; because the module algebra is completely
reducible, that is equivalent to being a highest-weight vector, and
`verify_annihilated` double-checks candidates against all 36 positive
root operators.

Kernels are computed per weight space: the six raising operators map a
weight space into six other weight spaces, and the joint kernel of the
stacked coefficient matrix is found by exact fraction-free elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .linalg import kernel_basis, rank_of
from .polyops import Monomial, Poly, from_vars, poly
from .rep import RepOperator, all_operators, raising_operator, weight_table
from .rootsys import root_system

Weight = tuple[int, int, int, int, int, int]
IdxMono = tuple[int, ...]  # sorted variable indices, 1-based


def monomial_weight(mono: IdxMono) -> Weight:
    rows = weight_table()
    acc = (0, 0, 0, 0, 0, 0)
    for v in mono:
        row = rows[v - 1]
        acc = tuple(a + b for a, b in zip(acc, row))
    return acc


@lru_cache(maxsize=None)
def weight_buckets(degree: int) -> dict[Weight, list[IdxMono]]:
    """All degree-m monomials grouped by weight."""
    rows = weight_table()
    buckets: dict[Weight, list[IdxMono]] = {}
    for mono in combinations_with_replacement(range(1, 28), degree):
        acc = [0, 0, 0, 0, 0, 0]
        for v in mono:
            row = rows[v - 1]
            for t in range(6):
                acc[t] += row[t]
        buckets.setdefault(tuple(acc), []).append(mono)
    return buckets


def weight_space(degree: int, weight: Weight) -> list[IdxMono]:
    return list(weight_buckets(degree).get(tuple(weight), []))


def apply_first_order(op: RepOperator, mono: IdxMono) -> dict[IdxMono, int]:
    """Image of a monomial under sum of c x_i d_j, as a sparse vector."""
    cols = op.columns()
    out: dict[IdxMono, int] = {}
    seen_pos: set[int] = set()
    for p, v in enumerate(mono):
        if v in seen_pos:
            continue  # repeated variables handled via multiplicity below
        seen_pos.add(v)
        mult = mono.count(v)
        for i, c in cols.get(v, ()):
            target = tuple(sorted(mono[:p] + (i,) + mono[p + 1 :]))
            w = out.get(target, 0) + c * mult
            if w:
                out[target] = w
            else:
                del out[target]
    return out


def apply_first_order_poly(op: RepOperator, vec: dict[IdxMono, Fraction]) -> dict[IdxMono, Fraction]:
    out: dict[IdxMono, Fraction] = {}
    for mono, coeff in vec.items():
        for target, c in apply_first_order(op, mono).items():
            w = out.get(target, Fraction(0)) + coeff * c
            if w:
                out[target] = w
            else:
                del out[target]
    return out


def _constraint_rows(
    basis: list[IdxMono], ops: list[RepOperator]
) -> list[dict[IdxMono, int]]:
    """Rows of the stacked constraint matrix, indexed by image monomial."""
    rows: dict[tuple[int, IdxMono], dict[IdxMono, int]] = {}
    for col, mono in enumerate(basis):
        for k, op in enumerate(ops):
            for target, c in apply_first_order(op, mono).items():
                rows.setdefault((k, target), {})[mono] = c
    return [rows[key] for key in sorted(rows)]


def singular_space(degree: int, weight: Weight) -> list[dict[IdxMono, int]]:
    """Basis of the singular vectors of given degree and weight.

    Vectors are integer, content 1, positive on their canonically
    earliest monomial (largest in graded-lex order).
    """
    basis = weight_space(degree, weight)
    if not basis:
        return []
    ops = [raising_operator(k) for k in range(1, 7)]
    rows = _constraint_rows(basis, ops)
    columns = sorted(basis, reverse=True)  # graded-lex: larger tuple first
    return kernel_basis(rows, columns)


def singular_dimension(degree: int, weight: Weight) -> int:
    basis = weight_space(degree, weight)
    if not basis:
        return 0
    ops = [raising_operator(k) for k in range(1, 7)]
    rows = _constraint_rows(basis, ops)
    order = {m: i for i, m in enumerate(sorted(basis, reverse=True))}
    return len(basis) - rank_of(rows, lambda c: order[c])


def dominant_weights(degree: int) -> list[Weight]:
    return sorted(
        w for w in weight_buckets(degree) if all(c >= 0 for c in w)
    )


@dataclass(frozen=True)
class SingularScan:
    degree: int
    lines: tuple[tuple[Weight, int], ...]  # (weight, dimension), dim > 0

    @property
    def total(self) -> int:
        return sum(d for _, d in self.lines)


def enumerate_singular(degree: int) -> SingularScan:
    """Scan every dominant weight of the degree-m monomial set.

    A singular vector generates a highest-weight line, and highest
    weights are dominant, so scanning all dominant weights realized by
    degree-m monomials finds every singular line.
    """
    lines = []
    for w in dominant_weights(degree):
        d = singular_dimension(degree, w)
        if d:
            lines.append((w, d))
    return SingularScan(degree=degree, lines=tuple(lines))


def idx_to_poly(vec: dict[IdxMono, int]) -> Poly:
    return poly((from_vars(*mono), c) for mono, c in vec.items())


def verify_annihilated(vec: dict[IdxMono, Fraction | int]) -> bool:
    """Check annihilation by all 36 positive-root operators."""
    rs = root_system()
    ops = all_operators()
    fvec = {m: Fraction(c) for m, c in vec.items()}
    for r in rs.e6_positive:
        if apply_first_order_poly(ops[r[:6]], fvec):
            return False
    return True


def expected_line_count(degree: int) -> int:
    """Number of singular lines predicted by the monomial generators:
    solutions of a + 2b + 3c = degree in nonneg integers."""
    return sum(
        (degree - 3 * c) // 2 + 1 for c in range(degree // 3 + 1)
    )
