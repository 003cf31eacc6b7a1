"""Sparse exact linear algebra over the rationals.

Matrices are kept as lists of sparse rows (dict mapping column key ->
integer).  Elimination is fraction-free: a row is combined with a pivot row
by integer cross-multiplication and the result is divided by its content,
so no Fraction ever appears during the forward pass.  Column keys can be
any hashable values; an explicit column order fixes pivots and makes every
result reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Hashable, Iterable, Sequence

Row = dict[Hashable, int]


def row_content(row: Row) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
        if g == 1:
            break
    return g


def strip_content(row: Row) -> Row:
    g = row_content(row)
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _eliminate(row: Row, pivot_row: Row, col: Hashable) -> Row:
    """Return a*row - b*pivot_row with the entry at `col` cancelled."""
    a = pivot_row[col]
    b = row[col]
    out: Row = {}
    for c, v in row.items():
        out[c] = a * v
    for c, v in pivot_row.items():
        w = out.get(c, 0) - b * v
        if w:
            out[c] = w
        else:
            out.pop(c, None)
    return strip_content(out)


class IntEchelon:
    """Incremental integer row echelon form.

    Rows are inserted one at a time; each is reduced against the stored
    pivot rows.  When a pivot column is contested the row with the smaller
    pivot magnitude is kept (this bounds coefficient growth), and the other
    row continues through elimination.
    """

    def __init__(self, column_key: Callable[[Hashable], object]):
        self.column_key = column_key
        self.pivots: dict[Hashable, Row] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _lead(self, row: Row) -> Hashable:
        return min(row, key=self.column_key)

    def insert(self, row: Row) -> bool:
        """Reduce `row` against the pivots; return True if it adds rank."""
        row = strip_content(dict(row))
        while row:
            col = self._lead(row)
            held = self.pivots.get(col)
            if held is None:
                self.pivots[col] = row
                return True
            if abs(row[col]) < abs(held[col]):
                self.pivots[col], row = row, held
                held = self.pivots[col]
            row = _eliminate(row, held, col)
        return False

    def reduce_only(self, row: Row) -> Row:
        """Reduce `row` without inserting it."""
        row = strip_content(dict(row))
        while row:
            col = self._lead(row)
            held = self.pivots.get(col)
            if held is None:
                return row
            row = _eliminate(row, held, col)
        return row


def rank_of(rows: Iterable[Row], column_key: Callable[[Hashable], object]) -> int:
    ech = IntEchelon(column_key)
    for row in rows:
        if row:
            ech.insert(row)
    return ech.rank


def kernel_basis(
    rows: Iterable[Row],
    columns: Sequence[Hashable],
) -> list[dict[Hashable, int]]:
    """Kernel of the matrix whose rows are `rows` over columns `columns`.

    Basis vectors are integer, content 1, with a positive coefficient on
    the earliest column (in the order of `columns`) they touch.  One basis
    vector is produced per free column, in column order.
    """
    order = {c: i for i, c in enumerate(columns)}
    ech = IntEchelon(lambda c: order[c])
    for row in rows:
        if row:
            ech.insert(row)

    pivot_cols = set(ech.pivots)
    free_cols = [c for c in columns if c not in pivot_cols]
    # Back-substitution per free column, over Fractions for clarity.
    reduced: dict[Hashable, dict[Hashable, Fraction]] = {}
    for col in sorted(pivot_cols, key=lambda c: -order[c]):
        row = ech.pivots[col]
        lead = Fraction(row[col])
        vec = {c: Fraction(v) / lead for c, v in row.items() if c != col}
        # Substitute previously solved pivots: with x_col = -sum(S_col * x_free)
        # and x_c = -sum(S_c * x_free), a pivot term v * x_c contributes
        # -v * S_c to S_col.
        out: dict[Hashable, Fraction] = {}
        for c, v in vec.items():
            if c in reduced:
                for cc, vv in reduced[c].items():
                    w = out.get(cc, Fraction(0)) - v * vv
                    if w:
                        out[cc] = w
                    else:
                        out.pop(cc, None)
            else:
                w = out.get(c, Fraction(0)) + v
                if w:
                    out[c] = w
                else:
                    out.pop(c, None)
        reduced[col] = out

    basis: list[dict[Hashable, int]] = []
    for free in free_cols:
        vec: dict[Hashable, Fraction] = {free: Fraction(1)}
        for col, expr in reduced.items():
            v = expr.get(free)
            if v:
                vec[col] = -v
        basis.append(_integerize(vec, order))
    return basis


def _integerize(
    vec: dict[Hashable, Fraction], order: dict[Hashable, int]
) -> dict[Hashable, int]:
    denom = 1
    for v in vec.values():
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = {c: int(v * denom) for c, v in vec.items()}
    g = row_content(ints)
    if g > 1:
        ints = {c: v // g for c, v in ints.items()}
    lead = min(ints, key=lambda c: order[c])
    if ints[lead] < 0:
        ints = {c: -v for c, v in ints.items()}
    return ints


class FractionSpan:
    """Span tracker over arbitrary sparse Fraction vectors.

    Used for closure computations: `add` reduces a vector against the
    current echelon set and inserts the remainder (lead coefficient scaled
    to 1) if nonzero.  The key function orders basis keys; the lead key of
    a vector is its minimum.
    """

    def __init__(self, key: Callable[[Hashable], object]):
        self.key = key
        self.pivots: dict[Hashable, dict[Hashable, Fraction]] = {}

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: dict[Hashable, Fraction]) -> dict[Hashable, Fraction]:
        vec = dict(vec)
        while vec:
            lead = min(vec, key=self.key)
            held = self.pivots.get(lead)
            if held is None:
                return vec
            coef = vec[lead]
            for c, v in held.items():
                w = vec.get(c, Fraction(0)) - coef * v
                if w:
                    vec[c] = w
                else:
                    vec.pop(c, None)
        return vec

    def add(self, vec: dict[Hashable, Fraction]) -> bool:
        rem = self.reduce(vec)
        if not rem:
            return False
        lead = min(rem, key=self.key)
        coef = rem[lead]
        self.pivots[lead] = {c: v / coef for c, v in rem.items()}
        return True


def int_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a small integer matrix by fraction-free elimination."""
    n = len(matrix)
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
