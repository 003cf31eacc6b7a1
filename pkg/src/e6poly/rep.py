"""The 27-dimensional module carried by the k_7 = 1 root spaces.

Every operator here is derived, not transcribed: the action of a root
vector e_r (r an E6 root) on the basis vector x_j attached to the k_7 = 1
root beta_j is read off from the bracket

    [e_r, e_beta_j] = F(r, beta_j) e_{r + beta_j},

which lands on another basis root whenever r + beta_j is a root and
vanishes otherwise.  Cartan elements act diagonally by the bilinear form.
The module exposes the derived operators, the weight tables they imply,
comparison against the hand-entered reference table in `golden`, and a
homomorphism check of the whole assignment.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import golden
from .liealg import AlgElement, bracket, root_element
from .polyops import WeylOp, first_order
from .rootsys import (
    Vector,
    alpha,
    bar_basis,
    bar_index,
    bilinear,
    root_system,
    vadd,
    vneg,
)

Root6 = tuple[int, int, int, int, int, int]


def _embed(root6: Root6) -> Vector:
    return (*root6, 0)


def _restrict(root7: Vector) -> Root6:
    if root7[6] != 0:
        raise ValueError(f"not an E6 root: {root7}")
    return root7[:6]


@dataclass(frozen=True)
class RepOperator:
    """First-order operator sum of c * x_i d_j, with its source label."""

    label: str
    terms: tuple[tuple[int, int, int], ...]  # (coefficient, i, j)

    def weyl(self) -> WeylOp:
        return first_order(self.terms)

    def columns(self) -> dict[int, list[tuple[int, int]]]:
        """Map j -> [(i, c)]: the image of x_j."""
        out: dict[int, list[tuple[int, int]]] = {}
        for c, i, j in self.terms:
            out.setdefault(j, []).append((i, c))
        return out


def derive_root_action(root6: Root6) -> RepOperator:
    """Operator of e_r on the x-basis, from the cocycle bracket."""
    r7 = _embed(root6)
    rs = root_system()
    if r7 not in rs.root_set():
        raise ValueError(f"not an E6 root: {root6}")
    basis = bar_basis()
    index = bar_index()
    terms: list[tuple[int, int, int]] = []
    for j, beta in enumerate(basis, start=1):
        out = bracket(root_element(r7), root_element(beta))
        if out.is_zero():
            continue
        (target, coeff), = out.roots.items()
        terms.append((int(coeff), index[target], j))
    terms.sort(key=lambda t: t[2])
    return RepOperator(label=f"e{root6}", terms=tuple(terms))


def derive_cartan_action(j: int) -> RepOperator:
    """Diagonal operator of alpha_j (1 <= j <= 6)."""
    a = alpha(j)
    terms = tuple(
        (bilinear(a, beta), i, i)
        for i, beta in enumerate(bar_basis(), start=1)
        if bilinear(a, beta)
    )
    return RepOperator(label=f"h{j}", terms=terms)


@lru_cache(maxsize=None)
def weight_table() -> tuple[tuple[int, ...], ...]:
    """Derived weights of x_1..x_27 on the fundamental-weight basis."""
    return tuple(
        tuple(bilinear(alpha(j), beta) for j in range(1, 7))
        for beta in bar_basis()
    )


@lru_cache(maxsize=None)
def all_operators() -> dict:
    """All 78 derived operators keyed by root vector or ('h', j)."""
    rs = root_system()
    out: dict = {}
    for r in rs.e6_positive:
        out[_restrict(r)] = derive_root_action(_restrict(r))
        neg = _restrict(vneg(r))
        out[neg] = derive_root_action(neg)
    for j in range(1, 7):
        out[("h", j)] = derive_cartan_action(j)
    return out


def raising_operator(k: int) -> RepOperator:
    return all_operators()[_restrict(alpha(k))]


def lowering_operator(k: int) -> RepOperator:
    return all_operators()[_restrict(vneg(alpha(k)))]


@dataclass(frozen=True)
class TableComparison:
    ok: bool                        # no mismatches outside the known-defect list
    rows_compared: int
    mismatches: tuple[str, ...]     # unexpected rows, term-by-term
    flagged: tuple[str, ...]        # known defective reference rows, term-by-term
    normalized_rows: tuple[Root6, ...]


def _row_diff(root6: Root6, mine: dict, ref: dict) -> str:
    extra = {k: v for k, v in mine.items() if ref.get(k) != v}
    missing = {k: v for k, v in ref.items() if mine.get(k) != v}
    return (
        f"root {root6}: derived {sorted(extra.items())} vs "
        f"reference {sorted(missing.items())}"
    )


def compare_reference_operators() -> TableComparison:
    """Diff all 72 derived root operators against the reference table.

    Rows listed in golden.DISCREPANT_REFERENCE_ROWS are reported under
    `flagged` and do not affect `ok`.  For any other residual mismatch
    the diff also reports whether a uniform diagonal sign change
    epsilon_i (x_i -> epsilon_i x_i relating the conventions) exists.
    """
    derived = all_operators()
    mismatches: list[str] = []
    flagged: list[str] = []
    rows = 0
    diffs: dict[Root6, tuple] = {}
    for root6, terms in golden.RAISING_OPERATORS + golden.LOWERING_OPERATORS:
        rows += 1
        mine = {(i, j): c for c, i, j in derived[root6].terms}
        ref = {(i, j): c for c, i, j in terms}
        if mine != ref:
            diffs[root6] = (mine, ref)
    for root6, (mine, ref) in sorted(diffs.items()):
        entry = _row_diff(root6, mine, ref)
        if root6 in golden.DISCREPANT_REFERENCE_ROWS:
            flagged.append(entry)
        else:
            mismatches.append(entry)
    if mismatches:
        eps = _diagonal_sign_fit(derived)
        if eps is not None:
            mismatches.insert(0, f"uniform diagonal sign change: {eps}")
    return TableComparison(
        ok=not mismatches,
        rows_compared=rows,
        mismatches=tuple(mismatches),
        flagged=tuple(flagged),
        normalized_rows=golden.AMBIGUOUS_REFERENCE_ROWS,
    )


def _diagonal_sign_fit(derived: dict) -> tuple[int, ...] | None:
    """Look for signs eps with ref[i][j] = eps_i eps_j derived[i][j]."""
    eps = [0] * 28
    eps[1] = 1
    rows = dict(golden.RAISING_OPERATORS + golden.LOWERING_OPERATORS)
    # Propagate constraints eps_i * eps_j = ref/derived over term graph.
    edges: list[tuple[int, int, int]] = []
    for root6, terms in rows.items():
        mine = {(i, j): c for c, i, j in derived[root6].terms}
        if set(mine) != {(i, j) for _, i, j in terms}:
            return None
        for c, i, j in terms:
            edges.append((i, j, c * mine[(i, j)]))
    changed = True
    while changed:
        changed = False
        for i, j, s in edges:
            if eps[i] and not eps[j]:
                eps[j] = eps[i] * s
                changed = True
            elif eps[j] and not eps[i]:
                eps[i] = eps[j] * s
                changed = True
            elif eps[i] and eps[j] and eps[i] * eps[j] != s:
                return None
    if not all(eps[1:]):
        return None
    return tuple(eps[1:])


def compare_weight_tables() -> TableComparison:
    """Derived x-weights against the reference weight table."""
    mismatches = []
    table = weight_table()
    for i in range(27):
        if table[i] != golden.WEIGHT_TABLE_X[i]:
            mismatches.append(
                f"x_{i+1}: derived {table[i]} vs reference {golden.WEIGHT_TABLE_X[i]}"
            )
    return TableComparison(
        ok=not mismatches,
        rows_compared=27,
        mismatches=tuple(mismatches),
        flagged=(),
        normalized_rows=(),
    )


@dataclass(frozen=True)
class HomReport:
    ok: bool
    pairs_checked: int
    failures: tuple[str, ...]


def _as_weyl(elt_key) -> WeylOp:
    return all_operators()[elt_key].weyl()


def verify_homomorphism() -> HomReport:
    """[rho(a), rho(b)] = rho([a, b]) over all simple-generator pairs."""
    from .liealg import add as lie_add
    from .liealg import cartan_element, scale
    from .polyops import commutator, op_add, op_scale, op_sub

    gens: list[tuple[AlgElement, WeylOp]] = []
    for k in range(1, 7):
        gens.append((root_element(alpha(k)), raising_operator(k).weyl()))
        gens.append((root_element(vneg(alpha(k))), lowering_operator(k).weyl()))
        gens.append((cartan_element(alpha(k)), derive_cartan_action(k).weyl()))

    def rho(elt: AlgElement) -> WeylOp:
        out: WeylOp = {}
        cart = elt.normalized().cartan
        for i, c in cart.items():
            out = op_add(out, op_scale(c, derive_cartan_action(i + 1).weyl()))
        for r, c in elt.normalized().roots.items():
            out = op_add(out, op_scale(c, all_operators()[_restrict(r)].weyl()))
        return out

    fails = []
    pairs = 0
    for ea, wa in gens:
        for eb, wb in gens:
            pairs += 1
            lhs = commutator(wa, wb)
            rhs = rho(bracket(ea, eb))
            if op_sub(lhs, rhs):
                fails.append(f"pair #{pairs}")
    return HomReport(ok=not fails, pairs_checked=pairs, failures=tuple(fails[:10]))
