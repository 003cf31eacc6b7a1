"""Dual quadratic family, the cubic invariant, and its operator calculus.

The family zeta_1..zeta_27 spans a copy of the dual module inside the
degree-2 polynomials: zeta_1 is the quadratic singular vector, zeta_2..15
come from a fixed chain of simple lowering operators, and the rest arise
from the variable relabeling tau induced by the index involution iota.
The cubic invariant eta is taken from the degree-3 weight-0 singular
space (one-dimensional) and normalized so the coefficient of
x_1 x_14 x_27 is 3.

Three invariant operators are assembled from these polynomials: the
constant-coefficient cubic operator D = dualize(eta), the Euler operator
D1, and the pairing operator D2 = sum_i mult(zeta_i) dualize(zeta_i).
The lemma routines establish exact operator identities among them and
record where the computed constants disagree with the hand-entered
reference constants (those disagreements are reported, never patched).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import golden
from .linalg import FractionSpan
from .polyops import (
    Monomial,
    Poly,
    WeylOp,
    apply,
    commutator,
    compose,
    dualize,
    euler_operator,
    monomial,
    multiplication,
    op_add,
    op_identity,
    op_scale,
    op_sub,
    op_zero,
    padd,
    poly,
    ppow,
    pmul,
    pscale,
    psub,
    x,
)
from .rep import Root6, all_operators, raising_operator, lowering_operator, weight_table
from .rootsys import NVARS, root_system

ZERO_WEIGHT = (0, 0, 0, 0, 0, 0)
LAMBDA1 = (1, 0, 0, 0, 0, 0)
LAMBDA6 = (0, 0, 0, 0, 0, 1)


def tau(f: Poly) -> Poly:
    """Plain variable relabeling x_v -> x_{iota(v)}.

    This is the involution exactly as the reference states it.  It does
    not preserve the dual submodule (see plain_involution_defect), so
    the family construction uses tau_dual instead.
    """
    out: Poly = {}
    for mono, c in f.items():
        moved = [0] * NVARS
        for pos, e in enumerate(mono):
            if e:
                moved[golden.iota(pos + 1) - 1] = e
        out[tuple(moved)] = c
    return out


def tau_dual(f: Poly) -> Poly:
    """Signed relabeling x_v -> d_v x_{iota(v)} with the d-signs of the
    bilinear pairing.

    The signs make the relabeling compatible with the module structure:
    images of dual-family members stay inside the submodule generated by
    the quadratic singular vector, which fails for the unsigned rule on
    9 of the 12 high-index members (no variable-wise sign vector fixes
    those 9 alone; the d-signs plus a per-member sign do, and the
    dual-action law certifies the result).  Since d_v d_{iota(v)} = 1
    for every v, this is still an involution.
    """
    out: Poly = {}
    for mono, c in f.items():
        moved = [0] * NVARS
        sign = 1
        for pos, e in enumerate(mono):
            if e:
                moved[golden.iota(pos + 1) - 1] = e
                sign *= golden.DSIGNS[pos + 1] ** e
        out[tuple(moved)] = sign * c
    return out


def sigma_root(root6: Root6) -> Root6:
    """Diagram automorphism on root coefficient vectors (1<->6, 3<->5)."""
    return (root6[5], root6[1], root6[4], root6[3], root6[2], root6[0])


@dataclass(frozen=True)
class ZetaFamily:
    zetas: tuple[Poly, ...]
    iota: tuple[int, ...]  # 1-based involution, iota[i-1] = iota(i)

    def zeta(self, i: int) -> Poly:
        return self.zetas[i - 1]

    def items(self):
        return enumerate(self.zetas, start=1)

    def involution(self, f: Poly) -> Poly:
        return tau_dual(f)


def _quadratic(terms) -> Poly:
    return poly((monomial({i: 1, j: 1}), c) for c, i, j in terms)


def zeta_reference_diff(fam: ZetaFamily) -> tuple[str, ...]:
    """Term-level diffs of the built family against the reference
    expansions (which cover the first 15 members only)."""
    diffs = []
    for i, terms in sorted(golden.ZETA_REFERENCE.items()):
        delta = psub(fam.zeta(i), _quadratic(terms))
        if delta:
            diffs.append(f"zeta_{i}: residual {sorted(delta.items())}")
    return tuple(diffs)


@lru_cache(maxsize=1)
def dual_module_span() -> FractionSpan:
    """Lowering closure of the quadratic singular vector: the actual
    27-dimensional dual submodule, built independently of the family's
    high-index construction rule."""
    z1 = _quadratic_singular()
    span = FractionSpan(lambda k: k)
    span.add({m: Fraction(c) for m, c in z1.items()})
    work = [z1]
    while work:
        v = work.pop()
        for k in range(1, 7):
            img = apply(lowering_operator(k).weyl(), v)
            if img and span.add({m: Fraction(c) for m, c in img.items()}):
                work.append(img)
    return span


def _in_dual_module(f: Poly) -> bool:
    span = dual_module_span()
    return not span.reduce({m: Fraction(c) for m, c in f.items()})


def _quadratic_singular() -> Poly:
    from .singular import idx_to_poly, singular_space

    lines = singular_space(2, LAMBDA6)
    if len(lines) != 1:
        raise ValueError(f"expected one quadratic singular line, got {len(lines)}")
    z1 = idx_to_poly(lines[0])
    lead = z1.get(monomial({1: 1, 14: 1}), 0)
    if not lead:
        raise ValueError("quadratic singular vector misses x_1 x_14")
    return pscale(Fraction(1, lead), z1)


@lru_cache(maxsize=1)
def build_zeta_family() -> ZetaFamily:
    """Build all 27 members and cross-check the printed expansions.

    Members 2..15 follow the lowering chain; members 16..27 use the
    signed involution tau_dual, and each is validated to lie in the
    dual submodule (the unsigned rule fails this, see
    plain_involution_defect)."""
    zetas: dict[int, Poly] = {1: _quadratic_singular()}
    for target, k, source, sign in golden.ZETA_CHAIN:
        image = apply(lowering_operator(k).weyl(), zetas[source])
        zetas[target] = pscale(sign, image)
    for i in range(16, 28):
        # member sign -d_i on top of the signed relabeling; this is the
        # unique normalization (given members 1..15) under which the
        # dual-action law holds for the simple raising operators
        zetas[i] = pscale(-golden.DSIGNS[i], tau_dual(zetas[28 - i]))
        if not _in_dual_module(zetas[i]):
            raise ValueError(f"zeta_{i} escapes the dual submodule")
    fam = ZetaFamily(
        zetas=tuple(zetas[i] for i in range(1, 28)),
        iota=tuple(golden.iota(i) for i in range(1, 28)),
    )
    diffs = zeta_reference_diff(fam)
    if diffs:
        raise ValueError("zeta family mismatch: " + "; ".join(diffs))
    return fam


def plain_involution_defect() -> tuple[tuple[int, bool], ...]:
    """Membership of the unsigned-involution images in the dual module.

    Returns (member index, lies inside) for i in 16..27 using the plain
    relabeling rule.  The rule as printed in the reference produces
    vectors outside the module for 9 of the 12 members; this records the
    defect for reporting."""
    fam = build_zeta_family()
    out = []
    for i in range(16, 28):
        out.append((i, _in_dual_module(tau(fam.zeta(28 - i)))))
    return tuple(out)


class ZetaCoordinates:
    """Express degree-2 polynomials in the zeta basis, exactly.

    Rows of the echelon carry bookkeeping keys ("z", i) alongside the
    monomial keys ("m", mono), so reducing a polynomial against the span
    leaves exactly its zeta coordinates when it lies in the span.
    """

    def __init__(self, fam: ZetaFamily):
        def key(k):
            tag, payload = k
            return (0, payload) if tag == "m" else (1, payload)

        self.span = FractionSpan(key)
        for i, z in fam.items():
            row = {("m", mono): Fraction(c) for mono, c in z.items()}
            row[("z", i)] = Fraction(-1)
            self.span.add(row)
        self.rank = self.span.dim

    def express(self, f: Poly) -> dict[int, Fraction] | None:
        if not f:
            return {}
        rem = self.span.reduce({("m", mono): Fraction(c) for mono, c in f.items()})
        if any(tag == "m" for tag, _ in rem):
            return None
        return {i: c for (_, i), c in rem.items() if c}


@dataclass(frozen=True)
class DualModuleReport:
    rank: int
    ops_checked: int
    span_failures: tuple[str, ...]
    nu_simple_ok: bool
    nu_signs: tuple[tuple[Root6, int | None], ...]
    cartan_derived_ok: bool
    cartan_reference_ok: bool
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return (
            self.rank == 27
            and not self.span_failures
            and self.nu_simple_ok
            and self.cartan_derived_ok
            and self.cartan_reference_ok
            and not self.failures
        )


def _coordinate_matrix(
    coords: ZetaCoordinates, op_weyl: WeylOp, fam: ZetaFamily
) -> dict[tuple[int, int], Fraction] | None:
    """Matrix M with op(zeta_j) = sum_i M[i,j] zeta_i, or None if the
    image escapes the span."""
    out: dict[tuple[int, int], Fraction] = {}
    for j, z in fam.items():
        expr = coords.express(apply(op_weyl, z))
        if expr is None:
            return None
        for i, c in expr.items():
            out[(i, j)] = c
    return out


def verify_dual_module(fam: ZetaFamily | None = None) -> DualModuleReport:
    """Span stability under all 78 operators, the dual-action law for
    the raising operators through the diagram automorphism, and the
    diagonal Cartan action against both the derived and the reference
    weight tables."""
    if fam is None:
        fam = build_zeta_family()
    coords = ZetaCoordinates(fam)
    rs = root_system()
    ops = all_operators()
    span_failures: list[str] = []
    failures: list[str] = []
    checked = 0

    for r in rs.e6_roots:
        root6 = r[:6]
        checked += 1
        weyl = ops[root6].weyl()
        for j, z in fam.items():
            if coords.express(apply(weyl, z)) is None:
                span_failures.append(f"root {root6} on zeta_{j}")

    # Dual action law: coordinates of E_alpha on the zeta basis equal the
    # coefficient matrix of E_{sigma(alpha)} on the x basis.
    nu_signs: list[tuple[Root6, int | None]] = []
    nu_simple_ok = True
    simple_roots = {tuple(1 if t == k else 0 for t in range(6)) for k in range(6)}
    for r in rs.e6_positive:
        root6 = r[:6]
        mat = _coordinate_matrix(coords, ops[root6].weyl(), fam)
        ref = {(i, j): Fraction(c) for c, i, j in ops[sigma_root(root6)].terms}
        if mat == ref:
            sign = 1
        elif mat == {k: -v for k, v in ref.items()}:
            sign = -1
        else:
            sign = None
        nu_signs.append((root6, sign))
        if root6 in simple_roots and sign != 1:
            nu_simple_ok = False
            failures.append(f"dual action law fails at simple root {root6}")

    # Cartan: each zeta_i is an eigenvector of h_j with eigenvalue
    # matching both the sigma-permuted derived table and the reference.
    a = weight_table()
    cartan_derived_ok = True
    cartan_reference_ok = True
    for j in range(1, 7):
        h = ops[("h", j)].weyl()
        sig = golden.SIGMA[j - 1]
        for i, z in fam.items():
            expect = a[i - 1][sig - 1]
            if psub(apply(h, z), pscale(expect, z)):
                cartan_derived_ok = False
                failures.append(f"h_{j} not scalar {expect} on zeta_{i}")
            if expect != golden.WEIGHT_TABLE_ZETA[i - 1][j - 1]:
                cartan_reference_ok = False
                failures.append(f"b[{i},{j}] reference disagrees")
        checked += 1

    return DualModuleReport(
        rank=coords.rank,
        ops_checked=checked,
        span_failures=tuple(span_failures),
        nu_simple_ok=nu_simple_ok,
        nu_signs=tuple(nu_signs),
        cartan_derived_ok=cartan_derived_ok,
        cartan_reference_ok=cartan_reference_ok,
        failures=tuple(failures),
    )


ETA_LEAD = monomial({1: 1, 14: 1, 27: 1})


@lru_cache(maxsize=1)
def build_eta() -> Poly:
    """The cubic invariant, normalized to coefficient 3 on x_1 x_14 x_27."""
    from .singular import idx_to_poly, singular_space

    lines = singular_space(3, ZERO_WEIGHT)
    if len(lines) != 1:
        raise ValueError(f"expected one cubic invariant line, got {len(lines)}")
    f = idx_to_poly(lines[0])
    lead = f.get(ETA_LEAD, 0)
    if not lead:
        raise ValueError("cubic invariant misses x_1 x_14 x_27")
    return pscale(Fraction(3, lead), f)


def _reference_eta() -> Poly:
    return poly(
        (monomial({a: 1, b: 1, c: 1}), coeff)
        for coeff, a, b, c in golden.ETA_REFERENCE_TERMS
    )


def bilinear_eta(terms) -> Poly:
    """Expand a bilinear form sum c x_i zeta_j into a cubic polynomial."""
    fam = build_zeta_family()
    out: Poly = {}
    for c, i, j in terms:
        out = padd(out, pscale(c, pmul(x(i), fam.zeta(j))))
    return out


def bilinear_reference_full() -> tuple[tuple[int, int, int], ...]:
    """All 27 signed products d_i x_i zeta_{iota(i)}.

    The printed form lists 26 of them; the i = 18 product is absent
    there, with its sign forced to d_18 = +1 by d_v d_{iota(v)} = 1.
    """
    return tuple((golden.DSIGNS[i], i, golden.iota(i)) for i in range(1, 28))


def bilinear_relation_dim() -> int:
    """Dimension of the space of linear relations among the 27 products.

    The products x_i zeta_{iota(i)} span only a 21-dimensional space of
    cubics, so the representation of eta as a signed sum of them is far
    from unique; the d-signed one is the symmetric choice.
    """
    fam = build_zeta_family()
    span = FractionSpan(lambda k: k)
    for i in range(1, 28):
        prod = pmul(x(i), fam.zeta(golden.iota(i)))
        span.add({mono: Fraction(c) for mono, c in prod.items()})
    return 27 - span.dim


@dataclass(frozen=True)
class EtaReport:
    monomial_count: int
    coefficient_values: tuple[int, ...]
    annihilated_by_all: bool
    bilinear_signs_match: bool
    bilinear_relation_dim: int
    printed_bilinear_residual_terms: int
    expansion_diffs: tuple[tuple[Monomial, Fraction, Fraction], ...]
    printed_expansion_invariant: bool
    printed_residual_terms: int

    @property
    def ok(self) -> bool:
        return (
            self.annihilated_by_all
            and self.monomial_count == 45
            and self.bilinear_signs_match
        )


def eta_report() -> EtaReport:
    """Build eta and diff it against both printed forms.

    The solver-derived facts drive `ok`: 45 monomials, annihilation by
    every generator, and the exact identity
    eta = sum_i d_i x_i zeta_{iota(i)} over all 27 products.  The
    printed 26-term bilinear list and the printed expansion each carry
    defects that are reported as data, never patched.
    """
    eta = build_eta()
    coeffs = sorted({int(c) for c in eta.values()})
    annihilated = not any(
        apply(w, eta) for _, w in generator_operators()
    )
    full = bilinear_eta(bilinear_reference_full())
    printed_residual = psub(bilinear_eta(golden.ETA_BILINEAR_REFERENCE), eta)
    ref = _reference_eta()
    diffs = tuple(
        (mono, Fraction(eta.get(mono, 0)), Fraction(ref.get(mono, 0)))
        for mono in sorted(set(eta) | set(ref))
        if eta.get(mono, 0) != ref.get(mono, 0)
    )
    residual = _raising_residual(ref)
    return EtaReport(
        monomial_count=len(eta),
        coefficient_values=tuple(coeffs),
        annihilated_by_all=annihilated,
        bilinear_signs_match=not psub(full, eta),
        bilinear_relation_dim=bilinear_relation_dim(),
        printed_bilinear_residual_terms=len(printed_residual),
        expansion_diffs=diffs,
        printed_expansion_invariant=not residual,
        printed_residual_terms=len(residual),
    )


def _raising_residual(f: Poly) -> Poly:
    """Combined image of f under the 6 simple raising operators."""
    out: Poly = {}
    for k in range(1, 7):
        out = padd(out, apply(raising_operator(k).weyl(), f))
    return out


@lru_cache(maxsize=1)
def generator_operators() -> tuple[tuple[str, WeylOp], ...]:
    """All 78 representation operators as labeled first-order WeylOps."""
    rs = root_system()
    ops = all_operators()
    out = []
    for r in rs.e6_roots:
        out.append((f"root {r[:6]}", ops[r[:6]].weyl()))
    for j in range(1, 7):
        out.append((f"cartan {j}", ops[("h", j)].weyl()))
    return tuple(out)


@dataclass(frozen=True)
class InvariantOperators:
    eta: Poly
    D: WeylOp
    D1: WeylOp
    D2: WeylOp


@lru_cache(maxsize=1)
def build_operators() -> InvariantOperators:
    fam = build_zeta_family()
    eta = build_eta()
    d2 = op_zero()
    for _, z in fam.items():
        d2 = op_add(d2, compose(multiplication(z), dualize(z)))
    return InvariantOperators(
        eta=eta, D=dualize(eta), D1=euler_operator(), D2=d2
    )


@dataclass(frozen=True)
class InvarianceReport:
    label: str
    ops_checked: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_invariance(op: WeylOp, label: str = "operator") -> InvarianceReport:
    """Exact vanishing of the commutator with all 78 generators."""
    failures = []
    gens = generator_operators()
    for name, w in gens:
        if commutator(op, w):
            failures.append(name)
    return InvarianceReport(label=label, ops_checked=len(gens), failures=tuple(failures))


@dataclass(frozen=True)
class BracketReport:
    triple: tuple[Fraction, Fraction, Fraction]
    structural_ok: bool
    residual_terms: int
    claimed: tuple[int, int, int]

    @property
    def matches_claimed(self) -> bool:
        return self.structural_ok and tuple(self.triple) == tuple(
            Fraction(v) for v in self.claimed
        )


def lemma_bracket_triple(ops: InvariantOperators | None = None) -> BracketReport:
    """Solve [D, mult(eta)] = b0 + b1 D1 + b2 D2 exactly.

    The three coefficients are read off disjoint normal-ordered keys
    (constant, x_1 d_1, and a pure second-order key unique to D2), then
    membership is confirmed by exact operator equality.  The computed
    triple is compared with the reference constants downstream; a
    mismatch there is a finding about the reference, not a failure.
    """
    if ops is None:
        return _cached_bracket_triple()
    return _bracket_triple(ops)


@lru_cache(maxsize=1)
def _cached_bracket_triple() -> BracketReport:
    return _bracket_triple(build_operators())


def _bracket_triple(ops: InvariantOperators) -> BracketReport:
    C = commutator(ops.D, multiplication(ops.eta))
    zero = (0,) * NVARS
    e1 = tuple(1 if i == 0 else 0 for i in range(NVARS))
    pair = monomial({1: 1, 14: 1})
    b0 = C.get((zero, zero), Fraction(0))
    b1 = C.get((e1, e1), Fraction(0))
    b2 = C.get((pair, pair), Fraction(0)) / ops.D2[(pair, pair)]
    model = op_add(
        op_scale(b0, op_identity()),
        op_add(op_scale(b1, ops.D1), op_scale(b2, ops.D2)),
    )
    residual = op_sub(C, model)
    return BracketReport(
        triple=(b0, b1, b2),
        structural_ok=not residual,
        residual_terms=len(residual),
        claimed=golden.CLAIMED_BRACKET_TRIPLE,
    )


def x1_zeta1_power(m1: int, m2: int) -> Poly:
    fam = build_zeta_family()
    return pmul(ppow(x(1), m1), ppow(fam.zeta(1), m2))


@dataclass(frozen=True)
class EigenvalueReport:
    m1: int
    m2: int
    eigenvalue: Fraction | None   # None when not an eigenvector
    expected: int

    @property
    def ok(self) -> bool:
        return self.eigenvalue == self.expected


def lemma_pairing_eigenvalue(m1: int, m2: int) -> EigenvalueReport:
    """D2 acts on x_1^m1 zeta_1^m2 by the scalar m2(m1+m2+4)."""
    ops = build_operators()
    g = x1_zeta1_power(m1, m2)
    image = apply(ops.D2, g)
    expected = golden.claimed_pairing_eigenvalue(m1, m2)
    value = _proportionality(image, g)
    return EigenvalueReport(m1=m1, m2=m2, eigenvalue=value, expected=expected)


def _proportionality(image: Poly, base: Poly) -> Fraction | None:
    """The scalar c with image = c * base, if one exists (0 included)."""
    if not image:
        return Fraction(0)
    if not base:
        return None
    mono = next(iter(base))
    c = Fraction(image.get(mono, 0)) / base[mono]
    if psub(image, pscale(c, base)):
        return None
    return c


@dataclass(frozen=True)
class PairingBracketReport:
    pair: tuple[Fraction, Fraction]
    structural_ok: bool
    residual_terms: int
    claimed: tuple[int, int]
    eta_scalar: Fraction | None       # D2(eta) = eta_scalar * eta
    eta_x1_scalar: Fraction | None    # D2(eta x_1) = eta_x1_scalar * eta x_1

    @property
    def ok(self) -> bool:
        # The instances must agree with the solved pair: applying the
        # bracket to 1 gives c1, applying it to x_1 gives c1 + c2.
        return (
            self.structural_ok
            and self.eta_scalar == self.pair[0]
            and self.eta_x1_scalar == self.pair[0] + self.pair[1]
        )

    @property
    def matches_claimed(self) -> bool:
        return tuple(self.pair) == self.claimed


def lemma_pairing_bracket(ops: InvariantOperators | None = None) -> PairingBracketReport:
    """Solve [D2, mult(eta)] = mult(eta) (c1 + c2 D1) exactly."""
    if ops is None:
        return _cached_pairing_bracket()
    return _pairing_bracket(ops)


@lru_cache(maxsize=1)
def _cached_pairing_bracket() -> PairingBracketReport:
    return _pairing_bracket(build_operators())


def _pairing_bracket(ops: InvariantOperators) -> PairingBracketReport:
    C = commutator(ops.D2, multiplication(ops.eta))
    zero = (0,) * NVARS
    e1 = tuple(1 if i == 0 else 0 for i in range(NVARS))
    lead3 = Fraction(ops.eta[ETA_LEAD])
    c1 = C.get((ETA_LEAD, zero), Fraction(0)) / lead3
    lead_x1 = tuple(a + b for a, b in zip(ETA_LEAD, e1))
    c2 = C.get((lead_x1, e1), Fraction(0)) / lead3
    model = compose(
        multiplication(ops.eta),
        op_add(op_scale(c1, op_identity()), op_scale(c2, ops.D1)),
    )
    residual = op_sub(C, model)
    eta_x1 = pmul(ops.eta, x(1))
    return PairingBracketReport(
        pair=(c1, c2),
        structural_ok=not residual,
        residual_terms=len(residual),
        claimed=golden.CLAIMED_PAIRING_BRACKET,
        eta_scalar=_proportionality(apply(ops.D2, ops.eta), ops.eta),
        eta_x1_scalar=_proportionality(apply(ops.D2, eta_x1), eta_x1),
    )


def annihilation(m1: int, m2: int) -> bool:
    """D kills x_1^m1 zeta_1^m2 exactly."""
    ops = build_operators()
    return not apply(ops.D, x1_zeta1_power(m1, m2))


def derived_cubic_scalar(
    m: int,
    m1: int,
    m2: int,
    triple: tuple[Fraction, Fraction, Fraction],
    pairing: tuple[Fraction, Fraction],
) -> Fraction:
    """Scalar for D(eta^m x_1^m1 zeta_1^m2) implied by the verified
    bracket identities, given the computed triple (b0, b1, b2) of
    [D, mult(eta)] and pair (c1, c2) of [D2, mult(eta)].

    Unwinding [D, mult(eta)] m times gives sum over k < m of
    b0 + b1(3k+m1+2m2) + b2 mu_k, where mu_k, the D2 eigenvalue on
    eta^k x_1^m1 zeta_1^m2, obeys mu_{k+1} = mu_k + c1 + c2(3k+m1+2m2)
    from the base eigenvalue mu_0 = m2(m1+m2+4).
    """
    b0, b1, b2 = triple
    c1, c2 = pairing
    mu = Fraction(golden.claimed_pairing_eigenvalue(m1, m2))
    total = Fraction(0)
    for k in range(m):
        deg = 3 * k + m1 + 2 * m2
        total += b0 + b1 * deg + b2 * mu
        mu += c1 + c2 * deg
    return total


@dataclass(frozen=True)
class CubicActionReport:
    m: int
    m1: int
    m2: int
    proportional: bool
    nonzero: bool
    scalar: Fraction | None
    claimed_scalar: int
    derived_scalar: Fraction

    @property
    def ok(self) -> bool:
        # Proportionality and nonvanishing are the hard claims; the
        # closed-form constants are compared, not enforced.
        return self.proportional and self.nonzero and self.scalar == self.derived_scalar

    @property
    def matches_claimed(self) -> bool:
        return self.scalar == self.claimed_scalar


def lemma_cubic_action(m: int, m1: int, m2: int) -> CubicActionReport:
    """D(eta^m x_1^m1 zeta_1^m2) is a nonzero multiple of
    eta^(m-1) x_1^m1 zeta_1^m2; the multiple is recorded against both
    the reference closed form and the derived one."""
    if m < 1:
        raise ValueError("m must be positive")
    ops = build_operators()
    tail = x1_zeta1_power(m1, m2)
    g = pmul(ppow(ops.eta, m), tail)
    image = apply(ops.D, g)
    base = pmul(ppow(ops.eta, m - 1), tail)
    scalar = _proportionality(image, base)
    triple = lemma_bracket_triple().triple
    pairing = lemma_pairing_bracket().pair
    return CubicActionReport(
        m=m,
        m1=m1,
        m2=m2,
        proportional=scalar is not None,
        nonzero=bool(image),
        scalar=scalar,
        claimed_scalar=golden.claimed_cubic_scalar(m, m1, m2),
        derived_scalar=derived_cubic_scalar(m, m1, m2, triple, pairing),
    )
