"""Command-line front end for the verification pipelines.

Each command assembles a list of verification rows and a payload
section, then emits them as JSON or text.  Output is deterministic for
fixed flags (timings are opt-in), and every number is serialized as a
decimal string.  Exit status is zero exactly when no row has status
"fail"; rows documenting defects of the printed reference carry the
"discrepancy-flagged" status instead and do not fail a run.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb

from . import decomp, golden, invariants, rep, rootsys, singular, weyl
from .config import DEFAULTS, RunConfig
from .polyops import format_poly, poly_to_json
from .singular import expected_line_count

PASS = "pass"
FAIL = "fail"
FLAGGED = "discrepancy-flagged"

# provenance tags for expected values
REFERENCE = "reference"    # printed in the source tables
DERIVED = "derived"        # computed from an independent construction
DEFINITION = "definition"  # forced by a definition or pure counting


@dataclass(frozen=True)
class VerificationReport:
    check_id: str
    claim: str
    expected: str   # serialized value plus provenance tag
    computed: str
    status: str     # pass | fail | discrepancy-flagged
    runtime_ms: int

    def to_dict(self, timings: bool) -> dict:
        out = {
            "check_id": self.check_id,
            "claim": self.claim,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
        }
        if timings:
            out["runtime_ms"] = str(self.runtime_ms)
        return out


def ser(v) -> str:
    """Serialize a value as a decimal string (tuples recursively)."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return str(v.numerator)
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, (tuple, list)):
        return "(" + ", ".join(ser(x) for x in v) + ")"
    return str(v)


class Assembler:
    """Collects verification rows with timing and status bookkeeping."""

    def __init__(self) -> None:
        self.rows: list[VerificationReport] = []

    def check(self, check_id, claim, expected, provenance, compute, flag=False):
        """Run compute() and compare with expected.

        flag=True records a mismatch as a reference discrepancy rather
        than a failure; use it when the expected value is printed
        reference data already known to disagree with the derivation.
        """
        t0 = time.perf_counter()
        value = compute()
        ms = round((time.perf_counter() - t0) * 1000)
        status = PASS if value == expected else (FLAGGED if flag else FAIL)
        self.rows.append(
            VerificationReport(
                check_id=check_id,
                claim=claim,
                expected=f"{ser(expected)} [{provenance}]",
                computed=ser(value),
                status=status,
                runtime_ms=ms,
            )
        )
        return value

    def note(self, check_id, claim, expected, provenance, computed, status):
        self.rows.append(
            VerificationReport(
                check_id=check_id,
                claim=claim,
                expected=f"{ser(expected)} [{provenance}]",
                computed=ser(computed),
                status=status,
                runtime_ms=0,
            )
        )


def cmd_roots(cfg: RunConfig, a: Assembler) -> dict:
    rs = rootsys.root_system()
    a.check("roots.e7-count", "norm-2 vectors in the rank-7 lattice",
            126, REFERENCE, lambda: len(rs.roots))
    a.check("roots.e6-count", "vectors with final coordinate zero",
            72, REFERENCE, lambda: len(rs.e6_roots))
    a.check("roots.e6-positive-count", "positive vectors in the rank-6 subsystem",
            36, REFERENCE, lambda: len(rs.e6_positive))
    a.check("roots.basis-count", "positive vectors with final coordinate one",
            27, REFERENCE, lambda: len(rs.bar_positive))
    a.check("roots.positive-partition",
            "rank-7 positives split into rank-6 positives plus the basis set",
            True, DERIVED,
            lambda: set(rs.positive) == set(rs.e6_positive) | set(rs.bar_positive)
            and len(rs.positive) == 63)
    exprs = rootsys.bar_set_expressions()
    bad_exprs = [(label, v) for label, v, ok in exprs if not ok]
    a.check("roots.basis-expressions",
            "valid printed composite expressions pin down the basis set exactly",
            True, DERIVED,
            lambda: {v for _l, v, ok in exprs if ok} == set(rs.bar_positive))
    a.note("roots.basis-expressions-defective",
           "printed composite expressions that are not norm-2 vectors",
           0, REFERENCE, len(bad_exprs), FLAGGED)
    state: dict = {}

    def run_cocycle() -> bool:
        state["c"] = rootsys.check_cocycle_laws(
            seed=cfg.seed, n_random=cfg.cocycle_samples)
        return state["c"].ok

    a.check("roots.cocycle-laws",
            "sign-factor bimultiplicativity and symmetry on full sweep plus samples",
            True, DERIVED, run_cocycle)
    c = state["c"]
    return {
        "e7_roots": "126",
        "e6_roots": "72",
        "e6_positive": "36",
        "basis_vectors": "27",
        "defective_basis_expressions": [
            f"{label}: {ser(v)} has norm 4" for label, v in bad_exprs
        ],
        "cocycle_pairs_checked": str(c.pairs_checked),
        "cocycle_triples_checked": str(c.triples_checked),
        "seed": str(cfg.seed),
    }


def cmd_rep(cfg: RunConfig, a: Assembler) -> dict:
    a.check("rep.weight-table", "27 x 6 diagonal action table matches the reference",
            True, REFERENCE, lambda: rep.compare_weight_tables().ok)
    state: dict = {}

    def run_ops() -> bool:
        state["t"] = rep.compare_reference_operators()
        return state["t"].ok

    a.check("rep.operators",
            "72 root operators match the reference after typo normalization",
            True, REFERENCE, run_ops)
    t = state["t"]
    if t.flagged:
        a.note("rep.operators-defective-rows",
               "printed rows consistent with the derived bracket closure",
               0, REFERENCE, len(t.flagged), FLAGGED)
    a.check("rep.homomorphism",
            "operator brackets equal algebra brackets on all generator pairs",
            True, DERIVED, lambda: rep.verify_homomorphism().ok)
    return {
        "rows_compared": str(t.rows_compared),
        "typo_normalized_rows": [ser(r) for r in t.normalized_rows],
        "defective_reference_rows": list(t.flagged),
        "unexpected_mismatches": list(t.mismatches),
    }


def _singular_degree(cfg: RunConfig, a: Assembler, m: int,
                     weight_filter=None) -> list[dict]:
    state: dict = {}

    def run_scan() -> int:
        state["scan"] = singular.enumerate_singular(m)
        return len(state["scan"].lines)

    a.check(f"singular.deg{m}.line-count",
            f"singular lines at degree {m} count solutions of a+2b+3c={m}",
            expected_line_count(m), DERIVED, run_scan)
    payload = []
    for w, d in state["scan"].lines:
        if weight_filter is not None and tuple(w) != weight_filter:
            continue
        a.check(f"singular.deg{m}.weight{ser(w).replace(' ', '')}.dim",
                "each singular weight space is a single line",
                1, DERIVED, lambda d=d: d)
        vecs = singular.singular_space(m, w)
        entry = {
            "degree": str(m),
            "weight": ser(w),
            "dimension": str(d),
            "generators": [poly_to_json(singular.idx_to_poly(v)) for v in vecs],
        }
        payload.append(entry)
    # pinned identifications at low degree
    lam1 = tuple(1 if i == 0 else 0 for i in range(6))
    lam6 = tuple(1 if i == 5 else 0 for i in range(6))
    if m == 1:
        a.check("singular.deg1.generator",
                "the degree-1 singular line is spanned by x_1",
                True, REFERENCE,
                lambda: singular.singular_space(1, lam1) == [{(1,): 1}])
    if m == 2:
        def match_zeta() -> bool:
            vecs = singular.singular_space(2, lam6)
            if len(vecs) != 1:
                return False
            got = singular.idx_to_poly(vecs[0])
            fam = invariants.build_zeta_family()
            return got == fam.zeta(1)

        a.check("singular.deg2.generator",
                "the degree-2 singular line matches the printed quadratic exactly",
                True, REFERENCE, match_zeta)
    if m == 3:
        def eta_diffs() -> int:
            return len(invariants.eta_report().expansion_diffs)

        a.check("singular.deg3.invariant-vs-printed",
                "coefficient differences between the degree-3 invariant and its printed form",
                0, REFERENCE, eta_diffs, flag=True)
    return payload


def cmd_singular(cfg: RunConfig, a: Assembler, degree: int,
                 weight=None) -> dict:
    return {"spaces": _singular_degree(cfg, a, degree, weight)}


def _invariant_summary(cfg: RunConfig, a: Assembler) -> dict:
    state: dict = {}

    def run_eta() -> bool:
        state["eta"] = invariants.eta_report()
        return state["eta"].ok

    a.check("invariant.eta",
            "cubic invariant: 45 monomials, annihilated, bilinear identity",
            True, DERIVED, run_eta)
    er = state["eta"]
    a.note("invariant.eta.printed-expansion",
           "coefficient differences against the printed 45-term cubic",
           0, REFERENCE, len(er.expansion_diffs), FLAGGED)
    a.note("invariant.eta.printed-expansion-annihilated",
           "the printed cubic is itself killed by all raising operators",
           True, REFERENCE, er.printed_expansion_invariant, FLAGGED)
    a.note("invariant.eta.printed-bilinear-residual",
           "monomials missed by the printed 26-product bilinear form",
           0, REFERENCE, er.printed_bilinear_residual_terms, FLAGGED)

    def run_dual() -> bool:
        state["dual"] = invariants.verify_dual_module()
        return state["dual"].ok

    a.check("invariant.dual-family",
            "27 independent quadratics spanning a stable dual copy, action law exact",
            True, DERIVED, run_dual)
    dm = state["dual"]
    a.check("invariant.dual-family.weights",
            "family weights match the printed weight table",
            True, REFERENCE, lambda: dm.cartan_reference_ok)
    defect = [i for i, ok in invariants.plain_involution_defect() if not ok]
    a.note("invariant.dual-family.plain-relabeling-defect",
           "high members produced by the unsigned relabeling rule stay in the module",
           0, REFERENCE, len(defect), FLAGGED)
    return {
        "eta_monomials": str(er.monomial_count),
        "eta_coefficients": [ser(c) for c in er.coefficient_values],
        "bilinear_relation_dim": str(er.bilinear_relation_dim),
        "plain_relabeling_escapees": [str(i) for i in defect],
        "dual_rank": str(dm.rank),
    }


def _invariant_lemmas(cfg: RunConfig, a: Assembler) -> dict:
    ops = invariants.build_operators()
    for label, op in (("D", ops.D), ("D1", ops.D1), ("D2", ops.D2)):
        a.check(f"invariant.commutes.{label}",
                f"{label} commutes with all 78 generator operators",
                True, DERIVED,
                lambda op=op, label=label: invariants.verify_invariance(op, label).ok)
    state: dict = {}

    def run_bracket() -> bool:
        state["b"] = invariants.lemma_bracket_triple()
        return state["b"].structural_ok

    a.check("invariant.bracket.structure",
            "[D, mult(eta)] lies exactly in span{Id, D1, D2}",
            True, DERIVED, run_bracket)
    br = state["b"]
    a.note("invariant.bracket.constants",
           "printed constants of [D, mult(eta)]",
           br.claimed, REFERENCE, tuple(br.triple), FLAGGED)

    def run_pairing() -> bool:
        state["p"] = invariants.lemma_pairing_bracket()
        return state["p"].ok

    a.check("invariant.pairing.structure",
            "[D2, mult(eta)] = mult(eta)(c1 + c2 D1) with consistent instances",
            True, DERIVED, run_pairing)
    pb = state["p"]
    a.note("invariant.pairing.constants",
           "printed constants of [D2, mult(eta)]",
           pb.claimed, REFERENCE, tuple(pb.pair), FLAGGED)
    a.note("invariant.pairing.instances",
           "printed eigenvalues of D2 on eta and eta*x_1",
           (3, 5), REFERENCE, (pb.eta_scalar, pb.eta_x1_scalar), FLAGGED)

    def eigen_sweep() -> bool:
        n = cfg.eigenvalue_degree
        return all(
            invariants.lemma_pairing_eigenvalue(m1, m2).ok
            for m1 in range(n + 1)
            for m2 in range((n - m1) // 2 + 1)
        )

    a.check("invariant.eigenvalue-sweep",
            f"D2 eigenvalue m2(m1+m2+4) for m1+2m2 <= {cfg.eigenvalue_degree}",
            True, REFERENCE, eigen_sweep)

    def kill_sweep() -> bool:
        n = cfg.annihilation_degree
        return all(
            invariants.annihilation(m1, m2)
            for m1 in range(n + 1)
            for m2 in range((n - m1) // 2 + 1)
        )

    a.check("invariant.annihilation-sweep",
            f"D kills x_1^m1 zeta_1^m2 for m1+2m2 <= {cfg.annihilation_degree}",
            True, REFERENCE, kill_sweep)

    def cubic_sweep() -> bool:
        state["cubic"] = []
        n = cfg.cubic_degree
        ok = True
        for m in range(1, n // 3 + 1):
            rem = n - 3 * m
            for m1 in range(rem + 1):
                for m2 in range((rem - m1) // 2 + 1):
                    r = invariants.lemma_cubic_action(m, m1, m2)
                    state["cubic"].append(r)
                    ok = ok and r.ok
        return ok

    a.check("invariant.cubic-action-sweep",
            "D(eta^m x_1^m1 zeta_1^m2) nonzero, proportional, scalar matches derivation",
            True, DERIVED, cubic_sweep)
    claimed_diffs = [r for r in state["cubic"] if not r.matches_claimed]
    a.note("invariant.cubic-action.printed-scalars",
           "cases where the printed closed form matches the computed scalar",
           len(state["cubic"]), REFERENCE,
           len(state["cubic"]) - len(claimed_diffs), FLAGGED)
    base = next(r for r in state["cubic"] if (r.m, r.m1, r.m2) == (1, 0, 0))
    return {
        "bracket_triple": ser(tuple(br.triple)),
        "bracket_triple_printed": ser(br.claimed),
        "pairing": ser(tuple(pb.pair)),
        "pairing_printed": ser(pb.claimed),
        # the three competing values for the bracket's constant term:
        # the printed bracket text, the direct evaluation on the
        # invariant itself, and the printed closed form at its base case
        "base_constant_candidates": {
            "printed_bracket": ser(br.claimed[0]),
            "direct_evaluation": ser(base.scalar),
            "printed_closed_form": ser(base.claimed_scalar),
        },
        "cubic_cases": str(len(state["cubic"])),
        "cubic_printed_mismatches": str(len(claimed_diffs)),
    }


def cmd_invariant(cfg: RunConfig, a: Assembler, verify: bool,
                  dump: str | None) -> dict:
    if dump == "eta":
        eta = invariants.build_eta()
        a.check("invariant.eta.monomials", "number of cubic monomials",
                45, DERIVED, lambda: len(eta))
        return {"eta": poly_to_json(eta), "eta_text": format_poly(eta)}
    if dump == "zeta":
        fam = invariants.build_zeta_family()
        a.check("invariant.zeta.count", "number of family members",
                27, DERIVED, lambda: len(fam.zetas))
        return {
            "zeta": {
                str(i): {
                    "terms": poly_to_json(fam.zeta(i)),
                    "text": format_poly(fam.zeta(i)),
                    "dual_index": str(golden.iota(i)),
                }
                for i in range(1, 28)
            }
        }
    payload = _invariant_summary(cfg, a)
    if verify:
        payload.update(_invariant_lemmas(cfg, a))
    return payload


def cmd_decompose(cfg: RunConfig, a: Assembler, m: int,
                  materialize: bool) -> dict:
    state: dict = {}

    def run_phi() -> int:
        state["s"] = decomp.phi_dim(m)
        return state["s"].dim_phi

    lower = comb(m + 23, 26) if m >= 3 else 0
    a.check(f"decompose.deg{m}.kernel-dim",
            "kernel dimension equals the binomial difference",
            comb(m + 26, 26) - lower, DERIVED, run_phi)
    s = state["s"]
    a.check(f"decompose.deg{m}.rank",
            "rank of the cubic operator equals the lower space dimension",
            lower, DERIVED, lambda: s.rank_D)
    a.check(f"decompose.deg{m}.directness",
            "composite map g -> D(eta g) has full rank",
            True, DERIVED, lambda: s.direct_sum_ok)
    a.check(f"decompose.deg{m}.weyl-sum",
            "kernel dimension equals the irreducible dimension sum",
            s.dim_phi, DERIVED, lambda: s.weyl_sum)
    payload = {
        "degree": str(m),
        "dim_total": str(s.dim_Am),
        "rank": str(s.rank_D),
        "dim_kernel": str(s.dim_phi),
        "weyl_sum": str(s.weyl_sum),
        "weyl_terms": [ser(t) for t in decomp.weyl_sum_check(m).terms],
        "direct_sum_ok": ser(s.direct_sum_ok),
    }
    if materialize:
        a.check(f"decompose.deg{m}.materialized-dim",
                "explicit kernel bases reproduce the rank-derived dimension",
                s.dim_phi, DERIVED, lambda: decomp.materialized_kernel_dim(m))

        def verify_samples() -> bool:
            if m < 3:
                return True
            for vec in decomp.kernel_samples(m, max_blocks=8):
                img: dict = {}
                for mono, c in vec.items():
                    for k, v in decomp._apply_cubic(mono).items():
                        img[k] = img.get(k, 0) + c * v
                if any(img.values()):
                    return False
            return True

        a.check(f"decompose.deg{m}.kernel-samples",
                "sampled kernel vectors are exactly killed by D",
                True, DERIVED, verify_samples)
        payload["materialized"] = "true"
    return payload


def cmd_identity(cfg: RunConfig, a: Assembler, max_degree: int) -> dict:
    state: dict = {}

    def run_series() -> tuple:
        state["r"] = weyl.identity_check(max_degree)
        return state["r"].series_coefficients

    expected = tuple(1 if k <= 2 else 0 for k in range(max_degree + 1))
    a.check("identity.series",
            "(1-q)^26 times the dimension series truncates to 1 + q + q^2",
            expected, REFERENCE, run_series)
    for m in range(max_degree + 1):
        def coeff(m=m) -> int:
            return sum(
                weyl.weyl_dim(m1, m2)
                for m3 in range(m // 3 + 1)
                for m2 in range((m - 3 * m3) // 2 + 1)
                for m1 in [m - 3 * m3 - 2 * m2]
            )

        a.check(f"identity.coeff-q{m}",
                "degree count matches the partitioned dimension sum",
                comb(m + 26, 26), DEFINITION, coeff)
    return {
        "max_degree": str(max_degree),
        "series": [str(c) for c in state["r"].series_coefficients],
    }


def cmd_closure(cfg: RunConfig, a: Assembler, force: bool) -> dict:
    pairs = [(1, 0, 27), (0, 1, 27)]
    if force:
        pairs.append((1, 1, 650))
    for m1, m2, want in pairs:
        a.check(f"closure.{m1}-{m2}",
                "lowering closure dimension equals the dimension formula",
                want, DERIVED,
                lambda m1=m1, m2=m2: decomp.lowering_closure(m1, m2))
    return {"pairs": [ser((m1, m2, w)) for m1, m2, w in pairs]}


def cmd_all(cfg: RunConfig, a: Assembler, force: bool) -> dict:
    payload = {"roots": cmd_roots(cfg, a), "rep": cmd_rep(cfg, a)}
    spaces: list[dict] = []
    for m in range(cfg.singular_degree + 1):
        spaces.extend(_singular_degree(cfg, a, m))
    payload["singular"] = {"spaces_scanned": str(len(spaces))}
    payload["invariant"] = cmd_invariant(cfg, a, verify=True, dump=None)
    degrees = list(range(3, cfg.decompose_degree + 1))
    if force:
        degrees.append(cfg.decompose_guard)
    payload["decompose"] = {
        str(m): cmd_decompose(cfg, a, m, materialize=False) for m in degrees
    }
    payload["identity"] = cmd_identity(cfg, a, cfg.identity_degree)
    payload["closure"] = cmd_closure(cfg, a, force)
    return payload


def emit(command: str, cfg: RunConfig, rows, payload, as_json: bool,
         timings: bool) -> None:
    if as_json:
        doc = {
            "command": command,
            "seed": str(cfg.seed),
            "reports": [r.to_dict(timings) for r in rows],
            "payload": payload,
        }
        print(json.dumps(doc, indent=2))
        return
    print(f"e6poly {command}")
    for r in rows:
        stamp = {PASS: "pass", FAIL: "FAIL", FLAGGED: "flag"}[r.status]
        line = f"  [{stamp}] {r.check_id}: {r.claim}; expected {r.expected}, computed {r.computed}"
        if timings:
            line += f" ({r.runtime_ms} ms)"
        print(line)
    npass = sum(r.status == PASS for r in rows)
    nflag = sum(r.status == FLAGGED for r in rows)
    nfail = sum(r.status == FAIL for r in rows)
    print(f"  checks: {len(rows)}  pass: {npass}  flagged: {nflag}  fail: {nfail}")
    if command == "invariant" and "eta_text" in payload:
        print(f"  eta = {payload['eta_text']}")
    if command == "invariant" and "zeta" in payload:
        for i in range(1, 28):
            entry = payload["zeta"][str(i)]
            print(f"  zeta_{i} (dual index {entry['dual_index']}) = {entry['text']}")
    if command == "singular":
        for entry in payload.get("spaces", []):
            print(f"  degree {entry['degree']} weight {entry['weight']}: "
                  f"dimension {entry['dimension']}")


def build_parser() -> argparse.ArgumentParser:
    # shared flags are accepted both before and after the subcommand;
    # SUPPRESS keeps the subparser from clobbering a value parsed earlier
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--text", action="store_true",
                        default=argparse.SUPPRESS, help="emit text (default)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for sampled law checks")
    common.add_argument("--timings", action="store_true",
                        default=argparse.SUPPRESS,
                        help="include runtimes (breaks byte-for-byte determinism)")
    p = argparse.ArgumentParser(
        prog="e6poly",
        parents=[common],
        description="Exact verification suite for the 27-variable cubic "
                    "invariant and its operator calculus.",
    )
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("roots", parents=[common],
                   help="root counts, partition, sign-factor laws")
    sub.add_parser("rep", parents=[common],
                   help="operator table comparison and homomorphism")
    ps = sub.add_parser("singular", parents=[common],
                        help="singular vector scan at one degree")
    ps.add_argument("--degree", type=int, default=2)
    ps.add_argument("--weight", type=str, default=None,
                    help="restrict to one weight, comma-separated 6 integers")
    ps.add_argument("--force", action="store_true")
    pi = sub.add_parser("invariant", parents=[common],
                        help="cubic invariant and dual family")
    pi.add_argument("--verify", action="store_true",
                    help="run the full operator lemma suite")
    pi.add_argument("--dump", choices=("eta", "zeta"), default=None)
    pd = sub.add_parser("decompose", parents=[common],
                        help="kernel decomposition at one degree")
    pd.add_argument("--degree", type=int, default=DEFAULTS.decompose_degree)
    pd.add_argument("--materialize", action="store_true")
    pd.add_argument("--force", action="store_true")
    pid = sub.add_parser("identity", parents=[common],
                         help="dimension series identity")
    pid.add_argument("--max-degree", type=int, default=DEFAULTS.identity_degree)
    pc = sub.add_parser("closure", parents=[common],
                        help="lowering closures of highest vectors")
    pc.add_argument("--force", action="store_true",
                    help="include the 650-dimensional closure")
    pa = sub.add_parser("all", parents=[common],
                        help="full verification suite")
    pa.add_argument("--force", action="store_true",
                    help="include opt-in heavy checks")
    pa.add_argument("--max-degree", type=int, default=DEFAULTS.identity_degree,
                    help="series identity bound")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    # shared flags use SUPPRESS defaults, so absent ones need fallbacks
    as_json = getattr(args, "json", False) and not getattr(args, "text", False)
    timings = getattr(args, "timings", False)
    cfg = replace(DEFAULTS, seed=getattr(args, "seed", DEFAULTS.seed))
    a = Assembler()
    if args.command == "roots":
        payload = cmd_roots(cfg, a)
    elif args.command == "rep":
        payload = cmd_rep(cfg, a)
    elif args.command == "singular":
        if args.degree < 0:
            print("degree must be nonnegative", file=sys.stderr)
            return 2
        if args.degree > cfg.singular_degree and not args.force:
            print(f"degree {args.degree} exceeds the cost guard "
                  f"{cfg.singular_degree}; pass --force to run", file=sys.stderr)
            return 2
        weight = None
        if args.weight is not None:
            parts = args.weight.split(",")
            if len(parts) != 6:
                print("weight must have 6 comma-separated integers",
                      file=sys.stderr)
                return 2
            weight = tuple(int(x) for x in parts)
        payload = cmd_singular(cfg, a, args.degree, weight)
    elif args.command == "invariant":
        payload = cmd_invariant(cfg, a, args.verify, args.dump)
    elif args.command == "decompose":
        if args.degree < 0:
            print("degree must be nonnegative", file=sys.stderr)
            return 2
        if args.degree > cfg.decompose_guard and not args.force:
            print(f"degree {args.degree} exceeds the cost guard "
                  f"{cfg.decompose_guard}; pass --force to run", file=sys.stderr)
            return 2
        if args.materialize and args.degree > 4 and not args.force:
            print("materializing above degree 4 needs --force", file=sys.stderr)
            return 2
        payload = cmd_decompose(cfg, a, args.degree, args.materialize)
    elif args.command == "identity":
        if args.max_degree < 0 or (args.max_degree > 12):
            print("max degree must lie in 0..12", file=sys.stderr)
            return 2
        payload = cmd_identity(cfg, a, args.max_degree)
    elif args.command == "closure":
        payload = cmd_closure(cfg, a, args.force)
    else:
        payload = cmd_all(replace(cfg, identity_degree=args.max_degree),
                          a, args.force)
    emit(args.command, cfg, a.rows, payload, as_json, timings)
    return 1 if any(r.status == FAIL for r in a.rows) else 0


if __name__ == "__main__":
    sys.exit(main())
