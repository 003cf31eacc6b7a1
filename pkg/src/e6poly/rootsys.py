"""Root lattice of type E7, its E6 subsystem, and the boundary cocycle.

Vectors are 7-tuples of integers: coordinates with respect to the simple
roots alpha_1..alpha_7, numbered so that the Dynkin diagram has edges
1-3, 3-4, 2-4, 4-5, 5-6, 6-7 (node 2 is the short branch).  The symmetric
bilinear form is the one that gives every root squared length 2.  Roots
are found by an exhaustive scan of the coefficient box |k_i| <= 4, which
is large enough to contain the highest root (2,2,3,4,3,2,1).

The subsystem generated by alpha_1..alpha_6 is of type E6, and the set of
positive roots with k_7 = 1 carries the 27-dimensional basic E6 module.
Their ordering as basis vectors x_1..x_27 is fixed by BAR_BASIS_SUMS.

The sign cocycle F on the lattice is defined by

    F(a, b) = (-1) ** (sum_i a_i*b_i + sum_{i>j} a_i*b_j*(alpha_i, alpha_j))

and supplies the structure constants of the Lie bracket in `liealg`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import int_det

NVARS = 27

CARTAN_E7: tuple[tuple[int, ...], ...] = (
    (2, 0, -1, 0, 0, 0, 0),
    (0, 2, 0, -1, 0, 0, 0),
    (-1, 0, 2, -1, 0, 0, 0),
    (0, -1, -1, 2, -1, 0, 0),
    (0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, -1, 2, -1),
    (0, 0, 0, 0, 0, -1, 2),
)

Vector = tuple[int, ...]

COEFF_BOUND = 4


def bilinear(a: Vector, b: Vector) -> int:
    total = 0
    for i in range(7):
        ai = a[i]
        if ai:
            row = CARTAN_E7[i]
            total += ai * sum(row[j] * b[j] for j in range(7) if b[j])
    return total


def is_root(v: Vector) -> bool:
    return bilinear(v, v) == 2


def alpha(i: int) -> Vector:
    """Simple root alpha_i, 1-based."""
    return tuple(1 if j == i - 1 else 0 for j in range(7))


def srange(lo: int, hi: int) -> Vector:
    """alpha_lo + alpha_{lo+1} + ... + alpha_hi (empty when lo > hi)."""
    return tuple(1 if lo - 1 <= j <= hi - 1 else 0 for j in range(7))


def vadd(*vs: Vector) -> Vector:
    return tuple(sum(col) for col in zip(*vs))


def vneg(v: Vector) -> Vector:
    return tuple(-c for c in v)


def vscale(k: int, v: Vector) -> Vector:
    return tuple(k * c for c in v)


def leading_minors_positive() -> bool:
    m = [list(row) for row in CARTAN_E7]
    return all(int_det([r[: k + 1] for r in m[: k + 1]]) > 0 for k in range(7))


def _scan_norm2(bound: int = COEFF_BOUND) -> list[Vector]:
    width = 2 * bound + 1
    n = width**7
    a = np.array(CARTAN_E7, dtype=np.int32)
    found: list[Vector] = []
    chunk = 1 << 19
    divisors = [width**k for k in range(6, -1, -1)]
    for start in range(0, n, chunk):
        idx = np.arange(start, min(start + chunk, n), dtype=np.int64)
        block = np.empty((idx.size, 7), dtype=np.int32)
        for col, div in enumerate(divisors):
            block[:, col] = (idx // div) % width - bound
        norms = np.einsum("ij,jk,ik->i", block, a, block)
        for row in block[norms == 2]:
            found.append(tuple(int(c) for c in row))
    found.sort()
    return found


def _is_positive_by_sign_pattern(v: Vector) -> bool:
    return all(c >= 0 for c in v) and any(c > 0 for c in v)


def _is_positive_by_first_nonzero(v: Vector) -> bool:
    for c in v:
        if c:
            return c > 0
    return False


@dataclass(frozen=True)
class RootSystem:
    roots: tuple[Vector, ...]
    positive: tuple[Vector, ...]
    e6_roots: tuple[Vector, ...]
    e6_positive: tuple[Vector, ...]
    bar_positive: tuple[Vector, ...]  # k_7 = 1, in x_1..x_27 basis order

    def root_set(self) -> frozenset[Vector]:
        return frozenset(self.roots)


@lru_cache(maxsize=None)
def root_system() -> RootSystem:
    roots = _scan_norm2()
    positive = []
    for v in roots:
        p1 = _is_positive_by_sign_pattern(v)
        p2 = _is_positive_by_first_nonzero(v)
        if p1 != p2:
            raise ValueError(f"positivity conventions disagree on {v}")
        if p1:
            positive.append(v)
    e6_roots = [v for v in roots if v[6] == 0]
    e6_positive = [v for v in positive if v[6] == 0]
    bar = bar_basis()
    bar_from_scan = {v for v in positive if v[6] == 1}
    if set(bar) != bar_from_scan:
        raise ValueError("explicit k_7=1 basis does not match the scanned set")
    return RootSystem(
        roots=tuple(roots),
        positive=tuple(positive),
        e6_roots=tuple(e6_roots),
        e6_positive=tuple(e6_positive),
        bar_positive=bar,
    )


# Basis vectors x_1..x_27: each entry is a list of summands in the
# composite form used to fix the ordering; every sum must land on a
# norm-2 lattice vector with k_7 = 1.
_TWO16 = vscale(2, srange(1, 6))

BAR_BASIS_SUMS: tuple[tuple[Vector, ...], ...] = (
    (alpha(3), vscale(2, alpha(4)), alpha(5), srange(1, 6), srange(1, 7)),  # x1
    (_TWO16, vneg(alpha(1)), alpha(4), vneg(alpha(6)), srange(3, 7)),       # x2
    (_TWO16, vneg(alpha(1)), alpha(4), vneg(alpha(6)), srange(4, 7)),       # x3
    (_TWO16, vneg(alpha(1)), vneg(alpha(6)), srange(4, 7)),                 # x4
    (_TWO16, vneg(alpha(1)), alpha(4), alpha(7)),                           # x5
    (srange(1, 5), srange(3, 6), srange(4, 7)),                             # x6
    (alpha(4), srange(3, 6), srange(1, 7)),                                 # x7
    (_TWO16, vneg(alpha(1)), alpha(4), vneg(alpha(6)), alpha(7)),          # x8
    (srange(3, 6), srange(1, 7)),                                           # x9
    (alpha(4), srange(3, 5), srange(1, 7)),                                 # x10
    (srange(4, 6), srange(1, 7)),                                           # x11
    (srange(3, 5), srange(1, 7)),                                           # x12
    (alpha(3), alpha(4), srange(1, 7)),                                     # x13
    (srange(2, 6), srange(4, 7)),                                           # x14
    (alpha(4), alpha(5), srange(1, 7)),                                     # x15
    (alpha(4), srange(1, 7)),                                               # x16
    (alpha(4), alpha(5), srange(2, 7)),                                     # x17
    (srange(1, 7),),                                                        # x18
    (alpha(4), srange(2, 7)),                                               # x19
    (alpha(1), srange(3, 7)),                                               # x20
    (srange(2, 7),),                                                        # x21
    (alpha(2), srange(4, 7)),                                               # x22
    (srange(3, 7),),                                                        # x23
    (srange(4, 7),),                                                        # x24
    (srange(5, 7),),                                                        # x25
    (alpha(6), alpha(7)),                                                   # x26
    (alpha(7),),                                                            # x27
)


@lru_cache(maxsize=None)
def bar_basis() -> tuple[Vector, ...]:
    out = []
    for n, parts in enumerate(BAR_BASIS_SUMS, start=1):
        v = vadd(*parts)
        if not is_root(v):
            raise ValueError(f"basis expression for x_{n} is not a root: {v}")
        if v[6] != 1:
            raise ValueError(f"basis expression for x_{n} has k_7 != 1: {v}")
        out.append(v)
    if len(set(out)) != NVARS:
        raise ValueError("basis expressions are not distinct")
    return tuple(out)


@lru_cache(maxsize=None)
def bar_index() -> dict[Vector, int]:
    """Map root -> 1-based basis position."""
    return {v: i for i, v in enumerate(bar_basis(), start=1)}


def bar_set_expressions() -> list[tuple[str, Vector, bool]]:
    """The set-level composite expressions for the k_7 = 1 roots.

    Returns (label, normalized vector, is_norm2).  One family member fails
    the norm test; the set of the passing ones must still be the full
    27-element k_7 = 1 set, which `root_system` checks independently.
    """
    base = vadd(_TWO16, vneg(alpha(1)), alpha(4), vneg(alpha(6)))
    out: list[tuple[str, Vector, bool]] = []
    v = vadd(alpha(1), srange(3, 7))
    out.append(("single-1", v, is_root(v)))
    v = vadd(alpha(3), vscale(2, alpha(4)), alpha(5), srange(1, 6), srange(1, 7))
    out.append(("single-2", v, is_root(v)))
    for i in range(1, 7):
        v = vadd(base, srange(i + 1, 7))
        out.append((f"family-a-{i}", v, is_root(v)))
    for i in range(2, 7):
        v = srange(i + 1, 7)
        out.append((f"family-b-{i}", v, is_root(v)))
    for j in range(2, 7):
        v = vadd(srange(2, j), srange(4, 7))
        out.append((f"family-c-{j}", v, is_root(v)))
    for i, j in itertools.combinations(range(2, 7), 2):
        v = vadd(srange(1, i), srange(3, j), srange(4, 7))
        out.append((f"family-d-{i}-{j}", v, is_root(v)))
    return out


def e6_positive_families() -> list[Vector]:
    """The 36 positive E6 roots as four explicit families."""
    out = [vadd(alpha(1), vscale(2, alpha(2)), vscale(2, alpha(3)),
                vscale(3, alpha(4)), vscale(2, alpha(5)), alpha(6))]
    for j in range(2, 7):
        out.append(vadd(alpha(1), srange(3, j)))
    for i, j in itertools.combinations(range(2, 7), 2):
        out.append(srange(i + 1, j))
    for j, k in itertools.combinations(range(2, 7), 2):
        out.append(vadd(srange(2, j), srange(4, k)))
    for i, j, k in itertools.combinations(range(2, 7), 3):
        out.append(vadd(srange(1, i), srange(3, j), srange(4, k)))
    return out


def cocycle_F(a: Vector, b: Vector) -> int:
    exp = sum(a[i] * b[i] for i in range(7))
    for i in range(7):
        ai = a[i]
        if ai:
            row = CARTAN_E7[i]
            exp += ai * sum(row[j] * b[j] for j in range(i))
    return -1 if exp & 1 else 1


@dataclass(frozen=True)
class CocycleReport:
    ok: bool
    pairs_checked: int
    triples_checked: int
    failures: tuple[str, ...]


def check_cocycle_laws(seed: int = 20240823, n_random: int = 1000) -> CocycleReport:
    """Exercise the defining identities of the cocycle.

    Pair sweep: all pairs of positive E6 roots, plus `n_random` seeded
    lattice pairs.  Checked per pair: F(a,b)F(b,a) = (-1)^(a,b), and for
    root pairs whose sum is a root, F(a,b) = -F(b,a).  Biadditivity in both
    arguments is checked on seeded lattice triples and on all simple-root
    triples.  F(a,a) = (-1)^((a,a)/2) is checked on every root.
    """
    rs = root_system()
    rset = rs.root_set()
    fails: list[str] = []
    pairs = 0

    def check_pair(a: Vector, b: Vector) -> None:
        nonlocal pairs
        pairs += 1
        if cocycle_F(a, b) * cocycle_F(b, a) != (-1) ** (bilinear(a, b) & 1):
            fails.append(f"symmetry law at {a}, {b}")
        if a in rset and b in rset and vadd(a, b) in rset:
            if cocycle_F(a, b) != -cocycle_F(b, a):
                fails.append(f"antisymmetry on root sum at {a}, {b}")

    for a in rs.e6_positive:
        for b in rs.e6_positive:
            check_pair(a, b)

    rng = random.Random(seed)

    def rand_vec() -> Vector:
        return tuple(rng.randint(-COEFF_BOUND, COEFF_BOUND) for _ in range(7))

    for _ in range(n_random):
        check_pair(rand_vec(), rand_vec())

    triples = 0

    def check_triple(a: Vector, b: Vector, c: Vector) -> None:
        nonlocal triples
        triples += 1
        if cocycle_F(vadd(a, b), c) != cocycle_F(a, c) * cocycle_F(b, c):
            fails.append(f"additivity (first slot) at {a}, {b}, {c}")
        if cocycle_F(a, vadd(b, c)) != cocycle_F(a, b) * cocycle_F(a, c):
            fails.append(f"additivity (second slot) at {a}, {b}, {c}")

    for _ in range(n_random):
        check_triple(rand_vec(), rand_vec(), rand_vec())
    for i, j, k in itertools.product(range(1, 8), repeat=3):
        check_triple(alpha(i), alpha(j), alpha(k))

    for r in rs.roots:
        pairs += 1
        if cocycle_F(r, r) != (-1) ** ((bilinear(r, r) // 2) & 1):
            fails.append(f"diagonal law at {r}")

    return CocycleReport(
        ok=not fails,
        pairs_checked=pairs,
        triples_checked=triples,
        failures=tuple(fails[:10]),
    )
