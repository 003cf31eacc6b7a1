"""Run-wide defaults shared by the CLI and the experiment scripts."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class RunConfig:
    """Cost guards and seeds for the verification pipelines.

    Defaults keep every default-path command interactive-fast; degrees
    past a guard need an explicit force flag at the call site.
    """

    seed: int = 20240823            # cocycle / bracket sampling seed
    cocycle_samples: int = 1000
    singular_degree: int = 5        # singular scan sweep bound
    eigenvalue_degree: int = 8      # m1 + 2*m2 bound for the eigenvalue sweep
    annihilation_degree: int = 6    # m1 + 2*m2 bound for the kill sweep
    cubic_degree: int = 8           # 3*m + m1 + 2*m2 bound for the cubic sweep
    decompose_degree: int = 4       # default kernel decomposition degree
    decompose_guard: int = 5        # highest degree allowed without --force
    identity_degree: int = 10       # series identity bound


DEFAULTS = RunConfig()
