"""Decoder results, statistics, traces and configuration."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigError
from ..lp import LpConstraint, LpProblem, LpSolution

VARIANTS = ("ml", "static_lp", "alp", "nsa", "diversity", "alp_perm", "bb")


@dataclass
class DecodeStats:
    lp_solves: int = 0
    cuts_fs: int = 0
    cuts_rpc: int = 0
    iterations: int = 0
    bb_nodes: int = 0
    pruned_infeasible: int = 0
    pruned_bound: int = 0
    pruned_integral: int = 0
    depth_limit_hit: bool = False
    iteration_limit_hit: bool = False
    constraints_removed: int = 0
    nsa_calls: int = 0
    wall_time: float = 0.0


@dataclass
class IterationRecord:
    objective: float
    x: np.ndarray
    cuts_added: int = 0
    removed: int = 0


@dataclass
class DecodeTrace:
    """Optional per-iteration record of an adaptive decode.

    ``runs`` holds one list per adaptive LP loop (one per NSA/ALP call).
    ``cuts`` collects every cut handed to an LP.  With ``capture_states``
    a copy of each solved problem is kept next to its solution.
    """

    capture_states: bool = False
    runs: list = field(default_factory=list)
    cuts: list = field(default_factory=list)
    snapshots: list = field(default_factory=list)

    def new_run(self) -> list:
        self.runs.append([])
        return self.runs[-1]

    def snapshot(self, problem: LpProblem, solution: LpSolution) -> None:
        if self.capture_states:
            self.snapshots.append((problem.copy(), solution))

    def add_cuts(self, cuts: list[LpConstraint]) -> None:
        self.cuts.extend(cuts)


@dataclass
class DecodeOutcome:
    word: np.ndarray
    ml_certificate: bool
    objective: float
    stats: DecodeStats = field(default_factory=DecodeStats)

    @property
    def integral(self) -> bool:
        w = self.word
        return bool(np.all(np.minimum(np.abs(w), np.abs(1.0 - w)) <= 1e-6))

    def hard_word(self) -> np.ndarray:
        """Word rounded to bits (fractional entries round at 1/2)."""
        return (np.asarray(self.word) > 0.5).astype(np.uint8)


@dataclass(frozen=True)
class DecoderConfig:
    """What to run: ``variant`` plus its knobs.

    ``N`` applies to ``diversity`` and ``alp_perm``; ``depth`` to ``bb``
    (``None`` means the per-code preset default).  ``distance_space`` sets
    how the diversity decoder's fallback measures distance to the received
    word: ``"bit"`` compares x in [0,1]^n directly, ``"symbol"``
    compares 2x - 1.
    """

    variant: str = "nsa"
    N: int = 5
    depth: int | None = None
    adapt_matrix: bool = False
    prune_inactive: bool = False
    max_iterations: int = 200
    distance_space: str = "bit"
    label: str | None = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ConfigError(f"unknown decoder variant {self.variant!r}")
        if self.N < 1:
            raise ConfigError("N must be >= 1")
        if self.depth is not None and self.depth < 0:
            raise ConfigError("depth must be >= 0")
        if self.distance_space not in ("bit", "symbol"):
            raise ConfigError("distance_space must be 'bit' or 'symbol'")
        if self.max_iterations < 1:
            raise ConfigError("max_iterations must be >= 1")

    @property
    def name(self) -> str:
        if self.label:
            return self.label
        parts = [self.variant]
        if self.variant in ("diversity", "alp_perm"):
            parts.append(f"N{self.N}")
        if self.variant == "bb":
            parts.append(f"D{self.depth}")
        if self.adapt_matrix:
            parts.append("adapt")
        if self.prune_inactive:
            parts.append("prune")
        return "-".join(parts)
