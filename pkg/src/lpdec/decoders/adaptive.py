"""Single-matrix LP decoders: brute-force ML, static full-FS LP, ALP and NSA.

The NSA formulation carries one auxiliary variable per nonzero check row,
``z_j`` in [0, floor(d_j / 2)], tied to the bits by ``H x - 2 z = 0``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .. import gf2
from ..codes import LinearCode, MAX_ENUMERATION_DIM
from ..errors import DimensionTooLarge
from ..lp import (
    EQUAL,
    EQUALITY3,
    FS,
    RPC,
    LpConstraint,
    LpProblem,
    LpVariable,
    is_integral,
    solve,
)
from ..separation import (
    cuts_to_lp,
    enumerate_full_fs,
    find_all_fs_cuts,
    generate_rpc_cuts,
    prune_inactive,
)
from .outcome import DecodeOutcome, DecodeStats, DecodeTrace, IterationRecord


def as_cost(c) -> np.ndarray:
    return np.asarray(getattr(c, "c", c), dtype=np.float64).reshape(-1)


def _is_codeword(H, bits) -> bool:
    return H.shape[0] == 0 or not gf2.syndrome(H, bits).any()


def decode_ml_bruteforce(code: LinearCode, c) -> DecodeOutcome:
    """Exhaustive minimum-cost codeword; ties go to the lexicographically smallest."""
    t0 = time.perf_counter()
    if code.k > MAX_ENUMERATION_DIM:
        raise DimensionTooLarge(f"k = {code.k} exceeds {MAX_ENUMERATION_DIM}")
    cost = as_cost(c)
    words = code.codewords
    costs = words @ cost
    best = costs.min()
    tied = np.flatnonzero(costs == best)
    if tied.size > 1:
        sub = words[tied]
        pick = tied[np.lexsort(sub.T[::-1])[0]]
    else:
        pick = tied[0]
    word = words[pick].astype(np.float64)
    stats = DecodeStats(wall_time=time.perf_counter() - t0)
    return DecodeOutcome(word, True, float(costs[pick]), stats)


@dataclass
class AdaptiveResult:
    """Raw result of one adaptive LP loop."""

    status: str  # "codeword", "fractional", "infeasible", "iteration_limit"
    x: np.ndarray
    objective: float
    iterations: int = 0

    @property
    def certified(self) -> bool:
        return self.status == "codeword"


@dataclass
class ConstraintPool:
    """An LP problem plus bookkeeping for the cuts it has received.

    One pool lives for one decode; sharing it across calls keeps every cut
    generated so far (the alternative-matrix ALP relies on that).
    """

    problem: LpProblem
    added_fs: int = 0
    added_rpc: int = 0
    pruned: int = 0
    history: list = field(default_factory=list)

    def add(self, constraints: list[LpConstraint]) -> list[int]:
        ids = self.problem.add_constraints(constraints)
        for cid in ids:
            if self.problem.constraints[cid].origin == RPC:
                self.added_rpc += 1
            else:
                self.added_fs += 1
        return ids


def alp_problem(n: int, c) -> LpProblem:
    variables = [LpVariable(i, 0.0, 1.0, "bit") for i in range(n)]
    return LpProblem(variables, as_cost(c))


def nsa_problem(H, c, fixes: Sequence[tuple[int, int]] = ()) -> LpProblem:
    """Bits, auxiliaries and the ``H x - 2 z = 0`` rows, with bits fixed by ``fixes``."""
    H = np.asarray(H)
    n = H.shape[1]
    rows = [j for j in range(H.shape[0]) if H[j].any()]
    variables = [LpVariable(i, 0.0, 1.0, "bit") for i in range(n)]
    for t, j in enumerate(rows):
        variables.append(LpVariable(n + t, 0.0, float(int(H[j].sum()) // 2), "aux"))
    objective = np.concatenate([as_cost(c), np.zeros(len(rows))])
    equalities = []
    for t, j in enumerate(rows):
        coeffs = {int(i): 1.0 for i in np.flatnonzero(H[j])}
        coeffs[n + t] = -2.0
        equalities.append(LpConstraint(coeffs, 0.0, EQUAL, EQUALITY3, j))
    problem = LpProblem(variables, objective, equalities)
    seen = set()
    for bit, value in fixes:
        if bit in seen:
            raise ValueError(f"bit {bit} fixed twice")
        seen.add(bit)
        problem.set_bounds(int(bit), float(value), float(value))
    return problem


def adaptive_loop(
    H,
    pool: ConstraintPool,
    *,
    use_rpc: bool,
    prune: bool,
    max_iterations: int,
    stats: DecodeStats,
    trace: DecodeTrace | None = None,
) -> AdaptiveResult:
    """Solve, separate, repeat.

    Stops on an integral codeword, when no FS (and, with ``use_rpc``, no
    RPC) cut is violated, on infeasibility, or after ``max_iterations``
    LP solves.  With ``prune`` every inactive cut is dropped after each
    solve.
    """
    H = np.asarray(H)
    problem = pool.problem
    record = trace.new_run() if trace is not None else None
    x = np.zeros(H.shape[1])
    objective = np.nan
    for it in range(1, max_iterations + 1):
        sol = solve(problem)
        stats.lp_solves += 1
        stats.iterations += 1
        if not sol.optimal:
            return AdaptiveResult("infeasible", np.full(H.shape[1], np.nan), np.inf, it)
        x = sol.bits
        objective = sol.objective_value
        if trace is not None:
            trace.snapshot(problem, sol)
        entry = IterationRecord(objective, x.copy())
        if record is not None:
            record.append(entry)
        if is_integral(sol):
            bits = np.round(x).astype(np.uint8)
            if _is_codeword(H, bits):
                return AdaptiveResult("codeword", bits.astype(np.float64), float(objective), it)
        if prune:
            removed = prune_inactive(problem, sol)
            entry.removed = len(removed)
            stats.constraints_removed += len(removed)
            pool.pruned += len(removed)
        cuts = cuts_to_lp(find_all_fs_cuts(H, x), FS)
        if not cuts and use_rpc:
            cuts = cuts_to_lp(generate_rpc_cuts(H, x), RPC)
        if not cuts:
            return AdaptiveResult("fractional", x, float(objective), it)
        added = pool.add(cuts)
        if trace is not None:
            trace.add_cuts(cuts)
        entry.cuts_added = len(added)
        for cid in added:
            if problem.constraints[cid].origin == RPC:
                stats.cuts_rpc += 1
            else:
                stats.cuts_fs += 1
        if not added:
            return AdaptiveResult("fractional", x, float(objective), it)
    stats.iteration_limit_hit = True
    return AdaptiveResult("iteration_limit", x, float(objective), max_iterations)


def run_nsa(H, c, fixes=(), *, prune=False, max_iterations=200, stats=None, trace=None) -> AdaptiveResult:
    stats = DecodeStats() if stats is None else stats
    stats.nsa_calls += 1
    pool = ConstraintPool(nsa_problem(H, c, fixes))
    return adaptive_loop(H, pool, use_rpc=True, prune=prune, max_iterations=max_iterations, stats=stats, trace=trace)


def _outcome(res: AdaptiveResult, c, stats: DecodeStats, t0: float, certified: bool | None = None) -> DecodeOutcome:
    stats.wall_time = time.perf_counter() - t0
    cert = res.certified if certified is None else certified
    word = res.x.astype(np.float64)
    return DecodeOutcome(word, cert, float(as_cost(c) @ word) if np.all(np.isfinite(word)) else np.inf, stats)


def decode_nsa(
    code: LinearCode | np.ndarray,
    c,
    extra_fixes: Sequence[tuple[int, int]] = (),
    *,
    prune_inactive: bool = False,
    max_iterations: int = 200,
    trace: DecodeTrace | None = None,
) -> DecodeOutcome:
    """Separation decoder over ``H x - 2 z = 0`` with FS then RPC cuts.

    With ``extra_fixes`` the bits are pinned and an infeasible LP yields an
    outcome with ``objective = inf``; the certificate is only granted when
    no bits are fixed.
    """
    t0 = time.perf_counter()
    H = code.H if isinstance(code, LinearCode) else np.asarray(code)
    stats = DecodeStats()
    res = run_nsa(H, c, extra_fixes, prune=prune_inactive, max_iterations=max_iterations, stats=stats, trace=trace)
    return _outcome(res, c, stats, t0, res.certified and not extra_fixes)


def decode_alp(
    code: LinearCode | np.ndarray,
    c,
    pool: ConstraintPool | None = None,
    *,
    prune_inactive: bool = False,
    max_iterations: int = 200,
    trace: DecodeTrace | None = None,
    stats: DecodeStats | None = None,
) -> DecodeOutcome:
    """Adaptive LP over FS inequalities of the rows of ``H`` only."""
    t0 = time.perf_counter()
    H = code.H if isinstance(code, LinearCode) else np.asarray(code)
    stats = DecodeStats() if stats is None else stats
    pool = ConstraintPool(alp_problem(H.shape[1], c)) if pool is None else pool
    res = adaptive_loop(H, pool, use_rpc=False, prune=prune_inactive, max_iterations=max_iterations, stats=stats, trace=trace)
    return _outcome(res, c, stats, t0)


def decode_static_lp(code: LinearCode | np.ndarray, c) -> DecodeOutcome:
    """One LP over the complete FS description of every row."""
    t0 = time.perf_counter()
    H = code.H if isinstance(code, LinearCode) else np.asarray(code)
    problem = alp_problem(H.shape[1], c)
    problem.add_constraints(enumerate_full_fs(H))
    sol = solve(problem)
    stats = DecodeStats(lp_solves=1, iterations=1, wall_time=0.0)
    x = sol.bits
    cert = is_integral(sol)
    if cert:
        x = np.round(x)
    stats.wall_time = time.perf_counter() - t0
    return DecodeOutcome(x.astype(np.float64), cert, float(sol.objective_value), stats)


def branching_index(x, c, fixed=(), tol: float = 1e-6) -> int:
    """Fractional position with the smallest |cost|, lowest index on ties.

    An integral non-codeword (left by an iteration cap) has no fractional
    entry; the least reliable unfixed bit is used instead.
    """
    x = np.asarray(x)
    cand = np.flatnonzero(np.minimum(np.abs(x), np.abs(1.0 - x)) > tol)
    if cand.size == 0:
        taken = {int(b) for b in fixed}
        cand = np.array([i for i in range(x.size) if i not in taken], dtype=np.int64)
    if cand.size == 0:
        raise ValueError("no position left to branch on")
    mags = np.abs(as_cost(c))[cand]
    return int(cand[np.argmin(mags)])
