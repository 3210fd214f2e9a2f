"""Decoders that combine several LP runs: matrix diversity, alternative-matrix
ALP, and depth-limited branch and bound.  Also the matrix adaptation step."""

from __future__ import annotations

import time
from typing import Sequence

import numpy as np

from .. import gf2
from ..automorphisms import AutomorphismSampler, Permutation, apply_to_columns, apply_to_vector, compose_all
from ..codes import LinearCode
from .adaptive import (
    AdaptiveResult,
    ConstraintPool,
    adaptive_loop,
    alp_problem,
    as_cost,
    branching_index,
    run_nsa,
)
from .outcome import DecodeOutcome, DecodeStats, DecodeTrace

_SAMPLERS: dict[bytes, AutomorphismSampler] = {}


def sampler_for(code: LinearCode) -> AutomorphismSampler:
    """Validated sampler for ``code``, cached by matrix contents."""
    key = code.H.tobytes() + bytes(str(code.H.shape), "ascii")
    if key not in _SAMPLERS:
        _SAMPLERS[key] = AutomorphismSampler.for_code(code)
    return _SAMPLERS[key]


def adapt_matrix(code: LinearCode, c) -> LinearCode:
    """Make the least reliable columns unit vectors by Gaussian elimination.

    Columns are ranked by |c| ascending (ties to the lower index) and used as
    the pivot order; all-zero rows left by the reduction are dropped.
    """
    return LinearCode(adapted_matrix(code.H, c), name=code.name)


def adapted_matrix(H, c) -> np.ndarray:
    order = np.argsort(np.abs(as_cost(c)), kind="stable")
    reduced, _ = gf2.row_reduce(H, order)
    return reduced[reduced.any(axis=1)]


def decode_diversity(
    code: LinearCode,
    c,
    r,
    N: int,
    rng: np.random.Generator,
    *,
    H=None,
    sampler: AutomorphismSampler | None = None,
    prune_inactive: bool = False,
    max_iterations: int = 200,
    distance_space: str = "bit",
    trace: DecodeTrace | None = None,
) -> DecodeOutcome:
    """NSA under up to ``N`` automorphism-permuted views of the problem.

    The matrix stays fixed while the cost vector is moved by inverse
    permutations; an integral result is pushed back through the composed
    permutations.  If every attempt is fractional, the mapped-back candidate
    nearest to the received word wins (no certificate).
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    t0 = time.perf_counter()
    H = code.H if H is None else np.asarray(H)
    sampler = sampler_for(code) if sampler is None and N > 1 else sampler
    cost = as_cost(c)
    received = np.asarray(r, dtype=np.float64).reshape(-1)
    stats = DecodeStats()
    perms: list[Permutation] = []
    candidates: list[tuple[AdaptiveResult, int]] = []
    c_cur = cost.copy()
    for attempt in range(N):
        res = run_nsa(H, c_cur, prune=prune_inactive, max_iterations=max_iterations, stats=stats, trace=trace)
        if res.certified:
            word = apply_to_vector(compose_all(perms, code.n), res.x)
            stats.wall_time = time.perf_counter() - t0
            return DecodeOutcome(word, True, float(cost @ word), stats)
        candidates.append((res, len(perms)))
        if attempt == N - 1:
            break
        pi = sampler.sample(rng)
        perms.append(pi)
        c_cur = apply_to_vector(pi.inverse(), c_cur)

    mapped = [apply_to_vector(compose_all(perms[:used], code.n), res.x) for res, used in candidates]
    best_word = mapped[nearest_candidate(mapped, received, distance_space)]
    stats.wall_time = time.perf_counter() - t0
    return DecodeOutcome(best_word, False, float(cost @ best_word), stats)


def nearest_candidate(words: Sequence[np.ndarray], r, distance_space: str = "bit") -> int:
    """Index of the word closest to ``r`` in Euclidean distance (first on ties).

    ``"bit"`` measures x in [0,1]^n against r as is; ``"symbol"`` maps
    x to 2x - 1 first.
    """
    if not words:
        raise ValueError("no candidates")
    r = np.asarray(r, dtype=np.float64)
    dists = []
    for w in words:
        point = np.asarray(w, dtype=np.float64)
        if distance_space == "symbol":
            point = 2.0 * point - 1.0
        dists.append(float(np.linalg.norm(point - r)))
    return int(np.argmin(dists))


def decode_alp_perm(
    code: LinearCode,
    c,
    N: int,
    rng: np.random.Generator,
    *,
    H=None,
    sampler: AutomorphismSampler | None = None,
    prune_inactive: bool = False,
    max_iterations: int = 200,
    trace: DecodeTrace | None = None,
) -> DecodeOutcome:
    """ALP that swaps in an automorphism-permuted ``H`` after each fractional
    attempt while keeping every constraint generated so far."""
    if N < 1:
        raise ValueError("N must be >= 1")
    t0 = time.perf_counter()
    H = code.H if H is None else np.asarray(H)
    sampler = sampler_for(code) if sampler is None and N > 1 else sampler
    cost = as_cost(c)
    stats = DecodeStats()
    pool = ConstraintPool(alp_problem(code.n, cost))
    res = None
    for attempt in range(N):
        res = adaptive_loop(H, pool, use_rpc=False, prune=prune_inactive, max_iterations=max_iterations, stats=stats, trace=trace)
        if res.certified or attempt == N - 1:
            break
        H = apply_to_columns(sampler.sample(rng), H)
    stats.wall_time = time.perf_counter() - t0
    word = res.x.astype(np.float64)
    return DecodeOutcome(word, res.certified, float(cost @ word), stats)


def decode_bb(
    code: LinearCode,
    c,
    D_p: int,
    *,
    H=None,
    prune_inactive: bool = False,
    max_iterations: int = 200,
    trace: DecodeTrace | None = None,
) -> DecodeOutcome:
    """Depth-first branch and bound over NSA subproblems.

    Each node re-solves NSA from the equality rows plus its ancestors' bit
    fixes; it inherits no cuts.  The branching bit is the fractional one
    with the smallest |c|, zero child first.  Nodes are pruned when
    infeasible, when integral (candidate incumbent), or when their LP bound
    is not below the incumbent cost.  A node deeper than ``D_p`` is not
    solved and marks the search as truncated.
    """
    if D_p < 0:
        raise ValueError("D_p must be >= 0")
    t0 = time.perf_counter()
    H = code.H if H is None else np.asarray(H)
    cost = as_cost(c)
    stats = DecodeStats()
    root = run_nsa(H, cost, prune=prune_inactive, max_iterations=max_iterations, stats=stats, trace=trace)
    if root.certified:
        stats.wall_time = time.perf_counter() - t0
        return DecodeOutcome(root.x, True, float(cost @ root.x), stats)

    best = {"bound": np.inf, "word": None}

    def visit(fixes: list[tuple[int, int]]) -> None:
        if len(fixes) > D_p:
            stats.depth_limit_hit = True
            return
        res = run_nsa(H, cost, fixes, prune=prune_inactive, max_iterations=max_iterations, stats=stats, trace=trace)
        stats.bb_nodes += 1
        if res.status == "infeasible":
            stats.pruned_infeasible += 1
            return
        if res.certified:
            stats.pruned_integral += 1
            if res.objective < best["bound"]:
                best["bound"] = res.objective
                best["word"] = res.x
            return
        if res.objective >= best["bound"]:
            stats.pruned_bound += 1
            return
        j = branching_index(res.x, cost, [b for b, _ in fixes])
        visit(fixes + [(j, 0)])
        visit(fixes + [(j, 1)])

    if root.status != "infeasible":
        i = branching_index(root.x, cost)
        visit([(i, 0)])
        visit([(i, 1)])

    stats.wall_time = time.perf_counter() - t0
    if best["word"] is None:
        return DecodeOutcome(root.x, False, float(cost @ root.x), stats)
    word = best["word"].astype(np.float64)
    return DecodeOutcome(word, not stats.depth_limit_hit, float(cost @ word), stats)


def permute_back(x, perms: Sequence[Permutation], n: int) -> np.ndarray:
    return apply_to_vector(compose_all(perms, n), x)
