"""Valid cuts for LP decoding: forbidden-set inequalities, redundant parity
checks found by Gaussian elimination, and inactive-constraint disposal.

A forbidden-set (FS) cut for a dual word with support N and odd subset S is

    sum_{i in N \\ S} x_i + sum_{i in S} (1 - x_i) >= 1,

stored in <=-form as ``sum_S x_i - sum_{N \\ S} x_i <= |S| - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import gf2
from .errors import DegreeTooLarge, EvenSet
from .lp import FS, LESS_EQUAL, RPC, LpConstraint, LpProblem, LpSolution

VIOLATION_TOL = 1e-9
INACTIVE_SLACK = 1e-7
MAX_FULL_DEGREE = 16


@dataclass(frozen=True, eq=False)
class FsCut:
    source_row: np.ndarray
    odd_set: tuple

    def __post_init__(self):
        row = np.asarray(self.source_row, dtype=np.uint8).reshape(-1)
        object.__setattr__(self, "source_row", row)
        S = tuple(sorted(int(i) for i in self.odd_set))
        object.__setattr__(self, "odd_set", S)
        if len(S) % 2 == 0:
            raise EvenSet(f"odd set has even size {len(S)}")
        if any(row[i] != 1 for i in S):
            raise ValueError("odd set is not inside the row support")

    @property
    def support(self) -> np.ndarray:
        return np.flatnonzero(self.source_row)

    def lhs(self, x) -> float:
        """Left-hand side of the >=-form inequality at ``x``."""
        x = np.asarray(x, dtype=np.float64)
        supp = self.support
        in_s = np.zeros(self.source_row.size, dtype=bool)
        in_s[list(self.odd_set)] = True
        return float(np.sum(1.0 - x[supp[in_s[supp]]]) + np.sum(x[supp[~in_s[supp]]]))

    def __eq__(self, other):
        return isinstance(other, FsCut) and self.odd_set == other.odd_set and np.array_equal(self.source_row, other.source_row)

    def __hash__(self):
        return hash((self.source_row.tobytes(), self.odd_set))


def fs_to_lp(cut: FsCut, origin: str = FS) -> LpConstraint:
    S = set(cut.odd_set)
    if len(S) % 2 == 0:
        raise EvenSet(f"odd set has even size {len(S)}")
    coeffs = {int(i): (1.0 if int(i) in S else -1.0) for i in cut.support}
    return LpConstraint(coeffs, float(len(S) - 1), LESS_EQUAL, origin, (cut.source_row.copy(), cut.odd_set))


def find_fs_cut(row, x_star) -> FsCut | None:
    """Most violated FS inequality of one dual word at ``x_star``, or None.

    Start from V = support bits above 1/2.  If |V| is even, either drop the
    member or add the non-member closest to 1/2, whichever costs less
    (ties: drop, then lowest index).
    """
    row = np.asarray(row, dtype=np.uint8).reshape(-1)
    x = np.asarray(x_star, dtype=np.float64).reshape(-1)
    supp = np.flatnonzero(row)
    if supp.size == 0:
        raise ValueError("row must be nonzero")
    xs = x[supp]
    in_v = xs > 0.5
    # cost of each position: 1 - x if in S, x otherwise
    lhs = float(np.sum(np.where(in_v, 1.0 - xs, xs)))
    if in_v.sum() % 2 == 0:
        best_delta = np.inf
        best_pos = -1
        members = np.flatnonzero(in_v)
        if members.size:
            deltas = 2.0 * xs[members] - 1.0
            p = int(np.argmin(deltas))
            best_delta, best_pos = float(deltas[p]), int(members[p])
        others = np.flatnonzero(~in_v)
        if others.size:
            deltas = 1.0 - 2.0 * xs[others]
            p = int(np.argmin(deltas))
            if deltas[p] < best_delta:
                best_delta, best_pos = float(deltas[p]), int(others[p])
        in_v[best_pos] = ~in_v[best_pos]
        lhs += best_delta
    if lhs < 1.0 - VIOLATION_TOL:
        return FsCut(row, tuple(int(i) for i in supp[in_v]))
    return None


def find_all_fs_cuts(H, x_star) -> list[FsCut]:
    """At most one (the most violated) cut per nonzero row, top to bottom."""
    cuts = []
    for row in np.asarray(H):
        if not row.any():
            continue
        cut = find_fs_cut(row, x_star)
        if cut is not None:
            cuts.append(cut)
    return cuts


def fractional_indices(x_star, tol: float = 1e-6) -> np.ndarray:
    x = np.asarray(x_star, dtype=np.float64)
    return np.flatnonzero(np.minimum(np.abs(x), np.abs(1.0 - x)) > tol)


def generate_rpc_cuts(H, x_star, tol: float = 1e-6) -> list[FsCut]:
    """Cuts from redundant parity checks with exactly one fractional index.

    Gaussian elimination pivots on the fractional coordinates, nearest 1/2
    first; reduced rows touching a single fractional position are checked
    for a violated FS inequality.  Every reduced row lies in the row space
    of ``H``, so the cuts are valid for the code.
    """
    x = np.asarray(x_star, dtype=np.float64)
    frac = fractional_indices(x, tol)
    if frac.size == 0:
        return []
    order = sorted(frac.tolist(), key=lambda i: (abs(x[i] - 0.5), i))
    reduced, _ = gf2.row_reduce(H, order)
    is_frac = np.zeros(x.size, dtype=bool)
    is_frac[frac] = True
    seen = set()
    cuts = []
    for row in reduced:
        if not row.any() or int(row[is_frac].sum()) != 1:
            continue
        key = row.tobytes()
        if key in seen:
            continue
        seen.add(key)
        cut = find_fs_cut(row, x)
        if cut is not None:
            cuts.append(cut)
    return cuts


def enumerate_full_fs(H, origin: str = FS) -> list[LpConstraint]:
    """Every FS inequality of every row: sum over rows of 2^(deg - 1)."""
    H = np.asarray(H)
    degrees = H.sum(axis=1)
    if degrees.size and degrees.max() > MAX_FULL_DEGREE:
        raise DegreeTooLarge(f"row degree {int(degrees.max())} exceeds {MAX_FULL_DEGREE}")
    out = []
    for row in H:
        supp = np.flatnonzero(row)
        for size in range(1, supp.size + 1, 2):
            for S in combinations(supp.tolist(), size):
                out.append(fs_to_lp(FsCut(row, S), origin))
    return out


def fs_count(H) -> int:
    return sum(2 ** (int(d) - 1) for d in np.asarray(H).sum(axis=1) if d > 0)


def prune_inactive(problem: LpProblem, solution: LpSolution, threshold: float = INACTIVE_SLACK) -> list[int]:
    """Drop FS/RPC constraints whose slack exceeds ``threshold``.

    Equalities and branching constraints are never touched.
    """
    removed = [
        cid
        for cid, con in problem.constraints.items()
        if con.origin in (FS, RPC) and con.sense == LESS_EQUAL and solution.slack.get(cid, 0.0) > threshold
    ]
    if removed:
        problem.remove_constraints(removed, pruning=True)
    return removed


def cut_is_valid(con: LpConstraint, codewords: np.ndarray) -> bool:
    """Exhaustive validity check against an explicit codeword list."""
    lhs = codewords[:, con._idx].astype(np.float64) @ con._val
    if con.sense == LESS_EQUAL:
        return bool(np.all(lhs <= con.rhs + 1e-12))
    return bool(np.all(np.abs(lhs - con.rhs) <= 1e-12))


def cuts_to_lp(cuts: Sequence[FsCut], origin: str) -> list[LpConstraint]:
    return [fs_to_lp(c, origin) for c in cuts]


def odd_subsets(support: Iterable[int]):
    supp = list(support)
    for size in range(1, len(supp) + 1, 2):
        yield from combinations(supp, size)
