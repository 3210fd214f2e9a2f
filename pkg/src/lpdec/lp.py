"""Linear-program data model and the vertex-producing solver front end."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

import numpy as np

from ._simplex import INFEASIBLE, ITERATION_LIMIT, OPTIMAL, UNBOUNDED, simplex_solve
from .errors import NumericalFailure, RemovalForbidden, Unbounded, UnknownConstraintId

FEAS_TOL = 1e-9
INTEGRALITY_TOL = 1e-6

EQUAL = "equal"
LESS_EQUAL = "less_equal"

# constraint origins
EQUALITY3 = "equality3"
FS = "fs"
RPC = "rpc"
BRANCH = "branch"
OTHER = "other"
PROTECTED_ORIGINS = frozenset({EQUALITY3, BRANCH})

_ids = itertools.count(1)


@dataclass(frozen=True)
class LpVariable:
    index: int
    lower: float = 0.0
    upper: float = 1.0
    kind: str = "bit"

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"variable {self.index}: lower bound exceeds upper bound")
        if not np.isfinite(self.lower):
            raise ValueError(f"variable {self.index}: lower bound must be finite")
        if self.kind == "bit" and not (0.0 <= self.lower and self.upper <= 1.0):
            raise ValueError(f"bit variable {self.index} must have bounds inside [0, 1]")


@dataclass(frozen=True, eq=False)
class LpConstraint:
    """``sum(coef * x) <sense> rhs`` with origin metadata.

    ``detail`` carries origin specifics: the check row for equalities, the
    ``(source_row, odd_set)`` pair for FS/RPC cuts, ``(bit, value)`` for
    branching constraints.
    """

    coefficients: Mapping[int, float]
    rhs: float
    sense: str = LESS_EQUAL
    origin: str = OTHER
    detail: object = None
    id: int = field(default_factory=lambda: next(_ids))

    def __post_init__(self):
        if self.sense not in (EQUAL, LESS_EQUAL):
            raise ValueError(f"unknown sense {self.sense!r}")
        items = sorted((int(k), float(v)) for k, v in dict(self.coefficients).items() if v != 0)
        if not items:
            raise ValueError("constraint needs at least one nonzero coefficient")
        object.__setattr__(self, "coefficients", dict(items))
        object.__setattr__(self, "_idx", np.array([k for k, _ in items], dtype=np.int64))
        object.__setattr__(self, "_val", np.array([v for _, v in items], dtype=np.float64))
        object.__setattr__(self, "key", (self.sense, tuple(items), float(self.rhs)))

    def lhs(self, x) -> float:
        return float(np.dot(self._val, np.asarray(x, dtype=np.float64)[self._idx]))

    def violation(self, x) -> float:
        """Positive when ``x`` violates the constraint."""
        v = self.lhs(x) - self.rhs
        return abs(v) if self.sense == EQUAL else v


@dataclass(frozen=True, eq=False)
class LpSolution:
    status: str
    values: np.ndarray
    objective_value: float
    slack: dict
    is_vertex: bool
    bit_index: np.ndarray
    pivots: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"

    @property
    def bits(self) -> np.ndarray:
        return self.values[self.bit_index]


class LpProblem:
    """Variables with box bounds, a keyed constraint set and a linear objective.

    The objective is minimized.  Constraint ids are unique; adding a
    constraint identical to one already present is a no-op.
    """

    def __init__(self, variables: Iterable[LpVariable], objective, constraints: Iterable[LpConstraint] = ()):
        self.variables = list(variables)
        for i, v in enumerate(self.variables):
            if v.index != i:
                raise ValueError("variable indices must be 0..n-1 in order")
        nv = len(self.variables)
        if isinstance(objective, Mapping):
            obj = np.zeros(nv)
            for k, v in objective.items():
                if not 0 <= k < nv:
                    raise ValueError(f"objective references unknown variable {k}")
                obj[k] = v
        else:
            obj = np.asarray(objective, dtype=np.float64).reshape(-1)
            if obj.size != nv:
                raise ValueError("objective length does not match variable count")
        self.objective = obj
        self.constraints: dict[int, LpConstraint] = {}
        self._keys: dict[tuple, int] = {}
        self.add_constraints(constraints)

    @property
    def num_variables(self) -> int:
        return len(self.variables)

    def copy(self) -> "LpProblem":
        out = LpProblem.__new__(LpProblem)
        out.variables = list(self.variables)
        out.objective = self.objective.copy()
        out.constraints = dict(self.constraints)
        out._keys = dict(self._keys)
        return out

    def add_constraints(self, new: Iterable[LpConstraint]) -> list[int]:
        """Add constraints, skipping exact duplicates; returns the ids added."""
        added = []
        nv = self.num_variables
        for con in new:
            if con.id in self.constraints:
                raise ValueError(f"duplicate constraint id {con.id}")
            if con._idx.size and (con._idx[0] < 0 or con._idx[-1] >= nv):
                raise ValueError("constraint references unknown variable")
            if con.key in self._keys:
                continue
            self.constraints[con.id] = con
            self._keys[con.key] = con.id
            added.append(con.id)
        return added

    def remove_constraints(self, ids: Iterable[int], pruning: bool = False) -> None:
        """Remove constraints by id.

        With ``pruning=True`` (inactive-constraint disposal) equality and
        branching constraints are refused with :class:`RemovalForbidden`.
        """
        ids = list(ids)
        for cid in ids:
            if cid not in self.constraints:
                raise UnknownConstraintId(cid)
            if pruning and self.constraints[cid].origin in PROTECTED_ORIGINS:
                raise RemovalForbidden(f"constraint {cid} ({self.constraints[cid].origin}) is always active")
        for cid in ids:
            con = self.constraints.pop(cid)
            del self._keys[con.key]

    def set_bounds(self, index: int, lower: float, upper: float) -> None:
        self.variables[index] = replace(self.variables[index], lower=lower, upper=upper)

    def constraint_set(self) -> set:
        return {c.key for c in self.constraints.values()}

    def bit_index(self) -> np.ndarray:
        return np.array([v.index for v in self.variables if v.kind == "bit"], dtype=np.int64)

    def arrays(self):
        """Dense ``(A, b, n_eq, ids)`` with equality rows first."""
        cons = list(self.constraints.values())
        eq = [c for c in cons if c.sense == EQUAL]
        le = [c for c in cons if c.sense == LESS_EQUAL]
        ordered = eq + le
        A = np.zeros((len(ordered), self.num_variables))
        b = np.empty(len(ordered))
        for i, c in enumerate(ordered):
            A[i, c._idx] = c._val
            b[i] = c.rhs
        return A, b, len(eq), [c.id for c in ordered]


def add_constraints(problem: LpProblem, new: Iterable[LpConstraint]) -> LpProblem:
    problem.add_constraints(new)
    return problem


def remove_constraints(problem: LpProblem, ids: Iterable[int], pruning: bool = False) -> LpProblem:
    problem.remove_constraints(ids, pruning=pruning)
    return problem


def solve(problem: LpProblem, max_pivots: int = 100_000) -> LpSolution:
    """Solve to an optimal basic (vertex) solution or certify infeasibility."""
    A, b, n_eq, ids = problem.arrays()
    lb = np.array([v.lower for v in problem.variables], dtype=np.float64)
    ub = np.array([v.upper for v in problem.variables], dtype=np.float64)
    c = problem.objective
    status, x, pivots = simplex_solve(A, b, n_eq, c, lb, ub, max_pivots, FEAS_TOL)
    bit_index = problem.bit_index()
    if status == INFEASIBLE:
        return LpSolution("infeasible", np.full(len(lb), np.nan), np.inf, {}, False, bit_index, pivots)
    if status == UNBOUNDED:
        raise Unbounded("LP objective is unbounded")
    if status == ITERATION_LIMIT:
        raise NumericalFailure(f"simplex did not terminate within {max_pivots} pivots")
    assert status == OPTIMAL
    x = np.clip(x, lb, ub)
    lhs = A @ x
    scale = 1.0 + np.abs(b)
    resid = lhs - b
    bad_eq = np.abs(resid[:n_eq]) > FEAS_TOL * scale[:n_eq]
    bad_le = resid[n_eq:] > FEAS_TOL * scale[n_eq:]
    if bad_eq.any() or bad_le.any():
        raise NumericalFailure(f"solution violates constraints by {np.abs(resid).max():.3g}")
    slack = {}
    for i, cid in enumerate(ids):
        slack[cid] = 0.0 if i < n_eq else float(b[i] - lhs[i])
    return LpSolution("optimal", x, float(c @ x), slack, True, bit_index, pivots)


def is_integral(solution: LpSolution, tol: float = INTEGRALITY_TOL) -> bool:
    bits = solution.bits
    return bool(np.all(np.minimum(np.abs(bits), np.abs(1.0 - bits)) <= tol))


def format_lp(problem: LpProblem) -> str:
    """Problem in the common LP text format, for cross-checking elsewhere."""

    def term_list(pairs):
        parts = []
        for k, v in pairs:
            sign = "-" if v < 0 else "+"
            parts.append(f"{sign} {abs(v):.12g} x{k}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text

    lines = ["Minimize", " obj: " + (term_list((k, v) for k, v in enumerate(problem.objective) if v != 0) or "0 x0")]
    lines.append("Subject To")
    for c in problem.constraints.values():
        op = "=" if c.sense == EQUAL else "<="
        lines.append(f" c{c.id}: {term_list(c.coefficients.items())} {op} {c.rhs:.12g}")
    lines.append("Bounds")
    for v in problem.variables:
        up = "+inf" if v.upper == np.inf else f"{v.upper:.12g}"
        lines.append(f" {v.lower:.12g} <= x{v.index} <= {up}")
    lines.append("End")
    return "\n".join(lines) + "\n"
