"""Bounded-variable primal simplex on a dense tableau (numba kernel).

Problem form::

    minimize  c @ x
    s.t.      A[:n_eq] @ x == b[:n_eq]
              A[n_eq:] @ x <= b[n_eq:]
              lb <= x <= ub          (lb finite, ub may be +inf)

Two phases with one artificial column per row that cannot start on a slack.
Entering variable: Bland's rule (lowest eligible index).  Ratio-test ties
go to the lowest variable index.  The returned point is a basic solution,
recomputed from the final basis with a dense solve.
"""

from __future__ import annotations

import numpy as np
from numba import njit

OPTIMAL = 0
INFEASIBLE = 1
UNBOUNDED = 2
ITERATION_LIMIT = 3

AT_BASIS = 0
AT_LOWER = 1
AT_UPPER = 2


@njit(cache=True)
def _pivot(T, r, j):
    m, N = T.shape
    piv = T[r, j]
    for q in range(N):
        T[r, q] /= piv
    for i in range(m):
        if i == r:
            continue
        f = T[i, j]
        if f != 0.0:
            for q in range(N):
                T[i, q] -= f * T[r, q]
            T[i, j] = 0.0
    T[r, j] = 1.0


@njit(cache=True)
def _run(T, cost, basis, state, xval, lb, ub, max_iter, dtol, ptol):
    """Primal simplex iterations.  Returns (status, iterations)."""
    m, N = T.shape
    d = np.empty(N)
    it = 0
    while it < max_iter:
        # reduced costs
        for q in range(N):
            d[q] = cost[q]
        for i in range(m):
            cb = cost[basis[i]]
            if cb != 0.0:
                for q in range(N):
                    d[q] -= cb * T[i, q]
        enter = -1
        s = 0.0
        for q in range(N):
            st = state[q]
            if st == AT_LOWER:
                if d[q] < -dtol and ub[q] > lb[q]:
                    enter = q
                    s = 1.0
                    break
            elif st == AT_UPPER:
                if d[q] > dtol:
                    enter = q
                    s = -1.0
                    break
        if enter < 0:
            return OPTIMAL, it

        t_best = ub[enter] - lb[enter]
        leave = -1
        leave_var = enter
        for i in range(m):
            a = s * T[i, enter]
            bv = basis[i]
            if a > ptol:
                lim = (xval[bv] - lb[bv]) / a
            elif a < -ptol and ub[bv] < np.inf:
                lim = (ub[bv] - xval[bv]) / (-a)
            else:
                continue
            if lim < 0.0:
                lim = 0.0
            if lim < t_best - 1e-12 or (lim <= t_best + 1e-12 and bv < leave_var):
                t_best = lim
                leave = i
                leave_var = bv
        if t_best == np.inf:
            return UNBOUNDED, it

        for i in range(m):
            xval[basis[i]] -= s * t_best * T[i, enter]
        if leave < 0:
            if s > 0:
                state[enter] = AT_UPPER
                xval[enter] = ub[enter]
            else:
                state[enter] = AT_LOWER
                xval[enter] = lb[enter]
        else:
            xval[enter] += s * t_best
            out = basis[leave]
            if s * T[leave, enter] > 0:
                state[out] = AT_LOWER
                xval[out] = lb[out]
            else:
                state[out] = AT_UPPER
                xval[out] = ub[out]
            _pivot(T, leave, enter)
            basis[leave] = enter
            state[enter] = AT_BASIS
        it += 1
    return ITERATION_LIMIT, it


@njit(cache=True)
def _recompute(Af, b, basis, state, xval):
    m, N = Af.shape
    rhs = b.copy()
    for q in range(N):
        if state[q] != AT_BASIS and xval[q] != 0.0:
            for i in range(m):
                rhs[i] -= Af[i, q] * xval[q]
    B = np.empty((m, m))
    for i in range(m):
        for r in range(m):
            B[r, i] = Af[r, basis[i]]
    xb = np.linalg.solve(B, rhs)
    for i in range(m):
        xval[basis[i]] = xb[i]


@njit(cache=True)
def simplex_solve(A, b, n_eq, c, lb, ub, max_iter, feas_tol):
    """Solve the LP; returns (status, x, iterations)."""
    m, nv = A.shape
    n_le = m - n_eq
    N = nv + n_le + m
    art0 = nv + n_le
    x_out = np.empty(nv)
    if m == 0:
        for q in range(nv):
            if c[q] < 0.0:
                if ub[q] == np.inf:
                    return UNBOUNDED, x_out, 0
                x_out[q] = ub[q]
            else:
                x_out[q] = lb[q]
        return OPTIMAL, x_out, 0

    Af = np.zeros((m, N))
    Af[:, :nv] = A
    for s_ in range(n_le):
        Af[n_eq + s_, nv + s_] = 1.0
    lbf = np.zeros(N)
    ubf = np.zeros(N)
    lbf[:nv] = lb
    ubf[:nv] = ub
    for q in range(nv, art0):
        ubf[q] = np.inf
    xval = np.zeros(N)
    xval[:nv] = lb
    state = np.full(N, AT_LOWER, dtype=np.int64)
    basis = np.empty(m, dtype=np.int64)

    r = b.copy()
    for i in range(m):
        for q in range(nv):
            if A[i, q] != 0.0:
                r[i] -= A[i, q] * lb[q]
    sign = np.ones(m)
    has_art = False
    for i in range(m):
        if i >= n_eq and r[i] >= 0.0:
            basis[i] = nv + (i - n_eq)
            xval[basis[i]] = r[i]
        else:
            if r[i] < 0.0:
                sign[i] = -1.0
            basis[i] = art0 + i
            ubf[art0 + i] = np.inf
            xval[art0 + i] = abs(r[i])
            has_art = True
        Af[i, art0 + i] = sign[i]
        state[basis[i]] = AT_BASIS

    T = Af.copy()
    for i in range(m):
        if sign[i] < 0.0:
            for q in range(N):
                T[i, q] = -T[i, q]

    total_it = 0
    if has_art:
        cost1 = np.zeros(N)
        for i in range(m):
            if ubf[art0 + i] > 0.0:
                cost1[art0 + i] = 1.0
        status, it = _run(T, cost1, basis, state, xval, lbf, ubf, max_iter, 1e-11, 1e-9)
        total_it += it
        if status != OPTIMAL:
            return status, x_out, total_it
        _recompute(Af, b, basis, state, xval)
        infeas = 0.0
        for i in range(m):
            infeas += abs(xval[art0 + i])
        if infeas > feas_tol:
            return INFEASIBLE, x_out, total_it
        for i in range(m):
            q = art0 + i
            ubf[q] = 0.0
            if state[q] != AT_BASIS:
                state[q] = AT_LOWER
                xval[q] = 0.0

    cost2 = np.zeros(N)
    cost2[:nv] = c
    status, it = _run(T, cost2, basis, state, xval, lbf, ubf, max_iter, 1e-11, 1e-9)
    total_it += it
    if status != OPTIMAL:
        return status, x_out, total_it
    _recompute(Af, b, basis, state, xval)
    for q in range(nv):
        x_out[q] = xval[q]
    return OPTIMAL, x_out, total_it
