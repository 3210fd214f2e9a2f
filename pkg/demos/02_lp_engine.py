# %% The simplex engine behind every decoder
import numpy as np

from lpdec.lp import FS, LpConstraint, LpProblem, LpVariable, format_lp, solve

# %% A two-variable problem: minimize -x0 - x1 with three <= rows
cons = [
    LpConstraint({0: 1}, 1.0),
    LpConstraint({1: 1}, 1.0),
    LpConstraint({0: 1, 1: 1}, 3.0, origin=FS),
]
p = LpProblem([LpVariable(i, 0, 10, "aux") for i in range(2)], [-1.0, -1.0], cons)
print(format_lp(p))

sol = solve(p)
print("x =", sol.values, "objective =", sol.objective_value)
print("slacks:", sol.slack)

# %% Box-only problems are separable: x_i = 1 exactly where c_i < 0
c = np.array([0.3, -1.2, 0.0, -0.1])
box = LpProblem([LpVariable(i, 0, 1, "bit") for i in range(4)], c)
print(solve(box).values)

# %% Adding a violated cut raises the optimum
p.add_constraints([LpConstraint({0: 1, 1: 1}, 1.5, origin=FS)])
print("after cut:", solve(p).values, solve(p).objective_value)
