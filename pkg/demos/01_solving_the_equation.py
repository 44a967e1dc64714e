"""
Solving the Yang-Baxter equation for six-vertex matrices
=========================================================

A six-vertex matrix is stored as its six entries (a1, a2, b1, b2, c1, c2).
Given u and v, the middle matrix w of [[u, w, v]] = 0 is unique up to a
scalar whenever it exists.
"""

from sixvertex import (
    SixVertexMatrix,
    classify,
    component_residuals,
    delta,
    dual,
    inverse,
    is_yb_solution,
    projective_eq,
    solution_space,
    solve_conditions,
    solve_u,
    solve_v,
    solve_w,
)

u = SixVertexMatrix(5, 5, 4, 2, 3, 1)
v = SixVertexMatrix(7, 7, 6, 3, 4, 1)

# Two scalar conditions decide whether a w exists.
print("conditions:", solve_conditions(u, v))

w = solve_w(u, v)
print("w =", w)
print("solution:", is_yb_solution(u, w, v))

# The thirteen component equations are the nonzero entries of the 8x8 commutator.
print("residuals:", [str(r) for r in component_residuals(u, w, v)])

# A brute-force nullspace of those equations finds the same line.
print("nullspace:", solution_space(u, v))

# The other two unknowns can be recovered from the remaining pair.
print("u again:", solve_u(w, v), projective_eq(solve_u(w, v), u))
print("v again:", solve_v(u, w), projective_eq(solve_v(u, w), v))

# Everything is governed by the statistics (Delta1, Delta2).
for name, m in (("u", u), ("v", v), ("w", w)):
    print(name, "Delta =", tuple(map(str, delta(m))), "flags =", classify(m).names())

# The dual is the inverse rescaled by c1 c2 - b1 b2.
print("dual:", dual(u), "inverse:", inverse(u))

# A generic pair has no solution.
x = SixVertexMatrix(2, 3, 5, 7, 11, 13)
print("x*x defined:", solve_w(x, x) is not None)
