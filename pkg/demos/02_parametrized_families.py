"""
Parametrized families
=====================

Groups whose elements map to solutions: tau on GL2 x GL1 gives the
free-fermionic matrices, and (C^x)^3 gives the commutative families R^cf and
R^ff. In each case [[R(g), R(gh), R(h)]] = 0.
"""

from sixvertex import (
    FamilyParams,
    GL2GL1Element,
    GroupElem3,
    five_vertex,
    is_commutative_pair,
    is_yb_solution,
    projective_eq,
    quantum_r,
    r_family,
    solve_w,
    tau,
)

g = GL2GL1Element(1, 1, -1, 2, 3)
h = GL2GL1Element(2, 0, 1, 1, 5)
print("tau(g) =", tau(g))
print("tau YBE:", is_yb_solution(tau(g), tau(g * h), tau(h)))

p = FamilyParams(2, 1, 1)
a, b = GroupElem3(3, 1, 1), GroupElem3(4, 1, 1)
for kind in ("cf", "ff"):
    ra, rb, rab = r_family(p, kind, a), r_family(p, kind, b), r_family(p, kind, a * b)
    print(kind, ra, rb)
    print("  YBE:", is_yb_solution(ra, rab, rb))
    print("  composition recovers R(gh):", projective_eq(solve_w(ra, rb), rab))
    print("  commute:", is_commutative_pair(ra, rb))

# Evaluation-module R-matrices are the specialization q1 = q, q2 = 1/q, z2 = 1/z.
print("U_q(sl2^):", quantum_r(2, 3, "cf"))
print("U_q(sl(1|1)^):", quantum_r(2, 3, "ff"))

# Letting one q go to zero leaves five nonzero weights.
for kind in ("cf", "ff"):
    for which in ("b1_zero", "b2_zero"):
        print(kind, which, five_vertex(kind, which, 3, 1))
