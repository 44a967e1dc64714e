"""
The Yang-Baxter groupoid
========================

Non-free-fermionic matrices with b1, b2 nonzero are arrows from Delta(u^-1)
to Delta(u). Composition u*v is defined exactly when Delta(u) = Delta(v^-1).
This demo checks the groupoid laws and fuzzes associativity.
"""

from sixvertex import (
    SixVertexMatrix,
    associativity_fuzz,
    axiom_suite,
    element,
    g_compose,
    g_inverse,
    sample_composable,
)

u = element(SixVertexMatrix(5, 5, 4, 2, 3, 1))
v = element(SixVertexMatrix(7, 7, 6, 3, 4, 1))
print("u*v =", g_compose(u, v))
print("u*u^-1 =", g_compose(u, g_inverse(u)))

# Laws on in-family triples, in exact arithmetic.
report = axiom_suite(sample_composable("family_exact", seed=0, count=50, length=3))
print("axioms:", report.passes, "of", report.trials)

# Associativity within one vertex group and across vertex groups.
print(associativity_fuzz("family_exact", seed=42, trials=100).dumps())
cross = associativity_fuzz("cross_float", seed=42, trials=100)
print("cross-vertex:", cross.passes, "of", cross.trials, "max residual", cross.max_residual)

# Not every defined pair closes up: here both bracketings agree, but on a
# diagonal matrix that is not an arrow of the groupoid.
gap = associativity_fuzz("family_exact", seed=12, trials=61)
print("degenerate triples:", gap.degenerate, gap.failures[0].check)
