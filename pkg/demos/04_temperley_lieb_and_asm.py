"""
Temperley-Lieb operators and the ASM point
==========================================

With beta = w = 1 the constant-field family is a combination of the identity
and a Temperley-Lieb generator E. At q = z = exp(i pi / 3) with a twist,
every weight becomes i sqrt(3): projectively the all-ones matrix.
"""

from fractions import Fraction

import numpy as np

from sixvertex import GaussianRational, SixVertexMatrix, asm_matrix, classify, projective_eq, r_as_tl, tl_generator

q = GaussianRational(Fraction(3, 2))
E1, E2, E3 = (tl_generator(q, 4, k).matrix for k in (1, 2, 3))
print("E1^2 = -(q + 1/q) E1:", (E1 @ E1).equals(E1.scale(-(q + 1 / q))))
print("E1 E2 E1 = E1:", (E1 @ E2 @ E1).equals(E1))
print("E2 E1 E2 = E2:", (E2 @ E1 @ E2).equals(E2))
print("E1 E3 = E3 E1:", (E1 @ E3).equals(E3 @ E1))

print("R^cf_q(3, 1) = s I + e E with (s, e) =", tuple(map(str, r_as_tl(q, 3, 1))))

m = asm_matrix()
print("ASM weights:", np.round(np.array([complex(x) for x in m.entries]), 6))
print("projectively all ones:", projective_eq(m, SixVertexMatrix(*[1.0] * 6)))
print("flags:", classify(m).names())
