#!/usr/bin/env python3
# Complex coframe triples on an oriented 3-space: the star rotation scalar,
# the symmetric transition matrix, and the forced-vanishing obstruction.

import numpy as np

from hodgelab import (
    ComplexForm,
    FrameTriple,
    cross,
    obstruction_kernel,
    r_matrix,
    star_triple,
    transition_p,
)

frame = FrameTriple.random(2024)
k = star_triple(frame)
print("star scalar k =", k, " |k| =", abs(k))

td = transition_p(frame)
print("P symmetric:", np.max(np.abs(td.p_matrix - td.p_matrix.T)))
print("P conj(P) = 1:", np.max(np.abs(td.p_matrix @ np.conj(td.p_matrix) - np.eye(3))))
print("k^2 = det(P):", abs(td.k**2 - np.linalg.det(td.p_matrix)))

# wedging by a 1-form acts on the cross products through a skew matrix
alpha = ComplexForm.from_coords([0.3 + 0.1j, -0.2, 0.7j])
r = r_matrix(alpha, frame)
crossed = cross(frame.gammas)
worst = 0.0
for i in range(3):
    acc = r[i, 0] * crossed[0] + r[i, 1] * crossed[1] + r[i, 2] * crossed[2]
    worst = max(worst, np.sqrt((alpha.wedge(frame.gammas[i]) - acc).norm_sq()))
print("cross identity residual:", worst)

# the obstruction operator kills no real 1-form on a valid transition ...
print("real kernel dimension:", obstruction_kernel(td, restrict_real=True))
# ... while over the complex coefficients a 3-dimensional kernel can appear
from hodgelab import TransitionData

identity_td = TransitionData(np.eye(3, dtype=complex), 1.0 + 0j)
print("complex kernel at the identity transition:",
      obstruction_kernel(identity_td, restrict_real=False))
