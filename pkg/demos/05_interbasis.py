"""
Changing coordinate systems
===========================

Degenerate states in one coordinate system are finite combinations of
those in another.  We print the closed-form matrices, recover them by
least squares from point samples, and test the pointwise expansions.
"""

import numpy as np

from wedgeqm import interbasis
from wedgeqm.states import AngularMode

mode = AngularMode.from_mu(0.5)

m = interbasis.osc_interbasis_matrix(4, mode)
print(np.round(m.array, 5), "orthonormality error", m.orthonormality_error())

# the numeric oracle agrees once signs are aligned; column 2 is a sign convention
num = interbasis.numeric_overlap_matrix(m.from_basis, m.to_basis)
aligned, cols, rows = interbasis.align_signs(num.array, m.array)
print("flipped columns", cols, "max diff", np.abs(aligned - m.array).max())

h = interbasis.hydrogen_sph_par_matrix(2, mode)
print(np.round(h.array, 5), "expansion residual", interbasis.expansion_residual(h))

# spheroidal products are not normalized, so this matrix is only invertible
s = interbasis.hydrogen_sph_spheroidal_matrix(2, mode, 1.0)
print(np.round(s.array, 5), "cond", np.linalg.cond(s.array), "residual", interbasis.expansion_residual(s))

# the two lowest polynomial identities behind the oscillator matrices
print(interbasis.expansion_identity_check(mode, coefficients="printed"))
print(interbasis.expansion_identity_check(mode, coefficients="exact"))
