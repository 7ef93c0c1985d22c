"""
Polynomial factors of the wedge eigenfunctions
==============================================

Every eigenfunction in this package is a prefactor times a finite
polynomial.  This script builds the three classical families and checks
each one against the differential equation it must satisfy.
"""

import math

import numpy as np

from wedgeqm import polycore

# mu replaces the integer magnetic number; a quarter-turn wedge gives mu = 2
mu = 2.0

# radial factor of the cylindrical oscillator: M(-n, mu + 1, rho^2)
for n in range(4):
    print("kummer", n, np.round(polycore.kummer_poly(n, mu + 1).coeffs, 6))

# physicists' Hermite polynomials for the axial motion
print("hermite 4", polycore.hermite_poly(4).coeffs)

# polar factor in z = cos(theta); it keeps a definite parity for any mu
p = polycore.polar_parity_poly(3, math.pi / 2.7)
print("polar 3", np.round(p.coeffs, 6), "value at z=1:", p(1.0))

# residual of the defining ODE, relative to the largest coefficient
worst = 0.0
for n in range(11):
    for fam, poly in ((polycore.Kummer(n, mu + 1), polycore.kummer_poly(n, mu + 1)),
                      (polycore.Hermite(n), polycore.hermite_poly(n)),
                      (polycore.Polar(n, mu), polycore.polar_parity_poly(n, mu))):
        worst = max(worst, polycore.ode_residual(fam, poly).max_abs() / poly.max_abs())
print(f"largest ODE residual for n <= 10: {worst:.1e}")
