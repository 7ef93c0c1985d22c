"""
Raising and lowering
====================

Ladder operators walk along each column of polynomial factors.  Starting
from the constant polynomial we regenerate the Hermite family, then check
that lowering undoes raising up to a scalar.
"""

import math

import numpy as np

from wedgeqm import ladders, polycore
from wedgeqm.states import AngularMode, OscCyl

p = polycore.Polynomial((1.0,), "z")
for n in range(5):
    p = ladders.hermite_raise(n, p).result
    print(n + 1, p.coeffs)

# raise then lower a polar polynomial: the product of the two scalars remains
mu = 0.8
up = ladders.polar_raise(3, mu)
down = ladders.polar_lower(4, mu, up.image)
print("round trip matches:", down.image.allclose(up.scalar * down.scalar * polycore.polar_parity_poly(3, mu)))

# the angular operators move n_phi by one inside a fixed wedge
mode = AngularMode(2, math.pi)
phi = np.linspace(0.1, 3.0, 4)
print(ladders.angular_operator_apply(mode, "raise", phi), np.sin(3 * phi))

# the radial ground state is annihilated exactly, with no round-off
print("ground residual:", ladders.ground_annihilation_residual(0.5, "upper"))

# acting on a whole state also reports the energy step
nxt, scalar = ladders.apply_ladder(OscCyl(0, 0, mode), "radial", "raise")
print(nxt, ladders.energy_shift(OscCyl(0, 0, mode), "radial", "raise"))
