"""
Eigenstates in a wedge
======================

A wedge of opening phi0 only admits sin(mu phi) with mu = n_phi pi / phi0.
Here we build oscillator and hydrogen states, look at the energies, and
evaluate the same hydrogen ground state in three coordinate systems.
"""

import math

import numpy as np

from wedgeqm import states

mode = states.AngularMode(1, 2 * math.pi)   # half-plane excluded
print("mu =", mode.mu)

# the ground state vanishes on both faces of the wedge
print("faces:", states.phi_eval(mode, np.array([0.0, mode.phi0])))

# oscillator multiplets are degenerate; cylindrical and spherical share E
for family in ("cyl", "sph"):
    group = states.multiplet("osc", family, 4, mode)
    print(family, [s.quantum_numbers for s in group], {states.energy(s) for s in group})

# one hydrogen ground state, three charts
pts = states.Cylindrical(np.array([0.5, 1.0, 2.0]), np.array([1.0, 2.0, 3.0]), np.array([-0.3, 0.0, 0.7]))
for s in (states.HydSph(0, 0, mode), states.HydPar(0, 0, mode), states.HydSpheroidal(0, 0, mode, 0.8)):
    print(type(s).__name__, states.eval_eigenfunction(s, pts))

# parabolic separation constants always add up to two
s = states.HydPar(2, 1, mode)
print("A_xi + A_eta =", sum(states.separation_constants(s)))
