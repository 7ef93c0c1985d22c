"""Oscillator and hydrogen eigenstates confined by a dihedral angle.

Modules
-------
polycore
    Dense polynomials, the Kummer, Hermite and polar constructors and
    ODE residuals.
states
    Angular modes, coordinate charts, eigenstates, energies and
    eigenfunction evaluation.
ladders
    Raising and lowering operators.
spheroidal
    Prolate spheroidal recurrence, its spectrum and symbolic cross-checks.
interbasis
    Transformation matrices between degenerate multiplets.
cli
    The ``wedgeqm`` command.
"""

from .polycore import (Polynomial, hermite_poly, kummer_poly, ode_residual, poly_derivative,
                       poly_eval, polar_parity_poly)
from .spheroidal import (SpheroidalSolution, SpheroidalSpec, build_tridiagonal, charpoly_crosscheck,
                         ode_derive_recurrence, solve_spheroidal, spheroidal_product_eval)
from .states import (AngularMode, HydPar, HydSph, HydSpheroidal, OscCyl, OscSph, energy,
                     eval_eigenfunction, mu_from_angle, multiplet, phi_eval, separation_constants,
                     to_cartesian)

__version__ = "0.1.0"

__all__ = [
    "AngularMode", "HydPar", "HydSph", "HydSpheroidal", "OscCyl", "OscSph", "Polynomial",
    "SpheroidalSolution", "SpheroidalSpec", "build_tridiagonal", "charpoly_crosscheck", "energy",
    "eval_eigenfunction", "hermite_poly", "kummer_poly", "mu_from_angle", "multiplet",
    "ode_derive_recurrence", "ode_residual", "phi_eval", "poly_derivative", "poly_eval",
    "polar_parity_poly", "separation_constants", "solve_spheroidal", "spheroidal_product_eval",
    "to_cartesian",
]
