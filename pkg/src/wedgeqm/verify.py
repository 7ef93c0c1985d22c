"""Runtime self-check behind ``wedgeqm verify``.

Each suite returns its worst error and the tolerance it was held to.  The
environment variable ``WEDGE_TOL`` replaces every suite tolerance.
"""

from __future__ import annotations

import math
import os
from dataclasses import asdict, dataclass

import numpy as np

from . import interbasis, ladders, polycore, spheroidal
from .states import AngularMode, energy, multiplet, separation_constants

MU_GRID = (0.3, 0.5, 1.0, math.pi / 2.7, 4.0)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    max_error: float
    tolerance: float
    detail: str = ""


def _tol(default: float) -> float:
    env = os.environ.get("WEDGE_TOL")
    return float(env) if env else default


def _rel(p: polycore.Polynomial, scale: float) -> float:
    return p.max_abs() / scale if scale > 0 else p.max_abs()


def suite_ode_residuals() -> tuple[float, str]:
    worst = 0.0
    for mu in MU_GRID:
        for n in range(11):
            k = polycore.kummer_poly(n, mu + 1)
            h = polycore.hermite_poly(n)
            p = polycore.polar_parity_poly(n, mu)
            worst = max(worst,
                        _rel(polycore.ode_residual(polycore.Kummer(n, mu + 1)), k.max_abs()),
                        _rel(polycore.ode_residual(polycore.Hermite(n)), h.max_abs()),
                        _rel(polycore.ode_residual(polycore.Polar(n, mu)), p.max_abs()))
        for N in range(7):
            spec = spheroidal.SpheroidalSpec(mu, 1.0, N)
            for sol in spheroidal.solve_spheroidal(spec):
                res = polycore.ode_residual(polycore.Spheroidal(spec, sol.A, sol.coeffs))
                # scale by the size of the A c term, which dominates the operator
                worst = max(worst, _rel(res, max(1.0, abs(sol.A)) * max(abs(c) for c in sol.coeffs)))
    return worst, "kummer, hermite, polar n<=10; spheroidal N<=6"


def suite_ladder_round_trip() -> tuple[float, str]:
    worst = 0.0
    for mu in MU_GRID:
        for n in range(1, 11):
            for b in (mu + 1, n + mu + 1.5, 2 * (n + mu) + 2):
                up = ladders.kummer_raise(n, b)
                down = ladders.kummer_lower(n + 1, b, up.image)
                target = polycore.kummer_poly(n, b) * (up.scalar * down.scalar)
                worst = max(worst, _rel(down.image - target, target.max_abs()))
            up = ladders.polar_raise(n, mu)
            down = ladders.polar_lower(n + 1, mu, up.image)
            target = polycore.polar_parity_poly(n, mu)
            worst = max(worst, _rel(down.image - target, target.max_abs()))
        for n in range(1, 11):
            up = ladders.hermite_raise(n)
            down = ladders.hermite_lower(n + 1, up.image)
            target = polycore.hermite_poly(n) * (up.scalar * down.scalar)
            worst = max(worst, _rel(down.image - target, target.max_abs()))
    return worst, "lower(raise(P_n)) = scalars * P_n, n<=10"


def suite_angular() -> tuple[float, str]:
    worst = 0.0
    for phi0 in (math.pi / 3, math.pi, 2 * math.pi):
        phi = np.linspace(0, phi0, 102)[1:-1]
        for n in range(1, 6):
            mode = AngularMode(n, phi0)
            up = ladders.angular_operator_apply(mode, "raise", phi)
            worst = max(worst, float(np.abs(up - np.sin((n + 1) * math.pi * phi / phi0)).max()))
            down = ladders.angular_operator_apply(mode, "lower", phi)
            worst = max(worst, float(np.abs(down - np.sin((n - 1) * math.pi * phi / phi0)).max()))
    return worst, "angular ladder identities, n_phi<=5"


def suite_ground_annihilation() -> tuple[float, str]:
    worst = max(ladders.ground_annihilation_residual(mu) for mu in (0.5, 1.0, 2.0, math.pi / 2.7))
    return worst, "upper-sign operator on s^mu exp(-s^2/2)"


def suite_spheroidal() -> tuple[float, str]:
    worst = 0.0
    rng = np.random.default_rng(7)
    for _ in range(50):
        spec = spheroidal.SpheroidalSpec(rng.uniform(0.3, 4.0), rng.uniform(0.05, 5.0), int(rng.integers(1, 7)))
        sols = spheroidal.solve_spheroidal(spec)
        worst = max(worst, max(s.residual for s in sols))
    derived = spheroidal.ode_derive_recurrence()
    spec = spheroidal.SpheroidalSpec(0.5, 1.0, 3)
    if not derived.matches(spheroidal.build_tridiagonal(spec)):
        worst = math.inf
    return worst, "recurrence residuals on 50 random specs; ODE-derived recurrence agreement"


def suite_interbasis() -> tuple[float, str]:
    worst = 0.0
    for mu in MU_GRID:
        mode = AngularMode.from_mu(mu)
        mats = [interbasis.osc_interbasis_matrix(N, mode) for N in range(6)]
        mats += [interbasis.hydrogen_sph_par_matrix(N, mode) for N in range(3)]
        for m in mats:
            worst = max(worst, m.orthonormality_error())
    return worst, "orthonormality of closed-form matrices"


def suite_expansions() -> tuple[float, str]:
    worst = 0.0
    for mu in (0.5, math.pi / 2.7, 2.0):
        mode = AngularMode.from_mu(mu)
        mats = [interbasis.osc_interbasis_matrix(N, mode) for N in range(2, 6)]
        mats += [interbasis.hydrogen_sph_par_matrix(N, mode) for N in (1, 2)]
        mats += [interbasis.hydrogen_sph_spheroidal_matrix(N, mode, 1.3) for N in (1, 2)]
        for m in mats:
            worst = max(worst, interbasis.expansion_residual(m, n_points=100))
    return worst, "pointwise expansion identities"


def suite_degeneracy() -> tuple[float, str]:
    worst = 0.0
    for mu in MU_GRID:
        mode = AngularMode.from_mu(mu)
        for N in range(7):
            for sys_, fam in (("osc", "cyl"), ("osc", "sph"), ("hydrogen", "sph"), ("hydrogen", "par"),
                              ("hydrogen", "spheroidal")):
                es = [energy(s) for s in multiplet(sys_, fam, N, mode, f=1.0)]
                worst = max(worst, max(es) - min(es))
            for s in multiplet("hydrogen", "par", N, mode):
                worst = max(worst, abs(sum(separation_constants(s)) - 2.0))
    return worst, "equal energies in each multiplet; A_xi + A_eta = 2"


SUITES = (
    ("ode_residuals", suite_ode_residuals, 1e-12),
    ("ladder_round_trip", suite_ladder_round_trip, 1e-12),
    ("angular_operators", suite_angular, 1e-12),
    ("ground_annihilation", suite_ground_annihilation, 0.0),
    ("spheroidal", suite_spheroidal, 1e-12),
    ("orthonormality", suite_interbasis, 1e-12),
    ("expansions", suite_expansions, 1e-10),
    ("degeneracy", suite_degeneracy, 1e-14),
)


def run_all() -> list[SuiteResult]:
    out = []
    for name, fn, tol in SUITES:
        tol = _tol(tol)
        err, detail = fn()
        out.append(SuiteResult(name, bool(err <= tol), float(err), tol, detail))
    return out


def report(results: list[SuiteResult]) -> dict:
    return {"passed": all(r.passed for r in results), "suites": [asdict(r) for r in results]}
