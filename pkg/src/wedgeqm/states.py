"""Quantum numbers, coordinate charts and eigenfunction evaluation.

The confining wedge ``0 < phi < phi0`` replaces the integer magnetic number
by ``mu = n_phi * pi / phi0``.  Each eigenstate is the product of the wedge
factor ``Phi(phi) = sqrt(2/phi0) sin(mu phi)``, a singularity-removing
prefactor and one or two polynomial factors from :mod:`wedgeqm.polycore`
(or :mod:`wedgeqm.spheroidal` for prolate spheroidal states).

Units: oscillator lengths in ``sqrt(hbar/m omega)`` and energies in
``hbar omega``; hydrogen in atomic units.  Every hydrogen chart is placed
in one global Cartesian frame with the nucleus at the origin, so the
prolate spheroidal chart of a hydrogen state has its lower focus at the
nucleus (``z_shift = f``).

Three normalizations are offered by :func:`eval_eigenfunction`:

``"polynomial"``
    the raw product; polynomial factors as built by their constructors,
    prefactors with unit coefficient.
``"unit"``
    divided by the analytic L2 norm, positive overall sign.  Not
    available for prolate spheroidal states.
``"table6"``
    the reference ratios ``N_n / N_0`` for the hydrogen multiplets with
    ``N <= 2``, applied to the reference polynomial forms.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.special import gammaln

from .polycore import Polynomial, hermite_poly, kummer_poly, polar_parity_poly
from .spheroidal import SpheroidalSolution, SpheroidalSpec, solve_spheroidal

TWO_PI = 2.0 * math.pi

# slack for points sitting on a wedge face or a chart boundary
_EDGE_TOL = 1e-12


# -- angular mode ------------------------------------------------------------

def mu_from_angle(n_phi: int, phi0: float) -> float:
    """Non-integer magnetic number ``n_phi * pi / phi0``."""
    if int(n_phi) != n_phi or n_phi < 1:
        raise ValueError(f"n_phi must be a positive integer, got {n_phi!r}")
    if not (0.0 < phi0 <= TWO_PI * (1 + 1e-15)):
        raise ValueError(f"phi0 must lie in (0, 2*pi], got {phi0!r}")
    return int(n_phi) * math.pi / phi0


@dataclass(frozen=True)
class AngularMode:
    """Dirichlet mode ``sin(n_phi pi phi / phi0)`` of the wedge.

    ``abstract=True`` marks a mode built from a bare ``mu``; it then uses
    ``n_phi = 1`` and ``phi0 = pi / mu`` and skips the ``phi0 <= 2 pi``
    bound, so any ``mu > 0`` can be swept.
    """

    n_phi: int
    phi0: float
    abstract: bool = False

    def __post_init__(self):
        if int(self.n_phi) != self.n_phi or self.n_phi < 1:
            raise ValueError(f"n_phi must be a positive integer, got {self.n_phi!r}")
        if not (self.phi0 > 0 and math.isfinite(self.phi0)):
            raise ValueError(f"phi0 must be positive, got {self.phi0!r}")
        if not self.abstract:
            mu_from_angle(self.n_phi, self.phi0)
        object.__setattr__(self, "n_phi", int(self.n_phi))
        object.__setattr__(self, "phi0", float(self.phi0))

    @classmethod
    def from_mu(cls, mu: float) -> "AngularMode":
        if not (mu > 0 and math.isfinite(mu)):
            raise ValueError(f"mu must be positive, got {mu!r}")
        return cls(1, math.pi / mu, abstract=True)

    @property
    def mu(self) -> float:
        return self.n_phi * math.pi / self.phi0

    def with_n_phi(self, n_phi: int) -> "AngularMode":
        return AngularMode(n_phi, self.phi0, self.abstract)


def _check_wedge(mode: AngularMode, phi):
    phi = np.asarray(phi, dtype=float)
    tol = _EDGE_TOL * max(1.0, mode.phi0)
    if np.any(phi < -tol) or np.any(phi > mode.phi0 + tol):
        raise ValueError(f"phi outside the wedge [0, {mode.phi0}]")


def phi_eval(mode: AngularMode, phi):
    """``sqrt(2/phi0) sin(mu phi)``; rejects points outside the wedge."""
    _check_wedge(mode, phi)
    out = math.sqrt(2.0 / mode.phi0) * np.sin(mode.mu * np.asarray(phi, dtype=float))
    return out if np.ndim(out) else float(out)


# -- coordinate charts -------------------------------------------------------

def _arr(x):
    return np.asarray(x, dtype=float)


def _require(cond, msg):
    if not np.all(cond):
        raise ValueError(msg)


@dataclass(frozen=True)
class Cartesian:
    x: object
    y: object
    z: object
    chart = "cartesian"


@dataclass(frozen=True)
class Cylindrical:
    rho: object
    phi: object
    z: object
    chart = "cylindrical"

    def __post_init__(self):
        _require(_arr(self.rho) >= 0, "rho must be non-negative")


@dataclass(frozen=True)
class Spherical:
    r: object
    theta: object
    phi: object
    chart = "spherical"

    def __post_init__(self):
        _require(_arr(self.r) >= 0, "r must be non-negative")
        th = _arr(self.theta)
        _require((th >= -_EDGE_TOL) & (th <= math.pi + _EDGE_TOL), "theta must lie in [0, pi]")


@dataclass(frozen=True)
class Parabolic:
    xi: object
    eta: object
    phi: object
    chart = "parabolic"

    def __post_init__(self):
        _require((_arr(self.xi) >= 0) & (_arr(self.eta) >= 0), "xi and eta must be non-negative")


@dataclass(frozen=True)
class ProlateSpheroidal:
    """Prolate spheroidal point; the foci sit at ``z = z_shift -/+ f``."""

    u: object
    v: object
    phi: object
    f: float
    z_shift: float = 0.0
    chart = "prolate"

    def __post_init__(self):
        if not self.f > 0:
            raise ValueError("focal distance f must be positive")
        _require(_arr(self.u) >= 1 - _EDGE_TOL, "u must be >= 1")
        v = _arr(self.v)
        _require((v >= -1 - _EDGE_TOL) & (v <= 1 + _EDGE_TOL), "v must lie in [-1, 1]")


CoordinatePoint = Union[Cartesian, Cylindrical, Spherical, Parabolic, ProlateSpheroidal]


def to_cartesian(p: CoordinatePoint) -> Cartesian:
    """Map any chart to Cartesian coordinates."""
    if isinstance(p, Cartesian):
        return p
    if isinstance(p, Cylindrical):
        rho, phi = _arr(p.rho), _arr(p.phi)
        return Cartesian(rho * np.cos(phi), rho * np.sin(phi), _arr(p.z))
    if isinstance(p, Spherical):
        r, th, phi = _arr(p.r), _arr(p.theta), _arr(p.phi)
        rho = r * np.sin(th)
        return Cartesian(rho * np.cos(phi), rho * np.sin(phi), r * np.cos(th))
    if isinstance(p, Parabolic):
        xi, eta, phi = _arr(p.xi), _arr(p.eta), _arr(p.phi)
        rho = xi * eta
        return Cartesian(rho * np.cos(phi), rho * np.sin(phi), 0.5 * (xi**2 - eta**2))
    if isinstance(p, ProlateSpheroidal):
        u, v, phi = _arr(p.u), _arr(p.v), _arr(p.phi)
        rho = p.f * np.sqrt(np.clip((u**2 - 1) * (1 - v**2), 0.0, None))
        return Cartesian(rho * np.cos(phi), rho * np.sin(phi), p.f * u * v + p.z_shift)
    raise TypeError(f"unknown chart {p!r}")


def _azimuth(x, y):
    phi = np.arctan2(y, x)
    return np.where(phi < 0, phi + TWO_PI, phi)


def to_chart(p: CoordinatePoint, chart: str, f: float | None = None, z_shift: float = 0.0) -> CoordinatePoint:
    """Convert ``p`` to ``chart``; ``f`` and ``z_shift`` are used by ``"prolate"``.

    The azimuth is copied from ``p``; from Cartesian input it lies in ``[0, 2 pi)``.
    """
    if chart == p.chart and chart != "prolate":
        return p
    if chart == "prolate" and isinstance(p, ProlateSpheroidal) and p.f == f and p.z_shift == z_shift:
        return p
    c = to_cartesian(p)
    x, y, z = _arr(c.x), _arr(c.y), _arr(c.z)
    rho = np.hypot(x, y)
    # keep the source azimuth when there is one: abstract wedges may exceed 2 pi
    phi = _azimuth(x, y) if isinstance(p, Cartesian) else _arr(p.phi)
    if chart == "cartesian":
        return c
    if chart == "cylindrical":
        return Cylindrical(rho, phi, z)
    if chart == "spherical":
        r = np.hypot(rho, z)
        theta = np.arctan2(rho, z)
        return Spherical(r, theta, phi)
    if chart == "parabolic":
        r = np.hypot(rho, z)
        return Parabolic(np.sqrt(np.clip(r + z, 0, None)), np.sqrt(np.clip(r - z, 0, None)), phi)
    if chart == "prolate":
        if f is None:
            raise ValueError("prolate chart needs the focal distance f")
        zc = z - z_shift
        r1 = np.hypot(rho, zc + f)
        r2 = np.hypot(rho, zc - f)
        u = np.maximum((r1 + r2) / (2 * f), 1.0)
        v = np.clip((r1 - r2) / (2 * f), -1.0, 1.0)
        return ProlateSpheroidal(u, v, phi, f, z_shift)
    raise ValueError(f"unknown chart {chart!r}")


# -- eigenstates ---------------------------------------------------------------

def _nonneg(**kw):
    for name, val in kw.items():
        if int(val) != val or val < 0:
            raise ValueError(f"{name} must be a non-negative integer, got {val!r}")


@dataclass(frozen=True)
class OscCyl:
    """Oscillator in circular cylindrical coordinates."""

    n_rho: int
    n_z: int
    mode: AngularMode
    system = "osc"
    family = "cyl"
    chart = "cylindrical"

    def __post_init__(self):
        _nonneg(n_rho=self.n_rho, n_z=self.n_z)

    @property
    def quantum_numbers(self):
        return (self.n_rho, self.n_z)

    @property
    def N(self):
        return 2 * self.n_rho + self.n_z


@dataclass(frozen=True)
class OscSph:
    """Oscillator in spherical coordinates; ``lam = n_theta + mu``."""

    n_r: int
    n_theta: int
    mode: AngularMode
    system = "osc"
    family = "sph"
    chart = "spherical"

    def __post_init__(self):
        _nonneg(n_r=self.n_r, n_theta=self.n_theta)

    @property
    def lam(self):
        return self.n_theta + self.mode.mu

    @property
    def quantum_numbers(self):
        return (self.n_r, self.n_theta)

    @property
    def N(self):
        return 2 * self.n_r + self.n_theta


@dataclass(frozen=True)
class HydSph:
    """Hydrogen in spherical coordinates, ``nu = n_r + n_theta + mu + 1``."""

    n_r: int
    n_theta: int
    mode: AngularMode
    system = "hydrogen"
    family = "sph"
    chart = "spherical"

    def __post_init__(self):
        _nonneg(n_r=self.n_r, n_theta=self.n_theta)

    @property
    def lam(self):
        return self.n_theta + self.mode.mu

    @property
    def nu(self):
        return self.n_r + self.n_theta + self.mode.mu + 1.0

    @property
    def quantum_numbers(self):
        return (self.n_r, self.n_theta)

    @property
    def N(self):
        return self.n_r + self.n_theta


@dataclass(frozen=True)
class HydPar:
    """Hydrogen in parabolic coordinates, ``nu = n_xi + n_eta + mu + 1``."""

    n_xi: int
    n_eta: int
    mode: AngularMode
    system = "hydrogen"
    family = "par"
    chart = "parabolic"

    def __post_init__(self):
        _nonneg(n_xi=self.n_xi, n_eta=self.n_eta)

    @property
    def nu(self):
        return self.n_xi + self.n_eta + self.mode.mu + 1.0

    @property
    def A_xi(self):
        return separation_constants(self)[0]

    @property
    def A_eta(self):
        return separation_constants(self)[1]

    @property
    def quantum_numbers(self):
        return (self.n_xi, self.n_eta)

    @property
    def N(self):
        return self.n_xi + self.n_eta


@dataclass(frozen=True)
class HydSpheroidal:
    """Hydrogen in prolate spheroidal coordinates with focal distance ``f``.

    The state is the spheroidal solution with ``n_u`` nodes in ``u > 1``
    and ``n_v`` nodes in ``-1 < v < 1``; in ascending separation constant
    order this is solution index ``n_v``.
    """

    n_u: int
    n_v: int
    mode: AngularMode
    f: float
    system = "hydrogen"
    family = "spheroidal"
    chart = "prolate"

    def __post_init__(self):
        _nonneg(n_u=self.n_u, n_v=self.n_v)
        if not (self.f > 0 and math.isfinite(self.f)):
            raise ValueError(f"f must be positive, got {self.f!r}")

    @property
    def nu(self):
        return self.n_u + self.n_v + self.mode.mu + 1.0

    @property
    def quantum_numbers(self):
        return (self.n_u, self.n_v)

    @property
    def N(self):
        return self.n_u + self.n_v

    @property
    def spec(self) -> SpheroidalSpec:
        return SpheroidalSpec(self.mode.mu, self.f, self.N)

    @property
    def solution(self) -> SpheroidalSolution:
        return _spheroidal_solutions(self.mode.mu, self.f, self.N)[self.n_v]


Eigenstate = Union[OscCyl, OscSph, HydSph, HydPar, HydSpheroidal]
HYDROGEN = (HydSph, HydPar, HydSpheroidal)


@functools.lru_cache(maxsize=256)
def _spheroidal_solutions(mu, f, N):
    return tuple(solve_spheroidal(SpheroidalSpec(mu, f, N)))


def energy(state: Eigenstate) -> float:
    """Oscillator energy in ``hbar omega``; hydrogen ``-1/(2 nu^2)`` hartree."""
    mu = state.mode.mu
    if isinstance(state, OscCyl):
        return 2 * state.n_rho + mu + state.n_z + 1.5
    if isinstance(state, OscSph):
        return 2 * state.n_r + state.n_theta + mu + 1.5
    if isinstance(state, HYDROGEN):
        return -0.5 / state.nu**2
    raise TypeError(f"not an eigenstate: {state!r}")


def separation_constants(state: HydPar) -> tuple[float, float]:
    """Parabolic separation constants ``((2 n_xi + mu + 1)/nu, (2 n_eta + mu + 1)/nu)``.

    The larger constant (always ``>= 1``) comes from its formula and the
    other is ``2`` minus it.  That subtraction is exact in floating point,
    so the pair sums to exactly ``2``; the complement differs from its own
    formula by at most one ulp of ``2``.
    """
    if not isinstance(state, HydPar):
        raise TypeError("separation constants belong to parabolic hydrogen states")
    mu, nu = state.mode.mu, state.nu
    if state.n_xi >= state.n_eta:
        a = (2 * state.n_xi + mu + 1) / nu
        return a, 2.0 - a
    b = (2 * state.n_eta + mu + 1) / nu
    return 2.0 - b, b


def length_scale(state: Eigenstate) -> float:
    """Scale dividing the polynomial variables: ``nu`` for hydrogen, 1 otherwise."""
    return state.nu if isinstance(state, HYDROGEN) else 1.0


# -- eigenfunctions --------------------------------------------------------------

def natural_point(state: Eigenstate, p: CoordinatePoint) -> CoordinatePoint:
    """Express ``p`` in the chart in which ``state`` separates."""
    if isinstance(state, HydSpheroidal):
        return to_chart(p, "prolate", f=state.f, z_shift=state.f)
    return to_chart(p, state.chart)


def prefactor(state: Eigenstate, p: CoordinatePoint):
    """Common non-polynomial factor, including ``Phi(phi)``.

    Oscillator: ``rho^mu exp(-(rho^2 + z^2)/2)``.  Hydrogen: ``rho^mu
    exp(-r/nu)`` with ``r`` measured from the nucleus; written in the
    separating chart this is ``(xi eta)^mu exp(-(xi^2+eta^2)/(2 nu))`` or
    ``[f^2 (u^2-1)(1-v^2)]^(mu/2) exp(-f(u+v)/nu)``.
    """
    q = natural_point(state, p)
    mu = state.mode.mu
    ang = phi_eval(state.mode, q.phi)
    if isinstance(state, OscCyl):
        rho, z = _arr(q.rho), _arr(q.z)
        return rho**mu * np.exp(-0.5 * (rho**2 + z**2)) * ang
    if isinstance(state, OscSph):
        r, th = _arr(q.r), _arr(q.theta)
        return (r * np.sin(th)) ** mu * np.exp(-0.5 * r**2) * ang
    if isinstance(state, HydSph):
        r, th = _arr(q.r), _arr(q.theta)
        return (r * np.sin(th)) ** mu * np.exp(-r / state.nu) * ang
    if isinstance(state, HydPar):
        xi, eta = _arr(q.xi), _arr(q.eta)
        return (xi * eta) ** mu * np.exp(-0.5 * (xi**2 + eta**2) / state.nu) * ang
    if isinstance(state, HydSpheroidal):
        u, v = _arr(q.u), _arr(q.v)
        stretch = state.f**2 * np.clip((u**2 - 1) * (1 - v**2), 0.0, None)
        return stretch ** (mu / 2) * np.exp(-state.f * (u + v) / state.nu) * ang
    raise TypeError(f"not an eigenstate: {state!r}")


def polynomial_factors(state: Eigenstate) -> dict[str, Polynomial]:
    """The polynomial factors of ``state`` keyed by the degree of freedom."""
    mu = state.mode.mu
    if isinstance(state, OscCyl):
        return {"radial": kummer_poly(state.n_rho, mu + 1), "axial": hermite_poly(state.n_z)}
    if isinstance(state, OscSph):
        return {"radial": kummer_poly(state.n_r, state.lam + 1.5),
                "polar": polar_parity_poly(state.n_theta, mu)}
    if isinstance(state, HydSph):
        return {"radial": kummer_poly(state.n_r, 2 * state.lam + 2),
                "polar": polar_parity_poly(state.n_theta, mu)}
    if isinstance(state, HydPar):
        return {"xi": kummer_poly(state.n_xi, mu + 1), "eta": kummer_poly(state.n_eta, mu + 1)}
    if isinstance(state, HydSpheroidal):
        return {"spheroidal": Polynomial.exact(state.solution.coeffs, "w")}
    raise TypeError(f"not an eigenstate: {state!r}")


def _polynomial_part(state: Eigenstate, q):
    polys = polynomial_factors(state)
    if isinstance(state, OscCyl):
        return polys["radial"](_arr(q.rho) ** 2) * polys["axial"](_arr(q.z))
    if isinstance(state, (OscSph, HydSph)):
        r, ct = _arr(q.r), np.cos(_arr(q.theta))
        t = r**2 if isinstance(state, OscSph) else 2 * r / state.nu
        return r**state.n_theta * polys["radial"](t) * polys["polar"](ct)
    if isinstance(state, HydPar):
        nu = state.nu
        return polys["xi"](_arr(q.xi) ** 2 / nu) * polys["eta"](_arr(q.eta) ** 2 / nu)
    if isinstance(state, HydSpheroidal):
        s = polys["spheroidal"]
        return s(_arr(q.u) - 1) * s(_arr(q.v) - 1)
    raise TypeError(f"not an eigenstate: {state!r}")


def eval_eigenfunction(state: Eigenstate, p: CoordinatePoint, normalization: str = "polynomial"):
    """Evaluate ``state`` at ``p`` (scalar or array coordinates).

    Points in a foreign chart are converted through Cartesian coordinates.
    """
    q = natural_point(state, p)
    out = prefactor(state, q) * _polynomial_part(state, q)
    if normalization == "polynomial":
        pass
    elif normalization == "unit":
        out = out / math.sqrt(norm_squared(state))
    elif normalization == "table6":
        out = out * table6_factor(state)
    else:
        raise ValueError(f"unknown normalization {normalization!r}")
    return out if np.ndim(out) else float(out)


# -- analytic norms --------------------------------------------------------------

def _laguerre_weight(n, b):
    """``int_0^inf t^(b-1) e^-t M(-n,b,t)^2 dt``."""
    return math.exp(math.lgamma(n + 1) + 2 * math.lgamma(b) - math.lgamma(n + b))


def _laguerre_weight_plus(n, b):
    """``int_0^inf t^b e^-t M(-n,b,t)^2 dt``."""
    return _laguerre_weight(n, b) * (2 * n + b)


def polar_norm_squared(n_theta: int, mu: float) -> float:
    """``int_{-1}^{1} (1-z^2)^mu P(z)^2 dz`` for the unit-at-``z=1`` polar polynomial."""
    a = mu + 0.5
    n = n_theta
    log = (math.log(math.pi) + (1 - 2 * a) * math.log(2.0) + math.lgamma(n + 1)
           + 2 * math.lgamma(2 * a) - math.log(n + a) - 2 * math.lgamma(a) - gammaln(n + 2 * a))
    return math.exp(log)


def norm_squared(state: Eigenstate) -> float:
    """Analytic L2 norm squared of the polynomial-convention eigenfunction.

    The wedge factor is already unit normalized, so only the radial and
    polar (or parabolic) integrals contribute.
    """
    mu = state.mode.mu
    if isinstance(state, OscCyl):
        radial = 0.5 * _laguerre_weight(state.n_rho, mu + 1)
        axial = math.sqrt(math.pi) * 2.0**state.n_z * math.factorial(state.n_z)
        return radial * axial
    if isinstance(state, OscSph):
        radial = 0.5 * _laguerre_weight(state.n_r, state.lam + 1.5)
        return radial * polar_norm_squared(state.n_theta, mu)
    if isinstance(state, HydSph):
        b = 2 * state.lam + 2
        radial = (state.nu / 2) ** (2 * state.lam + 3) * _laguerre_weight_plus(state.n_r, b)
        return radial * polar_norm_squared(state.n_theta, mu)
    if isinstance(state, HydPar):
        nu, b = state.nu, mu + 1
        i1 = [0.5 * nu ** (mu + 1) * _laguerre_weight(n, b) for n in (state.n_xi, state.n_eta)]
        i3 = [0.5 * nu ** (mu + 2) * _laguerre_weight_plus(n, b) for n in (state.n_xi, state.n_eta)]
        return i3[0] * i1[1] + i1[0] * i3[1]
    raise ValueError(f"no analytic norm for {type(state).__name__}")


# -- reference normalization ratios ------------------------------------------------

def table6_ratio(state: Eigenstate) -> float:
    """Reference ratio ``N_n / N_0`` for hydrogen states with ``N <= 2``."""
    mu = state.mode.mu
    qn = state.quantum_numbers
    if qn == (0, 0):
        return 1.0
    if isinstance(state, HydSph):
        table = {
            (0, 1): 2 / math.sqrt(2 + mu),
            (1, 0): 2 * (1 + mu) / math.sqrt(2 + mu),
            (0, 2): math.sqrt(4 * (1 + mu) / ((2 + mu) * (3 + mu) * (3 + 2 * mu))),
            (1, 1): math.sqrt(8.0),
            (2, 0): math.sqrt(2 * (1 + mu) ** 3 * (3 + 2 * mu) / (3 + mu)),
        }
    elif isinstance(state, HydPar):
        n1 = (1 + mu) / math.sqrt(2 + mu)
        n2 = (1 + mu) * math.sqrt(2 + mu) / math.sqrt(3 + mu)
        table = {
            (0, 1): n1,
            (1, 0): n1,
            (0, 2): n2,
            (1, 1): (1 + mu) * math.sqrt(2 * (1 + mu)) / math.sqrt(3 + mu),
            (2, 0): n2,
        }
    else:
        raise ValueError("reference ratios exist only for spherical and parabolic hydrogen")
    if qn not in table:
        raise ValueError(f"no reference ratio for {qn}")
    return table[qn]


def table6_polynomial_scale(state: Eigenstate) -> float:
    """Factor turning the constructor polynomials into the reference forms."""
    if isinstance(state, HydSph):
        nu = state.nu
        return {(0, 1): 1 / nu, (0, 2): 2 / nu**2, (1, 1): 1 / nu}.get(state.quantum_numbers, 1.0)
    return 1.0


def table6_factor(state: Eigenstate) -> float:
    return table6_ratio(state) * table6_polynomial_scale(state)


# -- multiplets ----------------------------------------------------------------------

_FAMILIES = {
    ("osc", "cyl"): OscCyl,
    ("osc", "sph"): OscSph,
    ("hydrogen", "sph"): HydSph,
    ("hydrogen", "par"): HydPar,
    ("hydrogen", "spheroidal"): HydSpheroidal,
}

SYSTEM_ALIASES = {"osc": "osc", "oscillator": "osc", "hyd": "hydrogen", "hydrogen": "hydrogen"}
FAMILY_ALIASES = {"cyl": "cyl", "cylindrical": "cyl", "sph": "sph", "spherical": "sph",
                  "par": "par", "parabolic": "par", "spheroidal": "spheroidal", "prolate": "spheroidal",
                  "ps": "spheroidal"}


def family_class(system: str, family: str):
    key = (SYSTEM_ALIASES.get(system, system), FAMILY_ALIASES.get(family, family))
    if key not in _FAMILIES:
        raise ValueError(f"unknown system/family {system!r}/{family!r}")
    return _FAMILIES[key]


def multiplet(system: str, family: str, N: int, mode: AngularMode, f: float | None = None) -> list:
    """Degenerate states of level ``N`` in a fixed order.

    Oscillator: ``2 n_1 + n_2 = N`` with descending ``n_1``.  Hydrogen
    spherical and parabolic: ``n_1 + n_2 = N`` with ascending ``n_1``.
    Hydrogen spheroidal: ascending separation constant, i.e. descending
    ``n_u``.  These orders make the closed-form transformation matrices
    in :mod:`wedgeqm.interbasis` row-exact.
    """
    _nonneg(N=N)
    cls = family_class(system, family)
    if cls in (OscCyl, OscSph):
        return [cls(n1, N - 2 * n1, mode) for n1 in range(N // 2, -1, -1)]
    if cls in (HydSph, HydPar):
        return [cls(n1, N - n1, mode) for n1 in range(N + 1)]
    if f is None:
        raise ValueError("spheroidal multiplets need the focal distance f")
    return [HydSpheroidal(N - i, i, mode, f) for i in range(N + 1)]


# -- serialization -------------------------------------------------------------------

_QN_NAMES = {OscCyl: ("n_rho", "n_z"), OscSph: ("n_r", "n_theta"), HydSph: ("n_r", "n_theta"),
             HydPar: ("n_xi", "n_eta"), HydSpheroidal: ("n_u", "n_v")}


def state_to_json(state: Eigenstate) -> dict:
    """JSON-ready description ``{system, family, quantum_numbers, n_phi, phi0, f?}``."""
    names = _QN_NAMES[type(state)]
    out = {
        "system": state.system,
        "family": state.family,
        "quantum_numbers": dict(zip(names, state.quantum_numbers)),
        "n_phi": state.mode.n_phi,
        "phi0": state.mode.phi0,
        "mu": state.mode.mu,
        "abstract": state.mode.abstract,
        "energy": energy(state),
    }
    if isinstance(state, HYDROGEN):
        out["nu"] = state.nu
    if isinstance(state, HydSpheroidal):
        out["f"] = state.f
    return out


def state_from_json(obj: dict) -> Eigenstate:
    """Build a state from ``{system, family, <quantum numbers>, n_phi, phi0 | mu, f?}``.

    Quantum numbers may sit at top level or in a ``quantum_numbers`` object.
    """
    if not isinstance(obj, dict):
        raise ValueError("state must be a JSON object")
    try:
        cls = family_class(obj["system"], obj["family"])
    except KeyError as exc:
        raise ValueError(f"state is missing {exc.args[0]!r}") from None
    qn = dict(obj.get("quantum_numbers", {}))
    qn.update({k: obj[k] for k in _QN_NAMES[cls] if k in obj})
    missing = [k for k in _QN_NAMES[cls] if k not in qn]
    if missing:
        raise ValueError(f"state is missing quantum numbers {missing}")
    mode = mode_from_json(obj)
    args = [qn[k] for k in _QN_NAMES[cls]]
    if cls is HydSpheroidal:
        if "f" not in obj:
            raise ValueError("spheroidal state needs f")
        return cls(*args, mode, float(obj["f"]))
    return cls(*args, mode)


def mode_from_json(obj: dict) -> AngularMode:
    if obj.get("abstract") or ("mu" in obj and "phi0" not in obj):
        return AngularMode.from_mu(float(obj["mu"]))
    if "phi0" not in obj:
        raise ValueError("state needs phi0 (with n_phi) or mu")
    return AngularMode(int(obj.get("n_phi", 1)), float(obj["phi0"]))
