"""Raising and lowering operators on the wedge eigenfunction factors.

Each operator acts on a polynomial (or on the angular mode) and returns a
:class:`LadderResult`.  ``image`` is the raw output of the operator and
``result = image / scalar`` is the next canonical polynomial, so tests can
check the image against the constructor of the neighbouring member.

Operators, in the polynomial variable of each family:

============  ===============================================  ===========
family        raise / lower                                    scalars
============  ===============================================  ===========
Kummer        ``b + n - t + t d/dt``  /  ``-n + t d/dt``        ``b+n`` / ``-n``
Hermite       ``2z - d/dz``           /  ``d/dz``               ``1`` / ``2n``
polar         ``z + (z^2-1)/(2mu+n+1) d/dz`` / ``z - (z^2-1)/n d/dz``  ``1`` / ``1``
============  ===============================================  ===========

The angular operators ``cos(pi phi/phi0) +/- (phi0/(n pi)) sin(pi phi/phi0) d/dphi``
shift ``n_phi`` by one with unit scalar.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Union

import numpy as np

from .polycore import Polynomial, hermite_poly, kummer_poly, polar_parity_poly
from .states import (AngularMode, HydPar, HydSph, HydSpheroidal, OscCyl, OscSph, energy)


@dataclass(frozen=True)
class LadderResult:
    """Operator output.

    ``annihilated`` holds exactly when the image vanishes; then ``result``
    is ``None`` and ``scalar`` is 0.
    """

    result: Union[Polynomial, AngularMode, None]
    scalar: float
    annihilated: bool
    image: Union[Polynomial, AngularMode, None] = None


def _annihilated(var: str) -> LadderResult:
    return LadderResult(None, 0.0, True, Polynomial((), var))


def _finish(image: Polynomial, scalar: float) -> LadderResult:
    if image.is_zero:
        return _annihilated(image.var)
    return LadderResult(image / scalar, scalar, False, image)


# -- angular -----------------------------------------------------------------------

def angular_raise(mode: AngularMode) -> LadderResult:
    return LadderResult(mode.with_n_phi(mode.n_phi + 1), 1.0, False, mode.with_n_phi(mode.n_phi + 1))


def angular_lower(mode: AngularMode) -> LadderResult:
    if mode.n_phi == 1:
        return LadderResult(None, 0.0, True, None)
    return LadderResult(mode.with_n_phi(mode.n_phi - 1), 1.0, False, mode.with_n_phi(mode.n_phi - 1))


def angular_operator_apply(mode: AngularMode, direction: str, phi):
    """Apply the angular operator to ``sin(n_phi pi phi / phi0)`` at ``phi``."""
    sign = _sign(direction)
    a = math.pi / mode.phi0
    n = mode.n_phi
    phi = np.asarray(phi, dtype=float)
    d_sin = n * a * np.cos(n * a * phi)
    return np.cos(a * phi) * np.sin(n * a * phi) + sign * np.sin(a * phi) * d_sin / (n * a)


def _sign(direction: str) -> int:
    if direction == "raise":
        return 1
    if direction == "lower":
        return -1
    raise ValueError(f"direction must be 'raise' or 'lower', got {direction!r}")


# -- Kummer ----------------------------------------------------------------------------

def kummer_raise(n: int, b: float, p: Polynomial | None = None) -> LadderResult:
    """``(b + n - t + t d/dt) M(-n, b, t) = (b + n) M(-n-1, b, t)``."""
    p = kummer_poly(n, b, "t") if p is None else p
    image = (b + n) * p - p.mul_var() + p.derivative().mul_var()
    return _finish(image, b + n)


def kummer_lower(n: int, b: float, p: Polynomial | None = None) -> LadderResult:
    """``(-n + t d/dt) M(-n, b, t) = -n M(-n+1, b, t)``; annihilates at ``n = 0``."""
    p = kummer_poly(n, b, "t") if p is None else p
    image = -n * p + p.derivative().mul_var()
    return _finish(image, -float(n))


# -- Hermite ---------------------------------------------------------------------------

def hermite_raise(n: int, p: Polynomial | None = None) -> LadderResult:
    """``2z H_n - H_n' = H_{n+1}``."""
    p = hermite_poly(n, "z") if p is None else p
    return _finish(2.0 * p.mul_var() - p.derivative(), 1.0)


def hermite_lower(n: int, p: Polynomial | None = None) -> LadderResult:
    """``H_n' = 2n H_{n-1}``; annihilates at ``n = 0``."""
    p = hermite_poly(n, "z") if p is None else p
    return _finish(p.derivative(), 2.0 * n)


# -- polar -----------------------------------------------------------------------------

def _z2m1(var):
    return Polynomial((-1.0, 0.0, 1.0), var)


def polar_raise(n_theta: int, mu: float, p: Polynomial | None = None) -> LadderResult:
    """``[z + (z^2-1)/(2mu+n+1) d/dz] P_n = P_{n+1}``."""
    p = polar_parity_poly(n_theta, mu) if p is None else p
    image = p.mul_var() + _z2m1(p.var) * p.derivative() / (2 * mu + n_theta + 1)
    return _finish(image, 1.0)


def polar_lower(n_theta: int, mu: float, p: Polynomial | None = None) -> LadderResult:
    """``[z - (z^2-1)/n d/dz] P_n = P_{n-1}``.

    At ``n = 0`` the multiplicative coefficient of ``z`` is taken as 0 as
    well, so the operator reduces to a multiple of ``d/dz`` and the
    constant ground polynomial is annihilated.
    """
    p = polar_parity_poly(n_theta, mu) if p is None else p
    if n_theta == 0:
        return _finish(p.derivative(), 1.0)
    image = p.mul_var() - _z2m1(p.var) * p.derivative() / n_theta
    return _finish(image, 1.0)


# -- ground-state annihilation ------------------------------------------------------------

@dataclass(frozen=True)
class QuasiPolynomial:
    """``exp(-s^2/2) * sum_j coeffs[j] * s^(exponent + j + offset)``."""

    exponent: float
    coeffs: tuple[float, ...]
    offset: int = 0

    def max_abs(self) -> float:
        return max((abs(c) for c in self.coeffs), default=0.0)


def apply_radial_operator(q: QuasiPolynomial, mu_op: float, upper: bool) -> QuasiPolynomial:
    """Apply ``s + d/ds - mu_op/s`` (upper) or ``s - d/ds + mu_op/s`` (lower).

    On ``s^p e^{-s^2/2}``: ``d/ds`` gives ``p s^(p-1) - s^(p+1)``, so the
    result is collected exactly, power by power.
    """
    sign = 1.0 if upper else -1.0
    out: dict[int, float] = {}
    for j, c in enumerate(q.coeffs):
        m = q.offset + j
        p = q.exponent + m
        # s * term, and the -s^(p+1) part of the derivative
        out[m + 1] = out.get(m + 1, 0.0) + c * (1.0 - sign)
        # p s^(p-1) from the derivative, and the -/+ mu_op / s term
        out[m - 1] = out.get(m - 1, 0.0) + c * sign * (p - mu_op)
    lo = min(out)
    coeffs = tuple(out.get(m, 0.0) for m in range(lo, max(out) + 1))
    return QuasiPolynomial(q.exponent, coeffs, lo)


def ground_annihilation_residual(mu: float, direction: str = "upper", mu_op: float | None = None) -> float:
    """Largest coefficient left after applying the operator to ``s^mu e^{-s^2/2}``.

    ``mu_op`` is the value of ``mu`` written into the operator (defaults
    to ``mu``).  The upper choice returns exactly 0 when ``mu_op == mu``.
    """
    if direction not in ("upper", "lower"):
        raise ValueError("direction must be 'upper' or 'lower'")
    mu_op = mu if mu_op is None else mu_op
    res = apply_radial_operator(QuasiPolynomial(mu, (1.0,)), mu_op, direction == "upper")
    return res.max_abs()


# -- dispatch on eigenstates ----------------------------------------------------------------

DOFS = {
    OscCyl: ("angular", "radial", "axial"),
    OscSph: ("angular", "radial", "polar"),
    HydSph: ("angular", "radial", "polar"),
    HydPar: ("angular", "xi", "eta"),
    HydSpheroidal: ("angular", "spheroidal"),
}


def apply_ladder(state, dof: str, direction: str):
    """Neighbouring state and scalar for ``dof`` moved one step in ``direction``.

    Returns ``(None, 0.0)`` at the bottom of a ladder.  Hydrogen states
    carry their own ``nu``, so the neighbour's polynomial variable
    (``2r/nu``, ``xi^2/nu``, ...) is rescaled automatically.  For
    spheroidal states ``"spheroidal"`` moves one node between the two
    spheroidal factors, ``(n_u, n_v) -> (n_u +/- 1, n_v -/+ 1)``, which is
    the step to the neighbouring separation constant; its scalar is 1.
    """
    kind = type(state)
    if kind not in DOFS:
        raise TypeError(f"not an eigenstate: {state!r}")
    if dof not in DOFS[kind]:
        raise ValueError(f"dof {dof!r} is not valid for {kind.__name__}; choose from {DOFS[kind]}")
    sign = _sign(direction)
    mu = state.mode.mu

    if dof == "angular":
        res = angular_raise(state.mode) if sign > 0 else angular_lower(state.mode)
        if res.annihilated:
            return None, 0.0
        return replace(state, mode=res.result), res.scalar

    if kind is HydSpheroidal:
        n_u, n_v = state.n_u + sign, state.n_v - sign
        if n_u < 0 or n_v < 0:
            return None, 0.0
        return replace(state, n_u=n_u, n_v=n_v), 1.0

    if kind is OscCyl and dof == "radial":
        field_, res = "n_rho", _kummer(state.n_rho, mu + 1, sign)
    elif kind is OscCyl:
        field_, res = "n_z", hermite_raise(state.n_z) if sign > 0 else hermite_lower(state.n_z)
    elif dof == "radial" and kind is OscSph:
        field_, res = "n_r", _kummer(state.n_r, state.lam + 1.5, sign)
    elif dof == "radial":
        field_, res = "n_r", _kummer(state.n_r, 2 * state.lam + 2, sign)
    elif dof == "polar":
        field_ = "n_theta"
        res = polar_raise(state.n_theta, mu) if sign > 0 else polar_lower(state.n_theta, mu)
    else:
        field_ = "n_xi" if dof == "xi" else "n_eta"
        res = _kummer(getattr(state, field_), mu + 1, sign)

    if res.annihilated:
        return None, 0.0
    return replace(state, **{field_: getattr(state, field_) + sign}), res.scalar


def _kummer(n, b, sign):
    return kummer_raise(n, b) if sign > 0 else kummer_lower(n, b)


def energy_shift(state, dof: str, direction: str) -> float | None:
    """Energy difference between the ladder neighbour and ``state``."""
    nxt, _ = apply_ladder(state, dof, direction)
    return None if nxt is None else energy(nxt) - energy(state)
