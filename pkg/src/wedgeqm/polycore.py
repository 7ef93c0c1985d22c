"""Dense real polynomials and the special-function families built on them.

Every polynomial factor that appears in the confined eigenfunctions is a
terminating series, so a small immutable coefficient container is enough:
Kummer polynomials ``M(-n, b, t)``, physicists' Hermite polynomials, the
definite-parity polar polynomials in ``cos(theta)`` and the spheroidal
``S(u)`` polynomials in the shifted variable ``w = u - 1``.

``ode_residual`` plugs a polynomial back into the differential equation it
is supposed to solve and returns the residual polynomial, which must vanish.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

VARIABLES = ("t", "z", "w", "s")

# relative size below which a leading coefficient is treated as round-off
TRIM_RTOL = 1e-14


def _canonical(coeffs: Sequence[float]) -> tuple[float, ...]:
    c = [float(x) for x in coeffs]
    if not all(math.isfinite(x) for x in c):
        raise ValueError("polynomial coefficients must be finite")
    if not c:
        return ()
    scale = max(abs(x) for x in c)
    cut = TRIM_RTOL * scale
    while c and (c[-1] == 0.0 or abs(c[-1]) < cut):
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial ``sum(coeffs[k] * var**k)``.

    The zero polynomial has an empty coefficient tuple; otherwise the last
    coefficient is nonzero.  ``var`` is a tag only, but binary operations
    refuse to mix tags.
    """

    coeffs: tuple[float, ...] = ()
    var: str = "t"

    def __post_init__(self):
        if self.var not in VARIABLES:
            raise ValueError(f"unknown variable tag {self.var!r}; expected one of {VARIABLES}")
        object.__setattr__(self, "coeffs", _canonical(self.coeffs))

    # -- construction helpers -------------------------------------------
    @classmethod
    def exact(cls, coeffs: Sequence[float], var: str = "t") -> "Polynomial":
        """Build from coefficients known exactly; only exact trailing zeros are dropped."""
        c = [float(x) for x in coeffs]
        if not all(math.isfinite(x) for x in c):
            raise ValueError("polynomial coefficients must be finite")
        while c and c[-1] == 0.0:
            c.pop()
        out = cls((), var)
        object.__setattr__(out, "coeffs", tuple(c))
        return out

    @classmethod
    def constant(cls, value: float, var: str = "t") -> "Polynomial":
        return cls((value,), var)

    @classmethod
    def monomial(cls, k: int, var: str = "t", coeff: float = 1.0) -> "Polynomial":
        return cls((0.0,) * k + (coeff,), var)

    # -- basic properties -----------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def max_abs(self) -> float:
        return max((abs(c) for c in self.coeffs), default=0.0)

    def coeff(self, k: int) -> float:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0.0

    def as_array(self, length: int | None = None) -> np.ndarray:
        n = len(self.coeffs) if length is None else length
        out = np.zeros(n)
        m = min(n, len(self.coeffs))
        out[:m] = self.coeffs[:m]
        return out

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "Polynomial"):
        if other.var != self.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            n = max(len(self.coeffs), len(other.coeffs))
            return Polynomial(tuple(self.coeff(k) + other.coeff(k) for k in range(n)), self.var)
        return self + Polynomial.constant(other, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            if self.is_zero or other.is_zero:
                return Polynomial((), self.var)
            return Polynomial(tuple(np.convolve(self.coeffs, other.coeffs)), self.var)
        return Polynomial(tuple(c * other for c in self.coeffs), self.var)

    __rmul__ = __mul__

    def __truediv__(self, scalar: float):
        return Polynomial(tuple(c / scalar for c in self.coeffs), self.var)

    def __call__(self, x):
        return poly_eval(self, x)

    def mul_var(self, power: int = 1) -> "Polynomial":
        """Multiply by ``var**power``."""
        if self.is_zero:
            return self
        return Polynomial((0.0,) * power + self.coeffs, self.var)

    def derivative(self) -> "Polynomial":
        return poly_derivative(self)

    def compose_affine(self, a: float, b: float, var: str | None = None) -> "Polynomial":
        """Return ``p(a + b*x)`` as a polynomial in ``x`` (tag ``var``)."""
        var = self.var if var is None else var
        lin = Polynomial((a, b), var)
        out = Polynomial((), var)
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def parity_part(self, parity: int) -> "Polynomial":
        """Keep only even (``parity=+1``) or odd (``parity=-1``) powers."""
        keep = 0 if parity > 0 else 1
        return Polynomial(tuple(c if k % 2 == keep else 0.0 for k, c in enumerate(self.coeffs)), self.var)

    def allclose(self, other: "Polynomial", rtol: float = 1e-12, atol: float = 0.0) -> bool:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a, b = self.as_array(n), other.as_array(n)
        scale = max(np.max(np.abs(a), initial=0.0), np.max(np.abs(b), initial=0.0))
        return bool(np.all(np.abs(a - b) <= atol + rtol * scale))

    def __repr__(self):
        if self.is_zero:
            return f"Polynomial(0, var={self.var!r})"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0.0:
                continue
            terms.append(f"{c:.6g}" + ("" if k == 0 else f"*{self.var}" + ("" if k == 1 else f"^{k}")))
        return f"Polynomial({' + '.join(terms)})"


def poly_eval(p: Polynomial, x):
    """Horner evaluation; works elementwise on arrays."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    for c in reversed(p.coeffs):
        out = out * x + c
    return out if out.ndim else float(out)


def poly_derivative(p: Polynomial) -> Polynomial:
    return Polynomial(tuple(k * c for k, c in enumerate(p.coeffs) if k > 0), p.var)


def pochhammer(a: float, k: int) -> float:
    """Rising factorial ``(a)_k``."""
    out = 1.0
    for j in range(k):
        out *= a + j
    return out


def kummer_poly(n: int, b: float, var: str = "t") -> Polynomial:
    """Terminating confluent hypergeometric series ``M(-n, b, t)``.

    Coefficients are ``(-n)_k / ((b)_k k!)``; the constant term is 1 and the
    degree is exactly ``n``.
    """
    n = _nonneg_int(n, "n")
    coeffs = [1.0]
    c = 1.0
    for k in range(n):
        denom = (b + k) * (k + 1)
        if denom == 0.0:
            raise ValueError(f"Pochhammer (b)_{k + 1} vanishes for b={b}")
        c *= (k - n) / denom
        coeffs.append(c)
    return Polynomial.exact(coeffs, var)


def hermite_poly(n: int, var: str = "z") -> Polynomial:
    """Physicists' Hermite polynomial ``H_n`` (leading coefficient ``2**n``)."""
    n = _nonneg_int(n, "n")
    h_prev, h = Polynomial((), var), Polynomial((1.0,), var)
    for k in range(n):
        h_prev, h = h, 2.0 * h.mul_var() - 2.0 * k * h_prev
    return h


def gauss_terminating(n: int, b: float, c: float, var: str = "s") -> Polynomial:
    """``2F1(-n, b; c; x)`` as a polynomial in ``x``."""
    n = _nonneg_int(n, "n")
    coeffs = [1.0]
    term = 1.0
    for k in range(n):
        term *= (k - n) * (b + k) / ((c + k) * (k + 1))
        coeffs.append(term)
    return Polynomial.exact(coeffs, var)


def polar_parity_poly(n_theta: int, mu: float) -> Polynomial:
    """Parity-``(-1)**n_theta`` part of ``2F1(-n, n+2mu+1; mu+1; (1-z)/2)``.

    The result is a polynomial in ``z = cos(theta)`` with value 1 at z = 1.
    The series is the Gegenbauer polynomial ``C_n^(mu+1/2)(z) / C_n^(mu+1/2)(1)``,
    whose opposite-parity part vanishes identically.  Expanding the series
    in powers of ``(1-z)/2`` loses digits to cancellation, so the
    coefficients are generated directly in ``z``: the leading one is
    ``2^n (mu+1/2)_n / (2mu+1)_n`` and, from the polar equation,

        a_j = -(j+1)(j+2) a_{j+2} / ((n-j)(n+j+2mu+1)).

    :func:`polar_parity_poly_via_series` keeps the literal construction.
    """
    n = _nonneg_int(n_theta, "n_theta")
    a = [0.0] * (n + 1)
    lead = 1.0
    for j in range(n):
        lead *= 2.0 * (mu + 0.5 + j) / (2.0 * mu + 1.0 + j)
    a[n] = lead
    for j in range(n - 2, -1, -2):
        a[j] = -(j + 1) * (j + 2) * a[j + 2] / ((n - j) * (n + j + 2.0 * mu + 1.0))
    return Polynomial.exact(a, "z")


def polar_parity_poly_via_series(n_theta: int, mu: float) -> Polynomial:
    """Parity projection of the Gauss series composed with ``(1-z)/2``."""
    n = _nonneg_int(n_theta, "n_theta")
    series = gauss_terminating(n, n + 2.0 * mu + 1.0, mu + 1.0, var="z")
    in_z = series.compose_affine(0.5, -0.5, var="z")
    return in_z.parity_part(1 if n % 2 == 0 else -1)


def _nonneg_int(n, name):
    if int(n) != n or n < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {n!r}")
    return int(n)


# -- ODE residuals -----------------------------------------------------------

@dataclass(frozen=True)
class Kummer:
    n: int
    b: float


@dataclass(frozen=True)
class Hermite:
    n: int


@dataclass(frozen=True)
class Polar:
    n: int
    mu: float


@dataclass(frozen=True)
class Spheroidal:
    """Spheroidal polynomial ``S(w) = sum c_s w**s`` with ``w = u - 1``.

    ``spec`` is anything carrying ``mu``, ``f``, ``N`` and ``nu``.
    """

    spec: object
    A: float
    coeffs: tuple[float, ...]


Family = Union[Kummer, Hermite, Polar, Spheroidal]


def ode_residual(family: Family, p: Polynomial | None = None) -> Polynomial:
    """Residual of the defining ODE for ``p`` (default: the family member).

    kummer      t M'' + (b - t) M' + n M
    hermite     H'' - 2 z H' + 2 n H
    polar       (1 - z^2) P'' - 2 (mu + 1) z P' + n (n + 2 mu + 1) P
    spheroidal  w(w+2) S'' + [2(1+mu)(w+1) - 2k w(w+2)] S'
                + [2 k N w - A] S,   k = f / nu

    The spheroidal line is the atomic-unit prolate equation with the
    prefactor ``(u^2-1)^(mu/2) exp(-k u)`` divided out and the separation
    constant shifted so that ``c_1 = A c_0 / (2(1+mu))``.
    """
    if isinstance(family, Kummer):
        p = kummer_poly(family.n, family.b) if p is None else p
        d1 = p.derivative()
        d2 = d1.derivative()
        return d2.mul_var() + family.b * d1 - d1.mul_var() + family.n * p
    if isinstance(family, Hermite):
        p = hermite_poly(family.n) if p is None else p
        d1 = p.derivative()
        d2 = d1.derivative()
        return d2 - 2.0 * d1.mul_var() + 2.0 * family.n * p
    if isinstance(family, Polar):
        p = polar_parity_poly(family.n, family.mu) if p is None else p
        d1 = p.derivative()
        d2 = d1.derivative()
        lam = family.n * (family.n + 2.0 * family.mu + 1.0)
        return d2 - d2.mul_var(2) - 2.0 * (family.mu + 1.0) * d1.mul_var() + lam * p
    if isinstance(family, Spheroidal):
        spec = family.spec
        p = Polynomial(family.coeffs, "w") if p is None else p
        k = spec.f / spec.nu
        w = Polynomial((0.0, 1.0), p.var)
        w_w2 = Polynomial((0.0, 2.0, 1.0), p.var)
        d1 = p.derivative()
        d2 = d1.derivative()
        first = 2.0 * (1.0 + spec.mu) * (w + 1.0) - 2.0 * k * w_w2
        zeroth = 2.0 * k * spec.N * w - family.A
        return w_w2 * d2 + first * d1 + zeroth * p
    raise TypeError(f"unsupported family {family!r}")
