"""Prolate spheroidal polynomials of the confined hydrogen atom.

Both separated equations share the ansatz

    (u^2 - 1)^(mu/2) exp(-k u) S(u),    S(u) = sum_s c_s (u - 1)^s,

with ``k = f / nu`` and ``nu = N + mu + 1``.  The coefficients obey a
three-term recurrence whose (N+1)x(N+1) tridiagonal matrix has the
separation constants ``A`` as eigenvalues.

Two forms of the recurrence are kept:

``"ode"`` (default)
    obtained by substituting the ansatz into the atomic-unit spheroidal
    equation (see :func:`ode_derive_recurrence`)::

        2k(N+1-s) c_{s-1} + [s(s + 2mu + 1 - 4k) - A] c_s
            + 2(s+1)(s+mu+1) c_{s+1} = 0

``"printed"``
    the same with ``2k`` instead of ``4k`` in the diagonal, as it appears
    in the reference closed forms.  It does not solve the differential
    equation; it is kept so that the reference values can be reproduced
    and compared.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np
import scipy.linalg
import sympy as sp

FORMS = ("ode", "printed")
_DIAG_K = {"ode": 4.0, "printed": 2.0}

# spectra closer than this are treated as degenerate
MIN_GAP = 1e-10
# accepted recurrence residual, relative to the matrix and coefficient scale
RESIDUAL_TOL = 1e-12


class SpheroidalError(ArithmeticError):
    """Numerical breakdown of the spheroidal eigenproblem."""


@dataclass(frozen=True)
class SpheroidalSpec:
    """Problem data: ``mu > 0``, focal distance ``f >= 0`` and level ``N``."""

    mu: float
    f: float
    N: int

    def __post_init__(self):
        if not (self.mu > 0 and np.isfinite(self.mu)):
            raise ValueError(f"mu must be positive, got {self.mu!r}")
        if not (self.f >= 0 and np.isfinite(self.f)):
            raise ValueError(f"f must be finite and non-negative, got {self.f!r}")
        if int(self.N) != self.N or self.N < 0:
            raise ValueError(f"N must be a non-negative integer, got {self.N!r}")
        object.__setattr__(self, "mu", float(self.mu))
        object.__setattr__(self, "f", float(self.f))
        object.__setattr__(self, "N", int(self.N))

    @property
    def nu(self) -> float:
        return self.N + self.mu + 1.0

    @property
    def k(self) -> float:
        return self.f / self.nu


@dataclass(frozen=True)
class TridiagonalSystem:
    """Recurrence matrix ``M`` with ``M c = A c``.

    Row ``s`` reads ``sub[s-1] c_{s-1} + diag[s] c_s + sup[s] c_{s+1}``.
    """

    diag: tuple[float, ...]
    sub: tuple[float, ...]
    sup: tuple[float, ...]
    spec: SpheroidalSpec
    form: str = "ode"

    def matrix(self) -> np.ndarray:
        n = len(self.diag)
        m = np.diag(self.diag)
        if n > 1:
            m += np.diag(self.sub, -1) + np.diag(self.sup, 1)
        return m


@dataclass(frozen=True)
class SpheroidalSolution:
    """One eigenpair of the recurrence.

    ``index`` is the position in ascending ``A``.  Counting the real roots
    of ``S`` gives ``n_v = index`` nodes in ``-1 < v < 1`` and
    ``n_u = N - index`` nodes in ``u > 1``.
    """

    A: float
    coeffs: tuple[float, ...]
    index: int
    N: int
    residual: float = 0.0

    @property
    def n_v(self) -> int:
        return self.index

    @property
    def n_u(self) -> int:
        return self.N - self.index


def build_tridiagonal(spec: SpheroidalSpec, form: str = "ode") -> TridiagonalSystem:
    """Tridiagonal matrix of the recurrence in the chosen ``form``."""
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}, got {form!r}")
    mu, k, N = spec.mu, spec.k, spec.N
    s = np.arange(N + 1, dtype=float)
    diag = s * (s + 2 * mu + 1 - _DIAG_K[form] * k)
    sub = 2 * k * (N + 1 - s[1:])
    sup = 2 * (s[:-1] + 1) * (s[:-1] + mu + 1)
    return TridiagonalSystem(tuple(diag), tuple(sub), tuple(sup), spec, form)


def recurrence_residual(system: TridiagonalSystem, A: float, coeffs) -> float:
    """Largest row residual of ``(M - A) c``, relative to the row scale."""
    m = system.matrix()
    c = np.asarray(coeffs, dtype=float)
    res = m @ c - A * c
    scale = (np.abs(m).max() + abs(A)) * np.abs(c).max()
    return float(np.abs(res).max() / scale) if scale > 0 else float(np.abs(res).max())


def _null_vector(m: np.ndarray, A: float) -> np.ndarray:
    _, _, vt = np.linalg.svd(m - A * np.eye(len(m)))
    c = vt[-1]
    if c[0] == 0.0:
        raise SpheroidalError("eigenvector has vanishing constant coefficient")
    return c / c[0]


def _componentwise_residual(system: TridiagonalSystem, A: float, c) -> float:
    """Largest row residual relative to the sizes of that row's own terms."""
    m = system.matrix() - A * np.eye(len(c))
    c = np.asarray(c, dtype=float)
    if not np.all(np.isfinite(c)):
        return np.inf
    scale = np.abs(m) @ np.abs(c)
    return float(np.max(np.abs(m @ c) / np.where(scale > 0, scale, 1.0)))


def _two_sided_coeffs(system: TridiagonalSystem, A: float, peak: int) -> np.ndarray:
    """Coefficients with small relative error in every component.

    Forward recursion from ``c_0 = 1`` up to ``peak`` (the largest
    component), then backward continued-fraction ratios
    ``r_s = c_s / c_{s-1}`` for the decaying tail.
    """
    d = np.asarray(system.diag) - A
    a = np.asarray(system.sub)  # a[s-1] multiplies c_{s-1} in row s
    b = np.asarray(system.sup)  # b[s] multiplies c_{s+1} in row s
    n = len(d) - 1
    c = np.zeros(n + 1)
    c[0] = 1.0
    for s in range(peak):
        prev = a[s - 1] * c[s - 1] if s > 0 else 0.0
        c[s + 1] = -(prev + d[s] * c[s]) / b[s]
    r = np.zeros(n + 2)
    for s in range(n, peak, -1):
        tail = b[s] * r[s + 1] if s < n else 0.0
        denom = d[s] + tail
        if denom == 0.0:
            return None
        r[s] = -a[s - 1] / denom
    for s in range(peak + 1, n + 1):
        c[s] = c[s - 1] * r[s]
    return c


def solve_spheroidal(spec: SpheroidalSpec, form: str = "ode") -> list[SpheroidalSolution]:
    """All ``N + 1`` solutions in ascending ``A`` with ``c_0 = 1``.

    The matrix is made symmetric by the positive diagonal similarity
    ``d_s = d_{s-1} sqrt(sup_{s-1} / sub_s)`` (valid because every product
    ``sub * sup`` is positive for ``f > 0``), so the spectrum is real and
    simple.  Coefficients are then taken as the null vector of the
    original matrix shifted by each eigenvalue, which keeps ``c_0``
    accurate even when the similarity is badly scaled (small ``f``).
    That vector is only accurate relative to its largest component, so
    it is compared with two-sided recursions (every join point) and the
    candidate with the smallest row-relative residual is kept; this gives
    the decaying high-order coefficients full relative accuracy.
    """
    system = build_tridiagonal(spec, form)
    if spec.N == 0:
        return [SpheroidalSolution(0.0, (1.0,), 0, 0)]
    sub = np.asarray(system.sub)
    sup = np.asarray(system.sup)
    prod = sub * sup
    if not spec.f > 0 or np.any(prod <= 0):
        raise SpheroidalError("recurrence is not symmetrizable; need f > 0")
    evals = scipy.linalg.eigh_tridiagonal(np.asarray(system.diag), np.sqrt(prod), eigvals_only=True)
    evals = np.sort(evals)
    if np.any(np.diff(evals) <= MIN_GAP):
        raise SpheroidalError(f"separation constants not simple: {evals}")
    m = system.matrix()
    out = []
    for i, A in enumerate(evals):
        c = _null_vector(m, A)
        candidates = [c] + [v for j in range(spec.N + 1) if (v := _two_sided_coeffs(system, A, j)) is not None
                            and recurrence_residual(system, A, v) <= RESIDUAL_TOL]
        c = min(candidates, key=lambda v: _componentwise_residual(system, A, v))
        res = recurrence_residual(system, A, c)
        if res > RESIDUAL_TOL:
            raise SpheroidalError(f"recurrence residual {res:.3g} for A={A}")
        out.append(SpheroidalSolution(float(A), tuple(float(x) for x in c), i, spec.N, res))
    return out


def count_nodes(coeffs) -> tuple[int, int]:
    """``(n_u, n_v)``: real roots of ``S`` in ``u > 1`` and in ``-1 < v < 1``.

    Roots are counted exactly (Sturm sequences on the binary values of the
    coefficients); the roots in ``u`` move out to ``u ~ 1/k`` as ``f``
    shrinks, where floating-point root finders lose them.
    """
    c = np.trim_zeros(np.asarray(coeffs, dtype=float), "b")
    if len(c) <= 1:
        return 0, 0
    w = sp.Symbol("w")
    poly = sp.Poly([sp.Rational(float(x)) for x in c[::-1]], w)
    n_u = poly.count_roots(0, None) - (1 if c[0] == 0.0 else 0)
    n_v = poly.count_roots(-2, 0) - (1 if c[0] == 0.0 else 0) - (1 if poly.eval(-2) == 0 else 0)
    return int(n_u), int(n_v)


# -- closed forms for N = 1, 2 ------------------------------------------------------

def closed_form_coeffs(spec: SpheroidalSpec, A: float, as_printed: bool = False) -> tuple[float, ...]:
    """Closed-form ``c_s`` for ``N <= 2`` in terms of ``A``.

    ``c_1 = A / (2(1+mu))``;  ``c_2 = (A - 2(1+mu))(A + 4k) / (8(1+mu)(2+mu))``.
    ``as_printed=True`` returns ``c_2`` with the opposite overall sign, as
    in the reference display; that version fails the recurrence.
    """
    mu, k = spec.mu, spec.k
    if spec.N == 0:
        return (1.0,)
    c1 = A / (2 * (1 + mu))
    if spec.N == 1:
        return (1.0, c1)
    if spec.N == 2:
        c2 = (A - 2 * (1 + mu)) * (A + 4 * k) / (8 * (1 + mu) * (2 + mu))
        return (1.0, c1, -c2 if as_printed else c2)
    raise ValueError("closed forms exist for N <= 2 only")


def _check_uv(u, v):
    u, v = np.asarray(u, dtype=float), np.asarray(v, dtype=float)
    if np.any(u < 1) or np.any(np.abs(v) > 1):
        raise ValueError("need u >= 1 and -1 <= v <= 1")
    return u, v


def spheroidal_product_eval(spec: SpheroidalSpec, solution: SpheroidalSolution, u, v, closed_form: bool = False):
    """``S(u) S(v)`` from the solution's coefficients (or the closed form for N <= 2)."""
    u, v = _check_uv(u, v)
    c = closed_form_coeffs(spec, solution.A) if closed_form else solution.coeffs
    su = np.polynomial.polynomial.polyval(u - 1, c)
    sv = np.polynomial.polynomial.polyval(v - 1, c)
    out = su * sv
    return out if np.ndim(out) else float(out)


# -- symbolic cross-checks -------------------------------------------------------------

_mu, _f, _A, _k, _s, _Nsym = sp.symbols("mu f A k s N", real=True)


def _sym_matrix(N: int, form: str):
    nu = N + _mu + 1
    k = _f / nu
    m = sp.zeros(N + 1, N + 1)
    for s in range(N + 1):
        m[s, s] = s * (s + 2 * _mu + 1 - int(_DIAG_K[form]) * k)
        if s > 0:
            m[s, s - 1] = 2 * k * (N + 1 - s)
        if s < N:
            m[s, s + 1] = 2 * (s + 1) * (s + _mu + 1)
    return m


def _reference_charpoly(N: int, denom):
    """Reference secular polynomials; ``denom`` is the length scale in the f-terms."""
    mu, f, A = _mu, _f, _A
    nu = N + mu + 1
    if N == 1:
        return A**2 - (2 * mu + 2 - 4 * f / denom) * A - 4 * f / denom * (mu + 1)
    if N == 2:
        return (A**3 + (-8 - 6 * mu + 12 * f / nu) * A**2
                + (12 + 20 * mu + 8 * mu**2 - 16 * f * (3 * mu + 4) / denom + 12 * f**2 / denom**2) * A
                + 16 * f * (1 + mu) * (2 * mu + 3) / denom - 64 * f**2 * (mu + 1) / denom**2)
    raise ValueError("reference secular polynomials exist for N = 1, 2 only")


@dataclass(frozen=True)
class CoefficientCheck:
    power: int
    ode: sp.Expr
    printed_form: sp.Expr
    reference_literal: sp.Expr
    reference_nu: sp.Expr
    values: dict

    @property
    def ode_matches_literal(self) -> bool:
        return sp.simplify(self.ode - self.reference_literal) == 0

    @property
    def ode_matches_nu(self) -> bool:
        return sp.simplify(self.ode - self.reference_nu) == 0

    @property
    def printed_form_matches_nu(self) -> bool:
        return sp.simplify(self.printed_form - self.reference_nu) == 0


@dataclass(frozen=True)
class CharpolyReport:
    """Coefficient-by-coefficient comparison of secular polynomials in ``A``.

    ``ode`` and ``printed_form`` are ``det(A - M)`` for the two recurrence
    forms; ``reference_literal`` is the reference closed form with ``mu``
    as the length scale in its f-terms, ``reference_nu`` the same with
    ``nu``.  Mismatches are data, not errors.
    """

    N: int
    spec: SpheroidalSpec | None
    rows: tuple[CoefficientCheck, ...]

    def mismatches(self, against: str = "ode_matches_nu") -> list[int]:
        return [r.power for r in self.rows if not getattr(r, against)]

    def as_dict(self) -> dict:
        return {
            "N": self.N,
            "coefficients": [
                {
                    "power": r.power,
                    "ode": str(r.ode),
                    "printed_form": str(r.printed_form),
                    "reference_literal": str(r.reference_literal),
                    "reference_nu": str(r.reference_nu),
                    "ode_matches_literal": r.ode_matches_literal,
                    "ode_matches_nu": r.ode_matches_nu,
                    "printed_form_matches_nu": r.printed_form_matches_nu,
                    "values": r.values,
                }
                for r in self.rows
            ],
        }


def charpoly_crosscheck(spec: SpheroidalSpec) -> CharpolyReport:
    """Compare the secular polynomials of both recurrence forms with the reference closed forms."""
    N = spec.N
    if N not in (1, 2):
        raise ValueError("cross-check is defined for N = 1, 2")
    nu = N + _mu + 1
    polys = {
        "ode": (_A * sp.eye(N + 1) - _sym_matrix(N, "ode")).det(),
        "printed_form": (_A * sp.eye(N + 1) - _sym_matrix(N, "printed")).det(),
        "reference_literal": _reference_charpoly(N, _mu),
        "reference_nu": _reference_charpoly(N, nu),
    }
    coeffs = {name: sp.Poly(sp.expand(p), _A) for name, p in polys.items()}
    subs = {_mu: spec.mu, _f: spec.f}
    rows = []
    for power in range(N + 1, -1, -1):
        exprs = {name: sp.simplify(c.coeff_monomial(_A**power)) for name, c in coeffs.items()}
        values = {name: float(e.subs(subs)) for name, e in exprs.items()}
        rows.append(CoefficientCheck(power, exprs["ode"], exprs["printed_form"],
                                     exprs["reference_literal"], exprs["reference_nu"], values))
    return CharpolyReport(N, spec, tuple(rows))


@dataclass(frozen=True)
class DerivedRecurrence:
    """Recurrence read off the spheroidal equation.

    ``sub``, ``diag`` and ``sup`` are sympy expressions in ``s``, ``mu``,
    ``k`` and ``N`` multiplying ``c_{s-1}``, ``c_s`` and ``c_{s+1}`` in row
    ``s`` (``diag`` excludes ``-A``).  ``shift`` is the constant relating
    the raw separation constant of the equation to ``A``:
    ``A_raw = A + shift``.
    """

    sub: sp.Expr
    diag: sp.Expr
    sup: sp.Expr
    shift: sp.Expr

    def numeric(self, spec: SpheroidalSpec) -> TridiagonalSystem:
        vals = {_mu: spec.mu, _k: spec.k, _Nsym: spec.N}
        n = spec.N
        diag = tuple(float(self.diag.subs(vals).subs(_s, s)) for s in range(n + 1))
        sub = tuple(float(self.sub.subs(vals).subs(_s, s)) for s in range(1, n + 1))
        sup = tuple(float(self.sup.subs(vals).subs(_s, s)) for s in range(n))
        return TridiagonalSystem(diag, sub, sup, spec, "derived")

    def matches(self, system: TridiagonalSystem, rtol: float = 1e-12) -> bool:
        mine = self.numeric(system.spec)
        return all(np.allclose(a, b, rtol=rtol, atol=rtol) for a, b in
                   ((mine.diag, system.diag), (mine.sub, system.sub), (mine.sup, system.sup)))


@functools.lru_cache(maxsize=1)
def ode_derive_recurrence() -> DerivedRecurrence:
    """Derive the recurrence from the spheroidal equation symbolically.

    In atomic units, with ``E = -1/(2 nu^2)`` and ``f = k nu``, the
    u-equation reads

        d/du[(u^2-1) dU/du] - mu^2 U/(u^2-1) + 2 f u U + 2 E f^2 u^2 U = A_raw U.

    Acting on ``(u^2-1)^(mu/2) exp(-k u) (u-1)^s`` and dividing by
    ``(u^2-1)^(mu/2) exp(-k u) (u-1)^(s-1)`` leaves a quadratic
    ``p0(s) + p1(s) x + p2(s) x^2`` in ``x = u - 1``.  Collecting the
    coefficient of ``x^s`` in ``sum c_s (...)`` gives row ``s`` of the
    recurrence: ``p2(s-1) c_{s-1} + [p1(s) - A_raw] c_s + p0(s+1) c_{s+1}``.
    The constant ``p1(0)`` is absorbed into ``A``.
    """
    x = sp.symbols("x", positive=True)
    mu, k, s, N = sp.symbols("mu k s N", positive=True)
    u = x + 1
    nu = N + mu + 1
    f = k * nu
    E = -1 / (2 * nu**2)
    g = (x * (x + 2)) ** (mu / 2) * sp.exp(-k * u) * x**s
    U = g
    expr = (sp.diff((u**2 - 1) * sp.diff(U, x), x) - mu**2 / (u**2 - 1) * U
            + 2 * f * u * U + 2 * E * f**2 * u**2 * U)
    reduced = sp.expand(sp.simplify(sp.powsimp(sp.expand(expr / (g / x)), force=True)))
    reduced = sp.expand(sp.cancel(sp.together(reduced)))
    poly = sp.Poly(reduced, x)
    if poly.degree() > 2:
        raise ArithmeticError(f"unexpected degree {poly.degree()} in reduced equation")
    p0, p1, p2 = (sp.simplify(poly.coeff_monomial(x**j)) for j in range(3))
    shift = sp.simplify(p1.subs(s, 0))
    # rename to the module-level symbols used by DerivedRecurrence.numeric
    ren = {mu: _mu, k: _k, s: _s, N: _Nsym}
    sub = sp.factor(p2.subs(s, s - 1)).subs(ren)
    diag = sp.factor(sp.expand(p1 - shift)).subs(ren)
    sup = sp.factor(p0.subs(s, s + 1)).subs(ren)
    return DerivedRecurrence(sub, diag, sup, shift.subs(ren))
