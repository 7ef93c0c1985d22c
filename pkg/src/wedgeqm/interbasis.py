"""Transformation matrices between degenerate multiplets.

Convention: for a matrix ``M`` from basis B (columns) to basis A (rows),

    row_scale[i] * psi^A_i = sum_j M[i, j] * column_phase[j] * psi^B_j

pointwise.  Closed forms are available for the oscillator (cylindrical to
spherical, ``N <= 5``), for hydrogen parabolic to spherical (``N <= 2``) and
hydrogen prolate spheroidal to spherical polynomial products (``N <= 2``).
Larger ``N`` falls back to :func:`numeric_overlap_matrix`, a least-squares
fit on quasi-random points that also serves as the independent oracle for
the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import qmc

from .states import AngularMode, Cylindrical, eval_eigenfunction, energy, multiplet
from .spheroidal import SpheroidalSpec, solve_spheroidal

SAMPLE_SEED = 20240611
MAX_CONDITION = 1e8


@dataclass(frozen=True)
class Basis:
    """A degenerate multiplet: ``system``, ``family``, level ``N``, mode and ``f``."""

    system: str
    family: str
    N: int
    mode: AngularMode
    f: float | None = None

    def states(self):
        return multiplet(self.system, self.family, self.N, self.mode, self.f)

    def labels(self):
        return [s.quantum_numbers for s in self.states()]

    def as_dict(self) -> dict:
        out = {"system": self.system, "family": self.family, "N": self.N,
               "n_phi": self.mode.n_phi, "phi0": self.mode.phi0, "mu": self.mode.mu,
               "abstract": self.mode.abstract,
               "states": [list(q) for q in self.labels()]}
        if self.f is not None:
            out["f"] = self.f
        return out


@dataclass(frozen=True, eq=False)
class TransformMatrix:
    """``entries[i][j]`` expands row state ``to_basis[i]`` over column state ``from_basis[j]``.

    ``normalization`` names the eigenfunction convention in which the
    pointwise identity holds.  ``row_scales`` and ``column_phases`` default
    to ones.  ``residual`` is set for least-squares matrices.
    """

    entries: tuple[tuple[float, ...], ...]
    from_basis: Basis
    to_basis: Basis
    orthonormal_expected: bool
    normalization: str = "unit"
    row_scales: tuple[float, ...] | None = None
    column_phases: tuple[float, ...] | None = None
    source: str = "closed_form"
    residual: float | None = None

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=float)

    @property
    def size(self) -> int:
        return len(self.entries)

    def orthonormality_error(self) -> float:
        m = self.array
        return float(np.abs(m.T @ m - np.eye(len(m))).max())

    def scales(self) -> np.ndarray:
        return np.ones(self.size) if self.row_scales is None else np.asarray(self.row_scales)

    def phases(self) -> np.ndarray:
        return np.ones(self.size) if self.column_phases is None else np.asarray(self.column_phases)

    def as_dict(self) -> dict:
        out = {
            "matrix": [list(r) for r in self.entries],
            "from_basis": self.from_basis.as_dict(),
            "to_basis": self.to_basis.as_dict(),
            "orthonormal_expected": self.orthonormal_expected,
            "normalization": self.normalization,
            "source": self.source,
        }
        if self.row_scales is not None:
            out["row_scales"] = list(self.row_scales)
        if self.column_phases is not None:
            out["column_phases"] = list(self.column_phases)
        if self.residual is not None:
            out["residual"] = self.residual
        return out


def _tup(m) -> tuple[tuple[float, ...], ...]:
    return tuple(tuple(float(x) for x in row) for row in np.asarray(m, dtype=float))


# -- oscillator ---------------------------------------------------------------------

def _osc_closed(N: int, m: float) -> np.ndarray:
    s = math.sqrt
    if N in (0, 1):
        return np.eye(1)
    if N == 2:
        d = 2 * m + 3
        return np.array([[s(2 * (m + 1) / d), -s(1 / d)],
                         [s(1 / d), s(2 * (m + 1) / d)]])
    if N == 3:
        d = 2 * m + 5
        return np.array([[s(2 * (m + 1) / d), -s(3 / d)],
                         [s(3 / d), s(2 * (m + 1) / d)]])
    if N == 4:
        a, b, c = 2 * m + 3, 2 * m + 5, 2 * m + 7
        return np.array([
            [s(4 * (m + 1) * (m + 2) / (a * b)), -s(4 * (m + 1) / (a * b)), -s(3 / (a * b))],
            [s(4 * (m + 2) / (a * c)), (2 * m + 1) / s(a * c), s(12 * (m + 1) / (a * c))],
            [s(3 / (b * c)), s(12 * (m + 2) / (b * c)), -s(4 * (m + 1) * (m + 2) / (b * c))],
        ])
    if N == 5:
        a, b, c = 2 * m + 5, 2 * m + 7, 2 * m + 9
        return np.array([
            [s(4 * (m + 1) * (m + 2) / (a * b)), -s(12 * (m + 1) / (a * b)), s(15 / (a * b))],
            [s(12 * (m + 2) / (a * c)), (2 * m - 1) / s(a * c), -s(20 * (m + 1) / (a * c))],
            [s(15 / (b * c)), s(20 * (m + 2) / (b * c)), s(4 * (m + 1) * (m + 2) / (b * c))],
        ])
    raise ValueError("closed forms exist for N <= 5")


# The N = 4 closed form pairs with |n_rho=0, n_z=4> of opposite sign to the
# positive-leading Hermite convention used by eval_eigenfunction.
OSC_COLUMN_PHASES = {4: (1.0, 1.0, -1.0)}


def osc_interbasis_matrix(N: int, mode: AngularMode) -> TransformMatrix:
    """Spherical multiplet in terms of the cylindrical one (unit-normalized states)."""
    src = Basis("osc", "cyl", N, mode)
    dst = Basis("osc", "sph", N, mode)
    if N > 5:
        return numeric_overlap_matrix(src, dst)
    return TransformMatrix(_tup(_osc_closed(N, mode.mu)), src, dst, True, "unit",
                           column_phases=OSC_COLUMN_PHASES.get(N))


def expansion_identity_check(mode: AngularMode, n_points: int = 100, coefficients: str = "printed") -> dict:
    """Max pointwise error of the two lowest polynomial expansion identities.

    ``first``:  ``1 - 2r^2/(2mu+3) = 2(mu+1)/(2mu+3) (1 - rho^2/(mu+1)) - (2z^2-1)/(2mu+3)``.
    ``second``: ``((2mu+3)z^2 - r^2)/(2(mu+1)) = a (1 - rho^2/(mu+1)) + b (2z^2-1)``,
    with ``(a, b) = (1/(2mu+3), 2(mu+1)/(2mu+3))`` for ``coefficients="printed"``
    and ``(1/2, 1/2)`` for ``"exact"``.
    """
    mu = mode.mu
    pts = wedge_points(mode, n_points, rho_max=3.0, z_max=3.0)
    rho, z = pts.rho, pts.z
    r2 = rho**2 + z**2
    radial = 1 - rho**2 / (mu + 1)
    axial = 2 * z**2 - 1
    lhs1 = 1 - 2 * r2 / (2 * mu + 3)
    rhs1 = 2 * (mu + 1) / (2 * mu + 3) * radial - axial / (2 * mu + 3)
    if coefficients == "printed":
        a, b = 1 / (2 * mu + 3), 2 * (mu + 1) / (2 * mu + 3)
    elif coefficients == "exact":
        a, b = 0.5, 0.5
    else:
        raise ValueError("coefficients must be 'printed' or 'exact'")
    lhs2 = ((2 * mu + 3) * z**2 - r2) / (2 * (mu + 1))
    rhs2 = a * radial + b * axial
    return {"first": float(np.abs(lhs1 - rhs1).max()), "second": float(np.abs(lhs2 - rhs2).max()),
            "coefficient_sum": 2 * (mu + 1) / (2 * mu + 3) + 1 / (2 * mu + 3) - 1}


# -- hydrogen ------------------------------------------------------------------------

def _hyd_par_closed(N: int, m: float) -> np.ndarray:
    s = math.sqrt
    if N == 0:
        return np.eye(1)
    if N == 1:
        h = 1 / s(2)
        return np.array([[h, -h], [h, h]])
    if N == 2:
        d = 3 + 2 * m
        return np.array([
            [s((1 + m) / (2 * d)), -s((2 + m) / d), s((1 + m) / (2 * d))],
            [1 / s(2), 0.0, -1 / s(2)],
            [s((2 + m) / (2 * d)), s((1 + m) / d), s((2 + m) / (2 * d))],
        ])
    raise ValueError("closed forms exist for N <= 2")


def hydrogen_sph_par_matrix(N: int, mode: AngularMode) -> TransformMatrix:
    """Spherical multiplet in terms of the parabolic one (unit-normalized states)."""
    src = Basis("hydrogen", "par", N, mode)
    dst = Basis("hydrogen", "sph", N, mode)
    if N > 2:
        return numeric_overlap_matrix(src, dst)
    return TransformMatrix(_tup(_hyd_par_closed(N, mode.mu)), src, dst, True, "unit")


def hydrogen_sph_spheroidal_matrix(N: int, mode: AngularMode, f: float) -> TransformMatrix:
    """Spherical polynomial products in terms of spheroidal products ``S(u) S(v)``.

    Columns follow ascending separation constants ``A_1 < A_2 < ...`` (from
    :func:`wedgeqm.spheroidal.solve_spheroidal`).  Rows are the spherical
    states in ascending ``n_r`` with scales

    * ``N = 1``: ``1/f`` and ``1``,
    * ``N = 2``: ``2(1+mu)/f^2``, ``-2/f`` and ``4``,

    applied to the polynomial-convention eigenfunctions.  In the entries the
    Coulomb coupling appears as ``kappa = 2f/nu``.  For ``N = 2`` every
    column uses the same expression with ``A_j`` first and the other two
    roots after it, each divided by ``prod_{l != j} (A_j - A_l)``.
    """
    if not f > 0:
        raise ValueError("f must be positive")
    mu = mode.mu
    src = Basis("hydrogen", "spheroidal", N, mode, f)
    dst = Basis("hydrogen", "sph", N, mode)
    if N == 0:
        return TransformMatrix(((1.0,),), src, dst, False, "polynomial")
    if N > 2:
        raise ValueError("closed forms exist for N <= 2; use numeric_overlap_matrix")
    A = [s.A for s in solve_spheroidal(SpheroidalSpec(mu, f, N))]
    if min(np.diff(A)) <= 0:
        raise ArithmeticError("separation constants collide")
    nu = N + mu + 1
    kap = 2 * f / nu
    q = 2 * (1 + mu)
    if N == 1:
        a1, a2 = A
        m = np.array([
            [q / (kap * (a2 - a1)) * (a2 - a2**2 / q), -q / (kap * (a2 - a1)) * (a1 - a1**2 / q)],
            [a2**2 / (q * (a2 - a1)), -a1**2 / (q * (a2 - a1))],
        ])
        scales = (1 / f, 1.0)
    else:
        def row1(a, b, c):
            return 8 * (1 + mu) * (q * (4 + 3 * mu - (b + c)) + b * c) / ((a - b) * (a - c))

        def row2(a, b, c):
            return 8 * kap * (1 + mu) * (b - q) * (c - q) / ((a - b) * (a - c) * (a + 2 * kap) * (a - q))

        def row3(a, b, c):
            return (16 * kap**2 * (2 + mu) * (b * c + 4 * kap * (1 + mu))
                    / ((a - b) * (a - c) * (a + 2 * kap) * (3 + 2 * mu) * (a - q)))

        a1, a2, a3 = A
        cyc = [(a1, a2, a3), (a2, a3, a1), (a3, a1, a2)]
        m = np.array([[row(*t) for t in cyc] for row in (row1, row2, row3)])
        scales = (q / f**2, -2 / f, 4.0)
    if not np.all(np.isfinite(m)):
        raise ArithmeticError("singular spheroidal transformation")
    return TransformMatrix(_tup(m), src, dst, False, "polynomial", row_scales=scales)


# -- sampling and numeric oracle -------------------------------------------------------

def wedge_points(mode: AngularMode, n: int, rho_max: float = 3.0, z_max: float = 3.0,
                 seed: int = SAMPLE_SEED) -> Cylindrical:
    """Scrambled Halton points in ``0 < rho < rho_max``, ``0 < phi < phi0``, ``|z| < z_max``."""
    if n == 0:
        return Cylindrical(np.zeros(0), np.zeros(0), np.zeros(0))
    u = qmc.Halton(d=3, scramble=True, seed=seed).random(n)
    return Cylindrical(rho_max * u[:, 0], mode.phi0 * u[:, 1], z_max * (2 * u[:, 2] - 1))


def _box(basis: Basis) -> tuple[float, float]:
    if basis.system == "osc":
        return 3.0, 3.0
    nu = basis.N + basis.mode.mu + 1
    return 2.0 * nu, 2.0 * nu


def basis_values(basis: Basis, points, normalization: str) -> np.ndarray:
    """Matrix with one column per multiplet member, one row per point."""
    return np.column_stack([eval_eigenfunction(s, points, normalization) for s in basis.states()])


def _default_normalization(basis: Basis) -> str:
    return "polynomial" if basis.family == "spheroidal" else "unit"


def numeric_overlap_matrix(from_basis: Basis, to_basis: Basis, normalization: str | None = None,
                           n_points: int | None = None, seed: int = SAMPLE_SEED) -> TransformMatrix:
    """Least-squares expansion of ``to_basis`` states over ``from_basis`` states.

    Uses at least ``4 (N+1)^2`` points; doubles the sample (new seed) when
    the column-scaled design matrix is worse conditioned than ``1e8``.
    """
    if (from_basis.system, from_basis.N, from_basis.mode) != (to_basis.system, to_basis.N, to_basis.mode):
        raise ValueError("bases must share system, N and mode")
    norm_from = normalization or _default_normalization(from_basis)
    norm_to = normalization or _default_normalization(to_basis)
    n = n_points or max(4 * (from_basis.N + 1) ** 2, 64)
    rho_max, z_max = _box(from_basis)
    for attempt in range(4):
        pts = wedge_points(from_basis.mode, n, rho_max, z_max, seed + attempt)
        B = basis_values(from_basis, pts, norm_from)
        A = basis_values(to_basis, pts, norm_to)
        col = np.linalg.norm(B, axis=0)
        if np.all(col > 0) and np.linalg.cond(B / col) <= MAX_CONDITION:
            break
        n *= 2
    else:
        raise ArithmeticError("could not find a well-conditioned sample set")
    X, *_ = np.linalg.lstsq(B, A, rcond=None)
    resid = float(np.linalg.norm(B @ X - A) / max(np.linalg.norm(A), 1e-300))
    ortho = norm_from == norm_to == "unit"
    return TransformMatrix(_tup(X.T), from_basis, to_basis, ortho, norm_to, source="numeric", residual=resid)


def align_signs(numeric: np.ndarray, reference: np.ndarray):
    """Flip columns, then rows, of ``numeric`` to agree in sign with ``reference``.

    Returns ``(aligned, column_flips, row_flips)``; the flips are index lists.
    """
    out = np.array(numeric, dtype=float)
    ref = np.asarray(reference, dtype=float)
    cols = [j for j in range(out.shape[1]) if out[:, j] @ ref[:, j] < 0]
    out[:, cols] *= -1
    rows = [i for i in range(out.shape[0]) if out[i] @ ref[i] < 0]
    out[rows] *= -1
    return out, cols, rows


def expansion_residual(matrix: TransformMatrix, n_points: int = 100, seed: int = SAMPLE_SEED) -> float:
    """Max relative pointwise error of ``scale_i psi^A_i = sum_j M_ij phase_j psi^B_j``."""
    rho_max, z_max = _box(matrix.from_basis)
    pts = wedge_points(matrix.from_basis.mode, n_points, rho_max, z_max, seed)
    B = basis_values(matrix.from_basis, pts, matrix.normalization) * matrix.phases()
    A = basis_values(matrix.to_basis, pts, matrix.normalization) * matrix.scales()
    lhs = B @ matrix.array.T
    scale = np.abs(A).max(axis=0)
    return float((np.abs(lhs - A) / scale).max())


def energy_spread(matrix: TransformMatrix) -> float:
    """Largest energy difference among all states linked by ``matrix``."""
    es = [energy(s) for s in matrix.from_basis.states() + matrix.to_basis.states()]
    return max(es) - min(es)
