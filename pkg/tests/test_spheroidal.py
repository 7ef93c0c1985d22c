"""Tests for the prolate spheroidal recurrence and its solutions."""

import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from wedgeqm.polycore import Spheroidal, ode_residual, Polynomial
from wedgeqm.spheroidal import (FORMS, SpheroidalError, SpheroidalSpec, build_tridiagonal, charpoly_crosscheck,
                                closed_form_coeffs, count_nodes, ode_derive_recurrence, recurrence_residual,
                                solve_spheroidal, spheroidal_product_eval)
from wedgeqm.states import AngularMode, Cartesian, HydSpheroidal, eval_eigenfunction

import tables


def _grid(n=50, seed=7):
    """Deterministic (mu, f, N) sample with N <= 6."""
    rng = np.random.default_rng(seed)
    return [(float(rng.uniform(0.3, 5.0)), float(10 ** rng.uniform(-2, 1.3)), int(rng.integers(0, 7)))
            for _ in range(n)]


GRID = _grid()


# -- matrix construction ------------------------------------------------------------------------

def test_matrix_example_both_forms():
    spec = SpheroidalSpec(0.5, 1.0, 1)
    assert spec.nu == 2.5 and math.isclose(2 * spec.k, 0.8)
    np.testing.assert_allclose(build_tridiagonal(spec, "printed").matrix(), [[0, 3], [0.8, 2.2]], rtol=1e-15)
    np.testing.assert_allclose(build_tridiagonal(spec, "ode").matrix(), [[0, 3], [0.8, 1.4]], rtol=1e-15)


def test_matrix_example_n2():
    spec = SpheroidalSpec(0.5, 1.0, 2)
    k = 1 / 3.5
    m = build_tridiagonal(spec).matrix()
    want = [[0, 3, 0], [4 * k, 3 - 4 * k, 10], [0, 2 * k, 2 * (4 - 4 * k)]]
    np.testing.assert_allclose(m, want, rtol=1e-15)


@pytest.mark.parametrize("mu, f, N", GRID[:10])
def test_off_diagonal_products_positive(mu, f, N):
    for form in FORMS:
        s = build_tridiagonal(SpheroidalSpec(mu, f, N), form)
        assert all(a * b > 0 for a, b in zip(s.sub, s.sup))


def test_zero_focal_distance_is_triangular():
    m = build_tridiagonal(SpheroidalSpec(0.7, 0.0, 1)).matrix()
    assert m[1, 0] == 0.0
    np.testing.assert_allclose(np.sort(np.linalg.eigvals(m)), [0.0, 2 * 0.7 + 2])


@pytest.mark.parametrize("bad", [(0.0, 1.0, 1), (0.5, -1.0, 1), (0.5, 1.0, -1), (0.5, math.inf, 1), (0.5, 1.0, 1.5)])
def test_spec_validation(bad):
    with pytest.raises(ValueError):
        SpheroidalSpec(*bad)


def test_unknown_form():
    with pytest.raises(ValueError):
        build_tridiagonal(SpheroidalSpec(0.5, 1.0, 1), "other")


# -- eigenvalues ------------------------------------------------------------------------------------

def test_n1_spectrum_from_the_differential_equation():
    sols = solve_spheroidal(SpheroidalSpec(0.5, 1.0, 1))
    np.testing.assert_allclose([s.A for s in sols], [-1.0, 2.4], rtol=1e-14)
    assert math.isclose(sols[0].coeffs[1], -1.0 / 3.0, rel_tol=1e-14)


def test_n1_spectrum_of_the_printed_recurrence():
    sols = solve_spheroidal(SpheroidalSpec(0.5, 1.0, 1), "printed")
    np.testing.assert_allclose([s.A for s in sols], [-0.8, 3.0], rtol=1e-14)
    assert math.isclose(sols[0].coeffs[1], -0.8 / 3.0, rel_tol=1e-14)


@pytest.mark.parametrize("form", FORMS)
def test_n2_spectrum_matches_cubic_roots(form):
    spec = SpheroidalSpec(0.5, 1.0, 2)
    A = sp.symbols("A")
    m = sp.Matrix(build_tridiagonal(spec, form).matrix().tolist())
    cubic = sp.Poly((A * sp.eye(3) - m).det(), A)
    roots = np.sort(np.roots([float(c) for c in cubic.all_coeffs()]).real)
    np.testing.assert_allclose([s.A for s in solve_spheroidal(spec, form)], roots, rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize("mu", tables.MU_GRID)
@pytest.mark.parametrize("N", range(7))
def test_small_focal_distance_limit(mu, N):
    for form in FORMS:
        got = [s.A for s in solve_spheroidal(SpheroidalSpec(mu, 1e-8, N), form)]
        want = [n * (n + 2 * mu + 1) for n in range(N + 1)]
        np.testing.assert_allclose(got, want, rtol=0, atol=1e-6)


@pytest.mark.parametrize("mu, f, N", GRID)
def test_grid_spectra_real_simple_and_exact(mu, f, N):
    spec = SpheroidalSpec(mu, f, N)
    sols = solve_spheroidal(spec)
    assert len(sols) == N + 1
    A = [s.A for s in sols]
    assert all(np.isfinite(A)) and all(b - a > 1e-10 for a, b in zip(A, A[1:]))
    system = build_tridiagonal(spec)
    for s in sols:
        assert s.coeffs[0] == 1.0
        assert recurrence_residual(system, s.A, s.coeffs) < 1e-12
    # the matrix is real; a general eigen-solver agrees and finds no imaginary parts
    ev = np.linalg.eigvals(system.matrix())
    assert np.abs(ev.imag).max() <= 1e-10 * max(1.0, np.abs(ev).max())
    np.testing.assert_allclose(np.sort(ev.real), A, rtol=1e-9, atol=1e-9)


@given(st.floats(0.1, 6), st.floats(0.01, 20), st.integers(1, 6))
@settings(max_examples=40, deadline=None)
def test_spectrum_is_continuous_in_f(mu, f, N):
    a = np.array([s.A for s in solve_spheroidal(SpheroidalSpec(mu, f, N))])
    b = np.array([s.A for s in solve_spheroidal(SpheroidalSpec(mu, f * (1 + 1e-7), N))])
    assert np.abs(a - b).max() <= 1e-4 * max(1.0, np.abs(a).max())


def test_zero_focal_distance_is_refused():
    with pytest.raises(SpheroidalError):
        solve_spheroidal(SpheroidalSpec(0.5, 0.0, 2))


def test_error_is_arithmetic():
    assert issubclass(SpheroidalError, ArithmeticError)


# -- node counting ------------------------------------------------------------------------------------

@pytest.mark.parametrize("mu, f, N", GRID[:25])
def test_nodes_follow_the_eigenvalue_order(mu, f, N):
    for s in solve_spheroidal(SpheroidalSpec(mu, f, N)):
        assert count_nodes(s.coeffs) == (s.n_u, s.n_v) == (N - s.index, s.index)


# -- differential-equation oracle -----------------------------------------------------------------------

def test_derived_recurrence_matches_the_ode_form_only():
    derived = ode_derive_recurrence()
    spec = SpheroidalSpec(0.5, 1.0, 1)
    assert derived.matches(build_tridiagonal(spec, "ode"))
    assert not derived.matches(build_tridiagonal(spec, "printed"))


@pytest.mark.parametrize("mu, f, N", GRID[:10])
def test_derived_recurrence_numerically(mu, f, N):
    spec = SpheroidalSpec(mu, f, N)
    d, s = ode_derive_recurrence().numeric(spec), build_tridiagonal(spec)
    np.testing.assert_allclose(d.diag, s.diag, rtol=1e-13, atol=1e-13)
    np.testing.assert_allclose(d.sub, s.sub, rtol=1e-13)
    np.testing.assert_allclose(d.sup, s.sup, rtol=1e-13)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_classical_limit_at_integer_mu(m):
    # l(l+1) - m(m+1) with l = n + m
    got = [s.A for s in solve_spheroidal(SpheroidalSpec(float(m), 1e-9, 4))]
    want = [(n + m) * (n + m + 1) - m * (m + 1) for n in range(5)]
    np.testing.assert_allclose(got, want, atol=1e-6)


@pytest.mark.parametrize("mu, f, N", GRID[:20])
def test_polynomial_ode_residual(mu, f, N):
    spec = SpheroidalSpec(mu, f, N)
    for s in solve_spheroidal(spec):
        p = Polynomial.exact(s.coeffs, "w")
        assert ode_residual(Spheroidal(spec, s.A, s.coeffs)).max_abs() <= 1e-12 * max(1.0, abs(s.A)) * p.max_abs()


def test_printed_recurrence_fails_the_ode():
    spec = SpheroidalSpec(0.5, 1.0, 1)
    s = solve_spheroidal(spec, "printed")[0]
    assert ode_residual(Spheroidal(spec, s.A, s.coeffs)).max_abs() > 1e-3


def _schrodinger_residual(state, pts, h=1e-3):
    """Relative residual of -lap(psi)/2 - psi/r - E psi with a fourth-order stencil."""
    def psi(x, y, z):
        return eval_eigenfunction(state, Cartesian(x, y, z))
    x, y, z = pts.T
    c = np.array([-1, 16, -30, 16, -1]) / (12 * h * h)
    lap = 0.0
    for axis in range(3):
        for j, w in zip(range(-2, 3), c):
            d = [0.0, 0.0, 0.0]
            d[axis] = j * h
            lap = lap + w * psi(x + d[0], y + d[1], z + d[2])
    val = psi(x, y, z)
    r = np.sqrt(x**2 + y**2 + z**2)
    res = -0.5 * lap - val / r + 0.5 / state.nu**2 * val
    return np.abs(res).max() / np.abs(val).max()


@pytest.mark.parametrize("n_u, n_v", [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)])
def test_states_solve_the_schrodinger_equation(n_u, n_v):
    mode = AngularMode(1, 2.5)
    state = HydSpheroidal(n_u, n_v, mode, 0.8)
    rng = np.random.default_rng(3)
    r = rng.uniform(0.5, 4.0, 12)
    th = rng.uniform(0.4, 2.7, 12)
    ph = rng.uniform(0.4, 2.1, 12)
    pts = np.column_stack([r * np.sin(th) * np.cos(ph), r * np.sin(th) * np.sin(ph), r * np.cos(th)])
    assert _schrodinger_residual(state, pts) < 1e-6


# -- reference cross-checks ---------------------------------------------------------------------------------

def test_charpoly_report_n1():
    rep = charpoly_crosscheck(SpheroidalSpec(0.5, 1.0, 1))
    assert rep.N == 1
    assert rep.mismatches("ode_matches_nu") == []
    assert rep.mismatches("ode_matches_literal") == [1, 0]
    assert rep.mismatches("printed_form_matches_nu") == [1]
    lin = next(r for r in rep.rows if r.power == 1)
    assert math.isclose(lin.values["ode"], -1.4, rel_tol=1e-12)
    assert math.isclose(lin.values["printed_form"], -2.2, rel_tol=1e-12)


def test_charpoly_report_n2():
    rep = charpoly_crosscheck(SpheroidalSpec(0.5, 1.0, 2))
    assert rep.mismatches("ode_matches_nu") == [1]
    assert rep.mismatches("printed_form_matches_nu") == [2, 1, 0]
    d = rep.as_dict()
    assert d["N"] == 2 and len(d["coefficients"]) == 4


def test_charpoly_report_rejects_other_levels():
    with pytest.raises(ValueError):
        charpoly_crosscheck(SpheroidalSpec(0.5, 1.0, 3))


# -- closed forms and products ----------------------------------------------------------------------------

@pytest.mark.parametrize("mu", tables.MU_GRID)
@pytest.mark.parametrize("f", [0.3, 1.0, 4.0])
@pytest.mark.parametrize("N", [1, 2])
def test_closed_form_coefficients(mu, f, N):
    spec = SpheroidalSpec(mu, f, N)
    for s in solve_spheroidal(spec):
        np.testing.assert_allclose(closed_form_coeffs(spec, s.A), s.coeffs, rtol=1e-10, atol=1e-12)
        u, v = np.linspace(1, 3, 7), np.linspace(-1, 1, 7)
        np.testing.assert_allclose(spheroidal_product_eval(spec, s, u, v, closed_form=True),
                                   spheroidal_product_eval(spec, s, u, v), rtol=1e-10, atol=1e-12)


def test_closed_form_first_coefficient():
    spec = SpheroidalSpec(0.5, 1.0, 1)
    assert closed_form_coeffs(spec, -0.8) == (1.0, -0.8 / 3)


def test_printed_second_coefficient_fails_the_recurrence():
    spec = SpheroidalSpec(0.5, 1.0, 2)
    system = build_tridiagonal(spec)
    for s in solve_spheroidal(spec):
        assert recurrence_residual(system, s.A, closed_form_coeffs(spec, s.A, as_printed=True)) > 1e-3


def test_product_at_the_corner_is_one():
    spec = SpheroidalSpec(1.1, 0.9, 3)
    for s in solve_spheroidal(spec):
        assert spheroidal_product_eval(spec, s, 1.0, 1.0) == 1.0


def test_product_rejects_out_of_range():
    spec = SpheroidalSpec(1.1, 0.9, 1)
    s = solve_spheroidal(spec)[0]
    with pytest.raises(ValueError):
        spheroidal_product_eval(spec, s, 0.5, 0.0)
    with pytest.raises(ValueError):
        spheroidal_product_eval(spec, s, 1.5, 1.5)
