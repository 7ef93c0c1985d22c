"""Tests for the interbasis transformation matrices."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wedgeqm.interbasis import (Basis, TransformMatrix, align_signs, energy_spread, expansion_identity_check,
                                expansion_residual, hydrogen_sph_par_matrix, hydrogen_sph_spheroidal_matrix,
                                numeric_overlap_matrix, osc_interbasis_matrix, wedge_points)
from wedgeqm.states import AngularMode, multiplet
from wedgeqm.spheroidal import SpheroidalSpec, solve_spheroidal

import tables

MODES = [AngularMode.from_mu(mu) for mu in tables.MU_GRID]
h = 1 / math.sqrt(2)


# -- documented examples ---------------------------------------------------------------

def test_oscillator_doublet_example():
    m = osc_interbasis_matrix(2, AngularMode.from_mu(0.5)).array
    np.testing.assert_allclose(m, [[math.sqrt(0.75), -0.5], [0.5, math.sqrt(0.75)]], atol=1e-15)


@pytest.mark.parametrize("N", [0, 1])
def test_oscillator_singletons(N):
    assert osc_interbasis_matrix(N, AngularMode(1, 2.0)).entries == ((1.0,),)


def test_oscillator_triplet_corner():
    mu = 0.7
    m = osc_interbasis_matrix(4, AngularMode.from_mu(mu)).array
    assert math.isclose(m[0, 0], math.sqrt(4 * (mu + 1) * (mu + 2) / ((2 * mu + 3) * (2 * mu + 5))), rel_tol=1e-15)


def test_hydrogen_parabolic_examples():
    mu = 1.3
    mode = AngularMode.from_mu(mu)
    np.testing.assert_allclose(hydrogen_sph_par_matrix(1, mode).array, [[h, -h], [h, h]], atol=1e-16)
    m = hydrogen_sph_par_matrix(2, mode).array
    np.testing.assert_allclose(m[1], [h, 0, -h], atol=1e-16)
    assert math.isclose(m[0, 0], math.sqrt((1 + mu) / (2 * (3 + 2 * mu))), rel_tol=1e-15)


def test_spheroidal_entry_example():
    mu, f = 0.5, 1.0
    mode = AngularMode.from_mu(mu)
    a1, a2 = (s.A for s in solve_spheroidal(SpheroidalSpec(mu, f, 1)))
    m = hydrogen_sph_spheroidal_matrix(1, mode, f)
    kap = 2 * f / (mu + 2)
    want = 2 * (1 + mu) / (kap * (a2 - a1)) * (a2 - a2**2 / (2 * (1 + mu)))
    assert math.isclose(m.array[0, 0], want, rel_tol=1e-14)
    assert m.row_scales == (1.0, 1.0) and not m.orthonormal_expected
    assert expansion_residual(m, n_points=20) < 1e-10


# -- orthonormality ----------------------------------------------------------------------

@pytest.mark.parametrize("mode", MODES, ids=str)
@pytest.mark.parametrize("N", range(6))
def test_oscillator_orthonormal(N, mode):
    assert osc_interbasis_matrix(N, mode).orthonormality_error() < 1e-12


@pytest.mark.parametrize("mode", MODES, ids=str)
@pytest.mark.parametrize("N", range(3))
def test_hydrogen_parabolic_orthonormal(N, mode):
    assert hydrogen_sph_par_matrix(N, mode).orthonormality_error() < 1e-12


@given(st.integers(2, 5), st.floats(0.05, 20.0))
def test_oscillator_orthonormal_any_mu(N, mu):
    assert osc_interbasis_matrix(N, AngularMode.from_mu(mu)).orthonormality_error() < 1e-12


# -- pointwise expansions ----------------------------------------------------------------

@pytest.mark.parametrize("mode", MODES, ids=str)
@pytest.mark.parametrize("N", range(6))
def test_oscillator_expansion(N, mode):
    assert expansion_residual(osc_interbasis_matrix(N, mode)) < 1e-10


@pytest.mark.parametrize("mode", MODES, ids=str)
@pytest.mark.parametrize("N", range(3))
def test_hydrogen_parabolic_expansion(N, mode):
    assert expansion_residual(hydrogen_sph_par_matrix(N, mode)) < 1e-10


@pytest.mark.parametrize("mode", MODES, ids=str)
@pytest.mark.parametrize("f", [0.1, 1.0, 2.5])
@pytest.mark.parametrize("N", [1, 2])
def test_spheroidal_expansion(N, f, mode):
    m = hydrogen_sph_spheroidal_matrix(N, mode, f)
    assert expansion_residual(m) < 1e-10
    assert np.linalg.cond(m.array) < 1e12


def test_spheroidal_expansion_on_wedge():
    m = hydrogen_sph_spheroidal_matrix(2, AngularMode(2, 2.5), 0.6)
    assert expansion_residual(m, n_points=20) < 1e-10


def test_spheroidal_ground_is_trivial():
    m = hydrogen_sph_spheroidal_matrix(0, AngularMode(1, 2.0), 1.0)
    assert m.entries == ((1.0,),)


def test_spheroidal_rejects_bad_focal_distance():
    with pytest.raises(ValueError):
        hydrogen_sph_spheroidal_matrix(1, AngularMode(1, 2.0), 0.0)
    with pytest.raises(ValueError):
        hydrogen_sph_spheroidal_matrix(3, AngularMode(1, 2.0), 1.0)


def test_expansion_detects_wrong_matrix():
    m = osc_interbasis_matrix(2, AngularMode.from_mu(0.5))
    bad = TransformMatrix(tuple(tuple(r) for r in m.array.T), m.from_basis, m.to_basis, True)
    assert expansion_residual(bad) > 1e-3


# -- numeric oracle ----------------------------------------------------------------------

@pytest.mark.parametrize("mode", MODES, ids=str)
@pytest.mark.parametrize("N", range(2, 6))
def test_oracle_recovers_oscillator(N, mode):
    closed = osc_interbasis_matrix(N, mode)
    numeric = numeric_overlap_matrix(closed.from_basis, closed.to_basis)
    assert numeric.residual < 1e-10
    aligned, cols, rows = align_signs(numeric.array, closed.array * closed.phases())
    np.testing.assert_allclose(aligned, closed.array * closed.phases(), atol=1e-8)
    assert rows == []


def test_oracle_flags_oscillator_sign_convention():
    # the printed N = 4 triplet pairs with the opposite sign of |n_rho=0, n_z=4>
    closed = osc_interbasis_matrix(4, AngularMode.from_mu(0.5))
    numeric = numeric_overlap_matrix(closed.from_basis, closed.to_basis)
    _, cols, rows = align_signs(numeric.array, closed.array)
    assert cols == [2] and rows == []


@pytest.mark.parametrize("mode", MODES, ids=str)
@pytest.mark.parametrize("N", [1, 2])
def test_oracle_recovers_hydrogen_parabolic(N, mode):
    closed = hydrogen_sph_par_matrix(N, mode)
    numeric = numeric_overlap_matrix(closed.from_basis, closed.to_basis)
    aligned, cols, rows = align_signs(numeric.array, closed.array)
    np.testing.assert_allclose(aligned, closed.array, atol=1e-8)
    assert cols == rows == []


@pytest.mark.parametrize("N", [1, 2])
def test_oracle_recovers_spheroidal(N):
    mode, f = AngularMode.from_mu(0.5), 1.3
    closed = hydrogen_sph_spheroidal_matrix(N, mode, f)
    numeric = numeric_overlap_matrix(closed.from_basis, closed.to_basis, normalization="polynomial")
    np.testing.assert_allclose(numeric.array, closed.array / closed.scales()[:, None], rtol=1e-8, atol=1e-10)
    assert not numeric.orthonormal_expected


@pytest.mark.parametrize("N", [6, 7])
def test_large_N_routes_to_oracle(N):
    m = osc_interbasis_matrix(N, AngularMode.from_mu(0.8))
    assert m.source == "numeric" and m.orthonormality_error() < 1e-8
    assert m.size == N // 2 + 1


def test_large_N_hydrogen_routes_to_oracle():
    m = hydrogen_sph_par_matrix(3, AngularMode.from_mu(0.8))
    assert m.source == "numeric" and m.orthonormality_error() < 1e-8


def test_oracle_rejects_mismatched_bases():
    mode = AngularMode(1, 2.0)
    with pytest.raises(ValueError):
        numeric_overlap_matrix(Basis("osc", "cyl", 2, mode), Basis("osc", "sph", 4, mode))


def test_align_signs_examples():
    ref = np.array([[1.0, 2.0], [3.0, -4.0]])
    out, cols, rows = align_signs(-ref, ref)
    np.testing.assert_array_equal(out, ref)
    assert cols == [0, 1] and rows == []


# -- polynomial identities ---------------------------------------------------------------

@pytest.mark.parametrize("mode", MODES, ids=str)
def test_first_identity_holds(mode):
    assert expansion_identity_check(mode)["first"] < 1e-12


@pytest.mark.parametrize("mode", MODES, ids=str)
def test_second_identity_printed_coefficients_fail(mode):
    # the printed coefficients disagree with the left-hand side away from z = 0
    assert expansion_identity_check(mode, coefficients="printed")["second"] > 1e-3


@pytest.mark.parametrize("mode", MODES, ids=str)
def test_second_identity_holds_with_halves(mode):
    assert expansion_identity_check(mode, coefficients="exact")["second"] < 1e-12


@given(st.floats(0.05, 10.0))
def test_first_identity_coefficients_sum(mu):
    assert abs(expansion_identity_check(AngularMode.from_mu(mu), n_points=5)["coefficient_sum"]) < 1e-15


def test_identity_rejects_unknown_coefficients():
    with pytest.raises(ValueError):
        expansion_identity_check(AngularMode(1, 2.0), coefficients="other")


# -- energies and metadata ---------------------------------------------------------------

@pytest.mark.parametrize("mode", MODES, ids=str)
def test_linked_states_share_energy(mode):
    for m in (osc_interbasis_matrix(4, mode), hydrogen_sph_par_matrix(2, mode),
              hydrogen_sph_spheroidal_matrix(2, mode, 0.9)):
        assert energy_spread(m) < 1e-14


def test_basis_labels_follow_multiplet_order():
    mode = AngularMode(1, 2.0)
    m = osc_interbasis_matrix(4, mode)
    assert m.from_basis.labels() == [(2, 0), (1, 2), (0, 4)]
    assert [s.quantum_numbers for s in multiplet("osc", "sph", 4, mode)] == m.to_basis.labels()


def test_as_dict_fields():
    d = hydrogen_sph_spheroidal_matrix(1, AngularMode.from_mu(0.5), 1.0).as_dict()
    assert d["normalization"] == "polynomial" and d["row_scales"] == [1.0, 1.0]
    assert d["from_basis"]["f"] == 1.0 and d["from_basis"]["abstract"] is True
    assert "column_phases" not in d and "residual" not in d


def test_wedge_points_lie_in_the_wedge():
    mode = AngularMode(2, 1.7)
    p = wedge_points(mode, 200)
    assert np.all((p.rho > 0) & (p.rho < 3)) and np.all((p.phi > 0) & (p.phi < mode.phi0))
    assert np.all(np.abs(p.z) < 3)
    assert wedge_points(mode, 0).rho.size == 0


@settings(max_examples=20, deadline=None)
@given(st.floats(0.2, 5.0), st.floats(0.05, 3.0))
def test_spheroidal_expansion_property(mu, f):
    m = hydrogen_sph_spheroidal_matrix(1, AngularMode.from_mu(mu), f)
    assert expansion_residual(m, n_points=30) < 1e-10
