import math

import numpy as np
import pytest

from vsheet.errors import ContractError, FibrationNotSupportedError
from vsheet.geometry import (
    beta_on,
    clairaut_constant,
    curvature_field,
    dealias,
    enclosed_volume,
    fiber_lengths,
    fubini_length_integral,
    geodesic_curvature_integral,
    periodic_quadrature,
    sheet_frames,
    sigma_form,
    spectral_antiderivative,
    spectral_derivative,
    wedge_integral,
)
from vsheet.observables import hamiltonian, vertical_impulse
from vsheet.sheet import (
    MERIDIANS,
    Fibration,
    FourierSeries,
    Grid,
    RevolutionSheet,
    ZetaSpec,
    make_fourier_preset,
    make_torus_preset,
)
from vsheet.stationarity import geodesic_fibration_form
from vsheet.verify import all_presets


def parallel_torus(n=128, R=2.0, r=1.0, ell=1.0):
    return make_torus_preset(R, r, ell=ell, n_samples=n)


def meridian_torus(n=128, R=2.0, r=1.0, ell=1.0):
    return make_torus_preset(R, r, MERIDIANS, ell=ell, n_samples=n)


def sup(values):
    return float(np.max(np.abs(values)))


class TestSpectral:
    @pytest.fixture
    def rho(self):
        return Grid(64).rho

    def test_derivative_of_cosine(self, rho):
        assert sup(spectral_derivative(np.cos(rho)) + np.sin(rho)) <= 1e-13

    def test_winding_adds_constant(self, rho):
        assert sup(spectral_derivative(np.zeros_like(rho), 2 * math.pi) - 1) <= 1e-15

    def test_second_derivative(self, rho):
        f = np.sin(3 * rho) + np.cos(5 * rho)
        expected = -9 * np.sin(3 * rho) - 25 * np.cos(5 * rho)
        assert sup(spectral_derivative(spectral_derivative(f)) - expected) <= 1e-11

    def test_antiderivative_inverts_derivative(self, rho):
        f = np.exp(np.sin(rho))
        assert sup(spectral_derivative(spectral_antiderivative(f)) - (f - np.mean(f))) <= 1e-12
        assert abs(np.mean(spectral_antiderivative(f))) <= 1e-15

    def test_dealias(self, rho):
        filtered = dealias(np.cos(5 * rho) + np.cos(30 * rho))
        assert sup(filtered - np.cos(5 * rho)) <= 1e-13

    def test_quadrature_is_exact_for_trigonometric_polynomials(self, rho):
        assert periodic_quadrature(np.cos(rho) ** 2) == pytest.approx(math.pi, rel=1e-15)
        assert periodic_quadrature(np.ones_like(rho)) == pytest.approx(2 * math.pi, rel=1e-15)

    @pytest.mark.parametrize('samples', [np.zeros(15), np.zeros(8), np.zeros((16, 2))])
    def test_bad_shapes(self, samples):
        with pytest.raises(ContractError):
            spectral_derivative(samples)

    def test_length_mismatch(self, rho):
        with pytest.raises(ContractError):
            spectral_derivative(np.cos(rho), n_samples=128)


class TestCurvatures:
    def test_parallel_torus(self):
        sheet = parallel_torus()
        rho = sheet.grid.rho
        field = curvature_field(sheet)
        assert sup(field.k_n - np.cos(rho) / (2 + np.cos(rho))) <= 1e-10
        assert sup(field.k_g - np.sin(rho) / (2 + np.cos(rho))) <= 1e-10
        assert sup(field.k - 1 / (2 + np.cos(rho))) <= 1e-10
        assert sup(field.T - [0.0, -1.0, 0.0]) <= 1e-13

    @pytest.mark.parametrize('name', sorted(all_presets(64)))
    def test_refinement_agrees_on_shared_samples(self, name):
        coarse = curvature_field(all_presets(64)[name])
        fine = curvature_field(all_presets(128)[name])
        for field in ('k', 'k_n', 'k_g', 'T', 'n_g', 'n'):
            assert sup(getattr(coarse, field) - getattr(fine, field)[::2]) <= 1e-10

    @pytest.mark.parametrize('R,r,tolerance', [(2.0, 1.0, 1e-12), (3.0, 0.5, 1e-11)])
    def test_meridian_torus(self, R, r, tolerance):
        field = curvature_field(meridian_torus(64, R=R, r=r))
        assert sup(field.k_g) <= tolerance
        assert sup(field.k_n + 1 / r) <= tolerance

    def test_custom_not_supported(self):
        sheet = make_fourier_preset(
            FourierSeries(cos=(2.0, 1.0)), FourierSeries(sin=(0.0, 1.0)),
            ZetaSpec(winding=3.0, c=1 / math.pi), n_samples=32, fibration=Fibration.custom(),
        )
        with pytest.raises(FibrationNotSupportedError):
            curvature_field(sheet)

    @pytest.mark.parametrize('name', sorted(all_presets(64)))
    def test_frames(self, name):
        sheet = all_presets(128)[name]
        field = curvature_field(sheet)
        identity = np.eye(3)
        for frame in ((field.T, field.n_g, field.n), (field.T, field.N, field.B)):
            gram = np.einsum('aij,bij->iab', np.stack(frame), np.stack(frame))
            assert np.max(np.abs(gram - identity)) <= 1e-12
        assert np.max(np.abs(np.cross(field.n_g, field.n) - field.T)) <= 1e-12
        assert np.min(field.beta_ng) > 0
        assert sup(field.k_n[:, None] * field.n + field.k_g[:, None] * field.n_g - field.curvature_vector) <= 1e-10
        expected = field.k_g[:, None] * field.n - field.k_n[:, None] * field.n_g
        assert sup(field.binormal_curvature - expected) <= 1e-10

    @pytest.mark.parametrize('name', sorted(all_presets(64)))
    def test_beta_on_frame(self, name):
        sheet = all_presets(128)[name]
        field = curvature_field(sheet)
        assert sup(beta_on(sheet.curve, sheet.zeta_rho, sheet.c, field.n_g) - field.beta_ng) <= 1e-12
        assert sup(beta_on(sheet.curve, sheet.zeta_rho, sheet.c, field.T)) <= 1e-12
        assert sup(beta_on(sheet.curve, sheet.zeta_rho, sheet.c, field.n)) <= 1e-12

    @pytest.mark.parametrize('name', sorted(all_presets(64)))
    def test_total_geodesic_curvature_vanishes(self, name):
        assert abs(geodesic_curvature_integral(all_presets(128)[name])) <= 1e-12


class TestVolume:
    def test_torus(self):
        assert enclosed_volume(parallel_torus(64)) == pytest.approx(4 * math.pi ** 2, rel=1e-14)
        assert enclosed_volume(meridian_torus(64)) == pytest.approx(4 * math.pi ** 2, rel=1e-14)

    def test_reflection_flips_sign(self):
        sheet = parallel_torus(64)
        reflected = RevolutionSheet(sheet.curve.reflected(), sheet.vorticity)
        assert enclosed_volume(reflected) == pytest.approx(-4 * math.pi ** 2, rel=1e-14)

    def test_independent_of_grid_and_starting_point(self):
        sheet = parallel_torus(64)
        rotated = RevolutionSheet(sheet.curve.rotated(5), sheet.vorticity)
        assert enclosed_volume(rotated) == pytest.approx(enclosed_volume(sheet), rel=1e-13)
        assert enclosed_volume(parallel_torus(128)) == pytest.approx(enclosed_volume(sheet), rel=1e-13)

    def test_translation(self):
        sheet = parallel_torus(64)
        assert enclosed_volume(sheet.translated(3.0)) == pytest.approx(enclosed_volume(sheet), rel=1e-13)


class TestWedge:
    def test_d_rho_pairs_to_zero_on_parallel_sheets(self):
        assert wedge_integral(1.0, 0.0, parallel_torus(64)) == pytest.approx(0.0, abs=1e-15)

    def test_sigma_recovers_hamiltonian(self):
        for sheet in (parallel_torus(64), meridian_torus(64)):
            assert wedge_integral(*sigma_form(sheet), sheet) == pytest.approx(hamiltonian(sheet), rel=1e-13)

    def test_meridian_sigma(self):
        sheet = meridian_torus(64, r=0.5, ell=3.0)
        assert wedge_integral(*sigma_form(sheet), sheet) == pytest.approx(2 * math.pi * 0.5 * 3.0, rel=1e-13)

    def test_half_xi_squared_is_vertical_impulse(self):
        sheet = parallel_torus(64)
        assert wedge_integral(0.0, 0.5 * sheet.curve.xi ** 2, sheet) == pytest.approx(vertical_impulse(sheet), rel=1e-13)


class TestFibers:
    def test_parallel_lengths(self):
        sheet = parallel_torus(64)
        assert np.allclose(fiber_lengths(sheet), 2 * math.pi * sheet.curve.xi)
        assert fubini_length_integral(sheet) == pytest.approx(hamiltonian(sheet), rel=1e-13)

    def test_meridian_lengths(self):
        sheet = meridian_torus(64, r=0.5)
        assert np.allclose(fiber_lengths(sheet), math.pi)
        assert fubini_length_integral(sheet) == pytest.approx(hamiltonian(sheet), rel=1e-13)

    @pytest.mark.parametrize('kappa', [0.0, 0.5, 0.9])
    def test_clairaut_constant_of_geodesic_form(self, kappa):
        curve = parallel_torus(256).curve
        vorticity = geodesic_fibration_form(curve, 1.0, kappa)
        assert sup(clairaut_constant(curve, vorticity.zeta_rho, 1.0) - kappa) <= 1e-10

    def test_parallel_circles_are_not_geodesics(self):
        field = sheet_frames(parallel_torus())
        assert sup(field.k_g) == pytest.approx(1 / math.sqrt(3), rel=1e-3)
