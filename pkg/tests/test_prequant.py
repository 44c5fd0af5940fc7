import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from vsheet.errors import GeometryError, IllDefinedMapError, NotInIsotropyError
from vsheet.prequant import (
    TWO_PI,
    circle_distance,
    flux_derivative,
    kernel_order,
    kernel_points,
    m_a_map,
    onsager_feynman,
    onsager_feynman_condition,
)
from vsheet.sheet import MERIDIANS, RevolutionSheet, make_torus_preset


SMALL_R = math.sqrt(1 / (2 * math.pi))


class TestCondition:
    @pytest.mark.parametrize('a,ell,k', [
        (4 * math.pi ** 2, 1 / (2 * math.pi), 1),
        (2 * math.pi, 3.0, 3),
        (4 * math.pi, 2.5, 5),
        (4 * math.pi ** 2, 1.0, None),
        (2 * math.pi, 0.5, None),
    ])
    def test_arithmetic(self, a, ell, k):
        report = onsager_feynman_condition(a, ell)
        assert report.k == k
        assert report.prequantizable == (k is not None)
        assert report.product_over_2pi == pytest.approx(a * ell / TWO_PI)

    def test_negative_product(self):
        assert not onsager_feynman_condition(-2 * math.pi, 1.0).prequantizable

    def test_as_dict(self):
        document = onsager_feynman_condition(2 * math.pi, 3.0).as_dict()
        assert list(document) == ['a', 'ell', 'product_over_2pi', 'k', 'prequantizable']


class TestSheets:
    def test_prequantizable_torus(self):
        report = onsager_feynman(make_torus_preset(2.0, SMALL_R, ell=3.0, n_samples=64))
        assert report.a == pytest.approx(2 * math.pi, rel=1e-12)
        assert report.ell == pytest.approx(3.0)
        assert report.k == 3

    def test_meridian_torus(self):
        report = onsager_feynman(make_torus_preset(2.0, SMALL_R, MERIDIANS, ell=2.0, n_samples=64))
        assert report.k == 2

    def test_standard_torus(self):
        assert not onsager_feynman(make_torus_preset(2.0, 1.0, n_samples=64)).prequantizable
        assert onsager_feynman(make_torus_preset(2.0, 1.0, ell=1 / (2 * math.pi), n_samples=64)).k == 1

    def test_grid_independence(self):
        coarse = onsager_feynman(make_torus_preset(2.0, SMALL_R, ell=3.0, n_samples=64))
        fine = onsager_feynman(make_torus_preset(2.0, SMALL_R, ell=3.0, n_samples=128))
        assert fine.k == coarse.k
        assert fine.product_over_2pi == pytest.approx(coarse.product_over_2pi, rel=1e-12)

    def test_negative_volume(self):
        sheet = make_torus_preset(2.0, 1.0, n_samples=64)
        reflected = RevolutionSheet(sheet.curve.reflected(), sheet.vorticity)
        with pytest.raises(GeometryError):
            onsager_feynman(reflected)


class TestCircleMap:
    def test_values(self):
        assert m_a_map(0.0, 2 * math.pi, 3.0) == 0
        assert circle_distance(m_a_map(1.0, 2 * math.pi, 3.0), 0.0) <= 1e-12
        assert m_a_map(0.5, 2 * math.pi, 3.0) == pytest.approx(math.pi)
        assert m_a_map(3.5, 2 * math.pi, 3.0) == pytest.approx(math.pi)

    def test_ill_defined(self):
        with pytest.raises(IllDefinedMapError):
            m_a_map(1.0, 4 * math.pi ** 2, 1.0)

    def test_vectorized(self):
        values = m_a_map(np.array([0.0, 0.5, 1.5]), 2 * math.pi, 3.0)
        assert values.shape == (3,)

    @given(
        z1=st.floats(min_value=0.0, max_value=3.0),
        z2=st.floats(min_value=0.0, max_value=3.0),
    )
    @settings(max_examples=200)
    def test_homomorphism(self, z1, z2):
        a, ell = 2 * math.pi, 3.0
        lhs = m_a_map(z1 + z2, a, ell)
        rhs = m_a_map(z1, a, ell) + m_a_map(z2, a, ell)
        assert circle_distance(lhs, rhs) <= 1e-12

    @pytest.mark.parametrize('a,ell,k', [(2 * math.pi, 3.0, 3), (4 * math.pi, 1.0, 2), (2 * math.pi, 7.0, 7)])
    def test_lattice_image_covers_circle(self, a, ell, k):
        size = 64 * k
        images = np.sort(m_a_map(np.arange(size) * ell / size, a, ell))
        gaps = np.diff(np.append(images, images[0] + TWO_PI))
        assert np.max(gaps) <= TWO_PI * k / size + 1e-9

    def test_circle_distance(self):
        assert circle_distance(0.1, TWO_PI - 0.1) == pytest.approx(0.2)
        assert circle_distance(1.0, 1.0) == 0


class TestKernel:
    @pytest.mark.parametrize('a,ell,k', [
        (2 * math.pi, 3.0, 3),
        (4 * math.pi, 1.0, 2),
        (2 * math.pi, 1.0, 1),
        (2 * math.pi, 7.0, 7),
    ])
    def test_order(self, a, ell, k):
        assert kernel_order(a, ell) == k
        points = kernel_points(a, ell)
        assert len(points) == k
        assert max(circle_distance(m_a_map(np.array(points), a, ell), 0.0)) <= 1e-12

    def test_points(self):
        assert kernel_points(2 * math.pi, 3.0) == pytest.approx([0.0, 1.0, 2.0])

    def test_trivial_map(self):
        with pytest.raises(IllDefinedMapError):
            kernel_points(0.0, 1.0)


class TestFluxDerivative:
    def test_rotation_of_meridian_sheet(self):
        sheet = make_torus_preset(2.0, 1.0, MERIDIANS, n_samples=64)
        assert flux_derivative(sheet, 0.0, 1.0) == pytest.approx(-1 / (2 * math.pi))

    def test_parallel_sheet(self):
        sheet = make_torus_preset(2.0, 1.0, n_samples=64)
        assert flux_derivative(sheet, 2 * math.pi, 0.0) == pytest.approx(-1.0)
        assert flux_derivative(sheet, 0.0, 1.0) == 0

    def test_not_in_isotropy(self):
        sheet = make_torus_preset(2.0, 1.0, n_samples=64)
        with pytest.raises(NotInIsotropyError):
            flux_derivative(sheet, np.cos(sheet.grid.rho), 0.0)
