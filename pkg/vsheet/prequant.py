"""
Onsager-Feynman arithmetic: the condition a ell in 2pi Z and the circle homomorphism
m_a: R / ell Z -> R / 2pi Z, z -> a z, whose kernel is cyclic of order k = a ell / 2pi.
"""
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from vsheet.errors import GeometryError, IllDefinedMapError, NotInIsotropyError
from vsheet.geometry import enclosed_volume
from vsheet.sheet import Violation
from vsheet.stationarity import classify
from vsheet.tolerances import or_default


TWO_PI = 2 * math.pi
# lattice points per kernel point used by kernel_order
LATTICE_REFINEMENT = 8


@dataclass(frozen=True)
class PrequantReport:
    a: float
    ell: float
    product_over_2pi: float
    k: Optional[int]
    prequantizable: bool

    def as_dict(self):
        return {
            'a': self.a,
            'ell': self.ell,
            'product_over_2pi': self.product_over_2pi,
            'k': self.k,
            'prequantizable': self.prequantizable,
        }


def onsager_feynman_condition(a, ell, tolerances=None) -> PrequantReport:
    tolerances = or_default(tolerances)
    product = a * ell / TWO_PI
    nearest = round(product)
    k = None
    if abs(product - nearest) <= tolerances.tol_int and nearest >= 1:
        k = int(nearest)
    return PrequantReport(a=a, ell=ell, product_over_2pi=product, k=k, prequantizable=k is not None)


def onsager_feynman(sheet, tolerances=None) -> PrequantReport:
    a = enclosed_volume(sheet)
    if not a > 0:
        raise GeometryError(
            'Prequantization needs a positively oriented profile curve',
            [Violation('enclosed volume a > 0', None, a)],
        )
    period = classify(sheet, tolerances)
    return onsager_feynman_condition(a, period.ell, tolerances)


def _integral_order(a, ell, tolerances):
    product = a * ell / TWO_PI
    nearest = round(product)
    if abs(product - nearest) > or_default(tolerances).tol_int:
        raise IllDefinedMapError(
            f'm_a is not well defined: a * ell / 2pi = {product:.12g} is not an integer'
        )
    return int(nearest)


def m_a_map(z, a, ell, tolerances=None):
    _integral_order(a, ell, tolerances)
    result = np.mod(a * np.mod(z, ell), TWO_PI)
    return float(result) if np.ndim(result) == 0 else result


def circle_distance(x, y, period=TWO_PI):
    d = np.mod(np.asarray(x) - np.asarray(y), period)
    return np.minimum(d, period - d)


def kernel_points(a, ell, tolerances=None):
    k = abs(_integral_order(a, ell, tolerances))
    if k == 0:
        raise IllDefinedMapError('m_a is trivial: a * ell = 0')
    return [j * ell / k for j in range(k)]


def kernel_order(a, ell, tolerances=None):
    """Order of ker(m_a), checked against a lattice LATTICE_REFINEMENT times finer than the kernel."""
    points = kernel_points(a, ell, tolerances)
    k = len(points)
    lattice = np.arange(LATTICE_REFINEMENT * k) * ell / (LATTICE_REFINEMENT * k)
    images = m_a_map(lattice, a, ell, tolerances)
    found = np.flatnonzero(circle_distance(images, 0.0) <= 1e-9)
    expected = np.arange(k) * LATTICE_REFINEMENT
    if not np.array_equal(found, expected):
        raise IllDefinedMapError(f'kernel of m_a has {len(found)} lattice points, expected {k}')
    return k


def flux_derivative(sheet, v_rho, v_theta, tolerances=None):
    """Derivative -beta(v) of the flux homomorphism along a circle-invariant tangent field v."""
    tolerances = or_default(tolerances)
    n_samples = sheet.grid.n_samples
    v_rho = np.broadcast_to(np.asarray(v_rho, dtype=float), (n_samples,))
    v_theta = np.broadcast_to(np.asarray(v_theta, dtype=float), (n_samples,))
    terms = np.abs(sheet.zeta_rho * v_rho) + np.abs(sheet.c * v_theta)
    values = sheet.zeta_rho * v_rho + sheet.c * v_theta

    scale = float(np.max(terms))
    if scale == 0:
        return 0.0
    spread = float(np.max(values) - np.min(values))
    if spread > tolerances.isotropy_tolerance * scale:
        raise NotInIsotropyError(
            f'beta(v) is not constant (relative variation {spread / scale:.3e}); '
            f'v does not preserve beta'
        )
    return 0.0 - float(np.mean(values))
