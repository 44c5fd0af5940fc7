"""
Frames, curvatures and surface integrals on circle-invariant sheets.

Every surface integral is reduced to a periodic quadrature in rho: the theta integral
contributes a factor 2pi because all integrands are circle invariant. Vector fields are
evaluated on the theta = 0 meridian, where the surface point is (xi, 0, eta).
"""
import math
from dataclasses import dataclass

import numpy as np

from vsheet.errors import FibrationNotSupportedError
from vsheet.sheet import FibrationKind, Grid, Orientation, require_valid
from vsheet.spectral import (  # noqa: F401
    check_samples,
    dealias,
    periodic_quadrature,
    spectral_antiderivative,
    spectral_derivative,
)


# curvature below this is treated as a straight fiber when normalizing N
_FLAT = 1e-14


@dataclass(frozen=True, eq=False)
class CurvatureField:
    """Darboux frame {T, n_g, n} and Frenet frame {T, N, B} along the fibers.

    Vector fields have shape (n_samples, 3). T = n_g x n, and n_g is oriented so that
    beta(n_g) = beta_ng > 0.
    """
    grid: Grid
    T: np.ndarray
    n_g: np.ndarray
    n: np.ndarray
    N: np.ndarray
    B: np.ndarray
    k: np.ndarray
    k_n: np.ndarray
    k_g: np.ndarray
    beta_ng: np.ndarray
    curvature_vector: np.ndarray

    @property
    def binormal_curvature(self):
        """k B = T x (k N) = k_g n - k_n n_g."""
        return np.cross(self.T, self.curvature_vector)

    @property
    def kn_beta_ng(self):
        return self.k_n * self.beta_ng


def _stack(x, y, z):
    return np.stack([x, y, z], axis=-1)


def _dot(u, v):
    return np.einsum('ij,ij->i', u, v)


def surface_vectors(curve):
    """Partial derivatives of X(rho, theta) = (xi cos theta, xi sin theta, eta) at theta = 0."""
    zero = np.zeros_like(curve.xi)
    return {
        'rho': _stack(curve.xi_rho, zero, curve.eta_rho),
        'theta': _stack(zero, curve.xi, zero),
        'rhorho': _stack(curve.xi_rhorho, zero, curve.eta_rhorho),
        'rhotheta': _stack(zero, curve.xi_rho, zero),
        'thetatheta': _stack(-curve.xi, zero, zero),
    }


def unit_normal(curve, normal_orientation=Orientation.INWARD):
    s = curve.speed
    inward = _stack(-curve.eta_rho / s, np.zeros_like(s), curve.xi_rho / s)
    return Orientation(normal_orientation).sign * inward


def beta_on(curve, zeta_rho, c, vectors):
    """beta = zeta_rho d(rho) + c d(theta) applied to the tangential part of ambient vectors."""
    vectors = np.asarray(vectors, dtype=float)
    s2 = curve.speed ** 2
    d_rho = (vectors[:, 0] * curve.xi_rho + vectors[:, 2] * curve.eta_rho) / s2
    d_theta = vectors[:, 1] / curve.xi
    return zeta_rho * d_rho + c * d_theta


def fiber_frames(curve, zeta_rho, c, normal_orientation=Orientation.INWARD) -> CurvatureField:
    """Frames and curvatures of the fibers of ker(beta), beta = zeta_rho d(rho) + c d(theta).

    The fibers are traversed along c d/d(rho) - zeta_rho d/d(theta); beta must have no zeros.
    """
    zeta_rho = check_samples(zeta_rho, curve.grid.n_samples)
    c = float(c)
    xi, s = curve.xi, curve.speed
    X = surface_vectors(curve)
    n = unit_normal(curve, normal_orientation)

    # beta^sharp = (zeta_rho / s) e_rho + (c / xi) e_theta in the orthonormal frame
    a_rho = zeta_rho / s
    a_theta = c / xi
    beta_ng = np.sqrt(a_rho ** 2 + a_theta ** 2)
    n_g = (a_rho / beta_ng)[:, None] * X['rho'] / s[:, None] \
        + (a_theta / beta_ng)[:, None] * X['theta'] / xi[:, None]
    T = np.cross(n_g, n)

    velocity = c * X['rho'] - zeta_rho[:, None] * X['theta']
    acceleration = (
        c ** 2 * X['rhorho']
        - (2 * c * zeta_rho)[:, None] * X['rhotheta']
        + (zeta_rho ** 2)[:, None] * X['thetatheta']
        - (c * spectral_derivative(zeta_rho))[:, None] * X['theta']
    )
    speed2 = _dot(velocity, velocity)
    curvature_vector = (
        acceleration * speed2[:, None] - velocity * _dot(velocity, acceleration)[:, None]
    ) / (speed2 ** 2)[:, None]

    k = np.linalg.norm(curvature_vector, axis=1)
    bent = k > _FLAT
    N = np.where(bent[:, None], curvature_vector / np.where(bent, k, 1.0)[:, None], n)
    B = np.cross(T, N)

    return CurvatureField(
        grid=curve.grid,
        T=T,
        n_g=n_g,
        n=n,
        N=N,
        B=B,
        k=k,
        k_n=_dot(curvature_vector, n),
        k_g=_dot(curvature_vector, n_g),
        beta_ng=beta_ng,
        curvature_vector=curvature_vector,
    )


def sheet_frames(sheet):
    return fiber_frames(sheet.curve, sheet.zeta_rho, sheet.c, sheet.normal_orientation)


def curvature_field(sheet, tolerances=None) -> CurvatureField:
    if sheet.fibration.kind == FibrationKind.CUSTOM:
        raise FibrationNotSupportedError('curvature_field', sheet.fibration)
    require_valid(sheet, tolerances)
    return sheet_frames(sheet)


def enclosed_volume(sheet):
    curve = sheet.curve
    return math.pi * periodic_quadrature(curve.xi ** 2 * curve.eta_rho)


def wedge_integral(alpha_rho, alpha_theta, sheet):
    """Integral over the sheet of alpha ^ beta for a circle-invariant 1-form alpha.

    Orientation is the one induced by the sheet normal: d(theta) ^ d(rho) is positive
    for inward normals, d(rho) ^ d(theta) for outward ones.
    """
    n_samples = sheet.grid.n_samples
    alpha_rho = check_samples(np.broadcast_to(alpha_rho, (n_samples,)), n_samples)
    alpha_theta = check_samples(np.broadcast_to(alpha_theta, (n_samples,)), n_samples)
    integrand = alpha_theta * sheet.zeta_rho - alpha_rho * sheet.c
    return sheet.orientation_sign * 2 * math.pi * periodic_quadrature(integrand)


def sigma_form(sheet):
    """Pullback (sigma_rho, sigma_theta) of the fiber arclength form sigma = -i_{n_g} mu."""
    curve = sheet.curve
    xi, s = curve.xi, curve.speed
    a_rho = sheet.zeta_rho / s
    a_theta = sheet.c / xi
    beta_ng = np.sqrt(a_rho ** 2 + a_theta ** 2)
    sign = sheet.orientation_sign
    return sign * (-s * a_theta / beta_ng), sign * (xi * a_rho / beta_ng)


def surface_integral(sheet, density):
    """Integral of a circle-invariant function against the area form."""
    curve = sheet.curve
    return 2 * math.pi * periodic_quadrature(density * curve.xi * curve.speed)


def geodesic_curvature_integral(sheet):
    return surface_integral(sheet, sheet_frames(sheet).k_g)


def clairaut_constant(curve, zeta_rho, c):
    """xi^2 d(theta)/d(sigma) along the fibers, traversed along c d/d(rho) - zeta_rho d/d(theta)."""
    zeta_rho = check_samples(zeta_rho, curve.grid.n_samples)
    length = np.sqrt((c * curve.speed) ** 2 + (zeta_rho * curve.xi) ** 2)
    return -curve.xi ** 2 * zeta_rho / length


def fiber_lengths(sheet):
    curve = sheet.curve
    kind = sheet.fibration.kind
    if kind == FibrationKind.PARALLEL:
        return 2 * math.pi * curve.xi
    if kind == FibrationKind.MERIDIANS:
        return np.full(sheet.grid.n_samples, periodic_quadrature(curve.speed))
    raise FibrationNotSupportedError('fiber_lengths', sheet.fibration)


def fubini_length_integral(sheet):
    """Sum of fiber lengths weighted by the transverse measure of the fibration."""
    lengths = fiber_lengths(sheet)
    if sheet.fibration.kind == FibrationKind.PARALLEL:
        return periodic_quadrature(lengths * sheet.zeta_rho)
    return 2 * math.pi * sheet.c * float(lengths[0])
