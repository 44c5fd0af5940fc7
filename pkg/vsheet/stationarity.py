"""
Stationarity test for circle-invariant sheets.

A sheet is a stationary point of the Hamiltonian flow iff every vortex line is a geodesic
(k_g = 0) and k beta(B) is constant along the sheet.
"""
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from vsheet.errors import ClairautViolationError, ContractError, FibrationNotSupportedError, NonDiscretePeriodError
from vsheet.geometry import beta_on, curvature_field, fiber_frames, periodic_quadrature, spectral_antiderivative
from vsheet.sheet import FibrationKind, Orientation, VorticityProfile
from vsheet.tolerances import or_default


@dataclass(frozen=True, eq=False)
class StationarityReport:
    max_abs_kg: float
    kbB_field: np.ndarray
    kbB_relative_variation: float
    is_stationary: bool

    def as_dict(self, include_field=False):
        document = {
            'is_stationary': self.is_stationary,
            'max_abs_kg': self.max_abs_kg,
            'kbB_relative_variation': self.kbB_relative_variation,
            'kbB_min': float(np.min(self.kbB_field)),
            'kbB_max': float(np.max(self.kbB_field)),
        }
        if include_field:
            document['kbB_field'] = [float(x) for x in self.kbB_field]
        return document


def relative_variation(values):
    values = np.asarray(values, dtype=float)
    scale = float(np.max(np.abs(values)))
    if scale == 0:
        return 0.0
    return float(np.max(values) - np.min(values)) / scale


def _report(frames, curve, zeta_rho, c, tolerances):
    # B of the fiber traversed along its coordinate direction is -B of the Darboux-oriented frame
    kbB_field = -beta_on(curve, zeta_rho, c, frames.binormal_curvature)
    max_abs_kg = float(np.max(np.abs(frames.k_g)))
    variation = relative_variation(kbB_field)
    return StationarityReport(
        max_abs_kg=max_abs_kg,
        kbB_field=kbB_field,
        kbB_relative_variation=variation,
        is_stationary=max_abs_kg <= tolerances.tol_geodesic and variation <= tolerances.tol_const,
    )


def stationarity_report(sheet, tolerances=None) -> StationarityReport:
    tolerances = or_default(tolerances)
    if sheet.fibration.kind == FibrationKind.CUSTOM:
        raise FibrationNotSupportedError('stationarity_report', sheet.fibration)
    frames = curvature_field(sheet, tolerances)
    return _report(frames, sheet.curve, sheet.zeta_rho, sheet.c, tolerances)


def geodesic_fibration_form(curve, c, kappa) -> VorticityProfile:
    """beta = -c kappa s / (xi sqrt(xi^2 - kappa^2)) d(rho) + c d(theta).

    Its kernel is foliated by geodesics with Clairaut constant kappa.
    """
    if c == 0:
        raise ContractError('Geodesic fibration requires c != 0')
    if np.min(curve.xi) <= abs(kappa):
        raise ClairautViolationError(
            f'Clairaut bound violated: min xi = {np.min(curve.xi):.6g} <= |kappa| = {abs(kappa):.6g}'
        )
    xi = curve.xi
    zeta_rho = -c * kappa * curve.speed / (xi * np.sqrt(xi ** 2 - kappa ** 2))
    winding = periodic_quadrature(zeta_rho)
    zeta_periodic = spectral_antiderivative(zeta_rho - winding / (2 * math.pi))
    return VorticityProfile(curve.grid, zeta_periodic, rho_winding=winding, theta_constant=c)


def kn_betang_closed_form(curve, zeta_rho, c, normal_orientation=Orientation.INWARD):
    """k_n beta(n_g) for the fibers of zeta_rho d(rho) + c d(theta), written for c > 0.

    The formula is stated for the inward normal; the outward normal flips its sign.
    """
    if c == 0:
        raise ContractError('k_n beta(n_g) closed form divides by c; use the parallel pipeline for c = 0')
    zeta_rho = np.asarray(zeta_rho, dtype=float)
    s2 = curve.speed ** 2
    xi = curve.xi
    ratio2 = zeta_rho ** 2 / c ** 2
    bracket = curve.eta_rhorho * curve.xi_rho - curve.eta_rho * curve.xi_rhorho + xi * curve.eta_rho * ratio2
    value = c / (s2 * xi * np.sqrt(s2 + xi ** 2 * ratio2)) * bracket
    return Orientation(normal_orientation).sign * value


def geodesic_fibration_report(curve, c, kappa, normal_orientation=Orientation.INWARD, tolerances=None):
    tolerances = or_default(tolerances)
    vorticity = geodesic_fibration_form(curve, c, kappa)
    frames = fiber_frames(curve, vorticity.zeta_rho, c, normal_orientation)
    return _report(frames, curve, vorticity.zeta_rho, c, tolerances)


@dataclass(frozen=True)
class PeriodClass:
    m: int
    n: int
    ell: float
    residual: float = 0.0

    def as_dict(self):
        return {'m': self.m, 'n': self.n, 'ell': self.ell, 'residual': self.residual}


def _sign(x):
    return 1 if x > 0 else -1


def classify_periods(p, q, tolerances=None) -> PeriodClass:
    """Generator ell of the group pZ + qZ with p = m ell, q = n ell and gcd(m, n) = 1."""
    tolerances = or_default(tolerances)
    tol = tolerances.period_tolerance
    if abs(p) <= tol and abs(q) <= tol:
        raise NonDiscretePeriodError('Both periods vanish: beta is exact and has no smallest period')
    if abs(q) <= tol:
        return PeriodClass(_sign(p), 0, abs(p))
    if abs(p) <= tol:
        return PeriodClass(0, _sign(q), abs(q))

    # the smaller period over the larger keeps |ratio| <= 1, so the cap bounds both |m| and |n|
    swapped = abs(p) > abs(q)
    small, large = (q, p) if swapped else (p, q)
    ratio = small / large
    fraction = Fraction(ratio).limit_denominator(tolerances.max_denominator)
    residual = abs(ratio - float(fraction))
    if residual > tol:
        raise NonDiscretePeriodError(
            f'Period ratio {ratio:.12g} has no rational approximation with |m|, |n| '
            f'<= {tolerances.max_denominator} (closest {fraction}, residual {residual:.3e}); '
            f'the period group is dense at this resolution'
        )
    sign = _sign(large)
    ell = abs(large) / fraction.denominator
    if swapped:
        return PeriodClass(m=sign * fraction.denominator, n=sign * fraction.numerator, ell=ell, residual=residual)
    return PeriodClass(m=sign * fraction.numerator, n=sign * fraction.denominator, ell=ell, residual=residual)


def classify(sheet, tolerances=None) -> PeriodClass:
    return classify_periods(sheet.vorticity.rho_winding, 2 * math.pi * sheet.c, tolerances)
