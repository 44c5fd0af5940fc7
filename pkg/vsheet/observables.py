import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from vsheet.errors import FibrationNotSupportedError
from vsheet.geometry import enclosed_volume, periodic_quadrature, sigma_form, wedge_integral
from vsheet.sheet import FibrationKind


SE3_LABELS = ('omega_x', 'omega_y', 'omega_z', 'v_x', 'v_y', 'v_z')


@dataclass(frozen=True)
class ObservableSet:
    volume_a: float
    hamiltonian_h: float
    vertical_impulse_k: Optional[float]
    se3_momentum: Tuple[float, ...]

    def as_dict(self):
        return {
            'a': self.volume_a,
            'h': self.hamiltonian_h,
            'k': self.vertical_impulse_k,
            'J': list(self.se3_momentum),
        }

    def triple(self):
        return {'a': self.volume_a, 'h': self.hamiltonian_h, 'k': self.vertical_impulse_k}


def hamiltonian(sheet):
    """Total length of the vortex lines, h = integral of sigma ^ beta."""
    kind = sheet.fibration.kind
    if kind == FibrationKind.PARALLEL:
        return 2 * math.pi * periodic_quadrature(sheet.curve.xi * sheet.zeta_rho)
    if kind == FibrationKind.MERIDIANS:
        return wedge_integral(*sigma_form(sheet), sheet)
    raise FibrationNotSupportedError('hamiltonian', sheet.fibration)


def vertical_impulse(sheet):
    """Total area of the disks bounded by the parallel fibers."""
    if sheet.fibration.kind != FibrationKind.PARALLEL:
        raise FibrationNotSupportedError('vertical_impulse', sheet.fibration)
    return math.pi * periodic_quadrature(sheet.curve.xi ** 2 * sheet.zeta_rho)


def momentum_pairing(sheet, omega, v):
    """<J, (omega, v)> = 1/2 integral of (|x|^2 omega_flat + (v x x)_flat) ^ beta.

    Only the theta-averages of the pulled back 1-form survive the integration; for a surface
    of revolution they are (|x|^2 omega_3 eta_rho) d(rho) + (v_3 xi^2) d(theta).
    """
    omega = np.asarray(omega, dtype=float)
    v = np.asarray(v, dtype=float)
    curve = sheet.curve
    alpha_rho = (curve.xi ** 2 + curve.eta ** 2) * omega[2] * curve.eta_rho
    alpha_theta = v[2] * curve.xi ** 2
    return 0.5 * wedge_integral(alpha_rho, alpha_theta, sheet)


def se3_momentum(sheet):
    basis = np.eye(3)
    zero = np.zeros(3)
    angular = [momentum_pairing(sheet, e, zero) for e in basis]
    linear = [momentum_pairing(sheet, zero, e) for e in basis]
    return tuple(angular + linear)


def observable_set(sheet) -> ObservableSet:
    k = None
    if sheet.fibration.kind == FibrationKind.PARALLEL:
        k = vertical_impulse(sheet)
    return ObservableSet(
        volume_a=enclosed_volume(sheet),
        hamiltonian_h=hamiltonian(sheet),
        vertical_impulse_k=k,
        se3_momentum=se3_momentum(sheet),
    )
