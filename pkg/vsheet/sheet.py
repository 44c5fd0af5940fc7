"""
Circle-invariant vortex sheets sampled on a uniform periodic grid.

A sheet is the surface of revolution of a closed plane curve (xi(rho), eta(rho)) around the
vertical axis, decorated with the closed 1-form beta = zeta_rho d(rho) + c d(theta).
"""
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import List, Optional, Sequence

import numpy as np

from vsheet.errors import ContractError, GeometryError, InvalidPresetError
from vsheet.spectral import MIN_SAMPLES, check_samples, spectral_derivative
from vsheet.tolerances import or_default


# |zeta_rho| and |P| below this (relative to max(1, |c|)) count as zero for meridian sheets
ZERO_TOLERANCE = 1e-12


class Orientation(Enum):
    INWARD = 'inward'
    OUTWARD = 'outward'

    @property
    def sign(self):
        return 1.0 if self is Orientation.INWARD else -1.0


class FibrationKind(Enum):
    PARALLEL = 'parallel'
    MERIDIANS = 'meridian'
    CUSTOM = 'custom'


def _enum_value(enum, value, what):
    try:
        return enum(value)
    except ValueError:
        raise ContractError(f'Unknown {what} "{value}"')


@dataclass(frozen=True)
class Fibration:
    kind: FibrationKind
    m: Optional[int] = None
    n: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'kind', _enum_value(FibrationKind, self.kind, 'fibration'))

    def __str__(self):
        if self.kind is FibrationKind.CUSTOM and self.m is not None:
            return f'custom({self.m},{self.n})'
        return self.kind.value

    @classmethod
    def custom(cls, m=None, n=None):
        return cls(FibrationKind.CUSTOM, m, n)

    @classmethod
    def from_name(cls, name):
        if isinstance(name, Fibration):
            return name
        kind = _enum_value(FibrationKind, name, 'fibration')
        if kind is FibrationKind.PARALLEL:
            return PARALLEL_CIRCLES
        if kind is FibrationKind.MERIDIANS:
            return MERIDIANS
        return cls.custom()

    def default_orientation(self):
        return Orientation.OUTWARD if self.kind == FibrationKind.MERIDIANS else Orientation.INWARD


PARALLEL_CIRCLES = Fibration(FibrationKind.PARALLEL, 1, 0)
MERIDIANS = Fibration(FibrationKind.MERIDIANS, 0, 1)


def _frozen_array(values, n_samples, name):
    try:
        array = check_samples(values, n_samples).copy()
    except ContractError as e:
        raise ContractError(f'{name}: {e.message}')
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class Grid:
    n_samples: int

    def __post_init__(self):
        if int(self.n_samples) != self.n_samples or self.n_samples < MIN_SAMPLES or self.n_samples % 2:
            raise ContractError(
                f'Grid size must be an even integer of at least {MIN_SAMPLES}, got {self.n_samples}'
            )

    @property
    def spacing(self):
        return 2 * math.pi / self.n_samples

    @cached_property
    def rho(self):
        rho = np.arange(self.n_samples) * self.spacing
        rho.setflags(write=False)
        return rho


@dataclass(frozen=True)
class FourierSeries:
    """f(rho) = sum_j cos[j] cos(j rho) + sin[j] sin(j rho); sin[0] is ignored."""
    cos: Sequence[float] = ()
    sin: Sequence[float] = ()

    @property
    def degree(self):
        return max(len(self.cos), len(self.sin), 1) - 1

    def evaluate(self, rho):
        rho = np.asarray(rho, dtype=float)
        values = np.zeros_like(rho)
        for j, a in enumerate(self.cos):
            values = values + a * np.cos(j * rho)
        for j, b in enumerate(self.sin):
            if j > 0:
                values = values + b * np.sin(j * rho)
        return values


@dataclass(frozen=True)
class ZetaSpec:
    """Vorticity potential zeta(rho) = (winding / 2pi) rho + series(rho), plus the d(theta) coefficient c."""
    winding: float = 0.0
    series: FourierSeries = field(default_factory=FourierSeries)
    c: float = 0.0


@dataclass(frozen=True, eq=False)
class ProfileCurve:
    grid: Grid
    xi: np.ndarray
    eta: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'xi', _frozen_array(self.xi, self.grid.n_samples, 'xi'))
        object.__setattr__(self, 'eta', _frozen_array(self.eta, self.grid.n_samples, 'eta'))

    @cached_property
    def xi_rho(self):
        return spectral_derivative(self.xi)

    @cached_property
    def eta_rho(self):
        return spectral_derivative(self.eta)

    @cached_property
    def xi_rhorho(self):
        return spectral_derivative(self.xi_rho)

    @cached_property
    def eta_rhorho(self):
        return spectral_derivative(self.eta_rho)

    @cached_property
    def speed(self):
        return np.sqrt(self.xi_rho ** 2 + self.eta_rho ** 2)

    def translated(self, dz):
        return ProfileCurve(self.grid, self.xi, self.eta + dz)

    def reflected(self):
        """eta -> -eta, which reverses the orientation of the profile curve."""
        return ProfileCurve(self.grid, self.xi, -self.eta)

    def rotated(self, shift):
        """Cyclic reparametrization rho -> rho + shift * spacing."""
        return ProfileCurve(self.grid, np.roll(self.xi, -shift), np.roll(self.eta, -shift))


@dataclass(frozen=True, eq=False)
class VorticityProfile:
    grid: Grid
    zeta_periodic: np.ndarray
    rho_winding: float = 0.0
    theta_constant: float = 0.0

    def __post_init__(self):
        object.__setattr__(
            self, 'zeta_periodic', _frozen_array(self.zeta_periodic, self.grid.n_samples, 'zeta')
        )
        object.__setattr__(self, 'rho_winding', float(self.rho_winding))
        object.__setattr__(self, 'theta_constant', float(self.theta_constant))

    @cached_property
    def zeta_rho(self):
        return spectral_derivative(self.zeta_periodic, self.rho_winding)

    @cached_property
    def zeta_rhorho(self):
        return spectral_derivative(self.zeta_rho)

    @cached_property
    def zeta(self):
        return self.rho_winding / (2 * math.pi) * self.grid.rho + self.zeta_periodic

    def scaled(self, factor):
        return VorticityProfile(
            self.grid, factor * self.zeta_periodic, factor * self.rho_winding, factor * self.theta_constant
        )

    def shifted(self, constant):
        return replace(self, zeta_periodic=self.zeta_periodic + constant)


@dataclass(frozen=True, eq=False)
class TangentData:
    xi_dot: np.ndarray
    eta_dot: np.ndarray
    zeta_dot: np.ndarray

    def __post_init__(self):
        n = np.asarray(self.xi_dot).shape[0]
        for name in ('xi_dot', 'eta_dot', 'zeta_dot'):
            object.__setattr__(self, name, _frozen_array(getattr(self, name), n, name))

    def stacked(self):
        return np.vstack([self.xi_dot, self.eta_dot, self.zeta_dot])

    def sup_distance(self, other):
        return float(np.max(np.abs(self.stacked() - other.stacked())))


@dataclass(frozen=True, eq=False)
class RevolutionSheet:
    curve: ProfileCurve
    vorticity: VorticityProfile
    fibration: Fibration = PARALLEL_CIRCLES
    normal_orientation: Orientation = Orientation.INWARD

    def __post_init__(self):
        if self.curve.grid != self.vorticity.grid:
            raise ContractError(
                f'Profile curve has {self.curve.grid.n_samples} samples, '
                f'vorticity has {self.vorticity.grid.n_samples}'
            )
        object.__setattr__(self, 'fibration', Fibration.from_name(self.fibration))
        object.__setattr__(
            self, 'normal_orientation',
            _enum_value(Orientation, self.normal_orientation, 'normal orientation'),
        )

    @property
    def grid(self):
        return self.curve.grid

    @property
    def c(self):
        return self.vorticity.theta_constant

    @property
    def zeta_rho(self):
        return self.vorticity.zeta_rho

    @property
    def orientation_sign(self):
        return self.normal_orientation.sign

    def state(self):
        return np.vstack([self.curve.xi, self.curve.eta, self.vorticity.zeta_periodic])

    def with_state(self, state):
        """New sheet from stacked (xi, eta, zeta_periodic); winding and c are carried over untouched."""
        xi, eta, zeta_periodic = state
        return replace(
            self,
            curve=ProfileCurve(self.grid, xi, eta),
            vorticity=replace(self.vorticity, zeta_periodic=zeta_periodic),
        )

    def with_vorticity(self, vorticity):
        return replace(self, vorticity=vorticity)

    def translated(self, dz):
        return replace(self, curve=self.curve.translated(dz))

    def profile_columns(self):
        return {
            'rho': self.grid.rho,
            'xi': self.curve.xi,
            'eta': self.curve.eta,
            'zeta': self.vorticity.zeta,
        }


@dataclass(frozen=True)
class Violation:
    invariant: str
    sample: Optional[int]
    margin: float

    def __str__(self):
        where = '' if self.sample is None else f' at sample {self.sample}'
        return f'{self.invariant}{where} (margin {self.margin:.3e})'


class Invariant:
    AXIS = 'axis intersection'
    DEGENERATE = 'degenerate parametrization'
    BETA_NG = 'orientation convention β(n_g)>0'
    PARALLEL_C = 'component R_{1,0} requires c = 0'
    PARALLEL_P = 'component R_{1,0} requires P > 0'
    MERIDIAN_ZETA = 'meridian fibration requires ζ_ρ ≡ 0'
    MERIDIAN_C = 'meridian fibration requires c > 0'
    ZEROS = 'vorticity density without zeros'
    ORIENTATION = 'normal orientation convention'


def _worst(invariant, margins):
    """Violation for the most negative margin, or None if all margins are positive."""
    index = int(np.argmin(margins))
    if margins[index] > 0:
        return None
    return Violation(invariant, index, float(margins[index]))


def validate(sheet: RevolutionSheet, tolerances=None) -> List[Violation]:
    tolerances = or_default(tolerances)
    curve, vorticity = sheet.curve, sheet.vorticity
    kind = sheet.fibration.kind
    c = vorticity.theta_constant
    zeta_rho = vorticity.zeta_rho

    checks = [
        _worst(Invariant.AXIS, curve.xi),
        _worst(Invariant.DEGENERATE, curve.speed - tolerances.eps_speed),
    ]

    if kind == FibrationKind.PARALLEL:
        checks.append(_worst(Invariant.BETA_NG, zeta_rho))
        if c != 0:
            checks.append(Violation(Invariant.PARALLEL_C, None, -abs(c)))
        if not vorticity.rho_winding > 0:
            checks.append(Violation(Invariant.PARALLEL_P, None, vorticity.rho_winding))
        if sheet.normal_orientation != Orientation.INWARD:
            checks.append(Violation(Invariant.ORIENTATION, None, -1.0))
    elif kind == FibrationKind.MERIDIANS:
        scale = ZERO_TOLERANCE * max(1.0, abs(c))
        checks.append(_worst(Invariant.MERIDIAN_ZETA, scale - np.abs(zeta_rho)))
        if abs(vorticity.rho_winding) > scale:
            checks.append(Violation(Invariant.MERIDIAN_ZETA, None, scale - abs(vorticity.rho_winding)))
        if not c > 0:
            checks.append(Violation(Invariant.MERIDIAN_C, None, c))
        if sheet.normal_orientation != Orientation.OUTWARD:
            checks.append(Violation(Invariant.ORIENTATION, None, -1.0))
    else:
        # beta vanishes where zeta_rho = 0 and c = 0 simultaneously
        strength = np.sqrt((zeta_rho * curve.xi) ** 2 + (c * curve.speed) ** 2)
        checks.append(_worst(Invariant.ZEROS, strength))

    return [violation for violation in checks if violation is not None]


def require_valid(sheet, tolerances=None, message='Invalid sheet'):
    violations = validate(sheet, tolerances)
    if violations:
        raise GeometryError(message, violations)
    return sheet


def _orientation_for(fibration, normal_orientation):
    if normal_orientation is not None:
        return normal_orientation
    return fibration.default_orientation()


def make_torus_preset(R, r, fibration=PARALLEL_CIRCLES, ell=1.0, n_samples=128, tolerances=None):
    """Torus of revolution: xi = R + r cos(rho), eta = r sin(rho).

    Parallel circles carry zeta = ell * rho / 2pi; meridians carry beta = ell / 2pi d(theta).
    """
    fibration = Fibration.from_name(fibration)
    if not (r > 0 and R > r):
        raise InvalidPresetError(f'Torus preset requires R > r > 0, got R={R}, r={r}')
    if not ell > 0:
        raise InvalidPresetError(f'Torus preset requires ell > 0, got ell={ell}')

    grid = Grid(n_samples)
    curve = ProfileCurve(grid, R + r * np.cos(grid.rho), r * np.sin(grid.rho))
    zeros = np.zeros(grid.n_samples)
    if fibration.kind == FibrationKind.PARALLEL:
        vorticity = VorticityProfile(grid, zeros, rho_winding=ell)
    elif fibration.kind == FibrationKind.MERIDIANS:
        vorticity = VorticityProfile(grid, zeros, theta_constant=ell / (2 * math.pi))
    else:
        raise InvalidPresetError('Torus preset supports only parallel and meridian fibrations')

    sheet = RevolutionSheet(curve, vorticity, fibration, fibration.default_orientation())
    return require_valid(sheet, tolerances, 'Invalid torus preset')


def make_fourier_preset(
        xi_coeffs: FourierSeries,
        eta_coeffs: FourierSeries,
        zeta_spec: ZetaSpec,
        n_samples=128,
        fibration=PARALLEL_CIRCLES,
        normal_orientation=None,
        tolerances=None,
):
    fibration = Fibration.from_name(fibration)
    grid = Grid(n_samples)
    limit = n_samples // 2
    for name, series in (('xi', xi_coeffs), ('eta', eta_coeffs), ('zeta', zeta_spec.series)):
        if series.degree >= limit:
            raise ContractError(f'{name} series of degree {series.degree} is not resolved by {n_samples} samples')

    curve = ProfileCurve(grid, xi_coeffs.evaluate(grid.rho), eta_coeffs.evaluate(grid.rho))
    vorticity = VorticityProfile(
        grid, zeta_spec.series.evaluate(grid.rho), zeta_spec.winding, zeta_spec.c
    )
    sheet = RevolutionSheet(curve, vorticity, fibration, _orientation_for(fibration, normal_orientation))
    return require_valid(sheet, tolerances, 'Invalid Fourier preset')
