"""
Motion of parallel-circle sheets: xi_t = k_g n_xi, eta_t = k_g n_eta, zeta_t = k_n beta(n_g).
"""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

import numpy as np
from tqdm import tqdm

from vsheet.errors import ContractError, FibrationNotSupportedError, RhsMismatchError, SingularityError
from vsheet.geometry import dealias as dealias_samples
from vsheet.geometry import fiber_frames
from vsheet.observables import ObservableSet, observable_set
from vsheet.sheet import FibrationKind, Orientation, TangentData, require_valid
from vsheet.tolerances import or_default


DRIFT_KEYS = ('a', 'h', 'k')
TIMESERIES_HEADER = ['t', 'a', 'h', 'k', 'drift_a', 'drift_h', 'drift_k']


class RhsMode(Enum):
    CLOSED = 'closed'
    GEOMETRIC = 'geometric'
    CROSSCHECK = 'crosscheck'


@dataclass(frozen=True)
class SimConfig:
    dt: float
    t_final: float
    record_every: int = 1
    drift_tolerance: float = 1e-6
    rhs_mode: RhsMode = RhsMode.CLOSED
    dealias: bool = False
    crosscheck_tolerance: Optional[float] = None

    def __post_init__(self):
        try:
            object.__setattr__(self, 'rhs_mode', RhsMode(self.rhs_mode))
        except ValueError:
            raise ContractError(f'Unknown rhs mode "{self.rhs_mode}"')
        if not self.dt > 0:
            raise ContractError(f'Time step must be positive, got {self.dt}')
        if not self.t_final >= 0:
            raise ContractError(f'Final time must be non-negative, got {self.t_final}')
        if int(self.record_every) != self.record_every or self.record_every < 1:
            raise ContractError(f'record_every must be a positive integer, got {self.record_every}')

    def step_sizes(self):
        """floor(t_final / dt) full steps, then one partial step landing on t_final."""
        full = int(math.floor(self.t_final / self.dt * (1 + 1e-12)))
        steps = [self.dt] * full
        rest = self.t_final - full * self.dt
        if rest > 1e-9 * self.dt:
            steps.append(rest)
        return steps


@dataclass
class Trajectory:
    times: List[float] = field(default_factory=list)
    states: list = field(default_factory=list)
    observables: List[ObservableSet] = field(default_factory=list)
    max_rel_drift: Dict[str, float] = field(default_factory=lambda: dict.fromkeys(DRIFT_KEYS, 0.0))
    truncation: Optional[str] = None
    warnings: List[str] = field(default_factory=list)

    @property
    def truncated(self):
        return self.truncation is not None

    def record(self, t, sheet, observables):
        self.times.append(t)
        self.states.append(sheet)
        self.observables.append(observables)

    def drift(self, index):
        return relative_drift(self.observables[0], self.observables[index])

    def final_drift(self):
        return self.drift(-1)

    def rows(self):
        """Time series rows t, a, h, k, drift_a, drift_h, drift_k."""
        for i, (t, values) in enumerate(zip(self.times, self.observables)):
            drift = self.drift(i)
            triple = values.triple()
            yield [t] + [triple[key] for key in DRIFT_KEYS] + [drift[key] for key in DRIFT_KEYS]


def relative_drift(initial: ObservableSet, current: ObservableSet):
    drift = {}
    for key in DRIFT_KEYS:
        q0, q = initial.triple()[key], current.triple()[key]
        scale = abs(q0) if q0 else 1.0
        drift[key] = abs(q - q0) / scale
    return drift


def _check_regular(sheet, tolerances):
    curve = sheet.curve
    eps = tolerances.eps_speed
    i = int(np.argmin(curve.xi))
    if curve.xi[i] < eps:
        raise SingularityError(f'profile curve reached the axis: xi = {curve.xi[i]:.3e} at sample {i}', i)
    i = int(np.argmin(curve.speed))
    if curve.speed[i] < eps:
        raise SingularityError(f'parametrization degenerated: speed = {curve.speed[i]:.3e} at sample {i}', i)


def _require_parallel(sheet, operation):
    if sheet.fibration.kind != FibrationKind.PARALLEL:
        raise FibrationNotSupportedError(operation, sheet.fibration)


def rhs_closed_form(sheet, tolerances=None) -> TangentData:
    """zeta_t = +eta_rho zeta_rho / (xi s^2); this sign is the one that conserves h and k."""
    _require_parallel(sheet, 'rhs_closed_form')
    _check_regular(sheet, or_default(tolerances))
    curve = sheet.curve
    xi_rho, eta_rho = curve.xi_rho, curve.eta_rho
    denominator = curve.xi * (xi_rho ** 2 + eta_rho ** 2)
    return TangentData(
        xi_dot=xi_rho * eta_rho / denominator,
        eta_dot=-xi_rho ** 2 / denominator,
        zeta_dot=eta_rho * sheet.zeta_rho / denominator,
    )


def rhs_geometric(sheet, tolerances=None) -> TangentData:
    """Normal velocity k_g n of the profile curve plus the primitive of d(k_n beta(n_g))."""
    _require_parallel(sheet, 'rhs_geometric')
    _check_regular(sheet, or_default(tolerances))
    frames = fiber_frames(sheet.curve, sheet.zeta_rho, 0.0, Orientation.INWARD)
    velocity = frames.k_g[:, None] * frames.n

    # zeta_t is the potential of the exact form d(k_n beta(n_g)); the potential itself fixes the constant
    return TangentData(xi_dot=velocity[:, 0], eta_dot=velocity[:, 2], zeta_dot=frames.kn_beta_ng)


def rhs(sheet, rhs_mode=RhsMode.CLOSED, tolerances=None):
    tolerances = or_default(tolerances)
    rhs_mode = RhsMode(rhs_mode)
    if rhs_mode is RhsMode.GEOMETRIC:
        return rhs_geometric(sheet, tolerances)
    closed = rhs_closed_form(sheet, tolerances)
    if rhs_mode is RhsMode.CROSSCHECK:
        difference = closed.sup_distance(rhs_geometric(sheet, tolerances))
        if difference > tolerances.crosscheck_tolerance:
            raise RhsMismatchError(difference, tolerances.crosscheck_tolerance)
    return closed


def _velocity(sheet, rhs_mode, tolerances, dealias):
    tangent = rhs(sheet, rhs_mode, tolerances).stacked()
    if dealias:
        tangent = np.vstack([dealias_samples(row) for row in tangent])
    return tangent


def step_rk4(sheet, dt, rhs_mode=RhsMode.CLOSED, tolerances=None, dealias=False):
    """Classical RK4 on (xi, eta, zeta_periodic); the winding P and the constant c never change."""
    if dt == 0:
        return sheet
    state = sheet.state()
    k = []
    for stage, weight in enumerate((0.0, 0.5, 0.5, 1.0), start=1):
        probe = sheet if stage == 1 else sheet.with_state(state + weight * dt * k[-1])
        try:
            k.append(_velocity(probe, rhs_mode, tolerances, dealias))
        except SingularityError as e:
            raise e.at_stage(stage)
    return sheet.with_state(state + dt / 6 * (k[0] + 2 * k[1] + 2 * k[2] + k[3]))


def simulate(sheet, config: SimConfig, tolerances=None, progress=False) -> Trajectory:
    tolerances = or_default(tolerances).updated(crosscheck_tolerance=config.crosscheck_tolerance)
    _require_parallel(sheet, 'simulate')
    require_valid(sheet, tolerances, 'Invalid initial sheet')

    trajectory = Trajectory()
    initial = observable_set(sheet)
    trajectory.record(0.0, sheet, initial)

    steps = config.step_sizes()
    t = 0.0
    warned = set()
    # disable=None turns the bar off when stderr is not a terminal
    with tqdm(total=len(steps), leave=False, disable=None if progress else True) as pbar:
        for index, dt in enumerate(steps, start=1):
            try:
                sheet = step_rk4(sheet, dt, config.rhs_mode, tolerances, config.dealias)
            except SingularityError as e:
                trajectory.truncation = f'{e.message} (t = {t:.6g})'
                break
            t = config.t_final if index == len(steps) else index * config.dt
            observables = observable_set(sheet)

            drift = relative_drift(initial, observables)
            for key, value in drift.items():
                trajectory.max_rel_drift[key] = max(trajectory.max_rel_drift[key], value)
                if value > config.drift_tolerance and key not in warned:
                    warned.add(key)
                    trajectory.warnings.append(
                        f'relative drift of {key} reached {value:.3e} at t = {t:.6g} '
                        f'(tolerance {config.drift_tolerance:.1e})'
                    )

            if index % config.record_every == 0 or index == len(steps):
                trajectory.record(t, sheet, observables)
            pbar.update()

    if trajectory.truncated and trajectory.times[-1] != t:
        trajectory.record(t, sheet, observable_set(sheet))
    return trajectory
