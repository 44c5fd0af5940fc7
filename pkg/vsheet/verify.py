"""
Built-in acceptance suite run by `vsheet verify`.
"""
import math
from dataclasses import dataclass
from typing import Callable, List

import numpy as np

from vsheet.dynamics import TIMESERIES_HEADER, SimConfig, rhs_closed_form, rhs_geometric, simulate
from vsheet.errors import VortexSheetError
from vsheet.geometry import curvature_field, geodesic_curvature_integral
from vsheet.observables import observable_set
from vsheet.prequant import circle_distance, kernel_order, kernel_points, m_a_map, onsager_feynman
from vsheet.sheet import (
    MERIDIANS,
    PARALLEL_CIRCLES,
    Fibration,
    FourierSeries,
    ZetaSpec,
    make_fourier_preset,
    make_torus_preset,
)
from vsheet.stationarity import classify, geodesic_fibration_report, stationarity_report
from vsheet.util.common import format_csv


# (xi, eta, zeta) of the smooth non-toroidal profiles used for cross-checks
FOURIER_PRESETS = {
    'ellipse': (
        FourierSeries(cos=(2.0, 1.0)),
        FourierSeries(sin=(0.0, 0.5)),
        ZetaSpec(winding=1.0),
    ),
    'bumpy': (
        FourierSeries(cos=(3.0, 1.0, 0.2)),
        FourierSeries(sin=(0.0, 1.0, 0.1)),
        ZetaSpec(winding=1.0, series=FourierSeries(sin=(0.0, 0.05))),
    ),
    'tilted': (
        FourierSeries(cos=(2.5, 0.8), sin=(0.0, 0.3)),
        FourierSeries(cos=(0.2, 0.0, 0.1), sin=(0.0, 0.9, 0.1)),
        ZetaSpec(winding=2.0, series=FourierSeries(cos=(0.0, 0.1))),
    ),
}

KAPPA_SWEEP = tuple(j / 10 for j in range(10))


def fourier_sheet(name, n_samples=128, fibration=PARALLEL_CIRCLES):
    xi, eta, zeta = FOURIER_PRESETS[name]
    return make_fourier_preset(xi, eta, zeta, n_samples=n_samples, fibration=fibration)


def all_presets(n_samples=128):
    presets = {
        'parallel torus': make_torus_preset(2.0, 1.0, PARALLEL_CIRCLES, 1.0, n_samples),
        'meridian torus': make_torus_preset(2.0, 1.0, MERIDIANS, 1.0, n_samples),
    }
    for name in FOURIER_PRESETS:
        presets[name] = fourier_sheet(name, n_samples)
    return presets


def timeseries_csv(trajectory):
    return format_csv(TIMESERIES_HEADER, trajectory.rows())


def conservation_study(step_sizes=(0.04, 0.02, 0.01), t_final=0.5, n_samples=64):
    """Max relative drift of a, h, k for each step size, on the parallel R=2, r=1 torus."""
    sheet = make_torus_preset(2.0, 1.0, PARALLEL_CIRCLES, 1.0, n_samples)
    drifts = []
    for dt in step_sizes:
        trajectory = simulate(sheet, SimConfig(dt=dt, t_final=t_final, record_every=10 ** 6))
        drifts.append(trajectory.final_drift())
    return drifts


def convergence_ratios(drifts, floor=1e-10):
    """Drift ratios between consecutive step sizes, for the quantities whose drift exceeds floor."""
    ratios = {}
    for key in drifts[0]:
        ratios[key] = [
            coarse[key] / fine[key]
            for coarse, fine in zip(drifts, drifts[1:])
            if fine[key] > floor
        ]
    return ratios


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def color(self):
        return 'green' if self.passed else 'red'

    def bold(self):
        return not self.passed


@dataclass
class Check:
    name: str
    run: Callable[[], str]
    slow: bool = False


class CheckFailed(Exception):
    pass


def _expect(condition, detail):
    if not condition:
        raise CheckFailed(detail)
    return detail


def check_curvatures():
    sheet = make_torus_preset(2.0, 1.0, PARALLEL_CIRCLES, 1.0, 128)
    rho = sheet.grid.rho
    field = curvature_field(sheet)
    err_n = float(np.max(np.abs(field.k_n - np.cos(rho) / (2 + np.cos(rho)))))
    err_g = float(np.max(np.abs(field.k_g - np.sin(rho) / (2 + np.cos(rho)))))
    meridian = curvature_field(make_torus_preset(2.0, 1.0, MERIDIANS, 1.0, 128))
    max_kg = float(np.max(np.abs(meridian.k_g)))
    err_meridian = float(np.max(np.abs(meridian.k_n + 1)))
    detail = f'parallel |dk_n|={err_n:.1e} |dk_g|={err_g:.1e}; meridian |k_g|={max_kg:.1e} |k_n+1|={err_meridian:.1e}'
    return _expect(max(err_n, err_g) <= 1e-10 and max(max_kg, err_meridian) <= 1e-12, detail)


def check_observables():
    values = observable_set(make_torus_preset(2.0, 1.0, PARALLEL_CIRCLES, 1.0, 64))
    expected = {'a': 4 * math.pi ** 2, 'h': 4 * math.pi, 'k': 4.5 * math.pi}
    errors = {key: abs(values.triple()[key] - value) / value for key, value in expected.items()}
    detail = ' '.join(f'{key}: {error:.1e}' for key, error in errors.items())
    return _expect(max(errors.values()) <= 1e-12, detail)


def check_rhs_equivalence():
    presets = {name: sheet for name, sheet in all_presets(128).items() if name != 'meridian torus'}
    distances = {
        name: rhs_closed_form(sheet).sup_distance(rhs_geometric(sheet)) for name, sheet in presets.items()
    }
    worst = max(distances, key=distances.get)
    return _expect(distances[worst] <= 1e-8, f'worst {worst}: {distances[worst]:.1e}')


def check_conservation_order():
    ratios = convergence_ratios(conservation_study())
    flat = [ratio for values in ratios.values() for ratio in values]
    _expect(flat, 'all drifts below round-off, no ratio measured')
    long_run = simulate(
        make_torus_preset(2.0, 1.0, PARALLEL_CIRCLES, 1.0, 256),
        SimConfig(dt=5e-5, t_final=0.05, record_every=10 ** 6),
    )
    worst_drift = max(long_run.max_rel_drift.values())
    detail = f'ratios {min(flat):.1f}..{max(flat):.1f}; drift at dt=5e-5: {worst_drift:.1e}'
    return _expect(12 <= min(flat) and max(flat) <= 20 and worst_drift < 1e-9, detail)


def check_total_geodesic_curvature():
    integrals = {name: abs(geodesic_curvature_integral(sheet)) for name, sheet in all_presets(128).items()}
    worst = max(integrals, key=integrals.get)
    return _expect(integrals[worst] <= 1e-12, f'worst {worst}: {integrals[worst]:.1e}')


def check_no_stationary_points():
    sheet = make_torus_preset(2.0, 1.0, MERIDIANS, 1.0, 128)
    report = stationarity_report(sheet)
    expected = -1 / (2 * math.pi * (2 + np.cos(sheet.grid.rho)))
    field_error = float(np.max(np.abs(report.kbB_field - expected)))
    _expect(not report.is_stationary and field_error <= 1e-10, f'meridian field error {field_error:.1e}')

    curve = make_torus_preset(2.0, 1.0, PARALLEL_CIRCLES, 1.0, 256).curve
    reports = [geodesic_fibration_report(curve, 1.0, kappa) for kappa in KAPPA_SWEEP]
    smallest = min(r.kbB_relative_variation for r in reports)
    detail = f'meridian field error {field_error:.1e}; smallest variation in sweep {smallest:.2e}'
    return _expect(smallest > 1e-3 and not any(r.is_stationary for r in reports), detail)


def check_prequantization():
    sheet = make_torus_preset(2.0, math.sqrt(1 / (2 * math.pi)), PARALLEL_CIRCLES, 3.0, 64)
    report = onsager_feynman(sheet)
    order = kernel_order(2 * math.pi, 3.0)
    points = kernel_points(2 * math.pi, 3.0)

    rng = np.random.default_rng(0)
    z1, z2 = rng.uniform(0, 3.0, size=(2, 1000))
    lhs = m_a_map(z1 + z2, 2 * math.pi, 3.0)
    rhs = m_a_map(z1, 2 * math.pi, 3.0) + m_a_map(z2, 2 * math.pi, 3.0)
    homomorphism = float(np.max(circle_distance(lhs, rhs)))
    detail = f'k={report.k}, kernel order {order}, {len(points)} kernel points, homomorphism error {homomorphism:.1e}'
    return _expect(report.k == 3 and order == 3 and len(points) == 3 and homomorphism <= 1e-12, detail)


def check_classification():
    parallel = classify(make_torus_preset(2.0, 1.0, PARALLEL_CIRCLES, 1.0, 64))
    meridian = classify(make_torus_preset(2.0, 1.0, MERIDIANS, 1.0, 64))
    synthetic = classify(make_fourier_preset(
        FourierSeries(cos=(2.0, 1.0)), FourierSeries(sin=(0.0, 1.0)),
        ZetaSpec(winding=3.0, c=1 / math.pi), n_samples=64, fibration=Fibration.custom(),
    ))
    found = [(p.m, p.n, p.ell) for p in (parallel, meridian, synthetic)]
    expected = [(1, 0, 1.0), (0, 1, 1.0), (3, 2, 1.0)]
    ok = all(
        (m, n) == (m0, n0) and abs(ell - ell0) <= 1e-12
        for (m, n, ell), (m0, n0, ell0) in zip(found, expected)
    )
    return _expect(ok, ', '.join(f'({m},{n},{ell:.15g})' for m, n, ell in found))


def check_determinism():
    sheet = make_torus_preset(2.0, 1.0, PARALLEL_CIRCLES, 1.0, 32)
    config = SimConfig(dt=0.01, t_final=0.05)
    first = timeseries_csv(simulate(sheet, config))
    second = timeseries_csv(simulate(sheet, config))
    return _expect(first == second, f'{len(first)} bytes, identical' if first == second else 'outputs differ')


CHECKS = [
    Check('curvature closed forms', check_curvatures),
    Check('observables of the torus', check_observables),
    Check('rhs equivalence', check_rhs_equivalence),
    Check('conservation order', check_conservation_order, slow=True),
    Check('total geodesic curvature', check_total_geodesic_curvature),
    Check('no stationary points', check_no_stationary_points),
    Check('prequantization arithmetic', check_prequantization),
    Check('classification', check_classification),
    Check('determinism', check_determinism),
]


def acceptance_checks(quick=False, progress=None) -> List[CheckResult]:
    results = []
    for check in CHECKS:
        if quick and check.slow:
            continue
        if progress is not None:
            progress(check.name)
        try:
            results.append(CheckResult(check.name, True, check.run()))
        except CheckFailed as e:
            results.append(CheckResult(check.name, False, str(e)))
        except VortexSheetError as e:
            results.append(CheckResult(check.name, False, e.message))
    return results
