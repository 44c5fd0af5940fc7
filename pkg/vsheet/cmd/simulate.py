import click

from vsheet.dynamics import DRIFT_KEYS, TIMESERIES_HEADER, RhsMode, simulate as run_simulation
from vsheet.errors import ConfigError
from vsheet.util.click import Choice2, config_option, grid_option, out_option
from vsheet.util.common import dump_json, ensure_directory, format_file, write_csv
from vsheet.util.config import load_run_config
from vsheet.util.settings import Settings


PROFILE_HEADER = ['rho', 'xi', 'eta', 'zeta']

# exit status of a run cut short by a singularity
EXIT_TRUNCATED = 2


def write_snapshots(directory, trajectory):
    for index, sheet in enumerate(trajectory.states):
        columns = sheet.profile_columns()
        rows = zip(*(columns[name] for name in PROFILE_HEADER))
        write_csv(directory / f'profile_{index:05d}.csv', PROFILE_HEADER, rows)


@click.command(short_help='Integrate the motion of a parallel-circle sheet')
@config_option
@out_option
@click.option('--dt', type=click.FloatRange(min=0, min_open=True), help='Time step')
@click.option('--t-final', type=click.FloatRange(min=0), help='Final time')
@grid_option
@click.option('--rhs', type=Choice2([mode.value for mode in RhsMode]),
              help='Right-hand side: closed form, geometric pipeline, or both compared every stage')
@click.option('--snapshots/--no-snapshots', default=None,
              help='Write profile_<index>.csv for every recorded state')
@click.option('--progress/--no-progress', default=None,
              help='Show a progress bar')
def simulate(config_file, out, dt, t_final, grid_n, rhs, snapshots, progress):
    """
    Run fixed-step RK4 on the configured sheet and write the time series
    of a, h, k and their relative drifts to <out>/timeseries.csv

    \b
    Exit status is 2 if a singularity cut the run short; the partial output is kept.

    \b
    Example usage:
        vsheet simulate --t-final 0.1 --dt 1e-3
        vsheet simulate --config bumpy.yaml --rhs crosscheck --out runs/bumpy
    """
    run_config = load_run_config(config_file, grid_n=grid_n, dt=dt, t_final=t_final, rhs=rhs, out=out)
    tolerances = run_config.tolerances()
    sheet = run_config.build_sheet(tolerances)
    config = run_config.sim_config()
    if run_config.out is None:
        raise ConfigError('An output directory is required', 'out')
    if snapshots is None:
        snapshots = run_config.snapshots()
    if progress is None:
        progress = Settings().output.progress

    trajectory = run_simulation(sheet, config, tolerances, progress=progress)

    out = run_config.out
    ensure_directory(out)
    write_csv(out / 'timeseries.csv', TIMESERIES_HEADER, trajectory.rows())
    if snapshots:
        write_snapshots(out / 'snapshots', trajectory)
    click.secho('Results saved to ' + format_file(out), err=True)

    for warning in trajectory.warnings:
        click.secho(warning, fg='yellow', err=True)

    click.echo(dump_json({
        't': trajectory.times[-1],
        'steps': len(config.step_sizes()),
        'truncated': trajectory.truncated,
        'max_rel_drift': {key: trajectory.max_rel_drift[key] for key in DRIFT_KEYS},
    }))

    if trajectory.truncated:
        click.secho(f'Trajectory truncated: {trajectory.truncation}', fg='red', err=True)
        click.get_current_context().exit(EXIT_TRUNCATED)
