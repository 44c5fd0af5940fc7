import click

from vsheet.stationarity import classify as classify_sheet
from vsheet.util.click import config_option, grid_option
from vsheet.util.common import dump_json
from vsheet.util.config import load_run_config


@click.command(short_help='Component R_{m,n} of a sheet')
@config_option
@grid_option
def classify(config_file, grid_n):
    """
    Find the smallest period ell of the vorticity 1-form and the coprime
    (m, n) with periods (m ell, n ell); prints {m, n, ell, residual} as JSON
    """
    run_config = load_run_config(config_file, grid_n=grid_n)
    tolerances = run_config.tolerances()
    period = classify_sheet(run_config.build_sheet(tolerances), tolerances)
    if period.residual > 0:
        click.secho(f'Period ratio reconstructed with residual {period.residual:.3e}', fg='yellow', err=True)
    click.echo(dump_json(period.as_dict()))
