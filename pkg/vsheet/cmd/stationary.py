import click

from vsheet.stationarity import stationarity_report
from vsheet.util.click import config_option, grid_option, out_option
from vsheet.util.common import dump_json, format_file, write_json
from vsheet.util.config import load_run_config


@click.command(short_help='Stationarity test for a sheet')
@config_option
@grid_option
@out_option
@click.option('--field/--no-field', default=False,
              help='Include the sampled k beta(B) field in the output')
def stationary(config_file, grid_n, out, field):
    """
    Check whether the configured sheet is a stationary point of the flow:
    all vortex lines geodesic and k beta(B) constant
    """
    run_config = load_run_config(config_file, grid_n=grid_n)
    tolerances = run_config.tolerances()
    report = stationarity_report(run_config.build_sheet(tolerances), tolerances)

    document = report.as_dict(include_field=field)
    click.echo(dump_json(document))
    if out is not None:
        write_json(out / 'stationary.json', report.as_dict(include_field=True))
        click.secho('Saved to ' + format_file(out / 'stationary.json'), err=True)
