import click

from vsheet.observables import observable_set
from vsheet.util.click import config_option, grid_option, out_option
from vsheet.util.common import dump_json, format_file, write_json
from vsheet.util.config import load_run_config


@click.command(short_help='Conserved quantities of a sheet')
@config_option
@grid_option
@out_option
def observe(config_file, grid_n, out):
    """
    Print the enclosed volume a, the length h, the vertical impulse k and
    the SE(3) momentum J of the configured sheet as JSON

    \b
    Example usage:
        vsheet observe
        vsheet observe --config meridian.yaml --grid-n 64
    """
    run_config = load_run_config(config_file, grid_n=grid_n)
    tolerances = run_config.tolerances()
    sheet = run_config.build_sheet(tolerances)

    document = observable_set(sheet).as_dict()
    click.echo(dump_json(document))
    if out is not None:
        write_json(out / 'observe.json', document)
        click.secho('Saved to ' + format_file(out / 'observe.json'), err=True)
