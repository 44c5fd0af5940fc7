import click

from vsheet.prequant import kernel_points, onsager_feynman
from vsheet.util.click import config_option, grid_option
from vsheet.util.common import dump_json
from vsheet.util.config import load_run_config


@click.command(short_help='Onsager-Feynman condition')
@config_option
@grid_option
def prequant(config_file, grid_n):
    """
    Check the Onsager-Feynman condition a ell / 2pi = k for the configured sheet.
    When it holds, the kernel points j ell / k of m_a are listed too
    """
    run_config = load_run_config(config_file, grid_n=grid_n)
    tolerances = run_config.tolerances()
    report = onsager_feynman(run_config.build_sheet(tolerances), tolerances)

    document = report.as_dict()
    if report.prequantizable:
        document['kernel'] = kernel_points(report.a, report.ell, tolerances)
    else:
        click.secho(
            f'a ell / 2pi = {report.product_over_2pi:.12g} is not a positive integer',
            fg='yellow', err=True,
        )
    click.echo(dump_json(document))
