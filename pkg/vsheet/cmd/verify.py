import click

from vsheet.errors import VortexSheetError
from vsheet.util.fancytable import FancyTable, StaticColumn
from vsheet.verify import acceptance_checks


@click.command(short_help='Run the built-in acceptance suite')
@click.option('-q', '--quick', is_flag=True,
              help='Skip the conservation-order study')
def verify(quick):
    """
    Check curvatures, observables, rhs equivalence, conservation order,
    stationarity, prequantization and classification against known values
    """
    def announce(name):
        click.secho(f'Checking {name}...', fg='bright_black', err=True)

    results = acceptance_checks(quick=quick, progress=announce)

    table = FancyTable()
    table.add_column(StaticColumn.fitted('Check', results, lambda row: row.name, right_just=False))
    table.add_column(StaticColumn.fitted('Result', results, lambda row: 'ok' if row.passed else 'FAIL'))
    table.add_column(StaticColumn.fitted('Details', results, lambda row: row.detail, right_just=False))
    table.show(results)

    failed = [result for result in results if not result.passed]
    if failed:
        raise VortexSheetError(f'{len(failed)} of {len(results)} checks failed')
    click.secho(f'All {len(results)} checks passed', fg='green', err=True)
