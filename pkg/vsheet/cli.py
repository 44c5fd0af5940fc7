import click

from vsheet import __version__
from vsheet.cmd.classify import classify
from vsheet.cmd.observe import observe
from vsheet.cmd.prequant import prequant
from vsheet.cmd.simulate import simulate
from vsheet.cmd.stationary import stationary
from vsheet.cmd.verify import verify
from vsheet.util.click import GroupedGroup


@click.group(cls=GroupedGroup)
@click.version_option(__version__, prog_name='vsheet')
def cli():
    """Vortex sheets on surfaces of revolution"""


class Commands:
    dynamics = ('Dynamics', 1)
    analysis = ('Analysis', 2)
    other = ('Other', 3)


cli.add_command(simulate, group=Commands.dynamics)

cli.add_command(observe, group=Commands.analysis)
cli.add_command(stationary, group=Commands.analysis)
cli.add_command(classify, group=Commands.analysis)
cli.add_command(prequant, group=Commands.analysis)

cli.add_command(verify, group=Commands.other)
