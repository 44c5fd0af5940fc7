from pathlib import Path

import click


class Choice2(click.Choice):
    """ for nice help message """
    def get_metavar(self, param, *args, **kwargs):
        if len(self.choices) == 1:
            return self.choices[0]
        return "{{{}}}".format("|".join(self.choices))


class GroupedGroup(click.Group):
    """Lists subcommands under headings; add_command takes group=(heading, order)."""

    def add_command(self, command, *args, **kwargs):
        command.help_group = kwargs.pop('group', ('Commands', 0))
        return super().add_command(command, *args, **kwargs)

    def format_commands(self, ctx, formatter):
        visible = [(name, self.get_command(ctx, name)) for name in self.list_commands(ctx)]
        visible = [(name, command) for name, command in visible if command is not None and not command.hidden]
        if not visible:
            return

        width = max(len(name) for name, _ in visible)
        limit = formatter.width - 6 - width
        sections = {}
        for name, command in visible:
            sections.setdefault(command.help_group, []).append(
                (name.ljust(width), command.get_short_help_str(limit))
            )

        with formatter.section('Commands'):
            for group in sorted(sections, key=lambda group: group[1]):
                formatter.write_heading(group[0])
                with formatter.indentation():
                    formatter.write_dl(sections[group])
                    formatter.write_paragraph()


def config_option(func):
    return click.option(
        '--config', 'config_file', type=click.Path(exists=True, dir_okay=False, path_type=Path),
        help='Run configuration (YAML or JSON), see docs/usage.md',
    )(func)


def grid_option(func):
    return click.option('--grid-n', type=click.IntRange(min=16), help='Number of samples in rho')(func)


def out_option(func):
    return click.option(
        '--out', type=click.Path(file_okay=False, path_type=Path),
        help='Output directory, created if missing',
    )(func)
