import json
from pathlib import Path

import click

from vsheet.errors import VortexSheetError


class Singleton(type):
    _instances = {}

    def __call__(cls, *args, **kwargs):
        if cls not in cls._instances:
            cls._instances[cls] = super(Singleton, cls).__call__(*args, **kwargs)
        return cls._instances[cls]


def config_directory():
    directory = Path(click.get_app_dir('vsheet', force_posix=True))
    directory.mkdir(parents=True, exist_ok=True)
    return directory


def format_file(file):
    if isinstance(file, Path):
        file = file.as_posix()
    return click.style(file, fg='blue', bold=True)


def format_number(value):
    """17 significant digits, enough to read every double back unchanged."""
    if value is None:
        return ''
    return '%.17g' % value


def format_csv(header, rows):
    lines = [','.join(header)]
    for row in rows:
        lines.append(','.join(format_number(value) for value in row))
    return '\n'.join(lines) + '\n'


def ensure_directory(path: Path):
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise VortexSheetError(f'Cannot create directory {path}: {e.strerror}')
    return path


def _write_text(path: Path, text):
    ensure_directory(path.parent)
    try:
        path.write_text(text, encoding='utf-8')
    except OSError as e:
        raise VortexSheetError(f'Cannot write {path}: {e.strerror}')


def write_csv(path: Path, header, rows):
    _write_text(path, format_csv(header, rows))


def dump_json(document):
    try:
        return json.dumps(document, indent=2, allow_nan=False)
    except ValueError as e:
        raise VortexSheetError(f'Cannot write JSON: {e}')


def write_json(path: Path, document):
    _write_text(path, dump_json(document) + '\n')
