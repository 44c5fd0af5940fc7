"""
Run configuration: packaged defaults, then the user settings file, then a --config
document, then command-line flags.
"""
from copy import deepcopy
from pathlib import Path
from typing import Optional

import click

from vsheet.dynamics import RhsMode, SimConfig
from vsheet.errors import ConfigError
from vsheet.sheet import FourierSeries, ZetaSpec, make_fourier_preset, make_torus_preset
from vsheet.util.settings import Settings


defaults_file = Path(__file__).parents[1] / 'data' / 'defaults.yaml'

_service_keys = ('__version__',)
_number = (int, float)


def load_document(config_file: Path):
    import yaml

    try:
        with config_file.open('r', encoding='utf-8') as f:
            document = yaml.safe_load(f)
    except OSError as e:
        raise ConfigError(f'Cannot read {config_file}', e.strerror)
    except yaml.YAMLError as e:
        raise ConfigError(f'Cannot parse {config_file}', str(e).splitlines()[0])
    if document is None:
        return {}
    if not isinstance(document, dict):
        raise ConfigError(f'{config_file} must contain a mapping at the top level', '<root>')
    return document


def load_defaults():
    return load_document(defaults_file)


def check_version(config_file, document, package_version):
    version = document.get('__version__', package_version)
    if version == package_version:
        return
    click.secho(
        f'{config_file} declares config version {version}, this vsheet reads version {package_version}; '
        f'some keys may be interpreted differently',
        fg='yellow', err=True,
    )


def _compatible(default, value):
    if default is None or value is None:
        return True
    if isinstance(default, bool):
        return isinstance(value, bool)
    if isinstance(default, _number):
        return isinstance(value, _number) and not isinstance(value, bool)
    return isinstance(value, type(default))


def merge(base: dict, override: dict, path=''):
    """Recursive update of base with override; every key of override must exist in base."""
    result = deepcopy(base)
    for key, value in override.items():
        if key in _service_keys:
            continue
        dotted = f'{path}.{key}' if path else str(key)
        if key not in base:
            raise ConfigError('Unknown configuration key', dotted)
        default = base[key]
        if isinstance(default, dict):
            if not isinstance(value, dict):
                raise ConfigError('Expected a mapping for configuration key', dotted)
            result[key] = merge(default, value, dotted)
        elif not _compatible(default, value):
            raise ConfigError(f'Expected a value of type {type(default).__name__} for configuration key', dotted)
        else:
            result[key] = value
    return result


def _series(document, path):
    try:
        return FourierSeries(tuple(float(x) for x in document['cos']), tuple(float(x) for x in document['sin']))
    except (TypeError, ValueError):
        raise ConfigError('Fourier coefficients must be numbers', path)


class RunConfig:
    def __init__(self, document: dict):
        self.document = document

    def __getitem__(self, key):
        return self.document[key]

    @property
    def grid_n(self):
        n = self.document['grid']['n']
        if n != int(n):
            raise ConfigError('Grid size must be an integer', 'grid.n')
        return int(n)

    @property
    def out(self) -> Optional[Path]:
        out = self.document['out']
        return Path(out) if out is not None else None

    def tolerances(self):
        base = Settings().user_tolerances()
        return base.updated(**self.document['tolerances'])

    def snapshots(self):
        value = self.document['simulate']['snapshots']
        return Settings().output.snapshots if value is None else value

    def build_sheet(self, tolerances=None):
        preset = self.document['preset']
        fibration = self.document['fibration']
        if preset == 'torus':
            return make_torus_preset(
                self.document['R'], self.document['r'], fibration, self.document['ell'],
                n_samples=self.grid_n, tolerances=tolerances,
            )
        if preset == 'fourier':
            fourier = self.document['fourier']
            zeta = fourier['zeta']
            zeta_spec = ZetaSpec(
                winding=float(zeta['winding']),
                series=_series(zeta, 'fourier.zeta'),
                c=float(zeta['c']),
            )
            return make_fourier_preset(
                _series(fourier['xi'], 'fourier.xi'),
                _series(fourier['eta'], 'fourier.eta'),
                zeta_spec,
                n_samples=self.grid_n,
                fibration=fibration,
                tolerances=tolerances,
            )
        raise ConfigError(f'Unknown preset "{preset}" for configuration key', 'preset')

    def sim_config(self):
        simulate = self.document['simulate']
        try:
            rhs_mode = RhsMode(simulate['rhs'])
        except ValueError:
            raise ConfigError(f'Unknown rhs mode "{simulate["rhs"]}" for configuration key', 'simulate.rhs')
        return SimConfig(
            dt=simulate['dt'],
            t_final=simulate['t_final'],
            record_every=simulate['record_every'],
            drift_tolerance=simulate['drift_tolerance'],
            rhs_mode=rhs_mode,
            dealias=simulate['dealias'],
        )


def load_run_config(config_file: Optional[Path] = None, **flags) -> RunConfig:
    """Defaults, updated with the document in config_file and with the non-None flags.

    Recognized flags: grid_n, dt, t_final, rhs, out.
    """
    defaults = load_defaults()
    document = defaults
    if config_file is not None:
        user_document = load_document(config_file)
        check_version(config_file, user_document, defaults['__version__'])
        document = merge(defaults, user_document)

    overrides = {
        ('grid', 'n'): flags.get('grid_n'),
        ('simulate', 'dt'): flags.get('dt'),
        ('simulate', 't_final'): flags.get('t_final'),
        ('simulate', 'rhs'): flags.get('rhs'),
        ('out',): flags.get('out'),
    }
    for keys, value in overrides.items():
        if value is None:
            continue
        target = document
        for key in keys[:-1]:
            target = target[key]
        target[keys[-1]] = str(value) if isinstance(value, Path) else value
    return RunConfig(document)
