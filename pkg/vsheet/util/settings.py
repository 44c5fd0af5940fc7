from configparser import ConfigParser, Error as ConfigParserError
from os import environ

from vsheet.errors import ConfigError
from vsheet.tolerances import DEFAULT_TOLERANCES, Tolerances
from vsheet.util.common import Singleton, config_directory


class Section:
    """
    in config.ini all option names are lowercase and all underscores are replaced with dashes
    """
    def __init__(self, config, name):
        super().__setattr__('_config', config)
        super().__setattr__('_name', Section.canonical_name(name))

    @staticmethod
    def canonical_name(name):
        return name.capitalize()

    @staticmethod
    def to_option(name):
        return name.lower().replace('_', '-')

    @classmethod
    def options(cls):
        return [Section.to_option(key) for key in cls.__annotations__]

    def _convert(self, key, value):
        type_ = self.__annotations__[key]
        try:
            if type_ is bool:
                return self._config._convert_to_boolean(value)
            return type_(value)
        except ValueError:
            raise ConfigError(f'Invalid value "{value}" for option in section [{self._name}]', key)

    def _is_option(self, key):
        return key in super().__getattribute__('__annotations__')

    def __getattribute__(self, key):
        if not super().__getattribute__('_is_option')(key):
            return super().__getattribute__(key)

        value = self._config.get(self._name, Section.to_option(key), fallback=None)
        if value is not None:
            return self._convert(key, value)
        return getattr(type(self), key, None)  # default

    def asdict(self):
        return {key: self.__getattribute__(key) for key in super().__getattribute__('__annotations__')}


class EnvSection(Section):
    """Options can be overridden with VSHEET_<OPTION> environment variables."""

    @staticmethod
    def to_envvar(name):
        return 'VSHEET_' + name.upper()

    def __getattribute__(self, key):
        if not super().__getattribute__('_is_option')(key):
            return super(Section, self).__getattribute__(key)

        envvar = environ.get(EnvSection.to_envvar(key))
        if envvar is not None:
            return self._convert(key, envvar)
        return super().__getattribute__(key)


class TolerancesSection(EnvSection):
    eps_speed: float = DEFAULT_TOLERANCES.eps_speed
    tol_geodesic: float = DEFAULT_TOLERANCES.tol_geodesic
    tol_const: float = DEFAULT_TOLERANCES.tol_const
    tol_int: float = DEFAULT_TOLERANCES.tol_int
    period_tolerance: float = DEFAULT_TOLERANCES.period_tolerance
    max_denominator: int = DEFAULT_TOLERANCES.max_denominator
    crosscheck_tolerance: float = DEFAULT_TOLERANCES.crosscheck_tolerance
    isotropy_tolerance: float = DEFAULT_TOLERANCES.isotropy_tolerance


class OutputSection(Section):
    snapshots: bool = True
    progress: bool = True


class SettingsModel:
    tolerances: TolerancesSection
    output: OutputSection


class Settings(metaclass=Singleton):
    """user settings, <app dir>/config.ini"""

    def __init__(self):
        self._file = config_directory() / 'config.ini'
        self._config = ConfigParser()
        self.reload()

    def reload(self):
        """force reload from disk"""
        self._config.clear()
        if self._file.is_file():
            try:
                self._config.read(self._file)
            except ConfigParserError as e:
                raise ConfigError(f'Cannot parse {self._file}', str(e).splitlines()[0])
        self._check()

    def _check(self):
        sections = {Section.canonical_name(name): type_ for name, type_ in SettingsModel.__annotations__.items()}
        for name in self._config.sections():
            if name not in sections:
                raise ConfigError(f'Unknown section in {self._file}', name)
            allowed = sections[name].options()
            for option in self._config.options(name):
                if option not in allowed:
                    raise ConfigError(f'Unknown option in section [{name}] of {self._file}', option)

    def __getattribute__(self, key):
        if key in SettingsModel.__annotations__:
            section_type = SettingsModel.__annotations__[key]
            return section_type(self._config, key)
        return super().__getattribute__(key)

    def user_tolerances(self) -> Tolerances:
        return Tolerances(**self.tolerances.asdict())
