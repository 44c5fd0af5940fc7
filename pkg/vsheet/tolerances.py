from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds shared by all modules.

    Defaults are the library values; the CLI overlays the user settings file and the run config.
    """
    eps_speed: float = 1e-6
    tol_geodesic: float = 1e-10
    tol_const: float = 1e-8
    tol_int: float = 1e-9
    period_tolerance: float = 1e-9
    max_denominator: int = 64
    crosscheck_tolerance: float = 1e-6
    isotropy_tolerance: float = 1e-8

    @classmethod
    def names(cls):
        return [f.name for f in fields(cls)]

    def updated(self, **values):
        values = {key: value for key, value in values.items() if value is not None}
        return replace(self, **values)

    def asdict(self):
        return {name: getattr(self, name) for name in self.names()}


DEFAULT_TOLERANCES = Tolerances()


def or_default(tolerances):
    return DEFAULT_TOLERANCES if tolerances is None else tolerances
