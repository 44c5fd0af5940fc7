from click.exceptions import ClickException


class VortexSheetError(ClickException):
    def __init__(self, message='unknown error'):
        super().__init__(message)


class ContractError(VortexSheetError):
    pass


class ConfigError(VortexSheetError):
    def __init__(self, message, key=None):
        if key is not None:
            message = f'{message}: "{key}"'
        super().__init__(message)
        self.key = key


class InvalidPresetError(VortexSheetError):
    pass


class GeometryError(VortexSheetError):
    def __init__(self, message='Invalid sheet geometry', violations=()):
        self.violations = list(violations)
        if self.violations:
            details = '; '.join(str(v) for v in self.violations)
            message = f'{message}: {details}'
        super().__init__(message)


class FibrationNotSupportedError(VortexSheetError):
    def __init__(self, operation, fibration):
        super().__init__(f'{operation} is not implemented for the {fibration} fibration')
        self.fibration = fibration


class SingularityError(VortexSheetError):
    def __init__(self, message, sample=None, stage=None):
        super().__init__(message)
        self.reason = message
        self.sample = sample
        self.stage = stage

    def at_stage(self, stage):
        error = SingularityError(f'RK4 stage {stage}: {self.reason}', self.sample, stage)
        error.reason = self.reason
        return error


class RhsMismatchError(VortexSheetError):
    def __init__(self, difference, tolerance):
        super().__init__(
            f'Closed-form and geometric right-hand sides disagree: '
            f'sup-norm {difference:.3e} > {tolerance:.1e}'
        )
        self.difference = difference


class ClairautViolationError(VortexSheetError):
    pass


class NonDiscretePeriodError(VortexSheetError):
    pass


class IllDefinedMapError(VortexSheetError):
    pass


class NotInIsotropyError(VortexSheetError):
    pass
