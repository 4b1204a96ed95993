# src/infrastructure/error_handling/exceptions.py


class ConfigNotFoundError(Exception):
    """Raised when the run configuration file is not found."""

    pass


class ConfigValidationError(Exception):
    """Raised when run configuration validation fails."""

    def __init__(self, message: str, line: int | None = None, flag: bool = False):
        self.line = line
        self.flag = flag
        if line is not None:
            location = f"line {line}: "
        else:
            location = "(flag): " if flag else ""
        super().__init__(f"{location}{message}")



class InvariantViolationError(Exception):
    """Raised when a physical or structural invariant is broken."""

    pass


class ModeRangeError(InvariantViolationError):
    """Raised when a mode label is unknown or lies outside the comb range."""

    pass


class DuplicateModeError(InvariantViolationError):
    """Raised when mode labels repeat or a two-mode operation gets one mode twice."""

    pass


class PumpConfigError(InvariantViolationError):
    """Raised when pump, comb or imbalance parameters are inconsistent."""

    pass


class FrequencyMismatchError(InvariantViolationError):
    """Raised when a polarization beam splitter is applied across frequencies."""

    pass


class PhasematchError(InvariantViolationError):
    """Raised when a wrong-frequency check is requested on a phasematched pair."""

    pass


class EmptySelectionError(InvariantViolationError):
    """Raised when the homodyne sidebands select no comb mode."""

    pass


class UnphysicalCorrectionError(InvariantViolationError):
    """Raised when electronic noise correction yields a nonpositive ratio."""

    pass


class DenseSizeError(InvariantViolationError):
    """Raised when the dense backend is forced above its size threshold."""

    pass


class ExportError(InvariantViolationError):
    """Raised when results cannot be written."""

    pass


CONFIG_ERROR_EXIT_CODE = 2
INVARIANT_ERROR_EXIT_CODE = 3


def exit_code_for(error: Exception) -> int:
    """Map an exception to the command-line exit code."""
    if isinstance(error, (ConfigNotFoundError, ConfigValidationError)):
        return CONFIG_ERROR_EXIT_CODE
    return INVARIANT_ERROR_EXIT_CODE
