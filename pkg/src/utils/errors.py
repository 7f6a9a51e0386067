"""
Exception hierarchy shared by the algebra core and the CLI.

Every exception carries the process exit code the CLI reports for it.
"""


class HallCalcError(Exception):
    """Base class for all hallcalc errors"""

    exit_code = 2


class FieldError(HallCalcError, ValueError):
    """Non-prime field order or an impossible field operation (e.g. inverting zero)"""


class ContractError(HallCalcError, ValueError):
    """Input violates a precondition: shape mismatch, invalid complex, cyclic quiver"""


class BoundError(HallCalcError):
    """A representation or dimension vector lies outside the IsoClassTable caps"""


class ResourceError(HallCalcError):
    """A configured resource guard was exceeded"""

    exit_code = 3


class ConsistencyError(HallCalcError):
    """An internal cross-check failed (negative Ext dimension, non-integral count)"""

    exit_code = 1


class ConfigError(HallCalcError):
    """Configuration or JSON payload could not be loaded or validated"""


class CacheVersionError(HallCalcError):
    """Cache file was written by a newer, unknown format version"""


def exit_code_for(error: BaseException) -> int:
    """Map an exception to the CLI exit code"""
    if isinstance(error, HallCalcError):
        return error.exit_code
    return 2
