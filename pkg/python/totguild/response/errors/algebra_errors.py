from typing import Any, Dict, Optional


EXIT_OK = 0
EXIT_OBSTRUCTION = 1
EXIT_INVALID_INPUT = 2
EXIT_INTERNAL = 3


class TotguildError(Exception):
    """Base class of every error raised by the engine."""

    exit_code = EXIT_INTERNAL

    def __init__(self, message: str, location: Optional[str] = None):
        self.message = message
        self.location = location
        super().__init__(
            f"{location}: {message}" if location else message
        )


class InputError(TotguildError, ValueError):
    """Malformed or mathematically inconsistent input."""

    exit_code = EXIT_INVALID_INPUT


class DimensionMismatchError(InputError):
    pass


class NotAChainComplexError(InputError):
    pass


class NotAChainMapError(InputError):
    pass


class InvalidWitnessError(InputError):
    pass


class SimplicialIdentityError(InputError):
    pass


class SubspaceError(InputError):
    pass


class IndexRangeError(InputError):
    pass


class GroupTableError(InputError):
    pass


class SchemaError(InputError):
    pass


class WindowTooSmallError(InputError):
    pass


class PreconditionError(TotguildError):
    """A documented precondition of an operation does not hold."""

    exit_code = EXIT_INVALID_INPUT


class AlgebraErrorHandler:
    """Handler for the engine's own exception hierarchy."""

    def __init__(self, logger):
        self.logger = logger

    def _is_algebra_error(self, e: Exception) -> bool:
        return isinstance(e, TotguildError)

    def handle_error(self, e: TotguildError) -> Dict[str, Any]:
        info = {
            "level": "WARNING" if e.exit_code == EXIT_INVALID_INPUT else "ERROR",
            "exit_code": e.exit_code,
            "message": e.message or "Computation failed.",
            "error_type": type(e).__name__,
        }
        if e.location:
            info["location"] = e.location
        return info
