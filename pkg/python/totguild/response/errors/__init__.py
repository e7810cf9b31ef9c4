"""Error handling modules for the totguild response system."""

from .algebra_errors import (EXIT_INTERNAL, EXIT_INVALID_INPUT,
                             EXIT_OBSTRUCTION, EXIT_OK, AlgebraErrorHandler,
                             DimensionMismatchError, GroupTableError,
                             IndexRangeError, InputError, InvalidWitnessError,
                             NotAChainComplexError, NotAChainMapError,
                             PreconditionError, SchemaError,
                             SimplicialIdentityError, SubspaceError,
                             TotguildError, WindowTooSmallError)
from .common_errors import CommonErrorHandler
from .validation_errors import ValidationErrorHandler

__all__ = [
    "EXIT_OK",
    "EXIT_OBSTRUCTION",
    "EXIT_INVALID_INPUT",
    "EXIT_INTERNAL",
    "TotguildError",
    "InputError",
    "DimensionMismatchError",
    "NotAChainComplexError",
    "NotAChainMapError",
    "InvalidWitnessError",
    "SimplicialIdentityError",
    "SubspaceError",
    "IndexRangeError",
    "GroupTableError",
    "SchemaError",
    "WindowTooSmallError",
    "PreconditionError",
    "AlgebraErrorHandler",
    "CommonErrorHandler",
    "ValidationErrorHandler",
]
