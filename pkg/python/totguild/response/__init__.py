"""Error reporting for totguild commands."""

from .errors import (EXIT_INTERNAL, EXIT_INVALID_INPUT, EXIT_OBSTRUCTION,
                     EXIT_OK, AlgebraErrorHandler, CommonErrorHandler,
                     DimensionMismatchError, GroupTableError, IndexRangeError,
                     InputError, InvalidWitnessError, NotAChainComplexError,
                     NotAChainMapError, PreconditionError, SchemaError,
                     SimplicialIdentityError, SubspaceError, TotguildError,
                     ValidationErrorHandler, WindowTooSmallError)
from .response import Error, police

__all__ = [
    "Error",
    "police",
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
