"""totguild: exact rational homological algebra with structured logging and error reports."""

from .logs import Logger, logger
from .response import (AlgebraErrorHandler, CommonErrorHandler, Error,
                       InputError, PreconditionError, TotguildError,
                       ValidationErrorHandler, police)
from .utils import sanitize_fields
from .chain import ChainComplex, ChainHomotopy, ChainMap, homology_dims
from .simpfilt import Bicomplex, SimplicialChainObject, totalize
from .obstruct import (HomotopySimplicialMap, extend_tower,
                       bn_totalization_tower, toda_bracket)
from .specseq import ProbeComplex, pages
from .cli import RunReport, main, run

__version__ = "0.1.0"

__all__ = [
    "Logger",
    "logger",
    "Error",
    "police",
    "TotguildError",
    "InputError",
    "PreconditionError",
    "AlgebraErrorHandler",
    "CommonErrorHandler",
    "ValidationErrorHandler",
    "sanitize_fields",
    "ChainComplex",
    "ChainMap",
    "ChainHomotopy",
    "homology_dims",
    "Bicomplex",
    "SimplicialChainObject",
    "totalize",
    "HomotopySimplicialMap",
    "toda_bracket",
    "extend_tower",
    "bn_totalization_tower",
    "ProbeComplex",
    "pages",
    "RunReport",
    "run",
    "main",
]
