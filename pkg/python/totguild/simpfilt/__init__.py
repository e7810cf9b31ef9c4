"""Simplicial objects, bicomplexes, totalization and filtrations."""

from .bicomplex import Bicomplex, total_differential, totalize
from .filtration import (FilteredComplex, FilteredMap, FilteredQuotient,
                         gr_subquotient)
from .simplicial import SimplicialChainObject, alternating_sum

__all__ = [
    "SimplicialChainObject",
    "alternating_sum",
    "Bicomplex",
    "total_differential",
    "totalize",
    "FilteredComplex",
    "FilteredMap",
    "FilteredQuotient",
    "gr_subquotient",
]
