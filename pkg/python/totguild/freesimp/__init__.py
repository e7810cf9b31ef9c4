"""Γ(m), its abelianization and the windowed bicomplex pairs built from them."""

from .gamma import (AbelianizedTrunc, FreeSimplicialGroupTrunc,
                    SurjectionGenerator, abelianize, gamma_truncation,
                    surjections)
from .surrogate import (SURROGATE_FILE, SurrogateCheck, check_surrogate,
                        family_member, search_surrogates, surrogate_counterexample,
                        surrogate_family)
from .survival import (MINIMAL_WINDOW, ClassFate, SurvivalReport,
                       check_window, default_window, minimal_window,
                       scan_windows, survival_report)
from .windows import (WindowedBicomplexPair, abelian_example_bicomplexes,
                      build_example_bicomplexes)

__all__ = [
    "SurjectionGenerator",
    "surjections",
    "FreeSimplicialGroupTrunc",
    "gamma_truncation",
    "AbelianizedTrunc",
    "abelianize",
    "WindowedBicomplexPair",
    "build_example_bicomplexes",
    "abelian_example_bicomplexes",
    "MINIMAL_WINDOW",
    "ClassFate",
    "SurvivalReport",
    "survival_report",
    "scan_windows",
    "minimal_window",
    "default_window",
    "check_window",
    "SURROGATE_FILE",
    "SurrogateCheck",
    "check_surrogate",
    "surrogate_counterexample",
    "family_member",
    "surrogate_family",
    "search_surrogates",
]
