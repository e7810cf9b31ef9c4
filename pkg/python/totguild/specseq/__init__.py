"""Spectral sequences of bounded filtered complexes against a probe."""

from .maps import PageMaps, induced_page_maps
from .pages import (AbutmentReport, SpectralSequence, SpectralSequencePage,
                    abutment_check, pages, render_page, track_class)
from .probe import (ProbeComplex, ProbedComplex, Variance, apply_probe,
                    probe_map)

__all__ = [
    "ProbeComplex",
    "ProbedComplex",
    "Variance",
    "apply_probe",
    "probe_map",
    "SpectralSequence",
    "SpectralSequencePage",
    "pages",
    "abutment_check",
    "AbutmentReport",
    "track_class",
    "render_page",
    "PageMaps",
    "induced_page_maps",
]
