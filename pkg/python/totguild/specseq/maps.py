"""Maps of spectral sequences induced by filtered maps."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional

from totguild.exactla import SparseMatrix
from totguild.logs import logger
from totguild.response import InputError
from totguild.simpfilt import FilteredMap

from .pages import Cell, SpectralSequence, SpectralSequencePage
from .probe import probe_map


@dataclass
class PageMaps:
    """Cellwise maps ``E^r(source) -> E^r(target)`` for the pages where they exist.

    ``failure_page`` is the first page on which the map is not defined or
    does not commute with ``d_r``; pages from there on carry no map.
    """

    order: Optional[int]
    maps: Dict[int, Dict[Cell, SparseMatrix]] = field(default_factory=dict)
    failure_page: Optional[int] = None
    reason: Optional[str] = None

    def cell_map(self, r: int, s: int, t: int) -> Optional[SparseMatrix]:
        return self.maps.get(r, {}).get((s, t))


def _page_map(M: FilteredMap, src: SpectralSequencePage, tgt: SpectralSequence):
    """Cell maps of one page, or the reason they do not exist."""
    out: Dict[Cell, SparseMatrix] = {}
    for cell, q in src.cells.items():
        s, t = cell
        F = M.component(s + t)
        # E^r_s of the target, even when it is zero
        target = tgt._cycles.E(src.r, s, s + t)
        columns = []
        for v in q.lifts:
            w = F.apply(v)
            if not target.W.contains(w):
                return None, f"image of cell {cell} leaves the target cycles"
            columns.append(target.project(w))
        for u in q.U.vectors():
            image = F.apply(u)
            if not target.W.contains(image) or any(target.project(image)):
                return None, f"map is not well defined on cell {cell}"
        out[cell] = SparseMatrix.from_columns(target.dim, columns)
    return out, None


def _commutes(
    maps: Dict[Cell, SparseMatrix],
    src: SpectralSequencePage,
    tgt: SpectralSequencePage,
) -> Optional[Cell]:
    cells = set(src.cells) | set(tgt.cells)
    for cell in sorted(cells):
        below = src.target(*cell)
        f_top = maps.get(cell) or SparseMatrix.zeros(tgt.dim(*cell), src.dim(*cell))
        f_low = maps.get(below) or SparseMatrix.zeros(tgt.dim(*below), src.dim(*below))
        if tgt.differential(*cell) @ f_top != f_low @ src.differential(*cell):
            return cell
    return None


def induced_page_maps(
    tower_map: FilteredMap, pagesC: SpectralSequence, pagesD: SpectralSequence
) -> PageMaps:
    """Maps on every computed page until the first failure.

    For covariant probes the maps run ``pagesC -> pagesD``; for contravariant
    ones they run ``pagesD -> pagesC`` (pullback).
    """
    probe = pagesC.probed.probe
    if probe != pagesD.probed.probe:
        raise InputError("spectral sequences use different probes")
    if pagesC.probed.source is not tower_map.source or pagesD.probed.source is not tower_map.target:
        raise InputError("spectral sequences do not belong to the map's ends")
    if probe.covariant:
        src, tgt = pagesC, pagesD
        M = probe_map(tower_map, pagesC.probed, pagesD.probed)
    else:
        src, tgt = pagesD, pagesC
        M = probe_map(tower_map, pagesD.probed, pagesC.probed)
    result = PageMaps(order=tower_map.order)
    for page in src.pages:
        other = tgt.page(page.r)
        maps, reason = _page_map(M, page, tgt)
        if maps is None:
            result.failure_page, result.reason = page.r, reason
            break
        bad = _commutes(maps, page, other)
        if bad is not None:
            result.failure_page = page.r
            result.reason = f"map does not commute with d_{page.r} at cell {bad}"
            break
        result.maps[page.r] = maps
    if result.failure_page is not None:
        logger.info(f"page maps stop at E^{result.failure_page}: {result.reason}")
    return result
