"""Probe functors ``Hom(S, -)`` and ``Hom(-, S)`` applied to filtered complexes."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional

from totguild.chain import ChainComplex, HomComplex
from totguild.exactla import SparseMatrix
from totguild.response import InputError
from totguild.simpfilt import FilteredComplex, FilteredMap


class Variance(str, Enum):
    COVARIANT = "covariant"
    CONTRAVARIANT = "contravariant"


@dataclass(frozen=True)
class ProbeComplex:
    S: ChainComplex
    variance: Variance = Variance.COVARIANT

    @classmethod
    def unit(cls) -> "ProbeComplex":
        """``Hom(Q[0], -)``: the identity functor on complexes."""
        return cls(ChainComplex.concentrated(0, 1), Variance.COVARIANT)

    @property
    def covariant(self) -> bool:
        return self.variance == Variance.COVARIANT


@dataclass
class ProbedComplex:
    """The probe applied to a filtered complex, itself filtered."""

    probe: ProbeComplex
    source: FilteredComplex
    hom: HomComplex
    filtered: FilteredComplex


def apply_probe(filt: FilteredComplex, probe: Optional[ProbeComplex] = None) -> ProbedComplex:
    """Filter ``Hom(S, X)`` by the level of the X-row and ``Hom(X, S)`` by
    minus the level of the X-column (both filtrations increase)."""
    probe = probe or ProbeComplex.unit()
    X = filt.total
    if probe.covariant:
        hom = HomComplex(probe.S, X)
    else:
        hom = HomComplex(X, probe.S)
    total = hom.as_complex()
    levels: Dict[int, list] = {}
    for k in total.dims:
        lv = []
        for n, i, j in hom.coordinates(k):
            if probe.covariant:
                lv.append(filt.level(n + k, i))
            else:
                lv.append(-filt.level(n, j))
        levels[k] = lv
    return ProbedComplex(
        probe=probe, source=filt, hom=hom,
        filtered=FilteredComplex(total, levels, check=False),
    )


def probe_map(F: FilteredMap, src: ProbedComplex, tgt: ProbedComplex) -> FilteredMap:
    """The filtered map the probe induces from ``F``.

    Covariant probes post-compose and run ``src -> tgt``; contravariant ones
    pull back, so ``src`` must be the probed target of ``F`` and ``tgt`` its
    probed source.
    """
    if src.probe != tgt.probe:
        raise InputError("probed complexes use different probes")
    covariant = src.probe.covariant
    if covariant and (src.source is not F.source or tgt.source is not F.target):
        raise InputError("post-composition runs from the map's source")
    if not covariant and (src.source is not F.target or tgt.source is not F.source):
        raise InputError("pullback runs from the map's target")
    comps = {}
    for k in src.filtered.total.dims:
        if not tgt.filtered.total.dim(k):
            continue
        entries = {}
        cache: Dict[int, Dict[int, Dict[int, object]]] = {}
        for col, (n, i, j) in enumerate(src.hom.coordinates(k)):
            if covariant:
                # E_ij -> Σ F[r, i] E_rj
                if n + k not in cache:
                    cache[n + k] = F.component(n + k).transpose().row_dicts()
                for r, v in cache[n + k].get(i, {}).items():
                    entries[(tgt.hom.index(k, n, r, j), col)] = v
            else:
                # E_ij -> Σ F[j, c] E_ic
                if n not in cache:
                    cache[n] = F.component(n).row_dicts()
                for c, v in cache[n].get(j, {}).items():
                    entries[(tgt.hom.index(k, n, i, c), col)] = v
        comps[k] = SparseMatrix(
            tgt.filtered.total.dim(k), src.filtered.total.dim(k), entries
        )
    return FilteredMap(src.filtered, tgt.filtered, comps)
