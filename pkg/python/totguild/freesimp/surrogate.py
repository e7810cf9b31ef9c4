"""A three-column homotopy simplicial map whose totalizations disagree.

Both sides are quasi-isomorphic column by column and every square commutes
up to a witnessed homotopy, yet ``T(2,0)`` is nonzero and ``Tot C`` and
``Tot D`` have different homology. The committed instance lives in
``totguild/data/surrogate.json``; ``surrogate_family`` enumerates the
parameter family it was picked from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from totguild.chain import ChainComplex, ChainMap
from totguild.exactla import SparseMatrix
from totguild.formats import data_path, load_document, simplicial_map_from_file
from totguild.logs import logger
from totguild.obstruct import (HomotopySimplicialMap, Layers, ObstructionClass,
                               bracket_vanishes, toda_bracket)
from totguild.response import PreconditionError
from totguild.simpfilt import Bicomplex

from .windows import WindowedBicomplexPair

SURROGATE_FILE = data_path("surrogate.json")

Parameters = Tuple[int, int, int, int]


def surrogate_counterexample(path: Optional[Path] = None) -> WindowedBicomplexPair:
    model, sha = load_document(path or SURROGATE_FILE, ("simplicial_map",))
    fmap, _ = simplicial_map_from_file(model)
    logger.debug(f"loaded surrogate pair sha256={sha[:12]}")
    return WindowedBicomplexPair(
        m=None, N=2, L=None, rows=1, fmap=fmap, kind="surrogate"
    )


@dataclass
class SurrogateCheck:
    quasi_isomorphic: Dict[int, bool]
    bracket: ObstructionClass
    bracket_vanishes: bool
    source_homology: Dict[int, int]
    target_homology: Dict[int, int]
    parameters: Optional[Parameters] = None
    differing: List[int] = field(default_factory=list)

    @property
    def is_counterexample(self) -> bool:
        return (
            all(self.quasi_isomorphic.values())
            and not self.bracket_vanishes
            and bool(self.differing)
        )

    def to_dict(self) -> Dict[str, object]:
        return {
            "quasi_isomorphic": self.quasi_isomorphic,
            "bracket_nonvanishing": not self.bracket_vanishes,
            "indeterminacy_dim": self.bracket.indeterminacy.dim,
            "source_homology": self.source_homology,
            "target_homology": self.target_homology,
            "differing_degrees": self.differing,
            "counterexample": self.is_counterexample,
        }


def check_surrogate(pair: WindowedBicomplexPair) -> SurrogateCheck:
    """Degreewise quasi-isomorphism, ``T(2,0)`` and both total homologies."""
    qi = {
        p: all(pair.quasi_isomorphism_degrees(p, upto=_top_degree(pair, p)).values())
        for p in range(pair.N + 1)
    }
    T = toda_bracket(pair.fmap, 2, 0, Layers(pair.fmap))
    vanishes, _ = bracket_vanishes(T)
    hc, hd = pair.total_homology()
    differing = sorted(
        q for q in set(hc) | set(hd) if hc.get(q, 0) != hd.get(q, 0)
    )
    return SurrogateCheck(qi, T, vanishes, hc, hd, differing=differing)


def _top_degree(pair: WindowedBicomplexPair, p: int) -> int:
    tops = [
        max(B.column(p).dims, default=-1)
        for B in (pair.source_bicomplex, pair.target_bicomplex)
    ]
    return max(tops) + 1


def _one(value: int) -> SparseMatrix:
    return SparseMatrix.from_dense([[value]])


def family_member(a: int, b: int, c: int, e: int) -> HomotopySimplicialMap:
    """``f_0 = a``, ``f_2 = b``, ``h^D_1 = c`` on ``e_1`` and ``h^D_2 = e`` into ``e_0``.

    ``C`` has lines in bidegrees (0,1) and (2,0); ``D`` adds the acyclic
    column ``e_1 -> e_0`` in between.
    """
    c0 = ChainComplex({1: 1})
    c2 = ChainComplex({0: 1})
    d1 = ChainComplex({0: 1, 1: 1}, {1: _one(1)})
    C = Bicomplex({0: c0, 2: c2})
    D = Bicomplex(
        {0: c0, 1: d1, 2: c2},
        {
            1: ChainMap(d1, c0, {1: _one(c)}),
            2: ChainMap(c2, d1, {0: _one(e)}),
        },
    )
    maps = {
        0: ChainMap(c0, c0, {1: _one(a)}),
        2: ChainMap(c2, c2, {0: _one(b)}),
    }
    return HomotopySimplicialMap(C, D, maps)


def surrogate_family(values: Iterable[int] = (-1, 0, 1)) -> Iterator[Tuple[Parameters, SurrogateCheck]]:
    """Every member of the family with its check, skipping non-commuting squares."""
    values = tuple(values)
    for params in product(values, repeat=4):
        try:
            fmap = family_member(*params)
        except PreconditionError:
            continue
        pair = WindowedBicomplexPair(
            m=None, N=2, L=None, rows=1, fmap=fmap, kind="surrogate"
        )
        check = check_surrogate(pair)
        check.parameters = params
        yield params, check


def search_surrogates(values: Iterable[int] = (-1, 0, 1)) -> List[Parameters]:
    found = [params for params, check in surrogate_family(values) if check.is_counterexample]
    logger.info(f"{len(found)} counterexamples in the surrogate family")
    return found
