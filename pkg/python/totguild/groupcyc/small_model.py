"""Rational small model of the cyclic chains of a free group.

The identity class contributes ``C_*(BF) ⊗ CC_*(Q)`` with ``BF_r`` modelled
by ``Q`` in degree 0 and ``Q^r`` in degree 1, and ``CC_*(Q)`` by ``Q`` in
every even degree. A nontrivial class ``<x>`` has centralizer ``Z`` generated
by its root, so ``B(C_<x>/(x))`` is rationally a point. All differentials
vanish.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple, Union

from totguild.chain import ChainComplex
from totguild.response import IndexRangeError

from .words import ConjClassRep, FreeWord

# abelian classes are exponent vectors
ClassLike = Union[ConjClassRep, FreeWord, Tuple[int, ...]]


def _nontrivial(classes: Sequence[ClassLike]) -> List[str]:
    reps = []
    for c in classes:
        if isinstance(c, tuple):
            if any(c):
                reps.append(",".join(str(x) for x in c))
            continue
        w = c.representative if isinstance(c, ConjClassRep) else c
        if not w.is_identity():
            reps.append(str(w))
    return reps


def _letter(rank: int, a: int) -> str:
    return chr(ord("a") + a) if rank <= 26 else f"x{a}"


def small_model_labels(classes: Sequence[ClassLike], rank: int, N: int) -> Dict[int, List[str]]:
    """Basis labels per degree; identity summand first, then the classes in degree 0."""
    labels: Dict[int, List[str]] = {}
    for n in range(N + 1):
        j = n // 2
        u = "" if j == 0 else ("u" if j == 1 else f"u^{j}")
        if n % 2 == 0:
            labels[n] = [u or "1"]
        else:
            labels[n] = [
                f"e_{_letter(rank, a)}" + (f" {u}" if u else "") for a in range(rank)
            ]
    labels[0] = labels.get(0, []) + [f"<{w}>" for w in _nontrivial(classes)]
    return labels


def wtcc_small_model(classes: Sequence[ClassLike], rank: int, N: int) -> ChainComplex:
    """``⊕_{<x> ≠ 1} Q[0]  ⊕  (Q[0] ⊕ Q^r[1]) ⊗ CC_*(Q)`` in degrees ``0..N``."""
    if N < 0 or rank < 0:
        raise IndexRangeError(f"need N >= 0 and rank >= 0, got N={N}, rank={rank}")
    dims = {n: len(v) for n, v in small_model_labels(classes, rank, N).items()}
    return ChainComplex(dims)
