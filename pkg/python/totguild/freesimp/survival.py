"""Follow ι_(1,m-1) through the spectral sequences of both windows."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional

from totguild.logs import logger
from totguild.response import IndexRangeError, WindowTooSmallError
from totguild.simpfilt import Bicomplex, totalize
from totguild.specseq import pages, track_class

from .windows import WindowedBicomplexPair, build_example_bicomplexes

# smallest window showing the kill with two rows; m = 2 holds at L = 4 and L = 5
MINIMAL_WINDOW: Dict[int, int] = {2: 4}
# smallest window check_window accepts
SMALLEST_WINDOW = 4


@dataclass
class ClassFate:
    """What the spectral sequence does to one tracked class."""

    window: str
    coordinates: Dict[int, List[Fraction]]
    # last page on which the class is nonzero
    survives_to: int
    # r such that the class is hit by d_r (nonzero on E^r, zero on E^{r+1})
    killed_by: Optional[int] = None
    # r such that the class supports a nonzero d_r
    supports: Optional[int] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            "window": self.window,
            "survives_to": self.survives_to,
            "killed_by": self.killed_by,
            "supports": self.supports,
            "coordinates": {r: [str(x) for x in v] for r, v in self.coordinates.items()},
        }


@dataclass
class SurvivalReport:
    m: int
    N: int
    L: int
    rows: int
    filtration: str
    source: ClassFate
    target: ClassFate

    @property
    def exhibits_kill(self) -> bool:
        """ι survives to E³ in the C-window and is killed by d² in the D-window."""
        return self.source.survives_to >= 3 and self.target.killed_by == 2

    def to_dict(self) -> Dict[str, object]:
        return {
            "m": self.m,
            "truncation": self.N,
            "window": self.L,
            "rows": self.rows,
            "filtration": self.filtration,
            "exhibits_kill": self.exhibits_kill,
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
        }


def _total_vector(B: Bicomplex, m: int, p: int, local: List) -> List[Fraction]:
    vector = [Fraction(0)] * sum(size for _, _, size in B.layout(m))
    for q, off, size in B.layout(m):
        if q == p:
            for k, v in enumerate(local):
                vector[off + k] = Fraction(v)
    return vector


def _fate(name: str, B: Bicomplex, m: int, p: int, local: List, by: str, r_max: int) -> ClassFate:
    _, filt = totalize(B, by=by)
    ss = pages(filt, r_max=r_max, degrees=[m, m + 1])
    s = p if by == "columns" else m - p
    tracked = track_class(ss, s, m - s, _total_vector(B, m, p, local))
    fate = ClassFate(window=name, coordinates=tracked, survives_to=0)
    previous = None
    for page in ss.pages:
        r = page.r
        if r not in tracked:
            fate.supports = r - 1
            break
        nonzero = any(tracked[r])
        if nonzero:
            fate.survives_to = r
        elif previous:
            fate.killed_by = r - 1
            break
        previous = nonzero
    return fate


def survival_report(
    m: int,
    N: int,
    L: int,
    rows: int = 2,
    by: str = "columns",
    r_max: int = 3,
    pair: Optional[WindowedBicomplexPair] = None,
) -> SurvivalReport:
    """Pages ``E^1..E^{r_max}`` around total degree ``m`` for both windows."""
    if pair is None:
        pair = build_example_bicomplexes(m, N, L, rows)
    column, _, index = pair.tracked
    local_c = [1 if k == index else 0 for k in range(pair.source_bicomplex.column(column).dim(1))]
    source = _fate("C", pair.source_bicomplex, m, column, local_c, by, r_max)
    target = _fate("D", pair.target_bicomplex, m, column, pair.tracked_image, by, r_max)
    report = SurvivalReport(m, N, L, rows, by, source, target)
    logger.info(
        f"window L={L}: C keeps ι to E^{source.survives_to}, "
        f"D kill by d_{target.killed_by}"
    )
    return report


def scan_windows(m: int, N: int, windows: Iterable[int], rows: int = 2,
                 by: str = "columns") -> List[SurvivalReport]:
    return [survival_report(m, N, L, rows, by) for L in windows]


def minimal_window(reports: Iterable[SurvivalReport]) -> Optional[int]:
    """Smallest scanned window exhibiting the kill, confirmed at the next scanned window."""
    reports = sorted(reports, key=lambda r: r.L)
    for a, b in zip(reports, reports[1:]):
        if a.exhibits_kill and b.exhibits_kill:
            return a.L
    return None


def default_window(m: int) -> int:
    return MINIMAL_WINDOW.get(m, SMALLEST_WINDOW)


def check_window(m: int, N: int, L: int) -> None:
    """Reject windows too small for the survival verdicts to mean anything."""
    if N < m + 2:
        raise IndexRangeError(f"truncation N={N} must be at least m + 2 = {m + 2}", "truncation")
    if L < SMALLEST_WINDOW:
        raise WindowTooSmallError(f"window L={L} must be at least {SMALLEST_WINDOW}", "window")
