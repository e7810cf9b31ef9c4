import re
from fractions import Fraction
from typing import Any, Iterable, Optional

from totguild.exactla import SparseMatrix
from totguild.logs import logger
from totguild.response import DimensionMismatchError, InputError

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def decode_rational(value: Any, location: Optional[str] = None) -> Fraction:
    """
    Parse ``"p"``, ``"p/q"`` or an integer into a Fraction.

    Floats are refused: they cannot carry exact values.
    """
    if isinstance(value, bool):
        raise InputError(f"expected a rational, got {value!r}", location)
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise InputError(
            f"expected a rational string 'p/q', got {value!r}", location
        )
    match = _RATIONAL.match(value)
    if match is None:
        raise InputError(f"malformed rational {value!r}", location)
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise InputError(f"zero denominator in {value!r}", location)
    return Fraction(int(numerator), int(denominator or 1))


def decode_matrix(
    triples: Iterable[Any],
    rows: int,
    cols: int,
    location: Optional[str] = None,
) -> SparseMatrix:
    """Build a SparseMatrix from ``[row, col, "p/q"]`` triples."""
    entries = {}
    for index, triple in enumerate(triples):
        where = f"{location}[{index}]" if location else f"[{index}]"
        if not isinstance(triple, (list, tuple)) or len(triple) != 3:
            raise InputError("expected a triple [row, col, value]", where)
        r, c, raw = triple
        if isinstance(r, bool) or isinstance(c, bool) or not (
            isinstance(r, int) and isinstance(c, int)
        ):
            raise InputError("row and column must be integers", where)
        if not (0 <= r < rows and 0 <= c < cols):
            raise DimensionMismatchError(
                f"entry ({r}, {c}) outside a {rows}x{cols} matrix", where
            )
        if (r, c) in entries:
            raise InputError(f"duplicate entry ({r}, {c})", where)
        entries[(r, c)] = decode_rational(raw, where)
    matrix = SparseMatrix(rows, cols, entries)
    logger.debug(f"decoded {rows}x{cols} matrix with {matrix.nnz} entries")
    return matrix


def decode_vector(values: Iterable[Any], location: Optional[str] = None):
    return [
        decode_rational(v, f"{location}[{i}]" if location else f"[{i}]")
        for i, v in enumerate(values)
    ]
