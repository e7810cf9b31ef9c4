import json
from fractions import Fraction
from typing import Any, List

from totguild.logs import logger


def encode_rational(value) -> str:
    """Render an exact rational as ``"p"`` or ``"p/q"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def encode_matrix(matrix) -> List[List[Any]]:
    """Sparse triples ``[row, col, "p/q"]`` sorted by position."""
    return [
        [r, c, encode_rational(v)] for (r, c), v in sorted(matrix.items())
    ]


def encode_vector(vector) -> List[str]:
    return [encode_rational(v) for v in vector]


def dump_canonical(document: Any) -> str:
    """Two-space indented JSON with a trailing newline; key order preserved."""
    try:
        return json.dumps(document, indent=2, ensure_ascii=False) + "\n"
    except (TypeError, ValueError) as e:
        logger.error(f"Error encoding document: {e}")
        raise
