import json
from fractions import Fraction

import pytest
from totguild.exactla import SparseMatrix
from totguild.utils import (decode_matrix, dump_canonical, encode_matrix,
                            encode_rational, encode_vector)


class TestEncoder:
    """Test cases for the exact rational encoders."""

    def test_encode_rational(self):
        """Test integers drop the denominator."""
        assert encode_rational(Fraction(4, 2)) == "2"
        assert encode_rational(Fraction(-3, 6)) == "-1/2"
        assert encode_rational(0) == "0"

    def test_encode_matrix_sorted(self):
        """Test triples come out sorted by position."""
        matrix = SparseMatrix(2, 2, {(1, 0): Fraction(1, 3), (0, 1): -1})
        assert encode_matrix(matrix) == [[0, 1, "-1"], [1, 0, "1/3"]]
        assert decode_matrix(encode_matrix(matrix), 2, 2) == matrix

    def test_encode_vector(self):
        """Test each coordinate is encoded."""
        assert encode_vector([Fraction(1, 2), 3]) == ["1/2", "3"]


class TestDumpCanonical:
    """Test cases for dump_canonical function."""

    def test_layout(self):
        """Test indentation, key order and trailing newline."""
        text = dump_canonical({"kind": "complex", "format_version": 1})
        assert text == '{\n  "kind": "complex",\n  "format_version": 1\n}\n'

    def test_unicode_kept(self):
        """Test non-ASCII labels are written as is."""
        assert "ι1" in dump_canonical({"label": "ι1"})
        assert json.loads(dump_canonical({"label": "ι1"})) == {"label": "ι1"}

    def test_unserializable(self):
        """Test unsupported values raise."""
        with pytest.raises(TypeError):
            dump_canonical({"value": Fraction(1, 2)})
