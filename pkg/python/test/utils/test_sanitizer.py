from enum import Enum
from fractions import Fraction

from pydantic import BaseModel
from totguild.utils import convert_value, filter_null_fields, sanitize_fields


class Verdict(Enum):
    VANISHES = "vanishes"


class Row(BaseModel):
    degree: int
    label: str = None


class Fate:
    def to_dict(self):
        return {"class": "<a>", "dims": {(1, 0): 1}}


class TestConvertValue:
    """Test cases for convert_value function."""

    def test_rationals(self):
        """Test integral rationals become ints, others p/q strings."""
        assert convert_value(Fraction(6, 3)) == 2
        assert convert_value(Fraction(-1, 2)) == "-1/2"

    def test_other_scalars(self):
        """Test enums, bytes and plain values."""
        assert convert_value(Verdict.VANISHES) == "vanishes"
        assert convert_value(b"ab") == "ab"
        assert convert_value(1.5) == 1.5
        assert convert_value(None) is None
        assert convert_value(object) == str(object)


class TestFilterNullFields:
    """Test cases for filter_null_fields function."""

    def test_nested(self):
        """Test None is removed at every level."""
        data = {"a": None, "b": {"c": None, "d": 0}, "e": [1, None, {"f": None}]}
        assert filter_null_fields(data) == {"b": {"d": 0}, "e": [1, {}]}


class TestSanitizeFields:
    """Test cases for sanitize_fields function."""

    def test_bidegree_keys(self):
        """Test tuple keys are joined with commas."""
        assert sanitize_fields({(2, -1): Fraction(1, 2), 3: None}) == {"2,-1": "1/2"}

    def test_collections(self):
        """Test tuples and sets become lists."""
        assert sanitize_fields({"t": (1, Fraction(2)), "s": {3, 1}}) == {"t": [1, 2], "s": [1, 3]}

    def test_models_and_to_dict(self):
        """Test pydantic models and result objects are expanded."""
        assert sanitize_fields(Row(degree=1)) == {"degree": 1}
        assert sanitize_fields([Fate()]) == [{"class": "<a>", "dims": {"1,0": 1}}]

    def test_empty_values_kept(self):
        """Test only None is dropped."""
        assert sanitize_fields({"dims": {}, "ranks": [], "name": ""}) == {
            "dims": {}, "ranks": [], "name": ""
        }
