import pytest
from totguild.response import (EXIT_INTERNAL, EXIT_INVALID_INPUT, Error,
                               IndexRangeError, InputError, NotAChainMapError,
                               PreconditionError, TotguildError)
from totguild.response.errors import CommonErrorHandler


class TestError:
    """Test cases for Error response class."""

    def test_error_default_initialization(self):
        """Test Error class with default parameters."""
        error = Error(_raise_immediately=False)

        assert error.msg == "Unknown error."
        assert error.exit_code == EXIT_INTERNAL
        assert error.level == "ERROR"
        assert error.additional_info == {}
        assert error.e is None

    def test_raises_immediately(self):
        """Test Error raises itself unless told otherwise."""
        with pytest.raises(Error) as info:
            Error("Bad table", 2)
        assert info.value.msg == "Bad table"
        assert info.value.exit_code == 2

    def test_positional_and_keyword_forms(self):
        """Test the dynamic argument patterns."""
        exception = InputError("d d != 0")
        by_position = Error(exception, "Invalid complex", {"file": "c.json"}, _raise_immediately=False)
        by_keyword = Error(error=exception, message="Invalid complex", exit_code=3, _raise_immediately=False)

        assert by_position.e is exception
        assert by_position.msg == "Invalid complex"
        assert by_position.additional_info["file"] == "c.json"
        assert by_keyword.msg == "Invalid complex"
        assert by_keyword.exit_code == 3

    def test_algebra_error_sets_code_and_level(self):
        """Test engine errors map to invalid input with their message."""
        error = Error(NotAChainMapError("square 2 does not commute", "maps.2"), _raise_immediately=False)

        assert error.exit_code == EXIT_INVALID_INPUT
        assert error.level == "WARNING"
        assert error.msg == "square 2 does not commute"
        assert error.additional_info["location"] == "maps.2"
        assert error.additional_info["error_type"] == "NotAChainMapError"

    def test_precondition_is_invalid_input(self):
        """Test precondition failures exit with 2."""
        assert Error(PreconditionError("no homotopy"), _raise_immediately=False).exit_code == 2

    def test_internal_engine_error(self):
        """Test the base class is an internal failure."""
        error = Error(TotguildError("unreachable pivot"), _raise_immediately=False)
        assert error.exit_code == EXIT_INTERNAL
        assert error.level == "ERROR"

    def test_explicit_code_wins(self):
        """Test a given code overrides the handler's."""
        error = Error(IndexRangeError("page 9"), code=3, _raise_immediately=False)
        assert error.exit_code == 3

    def test_picks_up_current_exception(self):
        """Test the exception being handled is captured."""
        try:
            raise KeyError("dims")
        except KeyError:
            error = Error(_raise_immediately=False)
        assert isinstance(error.e, KeyError)
        assert error.msg == "Missing key: dims."
        assert error.exit_code == EXIT_INVALID_INPUT

    def test_wraps_another_error(self):
        """Test an Error inside an Error keeps its code and message."""
        inner = Error("inner failure", 1, _raise_immediately=False)
        outer = Error(inner, _raise_immediately=False)
        assert outer.exit_code == 1
        assert outer.msg == "inner failure"

    def test_to_dict_with_exception(self, mocker):
        """Test the serialized record."""
        mocker.patch.object(CommonErrorHandler, "get_exception_attributes", return_value="{}")
        error = Error(ValueError("bad value"), msg="Custom message", code=2, _raise_immediately=False)

        assert error.to_dict() == {
            "message": "Custom message",
            "exit_code": 2,
            "error": {
                "level": "WARNING",
                "error_id": error.error_id,
                "detail": "bad value",
            },
            "error_type": "ValueError",
        }

    def test_to_dict_without_exception(self):
        """Test a bare message has no detail."""
        error = Error("Nothing to do", _raise_immediately=False)
        result = error.to_dict()
        assert result["error"]["detail"] is None
        assert result["exit_code"] == EXIT_INTERNAL

    def test_unique_ids(self):
        """Test every error gets its own id."""
        a = Error(_raise_immediately=False)
        b = Error(_raise_immediately=False)
        assert a.error_id != b.error_id
