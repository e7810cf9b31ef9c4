import json
import logging

import pydantic
import pytest
from totguild.response import (EXIT_INTERNAL, EXIT_INVALID_INPUT, Error,
                               GroupTableError, SchemaError, TotguildError)
from totguild.response.errors import (AlgebraErrorHandler, CommonErrorHandler,
                                      ValidationErrorHandler)


class Dims(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(extra="forbid")

    degree: int
    rank: int


def validation_error(**data):
    try:
        Dims(**data)
    except pydantic.ValidationError as e:
        return e
    raise AssertionError("model accepted bad data")


@pytest.fixture
def log():
    return logging.getLogger("totguild.test.handlers")


class TestErrorHandlers:
    """Test cases for error handler integration."""

    def test_error_handlers_initialization(self):
        """Test that error handlers are properly initialized."""
        error = Error(_raise_immediately=False)

        assert isinstance(error.algebra_handler, AlgebraErrorHandler)
        assert isinstance(error.validation_handler, ValidationErrorHandler)
        assert isinstance(error.common_handler, CommonErrorHandler)

    def test_handler_dispatch(self):
        """Test each family of exceptions reaches its handler."""
        table = Error(GroupTableError("not associative", "row 3"), _raise_immediately=False)
        schema = Error(validation_error(degree=0), _raise_immediately=False)
        plain = Error(RuntimeError("boom"), _raise_immediately=False)

        assert table.additional_info["error_type"] == "GroupTableError"
        assert schema.additional_info["error_type"] == "ValidationError"
        assert plain.additional_info["error_type"] == "RuntimeError"
        assert plain.msg == "boom"
        assert plain.exit_code == EXIT_INTERNAL


class TestAlgebraErrorHandler:
    """Test cases for the engine's exception hierarchy."""

    def test_invalid_input_is_a_warning(self, log):
        """Test input errors are logged as warnings."""
        info = AlgebraErrorHandler(log).handle_error(SchemaError("expected complex", "kind"))

        assert info == {
            "level": "WARNING",
            "exit_code": EXIT_INVALID_INPUT,
            "message": "expected complex",
            "error_type": "SchemaError",
            "location": "kind",
        }

    def test_internal_error(self, log):
        """Test the base class is an internal error without a location."""
        info = AlgebraErrorHandler(log).handle_error(TotguildError(""))

        assert info["level"] == "ERROR"
        assert info["exit_code"] == EXIT_INTERNAL
        assert info["message"] == "Computation failed."
        assert "location" not in info

    def test_location_in_message(self):
        """Test the location prefixes the exception text."""
        assert str(SchemaError("expected complex", "kind")) == "kind: expected complex"
        assert str(SchemaError("expected complex")) == "expected complex"


class TestCommonErrorHandler:
    """Test cases for standard Python exceptions."""

    @pytest.mark.parametrize(
        "exception, code, message",
        [
            (ValueError("bad"), EXIT_INVALID_INPUT, "bad"),
            (ValueError(), EXIT_INVALID_INPUT, "Invalid value provided."),
            (KeyError("dims"), EXIT_INVALID_INPUT, "Missing key: dims."),
            (IndexError("x"), EXIT_INTERNAL, "Index out of range."),
            (FileNotFoundError(2, "No such file", "c.json"), EXIT_INVALID_INPUT,
             "Input file not found: c.json."),
            (PermissionError(13, "Denied", "c.json"), EXIT_INVALID_INPUT,
             "Permission denied: c.json."),
            (MemoryError(), EXIT_INTERNAL,
             "Insufficient resources for this window; reduce it."),
            (RuntimeError(), EXIT_INTERNAL, "An unexpected error occurred."),
        ],
    )
    def test_standard_exceptions(self, log, exception, code, message):
        """Test the exit code and message of each exception type."""
        info = CommonErrorHandler(log).handle_error(exception)

        assert info["exit_code"] == code
        assert info["message"] == message
        assert info["error_type"] == type(exception).__name__

    def test_unicode_error(self, log):
        """Test undecodable input files."""
        try:
            b"\xff".decode("utf-8")
        except UnicodeDecodeError as e:
            info = CommonErrorHandler(log).handle_error(e)
        assert info["exit_code"] == EXIT_INVALID_INPUT
        assert info["message"] == "Input file is not valid UTF-8."

    def test_exception_attributes(self, log):
        """Test attributes are collected as sorted JSON."""
        attributes = json.loads(
            CommonErrorHandler(log).get_exception_attributes(SchemaError("expected complex", "kind"))
        )

        assert attributes["message"] == "expected complex"
        assert attributes["location"] == "kind"
        assert attributes["exit_code"] == EXIT_INVALID_INPUT
        assert attributes["args"] == ["kind: expected complex"]


class TestValidationErrorHandler:
    """Test cases for schema and JSON syntax errors."""

    def test_pydantic_error(self, log):
        """Test each failing field is listed."""
        handler = ValidationErrorHandler(log)
        e = validation_error(degree="x", rank=1, extra=True)

        assert handler._is_validation_error(e)
        info = handler.handle_error(e)
        fields = [error["field"] for error in info["validation_errors"]]

        assert info["exit_code"] == EXIT_INVALID_INPUT
        assert info["level"] == "WARNING"
        assert fields == ["degree", "extra"]
        assert info["message"].startswith("degree: ")

    def test_json_error(self, log):
        """Test syntax errors carry their position."""
        try:
            json.loads('{"dims":\n}')
        except json.JSONDecodeError as e:
            info = ValidationErrorHandler(log).handle_error(e)

        assert info["location"] == "line 2 column 1"
        assert info["message"].startswith("Malformed JSON at line 2 column 1")
        assert info["error_type"] == "JSONDecodeError"

    def test_format_validation_errors(self, log):
        """Test the summary message."""
        handler = ValidationErrorHandler(log)

        assert handler.format_validation_errors([]) == "Validation failed."
        assert handler.format_validation_errors(
            [{"field": "kind", "message": "bad"}, {"message": "worse"}]
        ) == "kind: bad; unknown: worse"

    def test_other_errors_not_claimed(self, log):
        """Test plain exceptions are left to the common handler."""
        assert not ValidationErrorHandler(log)._is_validation_error(ValueError("x"))
