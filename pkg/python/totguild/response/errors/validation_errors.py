import json
from typing import Any, Dict, List

import pydantic

from .algebra_errors import EXIT_INVALID_INPUT


class ValidationErrorHandler:
    """Handler for schema and JSON syntax errors in input files."""

    def __init__(self, logger):
        self.logger = logger

    def _is_validation_error(self, e: Exception) -> bool:
        return isinstance(e, (pydantic.ValidationError, json.JSONDecodeError))

    def handle_error(self, e: Exception) -> Dict[str, Any]:
        if isinstance(e, pydantic.ValidationError):
            return self._handle_pydantic_error(e)
        return self._handle_json_error(e)

    def _handle_pydantic_error(
        self, e: "pydantic.ValidationError"
    ) -> Dict[str, Any]:
        errors = []

        for error in e.errors():
            errors.append(
                {
                    "field": " -> ".join(str(loc) for loc in error["loc"]),
                    "message": error["msg"],
                    "type": error["type"],
                    "input": error.get("input"),
                }
            )

        return {
            "level": "WARNING",
            "exit_code": EXIT_INVALID_INPUT,
            "message": self.format_validation_errors(errors),
            "error_type": "ValidationError",
            "validation_errors": errors,
        }

    def _handle_json_error(self, e: json.JSONDecodeError) -> Dict[str, Any]:
        location = f"line {e.lineno} column {e.colno}"
        return {
            "level": "WARNING",
            "exit_code": EXIT_INVALID_INPUT,
            "message": f"Malformed JSON at {location}: {e.msg}.",
            "error_type": "JSONDecodeError",
            "location": location,
        }

    def format_validation_errors(self, errors: List[Dict[str, Any]]) -> str:
        """Format validation errors into a readable string."""
        if not errors:
            return "Validation failed."

        return "; ".join(
            f"{error.get('field', 'unknown')}: "
            f"{error.get('message', 'validation error')}"
            for error in errors
        )
