import functools
import sys
import traceback
import uuid
from typing import Any, Callable, Optional

from totguild.logs import Logger

from .errors import (EXIT_INTERNAL, AlgebraErrorHandler, CommonErrorHandler,
                     ValidationErrorHandler)


def police(
    _func: Optional[Callable] = None,
    *,
    default_msg: Optional[str] = None,
    default_code: Optional[int] = None,
):
    """
    Decorator turning any exception escaping a command into an ``Error``.
    Can be used with or without parentheses:
        @police
        def homology(args): ...

        @police(default_msg="Group computation failed", default_code=3)
        def group(args): ...
    """

    def decorator(func: Callable):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except Error:
                raise
            except Exception as e:
                raise Error(
                    e,
                    msg=default_msg,
                    code=default_code,
                    _raise_immediately=False,
                )

        return wrapper

    if _func is not None and callable(_func):
        return decorator(_func)

    return decorator


class Error(Exception):
    """Command failure carrying an exit code and a loggable error record.

    Dynamic usage patterns:
        raise Error("Something went wrong")
        raise Error("Bad table", 2)
        raise Error(InputError("d∘d ≠ 0"), "Invalid complex")
        raise Error(exception, exit_code=3, message="Internal failure")
    """

    def __init__(self, *args: Any, **kwargs: Any):
        e: Optional[Exception] = kwargs.pop("e", None)
        msg: Optional[str] = kwargs.pop("msg", None)
        code: Optional[int] = kwargs.pop("code", None)
        level: Optional[str] = kwargs.pop("level", None)
        additional_info: Optional[dict] = kwargs.pop("additional_info", None)
        include_stack_trace: bool = kwargs.pop("include_stack_trace", True)
        _raise_immediately: bool = kwargs.pop("_raise_immediately", True)

        if "error" in kwargs and not e:
            e = kwargs.pop("error")
        if "message" in kwargs and not msg:
            msg = kwargs.pop("message")
        if "exit_code" in kwargs and code is None:
            code = kwargs.pop("exit_code")

        for arg in args:
            if isinstance(arg, Exception):
                e = arg
            elif isinstance(arg, str):
                msg = arg
            elif isinstance(arg, bool):
                continue
            elif isinstance(arg, int):
                code = arg
            elif isinstance(arg, dict):
                additional_info = arg

        if e is None:
            _, exc_value, _ = sys.exc_info()
            if exc_value is not None and not isinstance(exc_value, Error):
                e = exc_value

        self.e = e
        self.msg = msg or "Unknown error."
        self.exit_code = code
        self.level = level or "ERROR"
        self.additional_info = dict(additional_info or {})
        self.include_stack_trace = include_stack_trace
        self.error_id = str(uuid.uuid4())

        if kwargs:
            self.additional_info.update(kwargs)

        self.logger = Logger(self.error_id).get_logger()

        self.algebra_handler = AlgebraErrorHandler(self.logger)
        self.validation_handler = ValidationErrorHandler(self.logger)
        self.common_handler = CommonErrorHandler(self.logger)

        if e is not None:
            self._handle_error_with_handlers(e, msg=msg)
        if self.exit_code is None:
            self.exit_code = EXIT_INTERNAL

        super().__init__(self.msg)

        if _raise_immediately:
            raise self

    def _handle_error_with_handlers(
        self, e: Exception, msg: Optional[str] = None
    ):
        if isinstance(e, Error):
            info = {
                "level": e.level,
                "exit_code": e.exit_code,
                "message": e.msg,
            }
        elif self.algebra_handler._is_algebra_error(e):
            info = self.algebra_handler.handle_error(e)
        elif self.validation_handler._is_validation_error(e):
            info = self.validation_handler.handle_error(e)
        else:
            info = self.common_handler.handle_error(e)

        self.level = info.get("level", self.level)
        if self.exit_code is None:
            self.exit_code = info.get("exit_code")
        if not msg:
            self.msg = info.get("message", self.msg)
        for key in ("location", "validation_errors", "error_type"):
            if key in info:
                self.additional_info.setdefault(key, info[key])

    def to_dict(self):
        if self.e is not None:
            self.logger.debug(
                "Error attributes: "
                f"{self.common_handler.get_exception_attributes(self.e)}"
            )
            if self.include_stack_trace:
                self.logger.debug(
                    "Stack trace:\n"
                    + "".join(
                        traceback.format_exception(
                            type(self.e), self.e, self.e.__traceback__
                        )
                    )
                )
        else:
            self.logger.error(self.msg)

        detail = None
        if self.e is not None:
            detail = self.e.msg if isinstance(self.e, Error) else str(self.e).strip()

        return {
            "message": self.msg,
            "exit_code": self.exit_code,
            "error": {
                "level": self.level,
                "error_id": self.error_id,
                "detail": detail,
            },
            **self.additional_info,
        }
