import json
import logging
import os
import sys
from fractions import Fraction

try:
    from logstash_async.formatter import LogstashFormatter
    from logstash_async.handler import AsynchronousLogstashHandler

    LOGSTASH_AVAILABLE = True
except ImportError:
    LOGSTASH_AVAILABLE = False


DEFAULT_LOG_FORMAT = "%(levelname)s: (%(name)s) == %(message)s  [%(asctime)s]"

# Internal storage for runtime-configured log level
_CONFIGURED_LOG_LEVEL = None


def get_default_log_level():
    """Get the effective default log level (configured or from environment)."""
    if _CONFIGURED_LOG_LEVEL is not None:
        return _CONFIGURED_LOG_LEVEL
    return getattr(logging, os.getenv("LOG_LEVEL", "INFO").upper(), logging.INFO)


def parse_log_level(level):
    """Accept ints or level names ("debug", "WARNING") and return an int."""
    if level is None or isinstance(level, int):
        return level
    value = getattr(logging, str(level).upper(), None)
    if not isinstance(value, int):
        raise ValueError(f"Unknown log level: {level}")
    return value


class SmartLogger(logging.Logger):
    """Logger whose level methods accept ``format=True`` to pretty-print payloads.

    Exact rationals inside dict/list payloads are rendered as ``"p/q"`` so
    pivot values and matrix entries stay readable.
    """

    def _pretty_format(self, msg):
        if isinstance(msg, (dict, list, tuple)):
            try:
                return json.dumps(
                    self._sanitize_for_json(msg), indent=2, ensure_ascii=False
                )
            except Exception:
                return str(msg)
        return str(msg)

    def _sanitize_for_json(self, obj):
        """Sanitize objects for JSON serialization."""
        if isinstance(obj, dict):
            return {
                str(k): self._sanitize_for_json(v) for k, v in obj.items()
            }
        if isinstance(obj, (list, tuple, set, frozenset)):
            return [self._sanitize_for_json(v) for v in obj]
        if isinstance(obj, Fraction):
            if obj.denominator == 1:
                return str(obj.numerator)
            return f"{obj.numerator}/{obj.denominator}"
        if isinstance(obj, (str, int, float, bool)) or obj is None:
            return obj
        return str(obj)

    def _log_with_format_option(
        self, level, msg, args, format=False, **kwargs
    ):
        if format:
            msg = self._pretty_format(msg)
        super()._log(level, msg, args, **kwargs)

    def info(self, msg, *args, format=False, **kwargs):
        if self.isEnabledFor(logging.INFO):
            self._log_with_format_option(
                logging.INFO, msg, args, format=format, **kwargs
            )

    def debug(self, msg, *args, format=False, **kwargs):
        if self.isEnabledFor(logging.DEBUG):
            self._log_with_format_option(
                logging.DEBUG, msg, args, format=format, **kwargs
            )

    def warning(self, msg, *args, format=False, **kwargs):
        if self.isEnabledFor(logging.WARNING):
            self._log_with_format_option(
                logging.WARNING, msg, args, format=format, **kwargs
            )

    def error(self, msg, *args, format=False, **kwargs):
        if self.isEnabledFor(logging.ERROR):
            self._log_with_format_option(
                logging.ERROR, msg, args, format=format, **kwargs
            )

    def critical(self, msg, *args, format=False, **kwargs):
        if self.isEnabledFor(logging.CRITICAL):
            self._log_with_format_option(
                logging.CRITICAL, msg, args, format=format, **kwargs
            )


def _attach_handlers(log, log_format, log_file, logstash_host, logstash_port,
                     logstash_database_path):
    formatter = logging.Formatter(log_format)

    # stderr keeps stdout free for reports
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    log.addHandler(console_handler)

    if log_file:
        directory = os.path.dirname(log_file)
        if directory:
            os.makedirs(directory, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(formatter)
        log.addHandler(file_handler)

    if logstash_host and LOGSTASH_AVAILABLE:
        try:
            logstash_handler = AsynchronousLogstashHandler(
                host=logstash_host,
                port=logstash_port,
                database_path=logstash_database_path,
            )
            logstash_handler.setFormatter(LogstashFormatter())
            log.addHandler(logstash_handler)
        except Exception as e:
            log.error(f"Failed to initialize Logstash handler: {e}")


class _DynamicLoggerWrapper:
    """
    Internal wrapper that names records after the calling module at log time.
    Used by Logger when logger_name is None.
    """

    ignore_modules = ("totguild.logs", "logging")

    def __init__(
        self,
        log_file: str = None,
        log_level: int = None,
        log_format: str = DEFAULT_LOG_FORMAT,
        logstash_host: str = None,
        logstash_port: int = None,
        logstash_database_path: str = None,
    ):
        self._log_file = log_file
        self._log_level = log_level
        self._log_format = log_format
        self._logstash_host = logstash_host
        self._logstash_port = logstash_port
        self._logstash_database_path = logstash_database_path
        self._loggers = {}

    def _get_caller_module_name(self):
        frame = sys._getframe(1)
        while frame is not None:
            module_name = frame.f_globals.get("__name__")
            if module_name and not module_name.startswith(
                self.ignore_modules
            ):
                return module_name
            frame = frame.f_back
        return "__main__"

    def _get_or_create_logger(self, module_name):
        if module_name not in self._loggers:
            logging.setLoggerClass(SmartLogger)
            log = logging.getLogger(module_name)
            log.setLevel(self._get_log_level(self._log_level))
            log.propagate = False
            if not log.handlers:
                _attach_handlers(
                    log, self._log_format, self._log_file,
                    self._logstash_host, self._logstash_port,
                    self._logstash_database_path,
                )
            self._loggers[module_name] = log
        return self._loggers[module_name]

    def _log(self, level, msg, *args, **kwargs):
        # Elimination loops log at DEBUG; skip the frame walk when disabled
        if getattr(logging, level.upper(), logging.ERROR) < self._get_log_level(
            self._log_level
        ):
            return
        module_name = self._get_caller_module_name()
        log = self._get_or_create_logger(module_name)
        getattr(log, level)(msg, *args, **kwargs)

    def isEnabledFor(self, level):
        return level >= self._get_log_level(self._log_level)

    def info(self, msg, *args, **kwargs):
        self._log("info", msg, *args, **kwargs)

    def debug(self, msg, *args, **kwargs):
        self._log("debug", msg, *args, **kwargs)

    def warning(self, msg, *args, **kwargs):
        self._log("warning", msg, *args, **kwargs)

    def error(self, msg, *args, **kwargs):
        self._log("error", msg, *args, **kwargs)

    def critical(self, msg, *args, **kwargs):
        self._log("critical", msg, *args, **kwargs)

    def exception(self, msg, *args, **kwargs):
        module_name = self._get_caller_module_name()
        self._get_or_create_logger(module_name).exception(
            msg, *args, **kwargs
        )

    def _get_log_level(self, log_level):
        if log_level is None:
            return get_default_log_level()
        return log_level

    def configure(self, log_file=None, logstash_host=None, logstash_port=None):
        """Point every cached and future logger at new outputs."""
        self._log_file = log_file
        self._logstash_host = logstash_host
        if logstash_port is not None:
            self._logstash_port = int(logstash_port)
        for log in self._loggers.values():
            for handler in list(log.handlers):
                log.removeHandler(handler)
                handler.close()
            _attach_handlers(
                log, self._log_format, self._log_file, self._logstash_host,
                self._logstash_port, self._logstash_database_path,
            )

    def setLevel(self, level):
        """Update log level for all cached loggers and the global default."""
        global _CONFIGURED_LOG_LEVEL
        level = parse_log_level(level)
        _CONFIGURED_LOG_LEVEL = level
        self._log_level = level
        for log in self._loggers.values():
            log.setLevel(level)


class Logger:
    """
    Logger class with automatic module detection when logger_name is None.

    Usage:
        # Dynamic detection (detects caller module at each log call):
        logger = Logger().get_logger()

        # Fixed name:
        logger = Logger(logger_name="totguild.cli").get_logger()
    """

    def __init__(
        self,
        logger_name: str = None,
        log_file: str = None,
        log_level=None,
        log_format: str = DEFAULT_LOG_FORMAT,
        logstash_host: str = None,
        logstash_port: int = 5959,
        logstash_database_path: str = None,
    ):
        self._logger_name = logger_name
        self._logstash_port = self._validate_logstash_port(logstash_port)
        self._log_level = parse_log_level(log_level)
        self._log_file = log_file
        self._log_format = log_format
        self._logstash_host = logstash_host
        self._logstash_database_path = logstash_database_path

        if logger_name is not None:
            self._setup_logger(logger_name)
            self._dynamic_wrapper = None
        else:
            self.logger = None
            self._dynamic_wrapper = _DynamicLoggerWrapper(
                log_file=log_file,
                log_level=self._log_level,
                log_format=log_format,
                logstash_host=logstash_host,
                logstash_port=self._logstash_port,
                logstash_database_path=logstash_database_path,
            )

    def _validate_logstash_port(self, port):
        if port is None:
            return None
        try:
            return int(port)
        except ValueError:
            raise ValueError(f"Invalid logstash_port: {port}")

    def _setup_logger(self, logger_name):
        logging.setLoggerClass(SmartLogger)
        self.logger = logging.getLogger(logger_name)
        self.logger.setLevel(
            self._log_level
            if self._log_level is not None
            else get_default_log_level()
        )
        self.logger.propagate = False
        if not self.logger.handlers:
            _attach_handlers(
                self.logger, self._log_format, self._log_file,
                self._logstash_host, self._logstash_port,
                self._logstash_database_path,
            )

    def get_logger(self):
        """
        Returns the logger instance.

        - If logger_name was provided: returns a SmartLogger
        - If logger_name is None: returns the dynamic wrapper
        """
        if self._dynamic_wrapper is not None:
            return self._dynamic_wrapper
        return self.logger

    def setLevel(self, level):
        return self.get_logger().setLevel(parse_log_level(level))


# Default logger instance with dynamic module detection
logger = Logger().get_logger()
