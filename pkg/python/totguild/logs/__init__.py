from .logger import Logger, SmartLogger, logger, parse_log_level

__all__ = ["Logger", "SmartLogger", "logger", "parse_log_level"]
