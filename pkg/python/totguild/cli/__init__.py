"""The ``totguild`` command line."""

from .commands import HANDLERS, dispatch
from .config import RunConfig
from .main import main, run
from .parser import build_parser, parse_degrees
from .report import RunReport, render, render_json, render_text

__all__ = [
    "RunConfig",
    "RunReport",
    "HANDLERS",
    "build_parser",
    "parse_degrees",
    "dispatch",
    "render",
    "render_json",
    "render_text",
    "run",
    "main",
]
