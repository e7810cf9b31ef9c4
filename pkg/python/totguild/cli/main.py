from __future__ import annotations

import sys
from typing import Optional, Sequence, Tuple

from totguild.logs import logger
from totguild.response import EXIT_INVALID_INPUT, EXIT_OK, Error

from .commands import dispatch
from .config import RunConfig
from .parser import build_parser
from .report import RunReport, render


def _configure(config: RunConfig) -> None:
    logger.setLevel(config.log_level)
    if config.log_file or config.logstash_host:
        logger.configure(
            log_file=config.log_file,
            logstash_host=config.logstash_host,
            logstash_port=config.logstash_port,
        )


def run(argv: Optional[Sequence[str]] = None) -> Tuple[RunReport, int]:
    """Parse ``argv``, run the command and return its report and exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    report = RunReport(command=argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        report.quiet = True
        report.exit_code = EXIT_OK if e.code in (0, None) else EXIT_INVALID_INPUT
        return report, report.exit_code
    try:
        config = RunConfig.resolve(args.log_level, args.log_file, args.format)
        report.format = config.format
        _configure(config)
        report.exit_code = dispatch(args, report)
    except Error as e:
        report.exit_code = e.exit_code
        report.error = e.to_dict()
    except Exception as e:
        # settings that fail validation never reach a command
        failure = Error(e, _raise_immediately=False)
        report.exit_code = failure.exit_code
        report.error = failure.to_dict()
    if report.error:
        logger.warning(f"{args.command} failed with exit code {report.exit_code}")
    return report, report.exit_code


def main(argv: Optional[Sequence[str]] = None) -> None:
    report, code = run(argv)
    if not report.quiet:
        sys.stdout.write(render(report))
    sys.exit(code)
