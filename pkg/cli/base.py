# cli/base.py
"""
Shared plumbing for the toolkit management commands: common options and the
exit-code contract.

    0 pass   1 fail   2 bad input   3 cap exceeded   4 hypothesis unmet
"""

import logging
from pathlib import Path

from django.core.management.base import BaseCommand

from core.exceptions import (
    BadParameters, CapExceeded, EmptyInput, GhostVertex, HypothesisUnmet, ParseError, ToolkitError,
)
from .runconfig import OUTPUT_FORMATS, RunConfig

logger = logging.getLogger(__name__)

EXIT_BAD_INPUT = 2
EXIT_CAP_EXCEEDED = 3
EXIT_HYPOTHESIS_UNMET = 4

ERROR_EXIT_CODES = (
    ((ParseError, EmptyInput, GhostVertex, BadParameters), EXIT_BAD_INPUT),
    ((CapExceeded,), EXIT_CAP_EXCEEDED),
    ((HypothesisUnmet,), EXIT_HYPOTHESIS_UNMET),
)


def exit_code_for(error):
    for classes, code in ERROR_EXIT_CODES:
        if isinstance(error, classes):
            return code
    return 1


class ToolkitCommand(BaseCommand):
    """
    Subclasses implement `run(config, **options)` and return an exit code.
    Toolkit errors are printed and mapped onto exit codes here.
    """

    takes_input = True

    def add_arguments(self, parser):
        if self.takes_input:
            parser.add_argument("input", nargs="?", default=None, help="Facet file to read.")
            parser.add_argument(
                "--generate", metavar="SPEC", default=None,
                help="Build the input from a generator spec, e.g. nevo:3,3 or simplex-boundary:4.",
            )
            parser.add_argument(
                "--lenient", action="store_true",
                help="Renumber ghost vertices instead of rejecting the input.",
            )
        parser.add_argument("--primes", default=None, help="Comma-separated field characteristics (default from settings).")
        parser.add_argument("--cap", type=int, default=None, help="Soft cap on n for 2^n enumerations.")
        parser.add_argument("--jobs", type=int, default=None, help="Worker processes for enumerations.")
        parser.add_argument("--seed", type=int, default=None, help="Seed for random generators.")
        parser.add_argument("--format", choices=OUTPUT_FORMATS, default="text", help="Output format.")
        parser.add_argument("--output", default=None, help="Write the result to this file instead of stdout.")
        parser.add_argument("--force", action="store_true", help="Allow enumerations above the soft cap.")
        parser.add_argument("--timings", action="store_true", help="Include stage timings in JSON reports.")

    def handle(self, *args, **options):
        try:
            config = RunConfig.from_options(self.command_name, options)
            code = self.run(config, **options)
        except ToolkitError as exc:
            code = exit_code_for(exc)
            logger.debug("%s exited with %s: %s", self.command_name, code, exc)
            self.stderr.write(self.style.ERROR(f"{exc.__class__.__name__}: {exc}"))
        if code:
            raise SystemExit(code)

    @property
    def command_name(self):
        return self.__module__.rsplit(".", 1)[-1]

    def run(self, config, **options):
        raise NotImplementedError

    def emit(self, config, text):
        """Write `text` to --output or stdout"""
        if config.output_path:
            Path(config.output_path).write_text(text if text.endswith("\n") else text + "\n")
            self.stderr.write(self.style.SUCCESS(f"Wrote {config.output_path}"))
        else:
            self.stdout.write(text)
