import argparse
import sys

from loguru import logger
from pydantic import ValidationError

from majca import __version__
from majca.commands import classify, run, verify
from majca.commands import enumerate as enumerate_command
from majca.exceptions import MajcaError
from majca.utils.logger import setup_logging

COMMANDS = (run, classify, enumerate_command, verify)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="majca",
        description="Majority and minority rules on cyclic binary rings",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", help="Diagnostic level on stderr (default from MAJCA_LOG_LEVEL)")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.add_parser(subparsers)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 for --help / --version
        return e.code if isinstance(e.code, int) else 2

    setup_logging(args.log_level)
    logger.info(f"majca {args.command}")

    try:
        return args.handler(args)
    except ValidationError as e:
        logger.error(f"Invalid arguments for {args.command}: {e}")
        return 2
    except MajcaError as e:
        logger.error(f"Error in {args.command}: {e}")
        return 2
    except OSError as e:
        logger.error(f"Could not write output: {e}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
