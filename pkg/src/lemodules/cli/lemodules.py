import argparse
import sys
from typing import List, Optional

from pydantic import ValidationError

from lemodules import __version__, logger
from lemodules.utils import LeModulesError

from .run_bounds import RunBoundsCommand
from .run_cases import RunCasesCommand
from .run_charpoly import RunCharpolyCommand
from .run_modp import RunModpCommand
from .run_realize import RunRealizeCommand
from .run_traces import RunTracesCommand


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        "le-modules CLI",
        usage="lemodules <command> [<args>]",
        epilog="For more information about a command, run: `lemodules <command> --help`",
    )
    parser.add_argument("--version", "-v", help="Display le-modules version", action="store_true")
    commands_parser = parser.add_subparsers(help="commands")

    # Register commands
    RunTracesCommand.register_subcommand(commands_parser)
    RunBoundsCommand.register_subcommand(commands_parser)
    RunCasesCommand.register_subcommand(commands_parser)
    RunCharpolyCommand.register_subcommand(commands_parser)
    RunRealizeCommand.register_subcommand(commands_parser)
    RunModpCommand.register_subcommand(commands_parser)

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    if args.version:
        print(__version__)
        return 0

    if not hasattr(args, "func"):
        parser.print_help()
        return 1

    try:
        command = args.func(args)
        return command.run()
    except (LeModulesError, ValidationError) as e:
        logger.error(str(e))
        return 2
    except OSError as e:
        logger.error(f"{e.filename or ''}: {e.strerror or e}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
