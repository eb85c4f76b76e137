#!/usr/bin/env python3

import sys

from util.output import Printer
from util.errors import SemnetError
from util.args import args as args_parser
from util.version import version

from commands import CommandRunner

def main(argv=None) -> int:
    __version__ = version()

    try:
        args = args_parser(__version__, argv)
    except SemnetError as e:
        Printer.error(str(e))
        return e.exit_code

    Printer.configure(debug=args.debug, quiet=args.quiet)
    Printer.debug("Debug logging enabled")

    try:
        return CommandRunner(args).run()
    except KeyboardInterrupt:
        return 1
    except SemnetError as e:
        Printer.error(str(e))
        return e.exit_code
    except Exception as e:
        Printer.error(f"Unexpected error: {e}")
        if args.debug:
            import traceback
            traceback.print_exc()
        return 1

if __name__ == "__main__":
    exit_code = main()
    sys.exit(exit_code)
