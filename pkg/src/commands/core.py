import time
from argparse import Namespace
from typing import Optional

from util.config import Config
from util.errors import InputError
from util.output import Printer
from .base_command import BaseCommand
from .filter_handler import FilterHandler
from .graph_handler import GraphHandler
from .text_handler import TextHandler

class CommandRunner(BaseCommand, FilterHandler, TextHandler, GraphHandler):
    """
    Main command class dispatching a parsed command line to its handler.
    Inherits from BaseCommand and all subcommand handlers.
    """

    def __init__(self, args: Namespace, config: Optional[Config] = None):
        super().__init__(args, config)

    def run(self) -> int:
        """
        Execute the selected subcommand.

        Returns:
            int: process exit code (0 on success; failures raise SemnetError).
        """
        start_time = time.perf_counter()
        match self.args.command:
            case "filter":
                self._handle_filter()
            case "eval":
                self._handle_eval()
            case "classify":
                self._handle_classify()
            case "terms":
                self._handle_terms()
            case "expand":
                self._handle_expand()
            case "inspect":
                self._handle_inspect()
            case other:
                raise InputError(f"Unknown command: {other}")

        if getattr(self.args, "time", False):
            Printer.time(time.perf_counter() - start_time)
        return 0
