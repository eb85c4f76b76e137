import logging
import sys
from typing import Iterable, TextIO

class Colors:
    """ANSI color codes for terminal output."""
    GREEN = '\033[92m'
    CYAN = '\033[96m'
    YELLOW = '\033[93m'
    RED = '\033[91m'
    GRAY = '\033[1;30m'
    RESET = '\033[0m'
    BOLD = '\033[1m'

class TaggedFormatter(logging.Formatter):
    """Formatter producing `[ TAG ] message`, colored only on a terminal."""

    TAGS = {
        logging.DEBUG: ("DEBUG", Colors.GRAY),
        logging.INFO: ("INFO", Colors.CYAN),
        logging.WARNING: ("WARN", Colors.YELLOW),
        logging.ERROR: ("ERROR", Colors.RED),
        logging.CRITICAL: ("CRIT", Colors.RED),
    }

    def __init__(self, use_color: bool = True):
        super().__init__()
        self.use_color = use_color

    def format(self, record):
        # extra={'tag': 'LOAD', 'color': ...} overrides the level tag
        tag, color = self.TAGS.get(record.levelno, ("LOG", Colors.RESET))
        tag = getattr(record, 'tag', tag)
        color = getattr(record, 'color', color)

        message = super().format(record)
        if not self.use_color:
            return f"[ {tag} ] {message}"
        return f"{Colors.BOLD}{color}[ {tag} ]{Colors.RESET} {message}"

# stdout carries command results; the log lives on stderr
logger = logging.getLogger("semnet")
logger.setLevel(logging.INFO)
handler = logging.StreamHandler(sys.stderr)
handler.setFormatter(TaggedFormatter(use_color=sys.stderr.isatty()))
logger.addHandler(handler)
logger.propagate = False

class Printer:
    """Static facade over the semnet logger plus the result writer."""

    @staticmethod
    def configure(debug: bool = False, quiet: bool = False):
        """Set verbosity from the global CLI flags."""
        if debug:
            logger.setLevel(logging.DEBUG)
        elif quiet:
            logger.setLevel(logging.WARNING)
        else:
            logger.setLevel(logging.INFO)

    @staticmethod
    def action(tag: str, message: str, color: str = Colors.GREEN):
        """Log a step of a command under its own tag (LOAD, SCORE, ...)."""
        logger.info(message, extra={'tag': tag, 'color': color})

    @staticmethod
    def time(seconds: float):
        """Print the elapsed time of a command."""
        logger.info(f"Took {seconds:.3f}s", extra={'tag': 'TIME', 'color': Colors.GRAY})

    @staticmethod
    def error(message: str):
        logger.error(message)

    @staticmethod
    def info(message: str):
        logger.info(message)

    @staticmethod
    def warning(message: str):
        logger.warning(message)

    @staticmethod
    def debug(message: str):
        logger.debug(message)

    @staticmethod
    def results(lines: Iterable[str], stream: TextIO = None):
        """Write result lines, newline terminated, to stdout (or `stream`)."""
        out = stream if stream is not None else sys.stdout
        for line in lines:
            out.write(f"{line}\n")
        out.flush()
