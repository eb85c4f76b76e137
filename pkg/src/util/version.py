import tomllib
from pathlib import Path

from util.output import Printer

PYPROJECT = Path(__file__).resolve().parent.parent.parent / "pyproject.toml"

def version(file_path: Path = PYPROJECT) -> str:
    """
    Read the semnet version from pyproject.toml.

    Args:
        file_path (Path): path to pyproject.toml
    Returns:
        str: the version string, or "unknown" when it cannot be read
    """
    try:
        with open(file_path, "rb") as f:
            data = tomllib.load(f)
    except FileNotFoundError:
        Printer.warning(f"Not found {file_path}, please reinstall semnet")
        return "unknown"
    except (OSError, tomllib.TOMLDecodeError) as e:
        Printer.error(f"Error reading version from {file_path}: {e}")
        return "unknown"

    return data.get("project", {}).get("version") or "unknown"
