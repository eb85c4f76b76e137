import sys
import os
from typing import List, Optional, Dict, Any
from pathlib import Path
from util.output import Printer
from util.errors import ConfigError

try:
    import tomllib
except ImportError:
    sys.exit("Error: Python 3.11+ required for tomllib")

CONFIG_NAME = "Semnet.toml"
DEFAULT_GRID = [0.1, 0.2, 0.3, 0.4, 0.5]

class Config:
    """Configuration manager for semnet, handling Semnet.toml loading and retrieval."""

    def _get_global_config_dir(self) -> Path:
        """
        Get global config directory for semnet configuration.
        Follows platform conventions using XDG on Linux/macOS and APPDATA on Windows.

        Returns:
            Path: Global configuration directory path.
        """
        if sys.platform == "win32":
            appdata = os.getenv("APPDATA")
            if appdata:
                return Path(appdata) / "semnet"
            return Path.home() / "AppData" / "Roaming" / "semnet"

        xdg_config_home = os.getenv("XDG_CONFIG_HOME")
        if xdg_config_home:
            return Path(xdg_config_home) / "semnet"
        return Path.home() / ".config" / "semnet"

    def __init__(self, path: Optional[Path] = None):
        """
        Load Semnet.toml from `path`, else from the workspace or the global config dir.

        Args:
            path (Optional[Path]): Explicit config file, skips the search.
        """
        self.data: Dict[str, Any] = {}
        self.path: Optional[Path] = path if path is not None else self._find_config()

        if self.path:
            try:
                with open(self.path, "rb") as f:
                    self.data = tomllib.load(f)
            except (OSError, tomllib.TOMLDecodeError) as e:
                raise ConfigError(f"Failed to parse {self.path}: {e}")
            Printer.debug(f"Loaded config: {self.path}")

            self.validate()

    def _find_config(self) -> Optional[Path]:
        # current directory and up to three parents
        current = Path.cwd()
        for _ in range(4):
            target = current / CONFIG_NAME
            if target.exists():
                return target
            if current == current.parent:
                break
            current = current.parent

        global_config_file = self._get_global_config_dir() / CONFIG_NAME
        if global_config_file.exists():
            return global_config_file
        return None

    @staticmethod
    def _validate_weights(where: str, section: Any):
        if not isinstance(section, dict):
            raise ConfigError(f"'{where}' section must be a table")

        default = section.get("default", 1.0)
        if not isinstance(default, (int, float)) or isinstance(default, bool) or default < 0:
            raise ConfigError(f"'{where}.default' must be a nonnegative number")

        types = section.get("types", {})
        if not isinstance(types, dict):
            raise ConfigError(f"'{where}.types' must be a table")
        for link_type, weight in types.items():
            if not isinstance(weight, (int, float)) or isinstance(weight, bool) or weight < 0:
                raise ConfigError(f"Weight of link type '{link_type}' in '{where}' must be a nonnegative number")

    def validate(self):
        """
        Validate the loaded configuration.

        Raises:
            ConfigError: If configuration is invalid.
        """
        if not self.data:
            return

        if "weights" in self.data:
            self._validate_weights("weights", self.data["weights"])

        presets = self.data.get("preset", {})
        if not isinstance(presets, dict):
            raise ConfigError("'preset' section must be a table")
        for name, preset in presets.items():
            if not isinstance(preset, dict) or "weights" not in preset:
                raise ConfigError(f"Preset '{name}' missing required 'weights' table")
            self._validate_weights(f"preset.{name}.weights", preset["weights"])

        filter_section = self.data.get("filter", {})
        if not isinstance(filter_section, dict):
            raise ConfigError("'filter' section must be a table")
        grid = filter_section.get("grid", DEFAULT_GRID)
        if not isinstance(grid, list) or not grid or not all(
                isinstance(g, (int, float)) and 0 < g <= 1 for g in grid):
            raise ConfigError("'filter.grid' must be a nonempty list of fractions in (0, 1]")
        workers = filter_section.get("workers")
        if workers is not None and (not isinstance(workers, int) or workers < 1):
            raise ConfigError("'filter.workers' must be a positive integer")

        text = self.data.get("text", {})
        if not isinstance(text, dict):
            raise ConfigError("'text' section must be a table")

        link_types = self.data.get("expand", {}).get("link_types", {})
        if not isinstance(link_types, dict) or not all(isinstance(v, str) for v in link_types.values()):
            raise ConfigError("'expand.link_types' must map mechanism names to link type strings")

    def get_weights(self, preset_name: Optional[str] = None) -> Optional[Dict[str, Any]]:
        """
        Get the weight table for a preset, or the top-level [weights] table.

        Args:
            preset_name (Optional[str]): Name of the preset (e.g., 'filtering', 'wsd').

        Returns:
            Optional[Dict[str, Any]]: {"default": float, "types": {link_type: float}} or None.

        Raises:
            ConfigError: If the named preset does not exist.
        """
        if preset_name:
            presets = self.data.get("preset", {})
            if preset_name not in presets:
                raise ConfigError(f"Unknown preset '{preset_name}'")
            section = presets[preset_name]["weights"]
        else:
            section = self.data.get("weights")

        if section is None:
            return None
        return {
            "default": float(section.get("default", 1.0)),
            "types": {k: float(v) for k, v in section.get("types", {}).items()},
        }

    def get_grid(self) -> List[float]:
        """Keep fractions evaluated by `semnet eval`."""
        return [float(g) for g in self.data.get("filter", {}).get("grid", DEFAULT_GRID)]

    def get_workers(self) -> Optional[int]:
        """Thread pool size for scoring, None for the default size."""
        return self.data.get("filter", {}).get("workers")

    def get_lang(self) -> Optional[str]:
        """Default language for word lookup."""
        return self.data.get("text", {}).get("lang")

    def get_stoplist(self) -> Optional[str]:
        """Default stoplist path (or `nltk:<language>`)."""
        return self.data.get("text", {}).get("stoplist")

    def get_link_types(self) -> Dict[str, str]:
        """Expansion mechanism → link type overrides."""
        return dict(self.data.get("expand", {}).get("link_types", {}))
