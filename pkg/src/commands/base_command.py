from argparse import Namespace
from pathlib import Path
from typing import Iterable, Optional

from util.cache import CacheManager
from util.config import Config
from util.errors import InputError
from util.output import Printer, Colors
from semnet.network import LinkWeightConfig, SemanticNetwork, load_network, load_weights
from semnet.textproc import NormalizationMap, StopList, load_normalization, load_stoplist

class BaseCommand:
    """
    Shared plumbing for every subcommand: configuration, network loading
    (through the index cache), weights, text resources and output.
    """

    def __init__(self, args: Namespace, config: Optional[Config] = None):
        """
        Args:
            args (Namespace): Parsed command line.
            config (Optional[Config]): Loaded configuration; searched for when omitted.
        """
        self.args = args
        self.config = config if config is not None else Config(Path(args.config) if getattr(args, "config", None) else None)

        if getattr(args, "no_cache", False):
            self.cache = None
            Printer.debug("Cache disabled via --no-cache")
        else:
            self.cache = CacheManager()

    @property
    def workers(self) -> Optional[int]:
        workers = getattr(self.args, "workers", None) or self.config.get_workers()
        if workers is not None and workers < 1:
            raise InputError(f"--workers must be positive, got {workers}")
        return workers

    @property
    def lang(self) -> Optional[str]:
        return getattr(self.args, "lang", None) or self.config.get_lang()

    @staticmethod
    def _open_binary(path: Path, what: str):
        try:
            return open(path, "rb")
        except OSError as e:
            raise InputError(f"Cannot read {what} {path}: {e}") from None

    def read_text(self, source: str, what: str = "file") -> str:
        path = Path(source)
        try:
            return path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise InputError(f"Cannot read {what} {path}: {e}") from None

    def load_network(self, source: str) -> SemanticNetwork:
        """Load and validate a network file, reusing the cached index when the file is unchanged."""
        path = Path(source)
        if self.cache is not None:
            network = self.cache.load(path)
            if isinstance(network, SemanticNetwork):
                Printer.action("LOAD", f"{path} (cached): {len(network)} nodes", Colors.GRAY)
                return network

        with self._open_binary(path, "network") as f:
            network = load_network(f)
        Printer.action("LOAD", f"{path}: {len(network)} nodes, {len(network.edges)} edges, root '{network.root}'")

        if self.cache is not None:
            self.cache.store(path, network)
        return network

    def load_weight_config(self, network: SemanticNetwork) -> LinkWeightConfig:
        """
        Resolve link weights: --weights file, else --preset, else [weights]
        from Semnet.toml, else unit weights.

        Weighted link types that no edge of `network` carries are reported.
        """
        weights_file = getattr(self.args, "weights", None)
        if weights_file:
            with self._open_binary(Path(weights_file), "weights") as f:
                config = load_weights(f)
        else:
            table = self.config.get_weights(getattr(self.args, "preset", None))
            config = LinkWeightConfig.unit() if table is None else LinkWeightConfig(table["types"], table["default"])

        unused = sorted(set(config.weights) - network.link_types)
        if unused:
            Printer.info(f"Weights for link types absent from the network: {', '.join(unused)}")
        return config

    def load_stop(self) -> StopList:
        return load_stoplist(getattr(self.args, "stoplist", None) or self.config.get_stoplist())

    def load_norm(self) -> Optional[NormalizationMap]:
        return load_normalization(getattr(self.args, "normalize", None))

    def write_output(self, lines: Iterable[str], destination: Optional[str] = None):
        """Write result lines to a file, or stdout when destination is None or '-'."""
        if destination in (None, "-"):
            Printer.results(lines)
            return
        path = Path(destination)
        try:
            with open(path, "w", encoding="utf-8", newline="\n") as f:
                Printer.results(lines, f)
        except OSError as e:
            raise InputError(f"Cannot write {path}: {e}") from None
        Printer.action("WRITE", str(path))
