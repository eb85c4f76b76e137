import hashlib
import json
import pickle
from pathlib import Path
from typing import Any, Dict, Optional

from util.output import Printer

class CacheManager:
    """
    Caches fully indexed networks keyed by the MD5 checksum of their source file.
    Stores the checksum table in .semnet_cache/cache.json and one pickle per
    network file under .semnet_cache/objs/.
    """

    def __init__(self, project_root: Path = Path(".")):
        self.cache_dir = project_root / ".semnet_cache"
        self.objs_dir = self.cache_dir / "objs"
        self.cache_file = self.cache_dir / "cache.json"
        self.cache_data: Dict[str, str] = {}
        self._load_cache()

    def get_object_path(self, source_path: Path) -> Path:
        """Unique pickle path for a source file (MD5 of its absolute path)."""
        path_hash = hashlib.md5(str(source_path.absolute()).encode()).hexdigest()
        return self.objs_dir / f"{path_hash}_{source_path.name}.pickle"

    def _load_cache(self):
        if self.cache_file.exists():
            try:
                with open(self.cache_file, "r") as f:
                    self.cache_data = json.load(f)
            except (json.JSONDecodeError, IOError):
                Printer.warning("Failed to load cache, starting fresh.")
                self.cache_data = {}

    def _save_cache(self):
        try:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            with open(self.cache_file, "w") as f:
                json.dump(self.cache_data, f, indent=2, sort_keys=True)
        except OSError:
            pass # cache is best effort

    def get_file_hash(self, file_path: Path) -> str:
        """Calculate MD5 hash of a file."""
        if not file_path.exists():
            return ""

        hash_md5 = hashlib.md5()
        try:
            with open(file_path, "rb") as f:
                for chunk in iter(lambda: f.read(1 << 16), b""):
                    hash_md5.update(chunk)
            return hash_md5.hexdigest()
        except OSError:
            return ""

    def is_changed(self, file_path: Path) -> bool:
        """True if the file changed since it was cached, or was never cached."""
        key = str(file_path.absolute())
        if key not in self.cache_data:
            return True
        return self.cache_data[key] != self.get_file_hash(file_path)

    def load(self, file_path: Path) -> Optional[Any]:
        """The cached object for an unchanged file, else None."""
        obj_path = self.get_object_path(file_path)
        if self.is_changed(file_path) or not obj_path.exists():
            return None
        try:
            with open(obj_path, "rb") as f:
                obj = pickle.load(f)
        except (OSError, pickle.UnpicklingError, EOFError, AttributeError, ImportError):
            Printer.warning(f"Discarding unreadable cache entry for {file_path}")
            return None
        Printer.debug(f"Cache hit: {file_path}")
        return obj

    def store(self, file_path: Path, obj: Any):
        """Pickle `obj` as the cached value of `file_path`."""
        obj_path = self.get_object_path(file_path)
        try:
            self.objs_dir.mkdir(parents=True, exist_ok=True)
            with open(obj_path, "wb") as f:
                pickle.dump(obj, f, protocol=pickle.HIGHEST_PROTOCOL)
        except OSError as e:
            Printer.debug(f"Could not write cache entry {obj_path}: {e}")
            return
        self.cache_data[str(file_path.absolute())] = self.get_file_hash(file_path)
        self._save_cache()

    def clear(self):
        """Remove every cached entry."""
        self.cache_data = {}
        for obj in self.objs_dir.glob("*.pickle") if self.objs_dir.exists() else []:
            try:
                obj.unlink()
            except OSError:
                pass
        if self.cache_file.exists():
            try:
                self.cache_file.unlink()
            except OSError:
                pass
