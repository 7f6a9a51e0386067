import contextlib
import hashlib
import json
import logging
import os
import tempfile
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from src.algebra.quiverrep import IsoClassTable, Quiver, enumerate_reps
from src.utils.errors import CacheVersionError, HallCalcError
from src.utils.models import HallConfig, TableCacheKey, TableCachePayload
from src.utils.serialization import table_from_payload, table_to_payload

logger = logging.getLogger(__name__)

CACHE_VERSION = 1
DEFAULT_CACHE_DIR = os.path.join("~", ".cache", "hallcalc")


class TableCacheManager:
    """Persists IsoClassTables as versioned JSON, one file per (quiver, q, caps)"""

    def __init__(self, config: HallConfig):
        load_dotenv()
        self.config = config
        self.key = TableCacheKey(
            version=CACHE_VERSION,
            vertex_count=config.quiver.vertex_count,
            arrows=[tuple(a) for a in config.quiver.arrows],
            q=config.q,
            dim_caps=list(config.dim_caps),
        )

    @property
    def path(self) -> str:
        if self.config.cache_path:
            return os.path.expanduser(self.config.cache_path)
        directory = os.path.expanduser(os.getenv("HALLCALC_CACHE_DIR") or DEFAULT_CACHE_DIR)
        digest = hashlib.sha256(self.key.model_dump_json().encode("utf-8")).hexdigest()[:16]
        return os.path.join(directory, f"table-q{self.config.q}-{digest}.json")

    def load(self) -> Optional[IsoClassTable]:
        """Cached table, or None when absent, corrupt or built for another key.

        Raises CacheVersionError for files written by a newer format version.
        """
        path = self.path
        if not os.path.exists(path):
            logger.info("No cached table at %s", path)
            return None
        try:
            with open(path, "r", encoding="utf-8") as handle:
                raw = json.load(handle)
            version = int(raw.get("key", {}).get("version", 0))
            if version > CACHE_VERSION:
                raise CacheVersionError(f"{path} has cache format version {version}; this build reads up to {CACHE_VERSION}")
            payload = TableCachePayload.model_validate(raw)
        except CacheVersionError:
            raise
        except (OSError, ValueError, TypeError, AttributeError, ValidationError) as e:
            logger.warning("Cached table at %s is unreadable (%s); rebuilding", path, e)
            return None

        if payload.key != self.key:
            logger.warning("Cached table at %s was built for %s, not %s; rebuilding", path, payload.key, self.key)
            return None
        try:
            table = table_from_payload(payload, guards=self.config.guards, seed=self.config.seed)
        except (HallCalcError, ValueError) as e:
            logger.warning("Cached table at %s is inconsistent (%s); rebuilding", path, e)
            return None
        logger.info("Loaded %d classes from %s", len(table), path)
        return table

    def store(self, table: IsoClassTable) -> Dict[str, Any]:
        """Write the table atomically (temporary file, then rename)"""
        path = self.path
        temporary = None
        try:
            os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
            payload = table_to_payload(table, self.key)
            fd, temporary = tempfile.mkstemp(dir=os.path.dirname(path) or ".", suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(payload.model_dump_json())
            os.replace(temporary, path)
            return {
                "success": True,
                "message": f"Stored {len(table)} classes",
                "path": path
            }
        except OSError as e:
            logger.warning("Could not write table cache %s: %s", path, e)
            if temporary is not None:
                with contextlib.suppress(OSError):
                    os.remove(temporary)
            return {
                "success": False,
                "message": f"Error writing cache: {str(e)}",
                "path": path
            }

    def build(self) -> IsoClassTable:
        config = self.config
        quiver = Quiver(config.quiver.vertex_count, tuple(tuple(a) for a in config.quiver.arrows))
        return enumerate_reps(quiver, config.q, config.dim_caps, guards=config.guards, seed=config.seed)

    def get_table(self, use_cache: bool = True) -> IsoClassTable:
        """Load the cached table or build and store a fresh one"""
        if not use_cache:
            return self.build()
        overwrite = True
        try:
            table = self.load()
        except CacheVersionError as e:
            logger.warning("%s; rebuilding without overwriting it", e)
            table, overwrite = None, False
        if table is not None:
            return table
        table = self.build()
        if overwrite:
            self.store(table)
        return table
