import logging
import os

from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler

LOG_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"

_LEVELS = {0: logging.WARNING, 1: logging.INFO}


def configure_logging(verbosity: int = 0) -> int:
    """Install one stderr handler on the root logger; stdout stays reserved for JSON.

    HALLCALC_LOG_LEVEL overrides the level when no -v flag is given.
    """
    load_dotenv()
    level = _LEVELS.get(verbosity, logging.DEBUG)
    override = os.getenv("HALLCALC_LOG_LEVEL")
    if verbosity == 0 and override:
        level = logging.getLevelName(override.upper())
        if not isinstance(level, int):
            level = logging.WARNING

    handler = RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True)
    handler.setFormatter(logging.Formatter("%(name)s | %(message)s"))
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=[handler], force=True)
    return level
