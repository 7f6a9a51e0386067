import functools
import json
import logging
import sys
from typing import Any, Callable, Optional

import click
from pydantic import BaseModel, ValidationError
from rich.console import Console

from src.algebra.quiverrep import IsoClassTable
from src.cli import display
from src.utils.cache_manager import TableCacheManager
from src.utils.errors import ConfigError, exit_code_for
from src.utils.models import HallConfig

logger = logging.getLogger(__name__)

console = Console()
error_console = Console(stderr=True)


class Session:
    """Per-invocation state shared by all commands"""

    def __init__(self, config: HallConfig, pretty: bool = False, use_cache: bool = True):
        self.config = config
        self.pretty = pretty
        self.use_cache = use_cache
        self._table: Optional[IsoClassTable] = None

    @property
    def table(self) -> IsoClassTable:
        if self._table is None:
            self._table = TableCacheManager(self.config).get_table(self.use_cache)
        return self._table

    def emit(self, data: Any) -> None:
        """Write a result to stdout as JSON"""
        if isinstance(data, BaseModel):
            data = data.model_dump(mode="json")
        if self.pretty:
            display.print_json(console, data)
        else:
            click.echo(json.dumps(data, sort_keys=False))


pass_session = click.make_pass_decorator(Session)


def handle_errors(command: Callable) -> Callable:
    """Map exceptions to diagnostics on stderr and the documented exit codes"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except click.exceptions.Exit:
            raise
        except ValidationError as e:
            error = ConfigError(str(e))
        except json.JSONDecodeError as e:
            error = ConfigError(f"Invalid JSON format: {e}")
        except Exception as e:
            error = e
        logger.debug("command failed", exc_info=error)
        error_console.print(f"[red]Error: {error}[/red]")
        sys.exit(exit_code_for(error))

    return wrapper
