import click
import sys
from pathlib import Path
from typing import Optional

# Add project root to path
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from src.cli import __version__
from src.cli.context import Session, handle_errors
from src.cli.commands.decompose import decompose_command
from src.cli.commands.euler import euler_command
from src.cli.commands.gamma import gamma_command
from src.cli.commands.green import green_command
from src.cli.commands.hall import hall_command
from src.cli.commands.iota import iota_command
from src.cli.commands.mult import mult_command
from src.cli.commands.reduce import reduce_command
from src.cli.commands.reps import reps_command
from src.cli.commands.verify import verify_command
from src.utils.logging_setup import configure_logging
from src.utils.models import HallConfig
from src.utils.validation import ConfigValidator


@click.group()
@click.version_option(version=__version__)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), help="Session configuration (JSON)")
@click.option("--seed", type=int, default=None, help="Override the configured random seed")
@click.option("--threads", type=click.IntRange(min=1), default=None, help="Worker processes for the Green suites")
@click.option("--guard-steps", type=click.IntRange(min=1), default=None, help="Rewriting step guard")
@click.option("--pretty", is_flag=True, help="Render output with rich instead of plain JSON")
@click.option("--no-cache", is_flag=True, help="Rebuild the iso-class table without touching the cache")
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG logging on stderr")
@click.pass_context
@handle_errors
def main(
    ctx: click.Context,
    config_path: Optional[str],
    seed: Optional[int],
    threads: Optional[int],
    guard_steps: Optional[int],
    pretty: bool,
    no_cache: bool,
    verbose: int,
):
    """
    hallcalc - exact Hall algebras of quiver representations over F_q

    Builds iso-class tables, multiplies in the modified and derived Hall
    algebras, reduces complexes and runs the verification suites.
    """
    configure_logging(verbose)
    config = ConfigValidator().load(config_path) if config_path else HallConfig()
    if seed is not None:
        config.seed = seed
    if threads is not None:
        config.threads = threads
    if guard_steps is not None:
        config.guards.max_rewrite_steps = guard_steps
    ctx.obj = Session(config, pretty=pretty, use_cache=not no_cache)


# Register commands
main.add_command(reps_command)
main.add_command(hall_command)
main.add_command(gamma_command)
main.add_command(euler_command)
main.add_command(mult_command)
main.add_command(reduce_command)
main.add_command(iota_command)
main.add_command(decompose_command)
main.add_command(green_command)
main.add_command(verify_command)

if __name__ == "__main__":
    main()
