import sys
from typing import Optional

import click

from src.cli import display
from src.cli.context import console, handle_errors, pass_session, Session
from src.pipeline.verify import MODES, SUITES, run_suite


@click.command(name="verify")
@click.argument("suite", type=click.Choice(SUITES + ("all",)))
@click.option("--mode", type=click.Choice(MODES), default=None, help="Algebra for associativity/confluence/relations (default: all four)")
@click.option("--samples", type=click.IntRange(min=1), default=None, help="Seeded samples for sampled suites")
@click.option("--total-dim", type=int, default=None, help="Total dimension cap for the Green suites")
@click.option("--window", type=click.IntRange(min=0), default=2, show_default=True, help="Degrees range over [-window, window]")
@pass_session
@handle_errors
def verify_command(
    session: Session,
    suite: str,
    mode: Optional[str],
    samples: Optional[int],
    total_dim: Optional[int],
    window: int,
):
    """Run a verification suite; exits 1 when any instance fails"""
    config = session.config
    reports = run_suite(
        suite,
        session.table,
        mode=mode,
        samples=samples,
        seed=config.seed,
        dim_total_cap=config.total_dim_cap if total_dim is None else total_dim,
        degree_window=window,
        workers=config.threads,
        max_steps=config.guards.max_rewrite_steps,
    )
    passed = all(report.passed for report in reports)
    if session.pretty:
        console.print(display.report_table(reports))
    session.emit({"passed": passed, "reports": [report.model_dump(mode="json") for report in reports]})
    if not passed:
        sys.exit(1)
