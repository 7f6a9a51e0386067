import sys
from typing import Optional

import click

from src.cli import display
from src.cli.context import console, handle_errors, pass_session, Session
from src.pipeline.verify import green_check, green_coefficient_check


@click.command(name="green")
@click.option("--total-dim", type=int, default=None, help="Largest total dimension of A + B (default: sum of caps)")
@click.option("--coefficients", is_flag=True, help="Check every coefficient of the associativity identity, not only Green's formula")
@pass_session
@handle_errors
def green_command(session: Session, total_dim: Optional[int], coefficients: bool):
    """Verify Green's formula exhaustively on the table"""
    check = green_coefficient_check if coefficients else green_check
    report = check(session.table, session.config.total_dim_cap if total_dim is None else total_dim, session.config.threads)
    if session.pretty:
        console.print(display.report_table([report]))
    session.emit({"passed": report.passed, **report.model_dump(mode="json")})
    if not report.passed:
        sys.exit(1)
