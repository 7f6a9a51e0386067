import click

from src.algebra.complexes import reduce_to_normal_form
from src.cli.context import handle_errors, pass_session, Session
from src.utils.serialization import complex_from_payload, reduced_to_payload
from src.utils.validation import ComplexValidator


@click.command(name="reduce")
@click.option("--twisted", is_flag=True, help="Express [X] in the twisted (star) basis")
@click.option("--aliases", is_flag=True, help="Write class aliases instead of numeric ids")
@click.argument("complex_file", type=click.Path(exists=True, dir_okay=False))
@pass_session
@handle_errors
def reduce_command(session: Session, twisted: bool, aliases: bool, complex_file: str):
    """Reduce the complex in COMPLEX_FILE to coefficient * normal word"""
    payload = ComplexValidator().load(complex_file)
    table = session.table
    X = complex_from_payload(table.quiver, table.q, payload)
    reduced = reduce_to_normal_form(table, X, twisted=twisted)
    session.emit(reduced_to_payload(reduced, table if aliases else None))
