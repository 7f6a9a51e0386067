import click

from src.algebra.dhall import DerivedHallAlgebra, iota
from src.algebra.mhall import ModifiedHallAlgebra
from src.cli.context import handle_errors, pass_session, Session
from src.utils.serialization import dh_element_from_payload, element_to_payload
from src.utils.validation import ElementValidator


@click.command(name="iota")
@click.option("--aliases", is_flag=True, help="Write class aliases instead of numeric ids")
@click.argument("element_file", type=click.Path(exists=True, dir_okay=False))
@pass_session
@handle_errors
def iota_command(session: Session, aliases: bool, element_file: str):
    """Image of a twisted derived Hall algebra element in MH_tw"""
    payload = ElementValidator().load(element_file)
    table = session.table
    steps = session.config.guards.max_rewrite_steps
    x = dh_element_from_payload(table, payload, DerivedHallAlgebra(table, twisted=True, max_steps=steps))
    image = iota(table, x, ModifiedHallAlgebra(table, twisted=True, max_steps=steps))
    session.emit(element_to_payload(image, table if aliases else None))
