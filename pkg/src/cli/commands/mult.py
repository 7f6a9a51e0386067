import click

from src.algebra.dhall import DerivedHallAlgebra
from src.algebra.mhall import ModifiedHallAlgebra
from src.cli.context import handle_errors, pass_session, Session
from src.utils.serialization import (
    dh_element_from_payload,
    dh_element_to_payload,
    element_from_payload,
    element_to_payload,
)
from src.utils.validation import ProductValidator

MODES = ("mh", "mh_tw", "dh", "dh_tw")


@click.command(name="mult")
@click.option("--mode", type=click.Choice(MODES), default="mh_tw", show_default=True)
@click.option("--strategy", type=click.Choice(["leftmost", "rightmost"]), default="leftmost", show_default=True)
@click.option("--aliases", is_flag=True, help="Write class aliases instead of numeric ids")
@click.argument("operands", type=click.Path(exists=True, dir_okay=False))
@pass_session
@handle_errors
def mult_command(session: Session, mode: str, strategy: str, aliases: bool, operands: str):
    """Multiply the two elements in OPERANDS ({"left": ..., "right": ...})"""
    request = ProductValidator().load(operands)
    table = session.table
    twisted = mode.endswith("_tw")
    steps = session.config.guards.max_rewrite_steps
    names = table if aliases else None

    if mode.startswith("dh"):
        algebra = DerivedHallAlgebra(table, twisted=twisted, strategy=strategy, max_steps=steps)
        left = dh_element_from_payload(table, request.left, algebra)
        right = dh_element_from_payload(table, request.right, algebra)
        session.emit(dh_element_to_payload(algebra.multiply(left, right), names))
    else:
        algebra = ModifiedHallAlgebra(table, twisted=twisted, strategy=strategy, max_steps=steps)
        left = element_from_payload(table, request.left, algebra)
        right = element_from_payload(table, request.right, algebra)
        session.emit(element_to_payload(algebra.multiply(left, right), names))
