import click

from src.algebra.dhall import tensor_decompose
from src.algebra.mhall import ModifiedHallAlgebra
from src.cli.context import handle_errors, pass_session, Session
from src.utils.serialization import decomposition_to_payload, element_from_payload, fraction_to_text
from src.utils.validation import ElementValidator


@click.command(name="decompose")
@click.option("--aliases", is_flag=True, help="Write class aliases instead of numeric ids")
@click.argument("element_file", type=click.Path(exists=True, dir_okay=False))
@pass_session
@handle_errors
def decompose_command(session: Session, aliases: bool, element_file: str):
    """Split each MH_tw word as iota(derived word) times a torus element"""
    payload = ElementValidator().load(element_file)
    table = session.table
    algebra = ModifiedHallAlgebra(table, twisted=True, max_steps=session.config.guards.max_rewrite_steps)
    element = element_from_payload(table, payload, algebra)
    terms = []
    for word, coefficient in element:
        derived, torus = tensor_decompose(table, word)
        entry = {"coefficient": fraction_to_text(coefficient)}
        entry.update(decomposition_to_payload(derived, torus, table if aliases else None).model_dump(mode="json"))
        terms.append(entry)
    session.emit({"terms": terms})
