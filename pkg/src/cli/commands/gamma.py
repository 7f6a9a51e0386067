import click

from src.algebra.homalg import gamma, morphism_count
from src.cli.context import handle_errors, pass_session, Session
from src.utils.serialization import fraction_to_text


@click.command(name="gamma")
@click.argument("a")
@click.argument("b")
@click.argument("m")
@click.argument("n")
@pass_session
@handle_errors
def gamma_command(session: Session, a: str, b: str, m: str, n: str):
    """gamma^{MN}_{AB} and the number of g in Hom(B, A) with kernel M and cokernel N"""
    table = session.table
    ids = [table.resolve(name) for name in (a, b, m, n)]
    session.emit({
        "gamma": fraction_to_text(gamma(table, *ids)),
        "count": morphism_count(table, *ids),
    })
