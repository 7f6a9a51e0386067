import click

from src.algebra.homalg import ext_count_with_middle, hall_number
from src.cli.context import handle_errors, pass_session, Session


@click.command(name="hall")
@click.argument("a")
@click.argument("b")
@click.argument("c")
@click.option("--ext", is_flag=True, help="Also report |Ext^1(A,B)_C|")
@pass_session
@handle_errors
def hall_command(session: Session, a: str, b: str, c: str, ext: bool):
    """Hall number g^C_{AB}: subobjects of C isomorphic to B with quotient A"""
    table = session.table
    ids = [table.resolve(name) for name in (a, b, c)]
    result = {"g": hall_number(table, *ids)}
    if ext:
        result["ext_count"] = ext_count_with_middle(table, *ids)
    session.emit(result)
