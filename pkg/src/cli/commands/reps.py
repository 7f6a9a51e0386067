import click

from src.cli import display
from src.cli.context import console, handle_errors, pass_session, Session


@click.command(name="reps")
@click.option("--maps", is_flag=True, help="Include the representative's arrow matrices")
@pass_session
@handle_errors
def reps_command(session: Session, maps: bool):
    """Build (or load) the iso-class table and list its classes"""
    table = session.table
    rows = []
    for cid in table.ids():
        info = table.info(cid)
        row = {
            "id": cid,
            "alias": table.alias(cid),
            "dim_vector": list(info.dim_vector),
            "aut_order": info.aut_order,
            "end_dim": info.end_dim,
            "decomposition": list(info.decomposition),
            "probabilistic": info.probabilistic,
        }
        if maps:
            row["arrow_maps"] = table.representative(cid).map_lists()
        rows.append(row)

    if session.pretty:
        console.print(display.class_table(rows, title=repr(table)))
    else:
        session.emit({"q": table.q, "caps": list(table.caps), "classes": rows})
