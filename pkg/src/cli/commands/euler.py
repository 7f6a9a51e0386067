from typing import Optional, Tuple

import click

from src.algebra.homalg import ComplexClass, additive_euler, complex_euler, mult_euler
from src.algebra.quiverrep import Quiver
from src.cli.context import handle_errors, pass_session, Session
from src.utils.errors import ContractError
from src.utils.serialization import fraction_to_text


def _dims(text: str, quiver: Quiver) -> Tuple[int, ...]:
    try:
        vector = tuple(int(x) for x in text.replace("(", "").replace(")", "").split(","))
    except ValueError as e:
        raise ContractError(f"{text!r} is not a comma-separated dimension vector") from e
    if len(vector) != quiver.vertex_count:
        raise ContractError(f"dimension vector {vector} needs {quiver.vertex_count} entries")
    return vector


@click.command(name="euler")
@click.argument("alpha")
@click.argument("beta")
@click.option("--m", "left_degree", type=int, default=None, help="Degree of the left stalk complex")
@click.option("--n", "right_degree", type=int, default=None, help="Degree of the right stalk complex")
@pass_session
@handle_errors
def euler_command(session: Session, alpha: str, beta: str, left_degree: Optional[int], right_degree: Optional[int]):
    """Euler form <alpha, beta>, or <U_{alpha,m}, U_{beta,n}> when both degrees are given"""
    config = session.config
    quiver = Quiver(config.quiver.vertex_count, tuple(tuple(a) for a in config.quiver.arrows))
    left, right = _dims(alpha, quiver), _dims(beta, quiver)
    result = {
        "additive": additive_euler(quiver, left, right),
        "multiplicative": str(mult_euler(quiver, config.q, left, right)),
    }
    if left_degree is not None and right_degree is not None:
        pairing = complex_euler(
            quiver,
            config.q,
            ComplexClass.stalk(left, left_degree),
            ComplexClass.stalk(right, right_degree),
        )
        result["stalk_pairing"] = fraction_to_text(pairing.value)
    session.emit(result)
