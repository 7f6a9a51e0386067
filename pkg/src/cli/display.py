import json
from typing import Any, Dict, List

from rich.console import Console
from rich.json import JSON
from rich.table import Table

from src.utils.models import CheckReport


def print_json(console: Console, data: Any) -> None:
    console.print(JSON(json.dumps(data)))


def class_table(rows: List[Dict[str, Any]], title: str) -> Table:
    table = Table(title=title)
    table.add_column("id", justify="right", style="cyan")
    table.add_column("alias", style="bold")
    table.add_column("dim")
    table.add_column("|Aut|", justify="right")
    table.add_column("dim End", justify="right")
    table.add_column("decomposition")

    for row in rows:
        table.add_row(
            str(row["id"]),
            row["alias"],
            str(tuple(row["dim_vector"])),
            str(row["aut_order"]),
            str(row["end_dim"]),
            " + ".join(str(p) for p in row["decomposition"]) or "-",
        )
    return table


def report_table(reports: List[CheckReport]) -> Table:
    table = Table(title="Verification")
    table.add_column("check", style="bold")
    table.add_column("instances", justify="right")
    table.add_column("failures", justify="right")
    table.add_column("time (s)", justify="right")
    table.add_column("status")

    for report in reports:
        status = "[green]ok[/green]" if report.passed else "[red]FAILED[/red]"
        table.add_row(
            report.check,
            str(report.instances),
            str(len(report.failures)),
            f"{report.wall_time:.2f}",
            status,
        )
    return table
