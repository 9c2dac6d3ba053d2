from typing import Any, Optional

from rich.console import Console
from rich.table import Table


def display_help(console: Optional[Console] = None):
    console = console or Console()

    console.print("\n[bold]projcode[/bold]: subspace codes for the injection metric")
    console.print("[dim]Lifted Ferrers-diagram codes over GF(q)[/dim]\n")

    console.print("[bold]USAGE[/bold]")
    console.print("    projcode.py <command> \\[options]\n")

    console.print("[bold]COMMANDS[/bold]")
    console.print("    [green]construct[/green]                 Build an (n, M, d) code and write its summary")
    console.print("    [green]table[/green]                     Rate comparison rows as CSV")
    console.print("    [green]bounds <kind>[/green]             gauss | projective | sphere | gv | punct")
    console.print("    [green]verify <dump>[/green]             Certify the minimum distance of a code dump")
    console.print("    [green]profiles[/green]                  Print the greedy profile vectors")
    console.print("    [green]help[/green]                      Show this help message\n")

    console.print("[bold]OPTIONS[/bold]")
    console.print("    -q Q                      Field order (prime power, 2..16)")
    console.print("    -n N                      Ambient dimension (1..16)")
    console.print("    -d D                      Target distance")
    console.print("    --metric M                injection | subspace")
    console.print("    --seed S                  Seed for sampled verification")
    console.print("    --cap-enum N              Cap on enumerated codewords")
    console.print("    --cap-verify N            Largest M verified pair by pair")
    console.print("    -o PATH                   Output file (stdout by default)")
    console.print("    --format F                json | csv | text")
    console.print("    --log-level L             DEBUG | INFO | WARNING | ERROR\n")

    console.print("[bold]EXAMPLES[/bold]")
    console.print("    projcode.py construct -q 2 -n 9 -d 2 --metric injection")
    console.print("    projcode.py construct -q 2 -n 6 -d 2 --dump out/n6.txt")
    console.print("    projcode.py verify out/n6.txt")
    console.print("    projcode.py table -q 2 --d-values 2 3 --n-min 9 --n-max 10 --with-gv")
    console.print("    projcode.py bounds gv -n 3 -q 2 -d 2")
    console.print("    projcode.py bounds sphere -n 6 -q 2 -t 2 --all-k\n")

    console.print("[bold]EXIT CODES[/bold]")
    console.print("    0 success or certified, 1 usage or parameter error, 2 certification failure")


def display_summary(summary: dict[str, Any], console: Optional[Console] = None):
    """Print a code summary as a class table followed by the totals."""
    console = console or Console()
    console.print(
        f"[bold]({summary['n']}, M, {summary['d']}) {summary['metric']} code over GF({summary['q']})[/bold]"
    )

    table = Table(show_header=True, header_style="bold")
    table.add_column("profile")
    table.add_column("kappa", justify="right")
    table.add_column("score", justify="right")
    for row in summary["classes"]:
        table.add_row(row["profile"], str(row["kappa"]), str(row["score"]))
    console.print(table)

    console.print(f"classes: {len(summary['classes'])}")
    console.print(f"M = {summary['M_digits']}")
    console.print(f"log_q M = {summary['rate']:.4f}  (score-predicted {summary['bound_rate']:.4f})")
    if "verification" in summary:
        report = summary["verification"]
        status = "[green]certified[/green]" if report["certified"] else "[red]not certified[/red]"
        console.print(f"verification ({report['mode']}): {status}, floor {report['verified_floor']}")


def display_report(report: dict[str, Any], console: Optional[Console] = None):
    """Print a verification report."""
    console = console or Console()
    status = "[green]CERTIFIED[/green]" if report["certified"] else "[red]NOT CERTIFIED[/red]"
    console.print(f"{status}  claimed d = {report['claimed_d']} ({report['metric']}, {report['mode']})")
    console.print(f"    verified floor:     {report['verified_floor']}")
    console.print(f"    cross-class floor:  {report['cross_class_floor']}")
    console.print(
        f"    within-class floor: {report['within_class_floor']}"
        + ("" if report["within_class_exact"] else "  [yellow](sampled)[/yellow]")
    )
    if report.get("sampled_floor") is not None:
        console.print(f"    sampled floor:      {report['sampled_floor']}")
    console.print(f"    pairs checked:      {report['pairs_checked']}")
    console.print(f"    fillings fit:       {report['fits']}")
    for violation in report["violations"]:
        console.print(f"    [red]violation[/red] {violation}")


if __name__ == "__main__":
    display_help()
