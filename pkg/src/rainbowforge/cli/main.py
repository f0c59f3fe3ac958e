"""CLI for RainbowForge."""

import csv
import io
import json
import logging
from collections.abc import Iterator
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Annotated

import typer
from pydantic import BaseModel, ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

from rainbowforge.constructions.example import example_4rdf
from rainbowforge.constructions.lift import lift
from rainbowforge.constructions.patterns import extremal_pattern
from rainbowforge.errors import (
    ContractError,
    FormatError,
    ParameterDomainError,
    SearchBudgetExceeded,
    StateSpaceRefused,
)
from rainbowforge.formats import format_error
from rainbowforge.graphs.builders import build_example_graph, build_subdivided_k4
from rainbowforge.graphs.io import export_dot, serialize_graph
from rainbowforge.models import (
    AuditProfile,
    AuditReport,
    BoundMode,
    BoundReport,
    Certificate,
    GraphDocument,
    PetersenParams,
    RainbowAssignment,
    SearchBudget,
    SolveMethod,
    SolveResult,
    TableRow,
    TriPartition,
)
from rainbowforge.models.graph import Graph
from rainbowforge.rdf.io import serialize_assignment
from rainbowforge.workbench import Workbench

EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3

app = typer.Typer(
    name="rf",
    help=(
        "RainbowForge - rainbow domination on cubic and generalized Petersen graphs.\n\n"
        "Vertex ids of P(n,k): u_i = i and v_i = n + i for 0 <= i < n. "
        "Colors are 1..t. Exit codes: 0 success, 1 verification or audit failure, "
        "2 invalid input, 3 budget exhausted."
    ),
    no_args_is_help=True,
)
gen_app = typer.Typer(help="Generate graphs as JSON (or DOT).", no_args_is_help=True)
construct_app = typer.Typer(
    help="Build explicit rainbow dominating functions.", no_args_is_help=True
)
app.add_typer(gen_app, name="gen")
app.add_typer(construct_app, name="construct")
console = Console()

_state = {"verbose": False}

SCHEMAS: dict[str, type[BaseModel]] = {
    "graph": GraphDocument,
    "assignment": RainbowAssignment,
    "bounds": BoundReport,
    "solve": SolveResult,
    "certificate": Certificate,
    "audit": AuditReport,
    "table-row": TableRow,
}


class MethodChoice(str, Enum):
    AUTO = "auto"
    BB = "bb"
    DP = "dp"


METHODS = {
    MethodChoice.AUTO: None,
    MethodChoice.BB: SolveMethod.BRANCH_BOUND,
    MethodChoice.DP: SolveMethod.PROFILE_DP,
}


@app.callback()
def main(
    verbose: Annotated[
        bool, typer.Option("--verbose", "-v", help="Log search progress and timings")
    ] = False,
) -> None:
    _state["verbose"] = verbose
    package_logger = logging.getLogger("rainbowforge")
    if verbose:
        if not any(isinstance(h, RichHandler) for h in package_logger.handlers):
            package_logger.addHandler(RichHandler(console=Console(stderr=True)))
        package_logger.setLevel(logging.DEBUG)
    else:
        package_logger.setLevel(logging.WARNING)


@contextmanager
def _handled() -> Iterator[None]:
    """Map library errors onto the exit-code contract."""
    try:
        yield
    except (SearchBudgetExceeded, StateSpaceRefused) as e:
        console.print(f"[yellow]Budget exhausted: {escape(str(e))}[/yellow]")
        raise typer.Exit(EXIT_BUDGET)
    except ContractError as e:
        console.print(f"[red]Contract violated: {escape(str(e))}[/red]")
        raise typer.Exit(EXIT_FAILED)
    except (ParameterDomainError, FormatError, FileNotFoundError, KeyError) as e:
        console.print(f"[red]Invalid input: {escape(str(e))}[/red]")
        raise typer.Exit(EXIT_INVALID)
    except ValidationError as e:
        console.print(f"[red]Invalid input: {escape(str(format_error(e)))}[/red]")
        raise typer.Exit(EXIT_INVALID)


def _params(text: str) -> PetersenParams:
    """'n,k' as P(n, k) parameters."""
    try:
        n, k = (int(part) for part in text.split(","))
    except ValueError:
        raise typer.BadParameter(f"expected n,k, got {text!r}")
    return PetersenParams(n=n, k=k)


def _grid(text: str) -> list[int]:
    """'3', '1..5' or '1,3,5'."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise typer.BadParameter(f"expected N, A..B or A,B,C; got {text!r}")


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        typer.echo(text, nl=False)
    else:
        out.write_text(text)
        console.print(f"[green]Wrote {out}[/green]")


def _dump(model: BaseModel, exclude: set[str] | None = None) -> str:
    return model.model_dump_json(indent=2, exclude=exclude) + "\n"


def _graph_text(g: Graph, dot: bool, name: str) -> str:
    return export_dot(g, name) if dot else serialize_graph(g)


DotOption = Annotated[bool, typer.Option("--dot", help="Emit Graphviz DOT instead of JSON")]
OutOption = Annotated[Path | None, typer.Option("--out", "-o", help="Write to a file")]
JsonOption = Annotated[bool, typer.Option("--json", help="Print JSON")]
GraphOption = Annotated[Path, typer.Option("--graph", "-g", help="Graph JSON file")]
AssignmentOption = Annotated[Path, typer.Option("--assignment", "-a", help="Assignment JSON")]


@gen_app.command("petersen")
def gen_petersen(
    n: Annotated[int, typer.Option("--n", help="Outer cycle length")],
    k: Annotated[int, typer.Option("--k", help="Inner step")],
    dot: DotOption = False,
    out: OutOption = None,
) -> None:
    """Generalized Petersen graph P(n,k)."""
    with _handled():
        g = Workbench().petersen(n, k)
        _emit(_graph_text(g, dot, f"P_{n}_{k}"), out)


@gen_app.command("example")
def gen_example(dot: DotOption = False, out: OutOption = None) -> None:
    """The 36-vertex cubic graph with gamma_r4 = 2|V|/3."""
    _emit(_graph_text(build_example_graph(), dot, "example"), out)


@gen_app.command("subdivided-k4")
def gen_subdivided_k4(dot: DotOption = False, out: OutOption = None) -> None:
    """K4 with every edge subdivided once (10 vertices)."""
    _emit(_graph_text(build_subdivided_k4(), dot, "subdivided_k4"), out)


@app.command()
def verify(
    graph: GraphOption,
    assignment: AssignmentOption,
    t: Annotated[int | None, typer.Option("--t", help="Expected number of colors")] = None,
    as_json: JsonOption = False,
) -> None:
    """Check the rainbow condition; exit 1 listing every violating vertex."""
    with _handled():
        bench = Workbench()
        g = bench.load_graph(graph)
        a = bench.load_assignment(assignment, g)
        if t is not None and a.t != t:
            raise FormatError(f"assignment uses t={a.t}, expected {t}", "t")
        verdict = bench.verify(g, a)

    if as_json:
        typer.echo(_dump(verdict), nl=False)
    elif verdict.passed:
        console.print(f"[green]valid {a.t}RDF, weight {a.weight()}[/green]")
    else:
        console.print(f"[red]{len(verdict.violations)} violations:[/red]")
        for line in verdict.describe():
            console.print(f"  - {escape(line)}")
    if not verdict.passed:
        raise typer.Exit(EXIT_FAILED)


@app.command()
def solve(
    t: Annotated[int, typer.Option("--t", help="Number of colors")],
    graph: Annotated[Path | None, typer.Option("--graph", "-g", help="Graph JSON file")] = None,
    petersen: Annotated[
        str | None, typer.Option("--petersen", "-p", help="P(n,k) as n,k")
    ] = None,
    method: Annotated[MethodChoice, typer.Option("--method", "-m")] = MethodChoice.AUTO,
    budget_nodes: Annotated[int, typer.Option("--budget-nodes")] = 10**8,
    budget_states: Annotated[int, typer.Option("--budget-states")] = 10**8,
    budget_seconds: Annotated[float, typer.Option("--budget-seconds")] = 600.0,
    witness_out: Annotated[
        Path | None, typer.Option("--witness-out", help="Write the witness (or incumbent)")
    ] = None,
    as_json: JsonOption = False,
) -> None:
    """Compute gamma_rt exactly with a witness."""
    if (graph is None) == (petersen is None):
        console.print("[red]Invalid input: give exactly one of --graph and --petersen[/red]")
        raise typer.Exit(EXIT_INVALID)

    with _handled():
        budget = SearchBudget(
            max_nodes=budget_nodes, max_states=budget_states, max_elapsed=budget_seconds
        )
        bench = Workbench(budget)
        target: Graph | PetersenParams
        if petersen is not None:
            target = _params(petersen)
        else:
            assert graph is not None
            target = bench.load_graph(graph)
        try:
            result = bench.solve(target, t, METHODS[method])
        except SearchBudgetExceeded as e:
            if witness_out is not None and e.incumbent is not None:
                witness_out.write_text(serialize_assignment(e.incumbent))
            raise

    if witness_out is not None:
        witness_out.write_text(serialize_assignment(result.witness))
    if as_json:
        exclude = None if _state["verbose"] else {"elapsed"}
        typer.echo(_dump(result, exclude), nl=False)
        return
    typer.echo(result.optimum)
    if _state["verbose"]:
        console.print(
            f"method {result.method.value}, lower bound {result.lower_bound}, "
            f"{result.stats.nodes} nodes, {result.stats.states} states, "
            f"{result.elapsed:.3f}s"
        )


@construct_app.command("pattern")
def construct_pattern(
    n: Annotated[int, typer.Option("--n")],
    k: Annotated[int, typer.Option("--k")],
    t: Annotated[int, typer.Option("--t", help="3, 4 or 5")],
    partition: Annotated[
        str | None,
        typer.Option("--partition", help="Blocks A/B/C as color lists, e.g. 1,2/3/4"),
    ] = None,
    out: OutOption = None,
) -> None:
    """The 6-periodic extremal tRDF of weight t*n/3 on P(n,k)."""
    with _handled():
        blocks = None
        if partition is not None:
            parts = [frozenset(_grid(block)) for block in partition.split("/")]
            if len(parts) != 3:
                raise FormatError("partition needs three blocks A/B/C", "partition")
            blocks = TriPartition(t=t, a=parts[0], b=parts[1], c=parts[2])
        _emit(serialize_assignment(extremal_pattern(n, k, t, blocks)), out)


@construct_app.command("lift")
def construct_lift(graph: GraphOption, assignment: AssignmentOption, out: OutOption = None) -> None:
    """Turn a tRDF into a (t+1)RDF adding the least-used color class's size."""
    with _handled():
        bench = Workbench()
        g = bench.load_graph(graph)
        _emit(serialize_assignment(lift(g, bench.load_assignment(assignment, g))), out)


@construct_app.command("example")
def construct_example(out: OutOption = None) -> None:
    """The weight-24 4RDF of the 36-vertex example graph."""
    _emit(serialize_assignment(example_4rdf()), out)


@app.command()
def bounds(
    c: Annotated[int, typer.Option("--c", help="n = c*k")],
    k: Annotated[int, typer.Option("--k")],
    t: Annotated[int, typer.Option("--t", help="Number of colors (largest t with --envelope)")],
    mode: Annotated[BoundMode, typer.Option("--mode")] = BoundMode.CORRECTED,
    envelope: Annotated[
        bool, typer.Option("--envelope", help="Reports for 1..t tightened across t")
    ] = False,
    as_json: JsonOption = False,
) -> None:
    """Bounds on gamma_rt(P(ck,k)) with the theorems they come from."""
    with _handled():
        bench = Workbench()
        reports = bench.envelope(c, k, t, mode) if envelope else [bench.bounds(c, k, t, mode)]

    if as_json:
        payload = [r.model_dump(mode="json") for r in reports]
        typer.echo(json.dumps(payload if envelope else payload[0], indent=2))
        return
    for report in reports:
        exact = f" exact {report.exact}" if report.exact is not None else ""
        typer.echo(f"t={report.t} lower {report.lower} upper {report.upper}{exact}")
        if report.discrepancy:
            console.print(f"  [yellow]{report.discrepancy}[/yellow]")


@app.command(name="certify")
def certify_cmd(
    graph: GraphOption,
    assignment: AssignmentOption,
    t: Annotated[int, typer.Option("--t")],
    petersen: Annotated[
        str | None, typer.Option("--petersen", "-p", help="Graph is P(n,k), given as n,k")
    ] = None,
    as_json: JsonOption = False,
) -> None:
    """Exact when the weight meets the best proven lower bound, else upper_only."""
    with _handled():
        bench = Workbench()
        g = bench.load_graph(graph)
        a = bench.load_assignment(assignment, g)
        params = _params(petersen) if petersen else None
        cert = bench.certify(g, t, a, params)
    if as_json:
        typer.echo(_dump(cert), nl=False)
    else:
        typer.echo(
            f"{cert.kind.value} weight {cert.weight} lower {cert.lower_bound} gap {cert.gap}"
        )


@app.command()
def table(
    c: Annotated[str, typer.Option("--c", help="c values: N, A..B or A,B,C")],
    k: Annotated[str, typer.Option("--k", help="k values")],
    t: Annotated[str, typer.Option("--t", help="t values")],
    mode: Annotated[BoundMode, typer.Option("--mode")] = BoundMode.CORRECTED,
    solve_within_budget: Annotated[
        bool, typer.Option("--solve-within-budget", help="Fill solver_value where feasible")
    ] = False,
    budget_nodes: Annotated[int, typer.Option("--budget-nodes")] = 10**8,
    budget_states: Annotated[int, typer.Option("--budget-states")] = 10**8,
    budget_seconds: Annotated[float, typer.Option("--budget-seconds")] = 600.0,
    out: OutOption = None,
) -> None:
    """CSV sweep of bounds over a (c, k, t) grid, rows in ascending order."""
    cs, ks, ts = _grid(c), _grid(k), _grid(t)
    if not (cs and ks and ts):
        console.print("[red]Invalid input: empty grid[/red]")
        raise typer.Exit(EXIT_INVALID)
    with _handled():
        budget = SearchBudget(
            max_nodes=budget_nodes, max_states=budget_states, max_elapsed=budget_seconds
        )
        rows = Workbench(budget).table(cs, ks, ts, mode, solve_within_budget)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TableRow.CSV_COLUMNS)
    writer.writerows(row.csv_fields() for row in rows)
    _emit(buffer.getvalue(), out)


@app.command("check-structure")
def check_structure(
    graph: GraphOption,
    assignment: AssignmentOption,
    profile: Annotated[AuditProfile, typer.Option("--profile")],
    t: Annotated[int | None, typer.Option("--t", help="Expected number of colors")] = None,
    petersen: Annotated[
        str | None, typer.Option("--petersen", "-p", help="P(n,k) as n,k (outer profile)")
    ] = None,
) -> None:
    """Audit an extremal assignment and print the report as JSON; exit 1 on failure."""
    with _handled():
        bench = Workbench()
        g = bench.load_graph(graph)
        a = bench.load_assignment(assignment, g)
        if t is not None and a.t != t:
            raise FormatError(f"assignment uses t={a.t}, expected {t}", "t")
        params = _params(petersen) if petersen else None
        report = bench.audit(profile, g, a, params)
    typer.echo(_dump(report), nl=False)
    if not report.overall:
        raise typer.Exit(EXIT_FAILED)


@app.command()
def theorems(
    t: Annotated[int | None, typer.Option("--t", help="Only entries concerning t colors")] = None,
) -> None:
    """List the theorem catalog that bound reports cite."""
    entries = Workbench().theorems(t)
    table = Table(title="Theorems")
    table.add_column("Label", style="cyan")
    table.add_column("Kind", style="green")
    table.add_column("t", style="yellow")
    table.add_column("Statement")
    for entry in entries:
        colors = ",".join(str(c) for c in entry.colors) or "all"
        table.add_row(entry.label, entry.kind.value, colors, escape(entry.statement))
    console.print(table)


@app.command()
def schema(
    model: Annotated[str, typer.Argument(help=f"One of: {', '.join(SCHEMAS)}")],
) -> None:
    """Print the JSON Schema of a --json output or input format."""
    if model not in SCHEMAS:
        console.print(f"[red]Unknown model: {model}. Use one of: {', '.join(SCHEMAS)}[/red]")
        raise typer.Exit(EXIT_INVALID)
    typer.echo(json.dumps(SCHEMAS[model].model_json_schema(), indent=2))


if __name__ == "__main__":
    app()
