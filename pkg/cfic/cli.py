# Command-line front end. `-` stands for stdin everywhere a FILE is read.
from __future__ import annotations

import logging
import random
from typing import BinaryIO, Sequence

import click

from . import __version__, config
from .channels import channel_report
from .class_p import attach_appendage, build_p_member, classify, color_class_p, color_class_p_plus, parse_steps
from .closed_form import color_complete, color_cycle
from .edge_coloring import chromatic_index, edge_color_exact, optimal_edge_coloring
from .errors import CficError, ConflictError, ParseError, PartialColoringError, PreconditionError
from .gadgets import k4_plus, k4_plus_coloring
from .graph import Graph, IncidenceColoring, verify
from .io import export_dot, format_coloring, format_edge_coloring, format_graph, parse_graph_text
from .o1p import chi_components, color_components
from .oracle import chi_exact, conflict_graph

logger = logging.getLogger(__name__)


class CficGroup(click.Group):
    """Renders domain errors as one JSON envelope line on stderr and exits with their code."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except CficError as exc:
            click.echo(exc.to_json(), err=True)
            ctx.exit(exc.exit_code)


def _read(source: BinaryIO) -> tuple[Graph, IncidenceColoring | None]:
    data = source.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(
            "input is not valid UTF-8",
            line=data.count(b"\n", 0, exc.start) + 1,
            details={"offset": exc.start},
        ) from exc
    return parse_graph_text(text)


def _read_colored(source: BinaryIO) -> tuple[Graph, IncidenceColoring]:
    g, c = _read(source)
    if c is None:
        raise PartialColoringError("input carries no colors")
    return g, c


def _checked(g: Graph, c: IncidenceColoring) -> None:
    result = verify(g, c)
    if not result:
        assert result.first is not None and result.second is not None and result.witness is not None
        witness = g.labels[result.witness]
        raise ConflictError(
            f"incidences at {witness} share color {result.color}",
            {
                "witness": witness,
                "color": result.color,
                "incidences": [
                    {"vertex": g.labels[inc.vertex], "edge": list(g.edge_labels(inc.edge))}
                    for inc in (result.first, result.second)
                ],
            },
        )


budget_option = click.option(
    "--budget",
    type=click.IntRange(min=1),
    default=None,
    help="Node budget for exact searches (default: CFIC_SEARCH_BUDGET).",
)


def _budget(value: int | None) -> int:
    return value if value is not None else config.SEARCH_BUDGET


@click.group(cls=CficGroup)
@click.option("--log-level", default=None, help="Logging level for the cfic logger (default: CFIC_LOG_LEVEL).")
@click.version_option(__version__, prog_name="cfic")
def cli(log_level: str | None) -> None:
    """Optimal conflict-free incidence colorings."""
    config.configure_logging(log_level.upper() if log_level else None)


@cli.command()
@click.argument("source", type=click.File("rb"))
@click.option("--verify", "reverify", is_flag=True, help="Re-read the emitted coloring and verify it again.")
@budget_option
def color(source: BinaryIO, reverify: bool, budget: int | None) -> None:
    """Color each component optimally and print the coloring file."""
    g, _ = _read(source)
    result = color_components(g, budget=_budget(budget))
    _checked(g, result.coloring)

    lines = []
    for _part, verdict in result.verdicts:
        lines += [f"# case {verdict.case.value}", f"# chi {verdict.chi}"]
    text = format_coloring(g, result.coloring)
    if reverify:
        g2, c2 = parse_graph_text(text)
        if c2 is None:
            raise PartialColoringError("emitted coloring could not be read back")
        _checked(g2, c2)
    click.echo("\n".join(lines + [text.rstrip("\n")]))
    logger.info("colored %d vertices with %d colors", g.order, result.chi)


@cli.command()
@click.argument("source", type=click.File("rb"))
@click.option("--exact", is_flag=True, help="Exhaustive search instead of the closed form.")
@budget_option
def chi(source: BinaryIO, exact: bool, budget: int | None) -> None:
    """Print the conflict-free incidence chromatic number.

    Without --exact the closed form for outer-1-planar graphs is used; input
    outside that family fails with NOT_CLASS_ONE.
    """
    g, _ = _read(source)
    click.echo(chi_exact(g, budget=_budget(budget)).chi if exact else chi_components(g, budget=_budget(budget)))


@cli.command("chi-prime")
@click.argument("source", type=click.File("rb"))
@budget_option
def chi_prime(source: BinaryIO, budget: int | None) -> None:
    """Print the chromatic index."""
    g, _ = _read(source)
    click.echo(chromatic_index(g, budget=_budget(budget)))


@cli.command("edge-color")
@click.argument("source", type=click.File("rb"))
@click.option("-k", "k", type=click.IntRange(min=0), default=None, help="Palette size (default: chromatic index).")
@budget_option
def edge_color(source: BinaryIO, k: int | None, budget: int | None) -> None:
    """Print a proper edge coloring as `<u> <v> <color>` lines."""
    g, _ = _read(source)
    if k is None:
        ec = optimal_edge_coloring(g, budget=_budget(budget))
    else:
        found = edge_color_exact(g, k, budget=_budget(budget))
        if found is None:
            raise PreconditionError(f"no proper {k}-edge-coloring exists", {"k": k})
        ec = found
    click.echo(format_edge_coloring(g, ec), nl=False)


@cli.command("verify")
@click.argument("source", type=click.File("rb"))
def verify_cmd(source: BinaryIO) -> None:
    """Check a coloring file; exit 1 naming the witness vertex on a conflict."""
    g, c = _read_colored(source)
    _checked(g, c)
    click.echo("ok")


@cli.command("classify")
@click.argument("source", type=click.File("rb"))
def classify_cmd(source: BinaryIO) -> None:
    """Print P, P+ or other."""
    g, _ = _read(source)
    click.echo(classify(g))


@cli.group(cls=CficGroup)
def gen() -> None:
    """Generate colored graphs."""


@gen.command("cycle")
@click.argument("n", type=int)
def gen_cycle(n: int) -> None:
    g, c = color_cycle(n)
    click.echo(format_coloring(g, c), nl=False)


@gen.command("complete")
@click.argument("n", type=int)
def gen_complete(n: int) -> None:
    g, c = color_complete(n)
    click.echo(format_coloring(g, c), nl=False)


@gen.command("k4plus")
def gen_k4plus() -> None:
    click.echo(format_coloring(k4_plus(), k4_plus_coloring()), nl=False)


@gen.command("class-p")
@click.option("--steps", default="", help="Comma-separated pastes: g2, g4, g8 or h<t>.")
@click.option("--seed", type=int, default=None, help="Seed for H anchors (default: CFIC_SEED).")
@click.option("--appendage", default=None, help="Class-one graph hung off the degree-2 vertex: path<L> or cycle4.")
def gen_class_p(steps: str, seed: int | None, appendage: str | None) -> None:
    """A class P member (or P+ with --appendage) and its 7-coloring."""
    rng = random.Random(config.DEFAULT_SEED if seed is None else seed)
    g = build_p_member(parse_steps(steps), rng=rng)
    if appendage is None:
        c = color_class_p(g)
    else:
        g = attach_appendage(g, appendage)
        c = color_class_p_plus(g)
    click.echo(format_coloring(g, c), nl=False)


@cli.command()
@click.argument("source", type=click.File("rb"))
@click.option("--dot/--text", default=True, help="Graphviz text (default) or the edge-list format.")
@click.option("--conflict", is_flag=True, help="Export the conflict graph of the incidences instead.")
def export(source: BinaryIO, dot: bool, conflict: bool) -> None:
    """Export a graph, labeling edges with their colors when the input has them."""
    g, c = _read(source)
    if conflict:
        g, c = conflict_graph(g), None
    if dot:
        click.echo(export_dot(g, c), nl=False)
    elif c is not None:
        click.echo(format_coloring(g, c), nl=False)
    else:
        click.echo(format_graph(g), nl=False)


@cli.command()
@click.argument("source", type=click.File("rb"))
def channels(source: BinaryIO) -> None:
    """Print every node's channel box and whether it is rainbow."""
    g, c = _read_colored(source)
    report = channel_report(g, c)
    for box in report.boxes:
        status = "rainbow" if box.rainbow else "clash " + ",".join(map(str, box.repeated))
        click.echo(f"{box.node} {','.join(map(str, box.channels))} {status}")


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP API."""
    import uvicorn

    uvicorn.run("cfic.main:app", host=host, port=port)


def run(argv: Sequence[str] | None = None) -> int:
    """Entry point returning the process exit code (usage errors map to 1)."""
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, prog_name="cfic", standalone_mode=False)
    except click.ClickException as exc:
        click.echo(CficError(exc.format_message(), code="USAGE_ERROR").to_json(), err=True)
        return 1
    except click.Abort:
        return 1
    return rv if isinstance(rv, int) else 0
