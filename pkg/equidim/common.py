"""Shared command-line plumbing: input options, vertex-set parsing, output"""

import json
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional, Protocol, Sequence

import click
import yaml

from .config import ConfigError, RunConfig, Settings
from .const import EX_USAGE, OUTPUT_FORMATS
from .errors import EquidimError
from .graph import (
    FamilySpec,
    Graph,
    VertexSet,
    generate,
    parse_edge_list,
    read_graph6_stream,
)


logger = logging.getLogger(__name__)


class InputError(click.ClickException):
    exit_code = EX_USAGE


class Reportable(Protocol):
    def to_primitive(self) -> Dict[str, Any]:
        ...

    def to_rows(self) -> List[List[Any]]:
        ...

    def to_human(self) -> str:
        ...


def input_options(func: Callable[..., Any]) -> Callable[..., Any]:
    func = click.option(
        "--edges",
        "edges",
        type=click.Path(exists=True, dir_okay=False, path_type=Path),
        default=None,
        help="Edge-list file: 0-based 'u v' lines with an optional 'n m' header.",
    )(func)
    func = click.option(
        "--graph6",
        "graph6",
        metavar="PATH",
        default=None,
        help="graph6 file, or '-' for standard input. The first graph is used.",
    )(func)
    func = click.option(
        "--family",
        "family",
        metavar="KIND:PARAMS",
        default=None,
        help="Named family, e.g. path:8, cycle:13, johnson:5,2, complement:cycle:5.",
    )(func)
    return func


def format_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--format",
        "format",
        type=click.Choice(OUTPUT_FORMATS),
        default=None,
        help="Output format. Defaults to the configured format (human).",
    )(func)


def search_options(func: Callable[..., Any]) -> Callable[..., Any]:
    func = click.option(
        "--workers",
        type=int,
        default=None,
        help="Worker processes for exact search. Results do not depend on it.",
    )(func)
    func = click.option(
        "--budget",
        type=int,
        default=None,
        help="Node-expansion budget of an exact search.",
    )(func)
    return func


def describe_source(
    family: Optional[str], graph6: Optional[str], edges: Optional[Path]
) -> Optional[str]:
    given = [
        (flag, value)
        for flag, value in (("family", family), ("graph6", graph6), ("edges", edges))
        if value is not None
    ]
    if len(given) > 1:
        flags = ", ".join(f"--{flag}" for flag, _ in given)
        raise InputError(f"Exactly one input source is allowed, got {flags}")
    if not given:
        return None
    flag, value = given[0]
    return f"{flag}:{value}"


def resolve_run(
    ctx: click.Context,
    subcommand: str,
    source: Optional[str] = None,
    format: Optional[str] = None,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> RunConfig:
    try:
        return RunConfig.resolve(
            settings_of(ctx),
            subcommand,
            source=source,
            format=format,
            budget=budget,
            workers=workers,
        )
    except ConfigError as e:
        raise InputError(str(e))


def settings_of(ctx: click.Context) -> Settings:
    return ctx.obj if isinstance(ctx.obj, Settings) else Settings()


def _read_text(path: str) -> str:
    if path == "-":
        return click.get_text_stream("stdin").read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e}")


def load_graph(
    family: Optional[str], graph6: Optional[str], edges: Optional[Path]
) -> Graph:
    """The graph named by exactly one of --family, --graph6, --edges"""
    if describe_source(family, graph6, edges) is None:
        raise InputError("One of --family, --graph6 or --edges is required")
    try:
        if family is not None:
            return generate(FamilySpec.parse(family))
        if graph6 is not None:
            lines = [line for line in _read_text(graph6).splitlines() if line.strip()]
            graphs = list(read_graph6_stream(lines))
            if not graphs:
                raise InputError(f"No graph found in {graph6}")
            if len(graphs) > 1:
                logger.warning(f"{graph6} holds {len(graphs)} graphs, using the first")
            return graphs[0]
        assert edges is not None
        return parse_edge_list(_read_text(str(edges)), name=edges.name)
    except EquidimError as e:
        raise InputError(f"{e.__class__.__name__}: {e}")


def parse_set(text: str, n: int, complement: bool = False) -> VertexSet:
    """Parse a 1-based, comma-separated vertex list such as '1,3,7'"""
    labels: List[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            labels.append(int(token))
        except ValueError:
            raise InputError(f"Vertex labels must be integers, got {token!r}")
    try:
        s = VertexSet.from_labels(labels, n)
    except EquidimError as e:
        raise InputError(str(e))
    return s.complement() if complement else s


@contextmanager
def reported_errors(action: str) -> Iterator[None]:
    try:
        yield
    except EquidimError as e:
        logger.error(f"Failed to {action}: {e.__class__.__name__}: {e}")
        sys.exit(EX_USAGE)


def vertex_set_primitive(g: Graph, s: VertexSet, key: str) -> Dict[str, Any]:
    """Both labelings of a vertex set, plus vertex names when the graph has them"""
    payload: Dict[str, Any] = {
        key: list(s.members()),
        f"{key}_labels": list(s.labels()),
    }
    if g.vertex_names is not None:
        payload[f"{key}_names"] = [g.vertex_name(v) for v in s]
    return payload


def render(result: Reportable, format: str) -> str:
    if format == "json":
        return json.dumps(result.to_primitive(), indent=2)
    if format == "yaml":
        return yaml.safe_dump(result.to_primitive(), sort_keys=False).rstrip("\n")
    if format == "tsv":
        return "\n".join(
            "\t".join(_tsv_cell(cell) for cell in row) for row in result.to_rows()
        )
    return result.to_human()


def _tsv_cell(cell: Any) -> str:
    if cell is None:
        return ""
    if isinstance(cell, (list, tuple)):
        return ",".join(str(x) for x in cell)
    return str(cell)


def emit(result: Reportable, format: str) -> None:
    click.echo(render(result, format))


def emit_all(results: Sequence[Reportable], format: str) -> None:
    """Several results as one document: a JSON/YAML list or concatenated rows"""
    if format == "json":
        click.echo(json.dumps([r.to_primitive() for r in results], indent=2))
    elif format == "yaml":
        payload = [r.to_primitive() for r in results]
        click.echo(yaml.safe_dump(payload, sort_keys=False).rstrip("\n"))
    elif format == "tsv":
        for i, r in enumerate(results):
            rows = r.to_rows()
            click.echo(render(r, format) if i == 0 else _strip_header(rows))
    else:
        click.echo("\n\n".join(r.to_human() for r in results))


def _strip_header(rows: List[List[Any]]) -> str:
    return "\n".join("\t".join(_tsv_cell(cell) for cell in row) for row in rows[1:])
