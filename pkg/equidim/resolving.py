"""Resolving and doubly resolving sets, and their link to distance-equalizer sets

A pair {x, y} is doubly resolved by u, v when
d(u, x) - d(u, y) != d(v, x) - d(v, y). Fixing u0 = min(S), a set S doubly
resolves {x, y} exactly when some v in S has d(v, .) - d(u0, .) taking different
values on x and y, which turns psi into a cover problem once u0 is fixed.
"""

import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import click

from .cli import main
from .common import (
    InputError,
    describe_source,
    emit,
    format_option,
    input_options,
    load_graph,
    parse_set,
    reported_errors,
    resolve_run,
    search_options,
    settings_of,
    vertex_set_primitive,
)
from .const import DEFAULT_BUDGET, EX_NEGATIVE, EX_OK, SEARCH_MAX_ORDER
from .equalizer import (
    ParameterResult,
    check_search_order,
    check_vertex_set,
    eqdim_exact,
    equalized_pairs,
    verify_distance_equalizer,
)
from .errors import GraphError, VerificationError, VertexSetError
from .graph import (
    DistanceMatrix,
    Graph,
    Pair,
    VertexSet,
    full_mask,
    iter_bits,
    lowest_bit,
    require_connected,
)
from .search import CoverProblem, SearchResult, class_pairs, min_cover, pair_universe


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResolvingCertificate:
    graph: Graph
    s: VertexSet
    valid: bool
    failing_pair: Optional[Pair] = None
    resolver_map: Optional[Dict[Pair, int]] = None

    def to_primitive(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "graph": str(self.graph),
            "n": self.graph.n,
            "kind": "resolving",
            "valid": self.valid,
        }
        payload.update(vertex_set_primitive(self.graph, self.s, "set"))
        if self.failing_pair is not None:
            x, y = self.failing_pair
            payload["failing_pair"] = [x, y]
            payload["failing_pair_labels"] = [x + 1, y + 1]
        if self.resolver_map is not None:
            payload["resolvers"] = [
                [x, y, v] for (x, y), v in sorted(self.resolver_map.items())
            ]
        return payload

    def to_rows(self) -> List[List[Any]]:
        pair = list(self.failing_pair) if self.failing_pair else None
        return [
            ["graph", "n", "valid", "set_labels", "failing_pair"],
            [str(self.graph), self.graph.n, self.valid, self.s.labels(), pair],
        ]

    def to_human(self) -> str:
        verdict = "is" if self.valid else "is NOT"
        lines = [f"{self.s} {verdict} a resolving set of {self.graph}"]
        if self.failing_pair is not None:
            x, y = self.failing_pair
            lines.append(
                f"{self.graph.vertex_name(x)} and {self.graph.vertex_name(y)} "
                f"have the same distances to every vertex of the set"
            )
        return "\n".join(lines)


def verify_resolving(
    g: Graph, s: VertexSet, resolvers: bool = False
) -> ResolvingCertificate:
    check_vertex_set(g, s)
    require_connected(g)
    d = g.distances
    members = s.members()
    resolver_map: Optional[Dict[Pair, int]] = {} if resolvers else None
    for x in range(g.n - 1):
        # vertices with the same distance vector as x
        twins = g.all_bits & ~full_mask(x + 1)
        for v in members:
            level = d.levels[v][d[v][x]]
            if resolver_map is not None:
                for y in iter_bits(twins & ~level):
                    resolver_map[(x, y)] = v
            twins &= level
        if twins:
            pair = (x, lowest_bit(twins))
            return ResolvingCertificate(g, s, valid=False, failing_pair=pair)
    return ResolvingCertificate(g, s, valid=True, resolver_map=resolver_map)


def resolving_covers(g: Graph) -> Tuple[int, ...]:
    d = g.distances
    universe = pair_universe(g.n)
    return tuple(universe & ~equalized_pairs(d, v) for v in range(g.n))


def dim_exact(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    limit: int = SEARCH_MAX_ORDER,
) -> SearchResult:
    """Exact metric dimension with the lexicographically least basis"""
    require_connected(g)
    if g.n == 1:
        return SearchResult(0, VertexSet.empty(1), 0, 0, nodes=0)
    check_search_order(g, limit)
    upper_witness = VertexSet(full_mask(g.n - 1), g.n)
    problem = CoverProblem(g.n, pair_universe(g.n), resolving_covers(g))
    result = min_cover(
        [problem],
        g.n,
        lower=1,
        upper=g.n - 1,
        upper_witness=upper_witness,
        budget=budget,
        workers=workers,
    )
    logger.debug(f"dim search on {g} expanded {result.nodes} nodes")
    return result


# Doubly resolving sets


def _difference_classes(d: DistanceMatrix, u0: int, v: int) -> List[int]:
    """Vertices grouped by d(v, y) - d(u0, y)"""
    classes: Dict[int, int] = {}
    for y in range(d.n):
        key = d[v][y] - d[u0][y]
        classes[key] = classes.get(key, 0) | 1 << y
    return [classes[key] for key in sorted(classes)]


def _class_of(classes: Sequence[int], y: int) -> int:
    for members in classes:
        if members >> y & 1:
            return members
    raise AssertionError(f"vertex {y} is in no class")


@dataclass(frozen=True)
class DoublyResolvingCertificate:
    graph: Graph
    s: VertexSet
    valid: bool
    failing_pair: Optional[Pair] = None
    resolvers: Optional[Dict[Pair, Tuple[int, int]]] = None

    def to_primitive(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "graph": str(self.graph),
            "n": self.graph.n,
            "kind": "doubly",
            "valid": self.valid,
        }
        payload.update(vertex_set_primitive(self.graph, self.s, "set"))
        if self.failing_pair is not None:
            x, y = self.failing_pair
            payload["failing_pair"] = [x, y]
            payload["failing_pair_labels"] = [x + 1, y + 1]
        if self.resolvers is not None:
            payload["resolvers"] = [
                [x, y, u, v] for (x, y), (u, v) in sorted(self.resolvers.items())
            ]
        return payload

    def to_rows(self) -> List[List[Any]]:
        pair = list(self.failing_pair) if self.failing_pair else None
        return [
            ["graph", "n", "valid", "set_labels", "failing_pair"],
            [str(self.graph), self.graph.n, self.valid, self.s.labels(), pair],
        ]

    def to_human(self) -> str:
        verdict = "is" if self.valid else "is NOT"
        lines = [f"{self.s} {verdict} a doubly resolving set of {self.graph}"]
        if self.failing_pair is not None:
            x, y = self.failing_pair
            lines.append(
                f"no two vertices of the set doubly resolve "
                f"{self.graph.vertex_name(x)} and {self.graph.vertex_name(y)}"
            )
        return "\n".join(lines)


def verify_doubly_resolving(
    g: Graph, s: VertexSet, resolvers: bool = False
) -> DoublyResolvingCertificate:
    check_vertex_set(g, s)
    require_connected(g)
    if g.n >= 2 and len(s) < 2:
        raise VertexSetError(f"A doubly resolving set needs two vertices, got {s}")
    d = g.distances
    members = s.members()
    resolver_map: Optional[Dict[Pair, Tuple[int, int]]] = {} if resolvers else None
    if not members:
        return DoublyResolvingCertificate(g, s, valid=True, resolvers=resolver_map)
    u0 = members[0]
    classes = [_difference_classes(d, u0, v) for v in members[1:]]
    for x in range(g.n - 1):
        alike = g.all_bits & ~full_mask(x + 1)
        for v, partition in zip(members[1:], classes):
            same = _class_of(partition, x)
            if resolver_map is not None:
                for y in iter_bits(alike & ~same):
                    resolver_map[(x, y)] = (u0, v)
            alike &= same
        if alike:
            pair = (x, lowest_bit(alike))
            return DoublyResolvingCertificate(g, s, valid=False, failing_pair=pair)
    return DoublyResolvingCertificate(g, s, valid=True, resolvers=resolver_map)


def is_doubly_resolving(g: Graph, s: VertexSet) -> bool:
    return verify_doubly_resolving(g, s).valid


def doubly_covers(g: Graph, u0: int) -> Tuple[int, ...]:
    """Per vertex v: pairs doubly resolved by u0 and v"""
    d = g.distances
    universe = pair_universe(g.n)
    return tuple(
        universe & ~class_pairs(_difference_classes(d, u0, v), g.n)
        for v in range(g.n)
    )


def psi_exact(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    limit: int = SEARCH_MAX_ORDER,
) -> SearchResult:
    """Exact psi; variants fix the smallest member u0 in increasing order"""
    require_connected(g)
    if g.n == 1:
        return SearchResult(0, VertexSet.empty(1), 0, 0, nodes=0)
    check_search_order(g, limit)
    universe = pair_universe(g.n)
    problems = [
        CoverProblem(
            g.n,
            universe,
            doubly_covers(g, u0),
            forced=1 << u0,
            free=g.all_bits & ~full_mask(u0 + 1),
        )
        for u0 in range(g.n - 1)
    ]
    result = min_cover(
        problems,
        g.n,
        lower=2,
        upper=g.n,
        upper_witness=VertexSet.full(g.n),
        budget=budget,
        workers=workers,
        ordered=True,
    )
    # a doubly resolving set also resolves, so psi >= dim
    assert verify_resolving(g, result.witness).valid
    logger.debug(f"psi search on {g} expanded {result.nodes} nodes")
    return result


def _doubly_resolved_pair(
    d: DistanceMatrix, members: Sequence[int], x: int, y: int
) -> bool:
    values = {d[u][x] - d[u][y] for u in members}
    return len(values) > 1


def completion_set(g: Graph, a: VertexSet, b: VertexSet) -> VertexSet:
    """For every x in B, the vertices y outside B that A u B fails to doubly
    resolve from x"""
    d = g.distances
    ab = a.union(b).members()
    c = 0
    for x in b:
        for y in range(g.n):
            if y == x or y in b:
                continue
            if not _doubly_resolved_pair(d, ab, x, y):
                c |= 1 << y
    return VertexSet(c, g.n)


@dataclass(frozen=True)
class DoublyConstruction:
    graph: Graph
    a: VertexSet
    b: VertexSet
    c: VertexSet
    s: VertexSet

    @property
    def bound(self) -> int:
        return len(self.a) + 2 * len(self.b)

    def to_primitive(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"graph": str(self.graph), "n": self.graph.n}
        for key, value in (("a", self.a), ("b", self.b), ("c", self.c), ("s", self.s)):
            payload.update(vertex_set_primitive(self.graph, value, key))
        payload["size"] = len(self.s)
        payload["bound"] = self.bound
        return payload

    def to_rows(self) -> List[List[Any]]:
        return [
            ["graph", "a_labels", "b_labels", "c_labels", "s_labels", "size", "bound"],
            [
                str(self.graph),
                self.a.labels(),
                self.b.labels(),
                self.c.labels(),
                self.s.labels(),
                len(self.s),
                self.bound,
            ],
        ]

    def to_human(self) -> str:
        return (
            f"A = {self.a} (resolving), B = {self.b} (distance-equalizer), "
            f"C = {self.c}\n"
            f"S = {self.s} doubly resolves {self.graph}: "
            f"|S| = {len(self.s)} <= |A| + 2|B| = {self.bound}"
        )


def doubly_from_eqdim(g: Graph, a: VertexSet, b: VertexSet) -> DoublyConstruction:
    """S = A u B u C, doubly resolving whenever A resolves and B equalizes"""
    if not verify_resolving(g, a).valid:
        raise VerificationError(f"{a} is not a resolving set of {g}")
    if not verify_distance_equalizer(g, b).valid:
        raise VerificationError(f"{b} is not a distance-equalizer set of {g}")
    c = completion_set(g, a, b)
    s = a.union(b).union(c)
    if g.n >= 2 and not is_doubly_resolving(g, s):
        raise VerificationError(f"{s} built from A={a}, B={b} is not doubly resolving")
    return DoublyConstruction(g, a, b, c, s)


def tree_psi(t: Graph) -> Tuple[int, VertexSet]:
    """psi of a tree: its leaves form the unique minimum doubly resolving set"""
    if t.n < 2 or not t.is_tree():
        raise GraphError(f"{t} is not a tree of order at least 2")
    leaves = t.leaves()
    return len(leaves), leaves


# Commands


_EXACT = {"eqdim": eqdim_exact, "dim": dim_exact, "psi": psi_exact}


@main.command("compute")
@input_options
@click.option(
    "--parameter",
    type=click.Choice(sorted(_EXACT)),
    default="eqdim",
    show_default=True,
)
@search_options
@format_option
@click.pass_context
def compute_command(
    ctx: click.Context,
    family: Optional[str],
    graph6: Optional[str],
    edges: Optional[Path],
    parameter: str,
    budget: Optional[int],
    workers: Optional[int],
    format: Optional[str],
) -> None:
    """
    Compute eqdim, dim or psi exactly, with the lexicographically least witness.
    """
    run = resolve_run(
        ctx,
        "compute",
        source=describe_source(family, graph6, edges),
        format=format,
        budget=budget,
        workers=workers,
    )
    g = load_graph(family, graph6, edges)
    limit = settings_of(ctx).search_max_order
    with reported_errors(f"compute {parameter}"):
        result = _EXACT[parameter](g, run.budget, run.workers, limit)
    emit(ParameterResult(g, parameter, result), run.format)


@main.command("verify")
@input_options
@click.option(
    "--set",
    "vertex_set",
    metavar="A,B,C",
    required=True,
    help="Candidate set as 1-based labels, e.g. 2,4,5,6,8.",
)
@click.option(
    "--complement",
    is_flag=True,
    default=False,
    help="Check the complement of --set instead.",
)
@click.option(
    "--kind",
    type=click.Choice(["equalizer", "resolving", "doubly"]),
    default="equalizer",
    show_default=True,
)
@click.option(
    "--witnesses",
    is_flag=True,
    default=False,
    help="Include the per-pair witness map in the certificate.",
)
@format_option
@click.pass_context
def verify_command(
    ctx: click.Context,
    family: Optional[str],
    graph6: Optional[str],
    edges: Optional[Path],
    vertex_set: str,
    complement: bool,
    kind: str,
    witnesses: bool,
    format: Optional[str],
) -> None:
    """
    Check a candidate vertex set. Exits with 1 when the set fails.
    """
    run = resolve_run(ctx, "verify", format=format)
    g = load_graph(family, graph6, edges)
    s = parse_set(vertex_set, g.n, complement=complement)
    with reported_errors(f"verify {s}"):
        if kind == "equalizer":
            certificate: Any = verify_distance_equalizer(g, s, witnesses)
        elif kind == "resolving":
            certificate = verify_resolving(g, s, witnesses)
        else:
            certificate = verify_doubly_resolving(g, s, witnesses)
    emit(certificate, run.format)
    sys.exit(EX_OK if certificate.valid else EX_NEGATIVE)


@main.command("doubly")
@input_options
@click.option(
    "--resolving-set",
    metavar="A,B,C",
    default=None,
    help="Resolving set A (1-based). Defaults to the exact minimum basis.",
)
@click.option(
    "--equalizer-set",
    metavar="A,B,C",
    default=None,
    help="Distance-equalizer set B (1-based). Defaults to the exact minimum.",
)
@search_options
@format_option
@click.pass_context
def doubly_command(
    ctx: click.Context,
    family: Optional[str],
    graph6: Optional[str],
    edges: Optional[Path],
    resolving_set: Optional[str],
    equalizer_set: Optional[str],
    budget: Optional[int],
    workers: Optional[int],
    format: Optional[str],
) -> None:
    """
    Build a doubly resolving set of size at most |A| + 2|B| from a resolving
    set A and a distance-equalizer set B.
    """
    run = resolve_run(ctx, "doubly", format=format, budget=budget, workers=workers)
    g = load_graph(family, graph6, edges)
    limit = settings_of(ctx).search_max_order
    with reported_errors("build a doubly resolving set"):
        if resolving_set is not None:
            a = parse_set(resolving_set, g.n)
        else:
            a = _exact_witness(dim_exact(g, run.budget, run.workers, limit), "dim")
        if equalizer_set is not None:
            b = parse_set(equalizer_set, g.n)
        else:
            b = _exact_witness(eqdim_exact(g, run.budget, run.workers, limit), "eqdim")
        construction = doubly_from_eqdim(g, a, b)
    emit(construction, run.format)


def _exact_witness(result: SearchResult, parameter: str) -> VertexSet:
    if result.value is None:
        raise InputError(
            f"The {parameter} search ran out of budget; pass the set explicitly"
        )
    return result.witness
