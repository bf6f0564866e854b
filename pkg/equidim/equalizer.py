"""Distance-equalizer sets: verification, bounds and the exact equidistant dimension

A set S is distance-equalizing when every two vertices x, y outside S have some
w in S with d(x, w) = d(y, w). Verification works on distance levels: the
vertices at distance t from w form one bitset, so all y paired with x through w
are found with a single AND.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import click

from .cli import main
from .common import (
    emit,
    format_option,
    input_options,
    load_graph,
    reported_errors,
    resolve_run,
    vertex_set_primitive,
)
from .const import DEFAULT_BUDGET, SEARCH_MAX_ORDER
from .errors import LimitExceededError, VerificationError, VertexSetError
from .graph import (
    DistanceMatrix,
    Graph,
    Pair,
    VertexSet,
    bits_of,
    complement,
    full_mask,
    iter_bits,
    lowest_bit,
    require_connected,
)
from .search import (
    CoverProblem,
    SearchResult,
    class_pairs,
    incident_pairs,
    min_cover,
    pair_universe,
)


logger = logging.getLogger(__name__)


def is_equidistant(w: int, x: int, y: int, d: DistanceMatrix) -> bool:
    return d[x][w] == d[y][w]


def check_vertex_set(g: Graph, s: VertexSet) -> None:
    if s.n != g.n:
        raise VertexSetError(f"Vertex set indexes order {s.n}, graph has {g.n}")


@dataclass(frozen=True)
class EqualizerCertificate:
    """Verdict on a candidate set

    witness_map sends each pair outside S to its smallest equidistant member of
    S; it is filled only when requested, the verdict never depends on it.
    """

    graph: Graph
    s: VertexSet
    valid: bool
    failing_pair: Optional[Pair] = None
    witness_map: Optional[Dict[Pair, int]] = None

    def to_primitive(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "graph": str(self.graph),
            "n": self.graph.n,
            "kind": "equalizer",
            "valid": self.valid,
        }
        payload.update(vertex_set_primitive(self.graph, self.s, "set"))
        if self.failing_pair is not None:
            x, y = self.failing_pair
            payload["failing_pair"] = [x, y]
            payload["failing_pair_labels"] = [x + 1, y + 1]
        if self.witness_map is not None:
            payload["witnesses"] = [
                [x, y, w] for (x, y), w in sorted(self.witness_map.items())
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
        lines = [f"{self.s} {verdict} a distance-equalizer set of {self.graph}"]
        if self.failing_pair is not None:
            x, y = self.failing_pair
            lines.append(
                f"no vertex of the set is equidistant from "
                f"{self.graph.vertex_name(x)} and {self.graph.vertex_name(y)}"
            )
        return "\n".join(lines)


def verify_distance_equalizer(
    g: Graph, s: VertexSet, witnesses: bool = False
) -> EqualizerCertificate:
    check_vertex_set(g, s)
    require_connected(g)
    d = g.distances
    members = s.members()
    outside = g.all_bits & ~s.bits
    witness_map: Optional[Dict[Pair, int]] = {} if witnesses else None
    for x in iter_bits(outside):
        later = outside & ~full_mask(x + 1)
        if not later:
            break
        if witness_map is None:
            covered = 0
            for w in members:
                covered |= d.levels[w][d[w][x]]
            bad = later & ~covered
        else:
            bad = later
            for w in members:
                hit = bad & d.levels[w][d[w][x]]
                for y in iter_bits(hit):
                    witness_map[(x, y)] = w
                bad &= ~hit
        if bad:
            pair = (x, lowest_bit(bad))
            return EqualizerCertificate(g, s, valid=False, failing_pair=pair)
    return EqualizerCertificate(g, s, valid=True, witness_map=witness_map)


def is_distance_equalizer(g: Graph, s: VertexSet) -> bool:
    return verify_distance_equalizer(g, s).valid


def equalized_pairs(d: DistanceMatrix, w: int) -> int:
    """Pair mask of the pairs {x, y} with d(x, w) = d(y, w)"""
    return class_pairs(d.levels[w], d.n)


def equalizer_covers(g: Graph) -> Tuple[int, ...]:
    """Per vertex w: pairs w equalizes plus pairs that w itself removes"""
    d = g.distances
    return tuple(
        equalized_pairs(d, w) | incident_pairs(w, g.n) for w in range(g.n)
    )


# Cliques


def _colour_classes(adj: Tuple[int, ...], cand: int) -> Tuple[List[int], List[int]]:
    order: List[int] = []
    colours: List[int] = []
    uncoloured = cand
    colour = 0
    while uncoloured:
        colour += 1
        q = uncoloured
        while q:
            v = lowest_bit(q)
            q &= ~(1 << v) & ~adj[v]
            uncoloured &= ~(1 << v)
            order.append(v)
            colours.append(colour)
    return order, colours


def max_clique(g: Graph) -> VertexSet:
    """Maximum clique by branch and bound with a greedy-colouring bound"""
    best = [0, 0]

    def expand(clique: int, size: int, cand: int) -> None:
        order, colours = _colour_classes(g.adj, cand)
        for v, colour in zip(reversed(order), reversed(colours)):
            if size + colour <= best[1]:
                return
            grown = clique | 1 << v
            rest = cand & g.adj[v]
            if rest:
                expand(grown, size + 1, rest)
            elif size + 1 > best[1]:
                best[0], best[1] = grown, size + 1
            cand &= ~(1 << v)

    expand(0, 0, g.all_bits)
    return VertexSet(best[0], g.n)


def max_independent_set(g: Graph) -> VertexSet:
    return max_clique(complement(g))


def omega(g: Graph) -> int:
    return len(max_clique(g))


def alpha(g: Graph) -> int:
    return len(max_independent_set(g))


# Bounds


@dataclass(frozen=True)
class Bound:
    name: str
    value: int
    reason: str
    witness: Optional[VertexSet] = None


@dataclass(frozen=True)
class BoundsReport:
    graph: Graph
    lower: Tuple[Bound, ...]
    upper: Tuple[Bound, ...]

    @property
    def best_lower(self) -> int:
        return max(b.value for b in self.lower)

    @property
    def best_upper(self) -> int:
        return min(b.value for b in self.upper)

    @property
    def upper_witness(self) -> VertexSet:
        """Smallest verified set among the constructive upper bounds"""
        sets = [b.witness for b in self.upper if b.witness is not None]
        return min(sets, key=lambda s: s.sort_key())

    @property
    def exact(self) -> Optional[int]:
        if self.best_lower >= len(self.upper_witness):
            return self.best_lower
        return None

    def to_primitive(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"graph": str(self.graph), "n": self.graph.n}
        if self.exact is not None:
            payload["eqdim"] = self.exact
        payload["lower"] = {b.name: b.value for b in self.lower}
        payload["upper"] = {b.name: b.value for b in self.upper}
        payload["best_lower"] = self.best_lower
        payload["best_upper"] = self.best_upper
        payload.update(vertex_set_primitive(self.graph, self.upper_witness, "witness"))
        return payload

    def to_rows(self) -> List[List[Any]]:
        rows: List[List[Any]] = [["side", "name", "value", "reason"]]
        rows += [["lower", b.name, b.value, b.reason] for b in self.lower]
        rows += [["upper", b.name, b.value, b.reason] for b in self.upper]
        return rows

    def to_human(self) -> str:
        lines = [f"{self.graph} (n={self.graph.n})"]
        for b in self.lower:
            lines.append(f"  lower {b.name:<28} {b.value:>4}  {b.reason}")
        for b in self.upper:
            lines.append(f"  upper {b.name:<28} {b.value:>4}  {b.reason}")
        lines.append(f"  {self.best_lower} <= eqdim <= {self.best_upper}")
        lines.append(f"  witness {self.upper_witness}")
        return "\n".join(lines)


def _lower_bounds(g: Graph) -> List[Bound]:
    n, delta = g.n, g.max_degree
    bounds = []
    if delta == n - 1:
        value = 1
    elif delta == n - 2:
        value = 2
    else:
        value = 3
    bounds.append(
        Bound(
            "max-degree",
            value,
            "eqdim is 1 iff some vertex is universal"
            " and 2 iff the maximum degree is n-2",
        )
    )
    if n >= 3:
        bounds.append(
            Bound(
                "support-vertices",
                len(g.support_vertices()),
                "a leaf and its support vertex have no equidistant vertex",
            )
        )
    parts = g.bipartition()
    if parts is not None:
        bounds.append(
            Bound(
                "bipartite-partite",
                min(len(p) for p in parts),
                "S contains one of the partite sets",
            )
        )
    return bounds


def _peripheral_level_witness(g: Graph) -> VertexSet:
    d = g.distances
    u = min(v for v in range(g.n) if d.eccentricity(v) == d.diameter)
    levels = d.levels[u]
    i0 = max(range(1, len(levels)), key=lambda i: (levels[i].bit_count(), -i))
    return VertexSet(g.all_bits & ~levels[i0], g.n)


def _upper_bounds(g: Graph) -> List[Bound]:
    n, delta = g.n, g.max_degree
    d = g.distances
    diameter = d.diameter
    v = g.degrees().index(delta)
    clique = max_clique(g)
    w = min(clique)
    bounds = [
        Bound(
            "n-max-degree",
            n - delta,
            "a vertex is equidistant from all of its neighbours",
            VertexSet(g.all_bits & ~g.adj[v], n),
        ),
        Bound(
            "n-clique+1",
            n - len(clique) + 1,
            "one vertex of a clique is equidistant from the others",
            VertexSet(g.all_bits & ~clique.bits | 1 << w, n),
        ),
        Bound(
            "diameter-ratio",
            (n * (diameter - 1) + 1) // diameter,
            "a peripheral vertex is equidistant from its largest distance level",
            _peripheral_level_witness(g),
        ),
    ]
    if diameter == 2:
        independent = max_independent_set(g)
        i = min(independent)
        bounds.append(
            Bound(
                "n-independence+1",
                n - len(independent) + 1,
                "in diameter 2 nonadjacent vertices are at distance 2",
                VertexSet(g.all_bits & ~independent.bits | 1 << i, n),
            )
        )
    bounds.append(
        Bound(
            "trivial",
            n - 1,
            "at most one vertex left outside",
            VertexSet(full_mask(n - 1), n),
        )
    )
    return bounds


def bounds(g: Graph) -> BoundsReport:
    require_connected(g)
    if g.n == 1:
        empty = VertexSet.empty(1)
        return BoundsReport(
            g,
            lower=(Bound("trivial", 0, "a single vertex"),),
            upper=(Bound("trivial", 0, "the empty set is vacuously valid", empty),),
        )
    report = BoundsReport(g, tuple(_lower_bounds(g)), tuple(_upper_bounds(g)))
    for b in report.upper:
        assert b.witness is not None
        if len(b.witness) > b.value or not is_distance_equalizer(g, b.witness):
            raise VerificationError(f"Bound {b.name} produced an invalid witness")
    logger.debug(
        f"Bounds for {g}: {report.best_lower} <= eqdim <= {report.best_upper}"
    )
    return report


# Exact computation


def check_search_order(g: Graph, limit: int = SEARCH_MAX_ORDER) -> None:
    if g.n > limit:
        raise LimitExceededError(
            f"Exact search is limited to {limit} vertices, {g} has {g.n}"
        )


def eqdim_exact(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    limit: int = SEARCH_MAX_ORDER,
) -> SearchResult:
    """Exact eqdim with the lexicographically least minimum witness"""
    report = bounds(g)
    if g.n == 1:
        return SearchResult(0, VertexSet.empty(1), 0, 0, nodes=0)
    check_search_order(g, limit)
    covers = equalizer_covers(g)
    universe = pair_universe(g.n)
    parts = g.bipartition()
    if parts is not None:
        # every distance-equalizer set of a bipartite graph holds a partite set
        problems = [CoverProblem(g.n, universe, covers, forced=p.bits) for p in parts]
    else:
        problems = [CoverProblem(g.n, universe, covers)]
    upper_witness = report.upper_witness
    result = min_cover(
        problems,
        g.n,
        lower=report.best_lower,
        upper=len(upper_witness),
        upper_witness=upper_witness,
        budget=budget,
        workers=workers,
    )
    logger.debug(f"eqdim search on {g} expanded {result.nodes} nodes")
    return result


def eqdim_brute_force(g: Graph) -> Tuple[int, VertexSet]:
    """Unpruned oracle: every subset by increasing size, lexicographically"""
    require_connected(g)
    for k in range(g.n + 1):
        for members in combinations(range(g.n), k):
            s = VertexSet(bits_of(members), g.n)
            if is_distance_equalizer(g, s):
                return k, s
    raise AssertionError("the full vertex set is always distance-equalizing")


@dataclass(frozen=True)
class ParameterResult:
    """Exact value (or interval) of eqdim, dim or psi for one graph"""

    graph: Graph
    parameter: str
    result: SearchResult
    extra: Dict[str, Any] = field(default_factory=dict)

    def to_primitive(self) -> Dict[str, Any]:
        r = self.result
        payload: Dict[str, Any] = {"graph": str(self.graph), "n": self.graph.n}
        if r.value is not None:
            payload[self.parameter] = r.value
        payload["lower"] = r.lower
        payload["upper"] = r.upper
        payload["exact"] = r.exact
        payload.update(vertex_set_primitive(self.graph, r.witness, "witness"))
        payload.update(self.extra)
        return payload

    def to_rows(self) -> List[List[Any]]:
        r = self.result
        return [
            ["graph", "n", "parameter", "value", "lower", "upper", "witness_labels"],
            [
                str(self.graph),
                self.graph.n,
                self.parameter,
                r.value,
                r.lower,
                r.upper,
                r.witness.labels(),
            ],
        ]

    def to_human(self) -> str:
        r = self.result
        if r.value is not None:
            head = f"{self.parameter}({self.graph}) = {r.value}"
        else:
            head = (
                f"{r.lower} <= {self.parameter}({self.graph}) <= {r.upper} "
                f"(search budget exhausted)"
            )
        names = ""
        if self.graph.vertex_names is not None:
            names = " " + ", ".join(self.graph.vertex_name(v) for v in r.witness)
        return f"{head}\nwitness {r.witness}{names}"


@main.command("bounds")
@input_options
@format_option
@click.pass_context
def bounds_command(
    ctx: click.Context,
    family: Optional[str],
    graph6: Optional[str],
    edges: Optional[Path],
    format: Optional[str],
) -> None:
    """
    Print every lower and upper bound on eqdim with its reason and a witness.
    """
    run = resolve_run(ctx, "bounds", format=format)
    g = load_graph(family, graph6, edges)
    with reported_errors("compute bounds"):
        report = bounds(g)
    emit(report, run.format)
