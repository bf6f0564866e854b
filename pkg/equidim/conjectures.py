"""Brute-force harnesses for the theorems and open conjectures on eqdim

Graph corpora come from labeled enumeration (small n), free-tree generation or
a graph6 stream. They are cut into fixed-size chunks which are checked
independently and merged in chunk order, so a report never depends on the
number of workers.
"""

import logging
import sys
from collections import deque
from concurrent.futures import Future, ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from itertools import combinations, islice
from math import ceil
from pathlib import Path
from typing import (
    Any,
    Callable,
    Deque,
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Tuple,
)

import click
import networkx as nx

from .apfree import r_exact
from .cli import main
from .common import (
    InputError,
    emit,
    emit_all,
    format_option,
    reported_errors,
    resolve_run,
    search_options,
    settings_of,
)
from .const import (
    DEFAULT_BUDGET,
    ENUM_LIMIT,
    EX_NEGATIVE,
    EX_OK,
    HARNESS_CHUNK_SIZE,
    TREE_LIMIT,
)
from .equalizer import eqdim_exact
from .errors import LimitExceededError
from .graph import (
    Graph,
    build_graph,
    complement,
    from_networkx,
    is_connected,
    parse_graph6,
    read_graph6_stream,
    write_graph6,
)
from .graph.generators import complete_multipartite_graph, gk_graph
from .resolving import dim_exact, psi_exact, tree_psi
from .search import SearchResult


logger = logging.getLogger(__name__)


class Status(str, Enum):
    HOLDS = "holds"
    OPEN = "open"
    COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True, order=True)
class Finding:
    graph6: str
    details: str


# equality cases printed per report; the count is always complete
SHOWN_EQUALITY_CASES = 20


@dataclass(frozen=True)
class HarnessReport:
    claim: str
    corpus: str
    conjecture: bool
    checked: int = 0
    skipped: int = 0
    counterexamples: Tuple[Finding, ...] = ()
    equality_cases: Tuple[Finding, ...] = ()

    @property
    def status(self) -> Status:
        if self.counterexamples:
            return Status.COUNTEREXAMPLE
        return Status.OPEN if self.conjecture else Status.HOLDS

    @property
    def note(self) -> Optional[str]:
        if self.status == Status.OPEN:
            return "holds on corpus"
        return None

    def merge(self, other: "HarnessReport") -> "HarnessReport":
        return replace(
            self,
            checked=self.checked + other.checked,
            skipped=self.skipped + other.skipped,
            counterexamples=tuple(
                sorted(self.counterexamples + other.counterexamples)
            ),
            equality_cases=tuple(sorted(self.equality_cases + other.equality_cases)),
        )

    def to_primitive(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "claim": self.claim,
            "corpus": self.corpus,
            "status": self.status.value,
        }
        if self.note is not None:
            payload["note"] = self.note
        payload["checked"] = self.checked
        payload["skipped"] = self.skipped
        payload["counterexamples"] = [
            {"graph6": f.graph6, "details": f.details} for f in self.counterexamples
        ]
        payload["equality_count"] = len(self.equality_cases)
        payload["equality_cases"] = [
            {"graph6": f.graph6, "details": f.details}
            for f in self.equality_cases[:SHOWN_EQUALITY_CASES]
        ]
        return payload

    def to_rows(self) -> List[List[Any]]:
        rows: List[List[Any]] = [["claim", "status", "checked", "graph6", "details"]]
        head = [self.claim, self.status.value, self.checked]
        if not self.counterexamples:
            rows.append(head + [None, None])
        for f in self.counterexamples:
            rows.append(head + [f.graph6, f.details])
        return rows

    def to_human(self) -> str:
        status = self.status.value
        if self.note is not None:
            status = f"{status} ({self.note})"
        lines = [
            f"{self.claim}: {status}",
            f"  corpus: {self.corpus}",
            f"  checked {self.checked} graphs, skipped {self.skipped}",
        ]
        for f in self.counterexamples:
            lines.append(f"  COUNTEREXAMPLE {f.graph6}: {f.details}")
        if self.equality_cases:
            lines.append(f"  {len(self.equality_cases)} equality cases, e.g.")
            for f in self.equality_cases[:SHOWN_EQUALITY_CASES]:
                lines.append(f"    {f.graph6}: {f.details}")
        return "\n".join(lines)


# Corpora


def enumerate_connected(n: int, limit: int = ENUM_LIMIT) -> Iterator[Graph]:
    """Every labeled connected graph on n vertices, once, by edge mask"""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > limit:
        raise LimitExceededError(
            f"Labeled enumeration is limited to {limit} vertices; "
            f"pass a graph6 stream for n={n}"
        )
    slots = list(combinations(range(n), 2))
    for mask in range(1 << len(slots)):
        adj = [0] * n
        for i, (u, v) in enumerate(slots):
            if mask >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        g = Graph(n, tuple(adj))
        if is_connected(g):
            yield g


def enumerate_trees(n: int, limit: int = TREE_LIMIT) -> Iterator[Graph]:
    """Every unlabeled tree on n vertices, once"""
    if n > limit:
        raise LimitExceededError(f"Tree enumeration is limited to {limit} vertices")
    if n == 1:
        yield build_graph(1, [], name="T1#0")
        return
    if n == 2:
        yield build_graph(2, [(0, 1)], name="T2#0")
        return
    for i, tree in enumerate(nx.nonisomorphic_trees(n)):
        yield from_networkx(tree, name=f"T{n}#{i}")


def connected_corpus(
    n_min: int, n_max: int, limit: int = ENUM_LIMIT
) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        logger.info(f"Enumerating labeled connected graphs on {n} vertices")
        yield from enumerate_connected(n, limit)


def tree_corpus(n_min: int, n_max: int, limit: int = TREE_LIMIT) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        logger.info(f"Enumerating trees on {n} vertices")
        yield from enumerate_trees(n, limit)


# Per-graph checks


def _value(result: SearchResult, parameter: str, g: Graph) -> int:
    if result.value is None:
        raise LimitExceededError(f"{parameter} search on {write_graph6(g)} ran out")
    return result.value


def _eqdim(g: Graph, budget: int) -> int:
    return _value(eqdim_exact(g, budget), "eqdim", g)


def _dim(g: Graph, budget: int) -> int:
    return _value(dim_exact(g, budget), "dim", g)


def _psi(g: Graph, budget: int) -> int:
    return _value(psi_exact(g, budget), "psi", g)


def path_eqdim(n: int) -> int:
    return n - r_exact(ceil(n / 2)).r_value if n > 1 else 0


@dataclass(frozen=True)
class Claim:
    name: str
    description: str
    conjecture: bool
    check: Callable[[Graph, int], HarnessReport]

    def empty(self, corpus: str) -> HarnessReport:
        return HarnessReport(self.name, corpus, self.conjecture)


def _one(
    claim: str,
    g: Graph,
    violation: Optional[str] = None,
    equality: Optional[str] = None,
    skipped: bool = False,
) -> HarnessReport:
    code = write_graph6(g)
    return HarnessReport(
        claim,
        corpus="",
        conjecture=CLAIMS[claim].conjecture,
        checked=0 if skipped else 1,
        skipped=1 if skipped else 0,
        counterexamples=(Finding(code, violation),) if violation else (),
        equality_cases=(Finding(code, equality),) if equality else (),
    )


def check_tree_graph(g: Graph, budget: int) -> HarnessReport:
    if not is_connected(g):
        return _one("trees", g, skipped=True)
    value, bound = _eqdim(g, budget), path_eqdim(g.n)
    if value > bound:
        return _one("trees", g, violation=f"eqdim={value} > eqdim(P_{g.n})={bound}")
    equality = f"eqdim={value} = eqdim(P_{g.n})" if value == bound else None
    return _one("trees", g, equality=equality)


def check_psi_graph(g: Graph, budget: int) -> HarnessReport:
    if g.n < 2 or not is_connected(g):
        return _one("psi", g, skipped=True)
    psi, dim, eqdim = _psi(g, budget), _dim(g, budget), _eqdim(g, budget)
    details = f"psi={psi}, dim={dim}, eqdim={eqdim}"
    if psi > dim + eqdim:
        return _one("psi", g, violation=details)
    return _one("psi", g, equality=details if psi == dim + eqdim else None)


def check_tree_psi_graph(g: Graph, budget: int) -> HarnessReport:
    if g.n < 2 or not g.is_tree():
        return _one("tree-psi", g, skipped=True)
    leaf_count, leaves = tree_psi(g)
    found = psi_exact(g, budget)
    psi = _value(found, "psi", g)
    dim, eqdim = _dim(g, budget), _eqdim(g, budget)
    problems = []
    if psi != leaf_count:
        problems.append(f"psi={psi} but {leaf_count} leaves")
    if found.witness != leaves:
        problems.append(f"minimum witness {found.witness} is not the leaf set")
    if psi > dim + eqdim:
        problems.append(f"psi={psi} > dim+eqdim={dim + eqdim}")
    if problems:
        return _one("tree-psi", g, violation="; ".join(problems))
    equality = None
    if psi == dim + eqdim:
        equality = f"psi={psi}, dim={dim}, eqdim={eqdim}"
    return _one("tree-psi", g, equality=equality)


def check_nordhaus_gaddum_graph(g: Graph, budget: int) -> HarnessReport:
    h = complement(g)
    if g.n < 2 or not is_connected(g) or not is_connected(h):
        return _one("nordhaus-gaddum", g, skipped=True)
    value, co_value = _eqdim(g, budget), _eqdim(h, budget)
    total = value + co_value
    details = f"eqdim={value}, eqdim(complement)={co_value}, n={g.n}"
    problems = []
    if not 4 <= total <= g.n + 1:
        problems.append(f"sum {total} outside 4..{g.n + 1}")
    if co_value > g.min_degree + 1:
        problems.append(f"eqdim(complement)={co_value} > min degree + 1")
    if problems:
        violation = "; ".join(problems) + f" ({details})"
        return _one("nordhaus-gaddum", g, violation=violation)
    tight = total in (4, g.n + 1)
    equality = f"sum {total}: {details}" if tight else None
    return _one("nordhaus-gaddum", g, equality=equality)


_NEAR_PATHS = {(n, n - 1) for n in range(3, 7)} | {(n, n) for n in range(3, 6)}


def _is_small_path_or_cycle(g: Graph) -> bool:
    """P_3..P_6 or C_3..C_5, told apart by edge count once the maximum degree is <= 2"""
    return g.max_degree <= 2 and (g.n, g.edge_count) in _NEAR_PATHS


def check_extremal_graph(g: Graph, budget: int) -> HarnessReport:
    n = g.n
    if n < 2 or not is_connected(g):
        return _one("extremal", g, skipped=True)
    value, delta = _eqdim(g, budget), g.max_degree
    problems = []
    if (value == 1) != (delta == n - 1):
        problems.append(f"eqdim=1 does not match max degree n-1 (max degree {delta})")
    if (value == 2) != (delta == n - 2):
        problems.append(f"eqdim=2 does not match max degree n-2 (max degree {delta})")
    if (value == n - 1) != (n == 2):
        problems.append("eqdim=n-1 does not match P_2")
    if (value == n - 2) != _is_small_path_or_cycle(g):
        problems.append("eqdim=n-2 does not match P_3..P_6, C_3..C_5")
    if n >= 7 and not 1 <= value <= n - 3:
        problems.append(f"eqdim={value} outside 1..n-3")
    if problems:
        return _one("extremal", g, violation="; ".join(problems) + f" (eqdim={value})")
    return _one("extremal", g)


CLAIMS: Dict[str, Claim] = {
    claim.name: claim
    for claim in (
        Claim(
            "trees",
            "eqdim(T) <= eqdim(P_n) for every tree T of order n",
            True,
            check_tree_graph,
        ),
        Claim("psi", "psi <= dim + eqdim", True, check_psi_graph),
        Claim(
            "tree-psi",
            "for trees: psi = number of leaves, the leaves are the unique minimum "
            "doubly resolving set, and psi <= dim + eqdim",
            False,
            check_tree_psi_graph,
        ),
        Claim(
            "nordhaus-gaddum",
            "4 <= eqdim(G) + eqdim(complement) <= n + 1 and "
            "eqdim(complement) <= min degree + 1 when both are connected",
            False,
            check_nordhaus_gaddum_graph,
        ),
        Claim(
            "extremal",
            "eqdim is 1, 2, n-1 or n-2 exactly for the characterized graphs",
            False,
            check_extremal_graph,
        ),
    )
}


# Execution


def _check_chunk(claim: str, graphs: List[Graph], budget: int) -> HarnessReport:
    spec = CLAIMS[claim]
    report = spec.empty("")
    for g in graphs:
        report = report.merge(spec.check(g, budget))
    return report


def _chunks(graphs: Iterable[Graph], size: int) -> Iterator[List[Graph]]:
    it = iter(graphs)
    while True:
        chunk = list(islice(it, size))
        if not chunk:
            return
        yield chunk


def run_harness(
    claim: str,
    graphs: Iterable[Graph],
    corpus: str,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    chunk_size: int = HARNESS_CHUNK_SIZE,
) -> HarnessReport:
    report = CLAIMS[claim].empty(corpus)
    chunks = _chunks(graphs, chunk_size)
    if workers <= 1:
        for chunk in chunks:
            report = report.merge(_check_chunk(claim, chunk, budget))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            pending: Deque["Future[HarnessReport]"] = deque()
            for chunk in chunks:
                pending.append(pool.submit(_check_chunk, claim, chunk, budget))
                if len(pending) >= 2 * workers:
                    report = report.merge(pending.popleft().result())
            while pending:
                report = report.merge(pending.popleft().result())
    logger.info(
        f"{claim}: checked {report.checked}, skipped {report.skipped}, "
        f"{len(report.counterexamples)} counterexamples"
    )
    return report


def reverify(report: HarnessReport, budget: int = DEFAULT_BUDGET) -> List[Finding]:
    """Counterexamples that do not reproduce when re-run from their graph6"""
    claim = CLAIMS[report.claim]
    stale = []
    for finding in report.counterexamples:
        rerun = claim.check(parse_graph6(finding.graph6), budget)
        if not rerun.counterexamples:
            stale.append(finding)
    return stale


def check_tree_conjecture(
    n_max: int, budget: int = DEFAULT_BUDGET, workers: int = 1, n_min: int = 1
) -> HarnessReport:
    corpus = f"unlabeled trees, n={n_min}..{n_max}"
    return run_harness("trees", tree_corpus(n_min, n_max), corpus, budget, workers)


def check_tree_psi(
    n_max: int, budget: int = DEFAULT_BUDGET, workers: int = 1, n_min: int = 2
) -> HarnessReport:
    corpus = f"unlabeled trees, n={n_min}..{n_max}"
    return run_harness("tree-psi", tree_corpus(n_min, n_max), corpus, budget, workers)


def check_psi_conjecture(
    graphs: Iterable[Graph], corpus: str, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> HarnessReport:
    return run_harness("psi", graphs, corpus, budget, workers)


def check_nordhaus_gaddum(
    graphs: Iterable[Graph], corpus: str, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> HarnessReport:
    return run_harness("nordhaus-gaddum", graphs, corpus, budget, workers)


def check_extremal(
    graphs: Iterable[Graph], corpus: str, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> HarnessReport:
    return run_harness("extremal", graphs, corpus, budget, workers)


@dataclass(frozen=True)
class SigmaRow:
    graph: str
    graph6: str
    n: int
    dim: int
    eqdim: int
    bound: str
    holds: bool


@dataclass(frozen=True)
class SigmaReport:
    rows: Tuple[SigmaRow, ...] = field(default=())

    @property
    def report(self) -> HarnessReport:
        bad = tuple(
            Finding(
                r.graph6, f"{r.graph}: dim+eqdim={r.dim + r.eqdim}, needs {r.bound}"
            )
            for r in self.rows
            if not r.holds
        )
        return HarnessReport(
            "sigma",
            "K_{floor(n/2),ceil(n/2)} and G_k",
            conjecture=False,
            checked=len(self.rows),
            counterexamples=tuple(sorted(bad)),
        )

    def to_primitive(self) -> Dict[str, Any]:
        payload = self.report.to_primitive()
        payload["rows"] = [
            {
                "graph": r.graph,
                "n": r.n,
                "dim": r.dim,
                "eqdim": r.eqdim,
                "sum": r.dim + r.eqdim,
                "bound": r.bound,
                "holds": r.holds,
            }
            for r in self.rows
        ]
        return payload

    def to_rows(self) -> List[List[Any]]:
        rows: List[List[Any]] = [
            ["graph", "n", "dim", "eqdim", "sum", "bound", "holds"]
        ]
        rows += [
            [r.graph, r.n, r.dim, r.eqdim, r.dim + r.eqdim, r.bound, r.holds]
            for r in self.rows
        ]
        return rows

    def to_human(self) -> str:
        lines = [self.report.to_human()]
        for r in self.rows:
            mark = "ok" if r.holds else "FAILS"
            lines.append(
                f"  {r.graph:<12} n={r.n:<3} dim+eqdim={r.dim + r.eqdim:<3} "
                f"{r.bound:<12} {mark}"
            )
        return "\n".join(lines)


def _sigma_row(
    g: Graph, budget: int, lower: Optional[int], upper: Optional[int]
) -> SigmaRow:
    dim, eqdim = _dim(g, budget), _eqdim(g, budget)
    total = dim + eqdim
    if lower is not None:
        # lower is stored doubled: 3n - 6 for the bound 3n/2 - 3
        bound, holds = f">= {lower / 2:g}", 2 * total >= lower
    else:
        assert upper is not None
        bound, holds = f"<= {upper}", total <= upper
    return SigmaRow(str(g), write_graph6(g), g.n, dim, eqdim, bound, holds)


def check_sigma_bounds(
    n_range: Iterable[int], k_range: Iterable[int], budget: int = DEFAULT_BUDGET
) -> SigmaReport:
    """dim + eqdim is large on balanced complete bipartite graphs and small on G_k"""
    rows = []
    for n in n_range:
        g = complete_multipartite_graph((n // 2, n - n // 2))
        rows.append(_sigma_row(g, budget, lower=3 * n - 6, upper=None))
    for k in k_range:
        rows.append(_sigma_row(gk_graph(k), budget, lower=None, upper=k + 2))
    return SigmaReport(tuple(rows))


# Commands


@main.group()
def conjecture() -> None:
    """
    Check theorems and open conjectures over enumerated graphs.
    """


def _corpus_options(func: Callable[..., Any]) -> Callable[..., Any]:
    func = click.option(
        "--graph6",
        "graph6",
        metavar="PATH",
        default=None,
        help="Read the corpus from a graph6 stream ('-' for stdin) instead.",
    )(func)
    func = click.option("--n-max", type=int, default=6, show_default=True)(func)
    func = click.option("--n-min", type=int, default=1, show_default=True)(func)
    return func


def _stream_corpus(ctx: click.Context, graph6: str) -> Tuple[Iterator[Graph], str]:
    if graph6 == "-":
        stream: Iterable[str] = click.get_text_stream("stdin")
    else:
        try:
            stream = Path(graph6).open("r")
        except OSError as e:
            raise InputError(f"Cannot read {graph6}: {e}")
        ctx.call_on_close(stream.close)  # type: ignore
    return read_graph6_stream(stream), f"graph6 stream {graph6}"


def _graph_corpus(
    ctx: click.Context, n_min: int, n_max: int, graph6: Optional[str]
) -> Tuple[Iterable[Graph], str]:
    if graph6 is not None:
        return _stream_corpus(ctx, graph6)
    limit = settings_of(ctx).enum_limit
    if n_max > limit:
        raise InputError(
            f"--n-max {n_max} exceeds the enumeration limit {limit}; "
            f"pass --graph6 for larger corpora"
        )
    corpus = f"labeled connected graphs, n={n_min}..{n_max}"
    return connected_corpus(n_min, n_max, limit), corpus


def _finish(report: HarnessReport, budget: int, format: str, shown: Any = None) -> None:
    stale = reverify(report, budget)
    for finding in stale:
        logger.error(f"Counterexample {finding.graph6} does not reproduce")
    emit(shown if shown is not None else report, format)
    sys.exit(EX_NEGATIVE if report.counterexamples else EX_OK)


@conjecture.command("trees")
@click.option("--n-max", type=int, default=12, show_default=True)
@click.option("--n-min", type=int, default=1, show_default=True)
@search_options
@format_option
@click.pass_context
def trees_command(
    ctx: click.Context,
    n_max: int,
    n_min: int,
    budget: Optional[int],
    workers: Optional[int],
    format: Optional[str],
) -> None:
    """
    eqdim(T) <= eqdim(P_n) over all trees of order n_min..n_max.
    """
    run = resolve_run(ctx, "conjecture", format=format, budget=budget, workers=workers)
    limit = settings_of(ctx).tree_limit
    if n_max > limit:
        raise InputError(f"--n-max {n_max} exceeds the tree limit {limit}")
    with reported_errors("check the tree conjecture"):
        report = check_tree_conjecture(n_max, run.budget, run.workers, n_min)
    _finish(report, run.budget, run.format)


@conjecture.command("psi")
@_corpus_options
@click.option(
    "--trees",
    is_flag=True,
    default=False,
    help="Check the tree version (leaf count, uniqueness, psi <= dim + eqdim).",
)
@search_options
@format_option
@click.pass_context
def psi_command(
    ctx: click.Context,
    n_min: int,
    n_max: int,
    graph6: Optional[str],
    trees: bool,
    budget: Optional[int],
    workers: Optional[int],
    format: Optional[str],
) -> None:
    """
    psi <= dim + eqdim over a corpus; equality cases are listed.
    """
    run = resolve_run(ctx, "conjecture", format=format, budget=budget, workers=workers)
    with reported_errors("check psi <= dim + eqdim"):
        if trees:
            report = check_tree_psi(n_max, run.budget, run.workers, max(n_min, 2))
        else:
            graphs, corpus = _graph_corpus(ctx, n_min, n_max, graph6)
            report = check_psi_conjecture(graphs, corpus, run.budget, run.workers)
    _finish(report, run.budget, run.format)


@conjecture.command("nordhaus-gaddum")
@_corpus_options
@search_options
@format_option
@click.pass_context
def nordhaus_gaddum_command(
    ctx: click.Context,
    n_min: int,
    n_max: int,
    graph6: Optional[str],
    budget: Optional[int],
    workers: Optional[int],
    format: Optional[str],
) -> None:
    """
    4 <= eqdim(G) + eqdim(complement of G) <= n + 1 over doubly connected graphs.
    """
    run = resolve_run(ctx, "conjecture", format=format, budget=budget, workers=workers)
    with reported_errors("check the Nordhaus-Gaddum bounds"):
        graphs, corpus = _graph_corpus(ctx, n_min, n_max, graph6)
        report = check_nordhaus_gaddum(graphs, corpus, run.budget, run.workers)
    _finish(report, run.budget, run.format)


@conjecture.command("extremal")
@_corpus_options
@search_options
@format_option
@click.pass_context
def extremal_command(
    ctx: click.Context,
    n_min: int,
    n_max: int,
    graph6: Optional[str],
    budget: Optional[int],
    workers: Optional[int],
    format: Optional[str],
) -> None:
    """
    The characterizations of eqdim in {1, 2, n-1, n-2} over a corpus.
    """
    run = resolve_run(ctx, "conjecture", format=format, budget=budget, workers=workers)
    with reported_errors("check the extremal characterizations"):
        graphs, corpus = _graph_corpus(ctx, n_min, n_max, graph6)
        report = check_extremal(graphs, corpus, run.budget, run.workers)
    _finish(report, run.budget, run.format)


@conjecture.command("sigma")
@click.option("--n-max", type=int, default=10, show_default=True)
@click.option("--k-max", type=int, default=3, show_default=True)
@search_options
@format_option
@click.pass_context
def sigma_command(
    ctx: click.Context,
    n_max: int,
    k_max: int,
    budget: Optional[int],
    workers: Optional[int],
    format: Optional[str],
) -> None:
    """
    dim + eqdim on K_{floor(n/2),ceil(n/2)} (large) and on G_k (small).
    """
    run = resolve_run(ctx, "conjecture", format=format, budget=budget, workers=workers)
    with reported_errors("check the dim + eqdim bounds"):
        sigma = check_sigma_bounds(range(2, n_max + 1), range(1, k_max + 1), run.budget)
    report = sigma.report
    emit(sigma, run.format)
    sys.exit(EX_NEGATIVE if report.counterexamples else EX_OK)


@conjecture.command("all")
@click.option("--n-max", type=int, default=5, show_default=True)
@click.option("--tree-n-max", type=int, default=10, show_default=True)
@search_options
@format_option
@click.pass_context
def all_command(
    ctx: click.Context,
    n_max: int,
    tree_n_max: int,
    budget: Optional[int],
    workers: Optional[int],
    format: Optional[str],
) -> None:
    """
    Run every harness on small corpora and report them together.
    """
    run = resolve_run(ctx, "conjecture", format=format, budget=budget, workers=workers)
    with reported_errors("run the harnesses"):
        reports: List[Any] = [
            check_tree_conjecture(tree_n_max, run.budget, run.workers),
            check_tree_psi(tree_n_max, run.budget, run.workers),
        ]
        for claim in ("psi", "nordhaus-gaddum", "extremal"):
            graphs, corpus = _graph_corpus(ctx, 1, n_max, None)
            reports.append(run_harness(claim, graphs, corpus, run.budget, run.workers))
        sigma = check_sigma_bounds(range(2, 2 * n_max + 1), range(1, 3), run.budget)
    failed = any(r.counterexamples for r in reports + [sigma.report])
    reports.append(sigma)
    emit_all(reports, run.format)
    sys.exit(EX_NEGATIVE if failed else EX_OK)
