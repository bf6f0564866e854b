"""Closed-form equidistant dimensions of named families

Each result carries an explicit witness that is checked by the equalizer
verifier before it is returned, so a wrong construction fails loudly instead of
printing a wrong number.
"""

import logging
import sys
from dataclasses import dataclass, field
from enum import Enum
from math import ceil
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import click

from .apfree import path_equalizer, r_exact
from .cli import main
from .common import (
    InputError,
    emit,
    format_option,
    reported_errors,
    resolve_run,
    search_options,
    settings_of,
    vertex_set_primitive,
)
from .const import DEFAULT_BUDGET, EX_NEGATIVE, EX_OK, R_EXACT_LIMIT
from .equalizer import eqdim_exact, verify_distance_equalizer
from .errors import FamilySpecError, NoClosedFormError, VerificationError
from .graph import FamilyKind, FamilySpec, Graph, VertexSet, bits_of, generate
from .graph.generators import johnson_vertices, multipartite_blocks


logger = logging.getLogger(__name__)


class ResultKind(str, Enum):
    EXACT = "exact"
    UPPER_BOUND = "upper_bound"
    INTERVAL = "interval"


@dataclass(frozen=True)
class FamilyResult:
    spec: FamilySpec
    graph: Graph
    kind: ResultKind
    lo: int
    hi: int
    witness: VertexSet
    reason: str

    @property
    def value(self) -> Optional[int]:
        return self.lo if self.kind == ResultKind.EXACT else None

    def to_primitive(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "spec": str(self.spec),
            "graph": str(self.graph),
            "n": self.graph.n,
            "kind": self.kind.value,
        }
        if self.kind == ResultKind.EXACT:
            payload["eqdim"] = self.lo
        elif self.kind == ResultKind.UPPER_BOUND:
            payload["upper"] = self.hi
        else:
            payload["lower"] = self.lo
            payload["upper"] = self.hi
            payload["note"] = "exact value unknown in closed form"
        payload.update(vertex_set_primitive(self.graph, self.witness, "witness"))
        payload["reason"] = self.reason
        return payload

    def to_rows(self) -> List[List[Any]]:
        return [
            ["spec", "n", "kind", "lower", "upper", "witness_labels"],
            [
                str(self.spec),
                self.graph.n,
                self.kind.value,
                self.lo if self.kind != ResultKind.UPPER_BOUND else None,
                self.hi,
                self.witness.labels(),
            ],
        ]

    def to_human(self) -> str:
        if self.kind == ResultKind.EXACT:
            head = f"eqdim({self.graph}) = {self.lo}"
        elif self.kind == ResultKind.UPPER_BOUND:
            head = f"eqdim({self.graph}) <= {self.hi}"
        else:
            head = (
                f"{self.lo} <= eqdim({self.graph}) <= {self.hi} "
                f"(exact value unknown in closed form)"
            )
        names = ""
        if self.graph.vertex_names is not None:
            names = " " + ", ".join(self.graph.vertex_name(v) for v in self.witness)
        return f"{head}\nwitness {self.witness}{names}\n{self.reason}"


def _labels(n: int, labels: Iterable[int]) -> VertexSet:
    return VertexSet.from_labels(labels, n)


def _path(n: int, limit: int) -> Tuple[ResultKind, int, int, VertexSet, str]:
    s = path_equalizer(n, limit)
    return (
        ResultKind.EXACT,
        len(s),
        len(s),
        s,
        "n - r(ceil(n/2)): the complement is an even-sum 3-AP-free set",
    )


def _cycle(n: int, limit: int) -> Tuple[ResultKind, int, int, VertexSet, str]:
    if n % 4 == 2:
        s = _labels(n, range(1, n, 2))
        return ResultKind.EXACT, n // 2, n // 2, s, "n/2: the odd-labelled vertices"
    if n % 4 == 0:
        s = _labels(n, range(1, n + 1)).difference(_labels(n, range(2, n // 2 + 3, 2)))
        value = 3 * n // 4 - 1
        return ResultKind.EXACT, value, value, s, "3n/4 - 1 for n divisible by 4"
    h = (n + 1) // 2
    path_part = path_equalizer(h, limit)
    s = VertexSet(path_part.bits | (bits_of(range(h, n))), n)
    lo, hi = (n - 1) // 2, n - r_exact(ceil(h / 2), limit).r_value
    return (
        ResultKind.INTERVAL,
        lo,
        hi,
        s,
        "(n-1)/2 <= eqdim <= n - r(ceil((n+1)/4)) for odd n",
    )


def _multipartite(sizes: Sequence[int]) -> Tuple[ResultKind, int, int, VertexSet, str]:
    n = sum(sizes)
    blocks = multipartite_blocks(tuple(sizes))
    smallest = min(range(len(sizes)), key=lambda i: (sizes[i], i))
    n1 = sizes[smallest]
    if len(sizes) == 2:
        s = VertexSet(bits_of(blocks[smallest]), n)
        return ResultKind.EXACT, n1, n1, s, "min(r, s): the smaller partite set"
    if n1 <= 2:
        s = VertexSet(bits_of(blocks[smallest]), n)
    else:
        s = VertexSet(bits_of(block[0] for block in blocks[:3]), n)
    value = min(n1, 3)
    return (
        ResultKind.EXACT,
        value,
        value,
        s,
        "min(n_1, 3) for at least three parts",
    )


def _bistar(r: int, s: int) -> Tuple[ResultKind, int, int, VertexSet, str]:
    n = r + s
    if r <= s:
        witness = VertexSet(bits_of(range(1, r + 1)), n)
    else:
        witness = VertexSet(bits_of([0, *range(r + 1, r + s)]), n)
    value = min(r, s)
    return (
        ResultKind.EXACT,
        value,
        value,
        witness,
        "min(r, s): the partite set of that size",
    )


def johnson_windows(n: int, k: int) -> VertexSet:
    """The n cyclic windows {i, ..., i+k-1 mod n} as vertices of J(n, k)"""
    index = {c: i for i, c in enumerate(johnson_vertices(n, k))}
    bits = 0
    for i in range(n):
        window = tuple(sorted((i + j) % n for j in range(k)))
        bits |= 1 << index[window]
    return VertexSet(bits, len(index))


def johnson_supported(n: int, k: int) -> bool:
    return n in (2 * k - 1, 2 * k + 1) or n > 2 * k * k


def _johnson(n: int, k: int) -> Tuple[ResultKind, int, int, VertexSet, str]:
    if not johnson_supported(n, k):
        raise NoClosedFormError(
            f"No construction is known for J({n},{k}): "
            f"needs n in {{2k-1, 2k+1}} or n > 2k^2"
        )
    return (
        ResultKind.UPPER_BOUND,
        1,
        n,
        johnson_windows(n, k),
        "the n cyclic windows of the ground set",
    )


def family_eqdim(spec: FamilySpec, limit: int = R_EXACT_LIMIT) -> FamilyResult:
    kind, p = spec.kind, spec.params
    g = generate(spec)
    n = g.n
    if kind == FamilyKind.COMPLEMENT:
        raise NoClosedFormError(f"No closed form is known for {spec}")
    if n == 1:
        outcome = (ResultKind.EXACT, 0, 0, VertexSet.empty(1), "a single vertex")
    elif kind == FamilyKind.PATH:
        outcome = _path(n, limit)
    elif kind == FamilyKind.CYCLE:
        outcome = _cycle(n, limit)
    elif kind in (FamilyKind.COMPLETE, FamilyKind.STAR, FamilyKind.GK_GRAPH):
        outcome = (
            ResultKind.EXACT,
            1,
            1,
            VertexSet.of([0], n),
            "a universal vertex is equidistant from every pair",
        )
    elif kind == FamilyKind.COMPLETE_MULTIPARTITE:
        outcome = _multipartite(p)
    elif kind == FamilyKind.BISTAR:
        outcome = _bistar(*p)
    elif kind == FamilyKind.JOHNSON:
        outcome = _johnson(*p)
    elif kind == FamilyKind.H_GRAPH:
        a, b = p
        witness = VertexSet(bits_of([0, *range(a + 1, a + b + 1)]), n)
        outcome = (ResultKind.EXACT, b + 1, b + 1, witness, "b + 1: v with every u_i")
    else:
        raise FamilySpecError(f"Unsupported family {spec}")
    result_kind, lo, hi, witness, reason = outcome
    if not verify_distance_equalizer(g, witness).valid:
        raise VerificationError(f"Witness {witness} of {spec} does not verify")
    if len(witness) > hi:
        raise VerificationError(f"Witness {witness} of {spec} exceeds the bound {hi}")
    return FamilyResult(spec, g, result_kind, lo, hi, witness, reason)


@dataclass(frozen=True)
class TableRow:
    n: int
    r_half: int
    path: int
    cycle_lo: int
    cycle_hi: int
    cycle: Optional[int]
    checked: Tuple[str, ...] = ()
    mismatches: Tuple[str, ...] = ()

    def cycle_text(self) -> str:
        if self.cycle is not None:
            return str(self.cycle)
        return f"{self.cycle_lo}..{self.cycle_hi}"


@dataclass(frozen=True)
class TableReport:
    rows: Tuple[TableRow, ...]
    mismatches: Tuple[str, ...] = field(default=())

    def to_primitive(self) -> Dict[str, Any]:
        return {
            "rows": [
                {
                    "n": r.n,
                    "r_half": r.r_half,
                    "eqdim_path": r.path,
                    "eqdim_cycle": r.cycle,
                    "cycle_interval": [r.cycle_lo, r.cycle_hi],
                    "checked": list(r.checked),
                }
                for r in self.rows
            ],
            "mismatches": list(self.mismatches),
        }

    def to_rows(self) -> List[List[Any]]:
        rows: List[List[Any]] = [
            ["n", "r_half", "eqdim_path", "eqdim_cycle", "checked"]
        ]
        rows += [
            [r.n, r.r_half, r.path, r.cycle_text(), r.checked] for r in self.rows
        ]
        return rows

    def to_human(self) -> str:
        header = ["n", "r(ceil(n/2))", "eqdim(P_n)", "eqdim(C_n)"]
        columns = [
            [str(r.n), str(r.r_half), str(r.path), r.cycle_text()] for r in self.rows
        ]
        width = max([len(c) for col in columns for c in col] + [2])
        lines = []
        for i, title in enumerate(header):
            cells = " ".join(col[i].rjust(width) for col in columns)
            lines.append(f"{title:<13} {cells}")
        lines.extend(f"MISMATCH {m}" for m in self.mismatches)
        return "\n".join(lines)


def verify_family_table(
    n_max: int,
    also: Sequence[int] = (),
    search_max: int = 13,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    limit: int = R_EXACT_LIMIT,
) -> TableReport:
    """Path and cycle values for 3..n_max (plus extra orders), cross-checked
    by exact search up to search_max vertices"""
    rows = []
    mismatches: List[str] = []
    for n in sorted(set(range(3, n_max + 1)) | set(also)):
        path = family_eqdim(FamilySpec(FamilyKind.PATH, (n,)), limit)
        cycle = family_eqdim(FamilySpec(FamilyKind.CYCLE, (n,)), limit)
        row_mismatches: List[str] = []
        checked: List[str] = []
        cycle_value = cycle.value
        if n <= search_max:
            found = eqdim_exact(path.graph, budget, workers)
            checked.append("path")
            if found.value != path.value:
                row_mismatches.append(
                    f"P_{n}: closed form {path.value}, search {found.value}"
                )
            found = eqdim_exact(cycle.graph, budget, workers)
            if found.value is not None:
                checked.append("cycle")
                if cycle.kind == ResultKind.EXACT and found.value != cycle.value:
                    row_mismatches.append(
                        f"C_{n}: closed form {cycle.value}, search {found.value}"
                    )
                if not cycle.lo <= found.value <= cycle.hi:
                    row_mismatches.append(
                        f"C_{n}: search {found.value} outside {cycle.lo}..{cycle.hi}"
                    )
                cycle_value = found.value
        logger.info(f"n={n}: eqdim(P_n)={path.value}, eqdim(C_n)={cycle_value}")
        mismatches.extend(row_mismatches)
        rows.append(
            TableRow(
                n=n,
                r_half=r_exact(ceil(n / 2), limit).r_value,
                path=path.lo,
                cycle_lo=cycle.lo,
                cycle_hi=cycle.hi,
                cycle=cycle_value,
                checked=tuple(checked),
                mismatches=tuple(row_mismatches),
            )
        )
    return TableReport(tuple(rows), tuple(mismatches))


@main.command("family")
@click.argument("spec", metavar="KIND:PARAMS")
@format_option
@click.pass_context
def family_command(ctx: click.Context, spec: str, format: Optional[str]) -> None:
    """
    Closed-form eqdim of a named family with a verified witness.
    """
    run = resolve_run(ctx, "family", source=spec, format=format or "json")
    try:
        parsed = FamilySpec.parse(spec)
    except FamilySpecError as e:
        raise InputError(str(e))
    with reported_errors(f"evaluate {spec}"):
        result = family_eqdim(parsed, settings_of(ctx).r_limit)
    emit(result, run.format)


@main.command("table")
@click.option("--n-max", type=int, default=20, show_default=True)
@click.option(
    "--also",
    type=int,
    multiple=True,
    help="Extra orders beyond --n-max, e.g. --also 50.",
)
@click.option(
    "--search-max",
    type=int,
    default=13,
    show_default=True,
    help="Largest order cross-checked by exact search.",
)
@search_options
@format_option
@click.pass_context
def table_command(
    ctx: click.Context,
    n_max: int,
    also: Tuple[int, ...],
    search_max: int,
    budget: Optional[int],
    workers: Optional[int],
    format: Optional[str],
) -> None:
    """
    Reproduce the table of r(ceil(n/2)), eqdim(P_n) and eqdim(C_n).
    """
    run = resolve_run(
        ctx, "table", format=format or "tsv", budget=budget, workers=workers
    )
    with reported_errors("build the table"):
        report = verify_family_table(
            n_max,
            also=also,
            search_max=search_max,
            budget=run.budget,
            workers=run.workers,
            limit=settings_of(ctx).r_limit,
        )
    emit(report, run.format)
    sys.exit(EX_NEGATIVE if report.mismatches else EX_OK)
