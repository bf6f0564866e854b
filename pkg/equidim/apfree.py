"""3-AP-free integer sets, r(n), and their correspondence with paths and queens

A complement [n] \\ S of a distance-equalizer set S of the path on [n] is exactly
a 3-AP-free set whose members share one parity; halving such a set gives a
3-AP-free subset of [ceil(n/2)], so eqdim(P_n) = n - r(ceil(n/2)).
"""

import logging
import threading
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import ceil
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

import click

from .cli import main
from .common import emit, format_option, reported_errors, resolve_run, settings_of
from .const import R_EXACT_LIMIT
from .equalizer import verify_distance_equalizer
from .errors import EquidimError, LimitExceededError, VerificationError, VertexSetError
from .graph import VertexSet
from .graph.generators import path_graph


logger = logging.getLogger(__name__)


class IntSetError(EquidimError, ValueError):
    pass


@dataclass(frozen=True)
class IntSet:
    """Sorted distinct integers drawn from [1..n]"""

    members: Tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if any(a >= b for a, b in zip(self.members, self.members[1:])):
            raise IntSetError(f"Members must be sorted and distinct: {self.members}")
        if self.members and not (1 <= self.members[0] and self.members[-1] <= self.n):
            raise IntSetError(f"Members of {self.members} must lie in 1..{self.n}")

    @staticmethod
    def of(members: Iterable[int], n: int) -> "IntSet":
        return IntSet(tuple(sorted(set(members))), n)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.members) + "}"


def is_3ap_free(t: IntSet) -> bool:
    present = set(t.members)
    for a, c in combinations(t.members, 2):
        if (a + c) % 2 == 0 and (a + c) // 2 in present:
            return False
    return True


def is_even_sum(t: IntSet) -> bool:
    """All members share one parity, so every pairwise sum is even"""
    return len({x % 2 for x in t.members}) <= 1


@dataclass(frozen=True)
class RnRecord:
    n: int
    r_value: int
    witness: IntSet


def greedy_3ap_free(n: int) -> IntSet:
    chosen: List[int] = []
    forbidden = 0
    for x in range(1, n + 1):
        if forbidden >> x & 1:
            continue
        for a in chosen:
            forbidden |= 1 << (2 * x - a)
        chosen.append(x)
    return IntSet(tuple(chosen), n)


_MEMO: Dict[int, RnRecord] = {0: RnRecord(0, 0, IntSet((), 0))}
_MEMO_LOCK = threading.Lock()


def _first_of_size(m: int, target: int) -> Optional[Tuple[int, ...]]:
    """Lexicographically least 3-AP-free subset of [m] with target members

    A subset of {i..m} is a translate of a subset of [m - i + 1], which bounds
    how many members can still be added.
    """
    chosen: List[int] = []

    def room(length: int) -> int:
        if length < m:
            return _MEMO[length].r_value
        return _MEMO[m - 1].r_value + 1

    def dfs(i: int, forbidden: int) -> Optional[Tuple[int, ...]]:
        if len(chosen) == target:
            return tuple(chosen)
        if i > m or len(chosen) + room(m - i + 1) < target:
            return None
        if not forbidden >> i & 1:
            grown = forbidden
            for a in chosen:
                grown |= 1 << (2 * i - a)
            chosen.append(i)
            found = dfs(i + 1, grown)
            chosen.pop()
            if found is not None:
                return found
        return dfs(i + 1, forbidden)

    return dfs(1, 0)


def r_exact(n: int, limit: int = R_EXACT_LIMIT) -> RnRecord:
    """Exact r(n) with the lexicographically least maximum witness

    Values are built upward from the memo table: r(m) = r(m - 1) + 1 exactly
    when a 3-AP-free set of that size exists in [m].
    """
    if n < 1:
        raise IntSetError(f"r(n) needs n >= 1, got {n}")
    if n > limit:
        raise LimitExceededError(f"r({n}) is beyond the exact limit {limit}")
    if n in _MEMO:
        return _MEMO[n]
    with _MEMO_LOCK:
        for m in range(max(_MEMO) + 1, n + 1):
            previous = _MEMO[m - 1].r_value
            found = _first_of_size(m, previous + 1)
            if found is None:
                found = _first_of_size(m, previous)
                assert found is not None
            _MEMO[m] = RnRecord(m, len(found), IntSet(found, m))
            logger.debug(f"r({m}) = {len(found)}, witness {_MEMO[m].witness}")
    return _MEMO[n]


def r_table(n_max: int, limit: int = R_EXACT_LIMIT) -> List[RnRecord]:
    r_exact(n_max, limit)
    return [_MEMO[m] for m in range(1, n_max + 1)]


class Parity(str, Enum):
    ODD = "odd"
    EVEN = "even"


def lift(k: IntSet, parity: Parity, n: int) -> IntSet:
    """Map k_i to 2k_i - 1 (odd) or 2k_i (even) inside [n]"""
    shift = 1 if parity == Parity.ODD else 0
    lifted = tuple(2 * x - shift for x in k.members)
    if lifted and lifted[-1] > n:
        raise IntSetError(f"{parity.value} lift of {k} leaves [1..{n}]")
    return IntSet(lifted, n)


def lift_parity(k: IntSet, n: int) -> Parity:
    if k.members and 2 * k.members[-1] > n:
        return Parity.ODD
    return Parity.EVEN


def path_equalizer(n: int, limit: int = R_EXACT_LIMIT) -> VertexSet:
    """Minimum distance-equalizer set of P_n, as 0-based vertices"""
    half = ceil(n / 2)
    record = r_exact(half, limit)
    witness = record.witness
    lifted = lift(witness, lift_parity(witness, n), n)
    s = VertexSet.from_labels(lifted.members, n).complement()
    certificate = verify_distance_equalizer(path_graph(n), s)
    if not certificate.valid:
        raise VerificationError(f"Path equalizer {s} of P_{n} does not verify")
    return s


def _board_masks(n: int) -> List[int]:
    """Squares attacked by a queen on (k, k), for k in 1..n"""
    masks = []
    for k in range(1, n + 1):
        mask = 0
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == k or j == k or i == j or i + j == 2 * k:
                    mask |= 1 << ((i - 1) * n + (j - 1))
        masks.append(mask)
    return masks


def is_diagonal_dominating(k: IntSet, n: int) -> bool:
    if k.members and k.members[-1] > n:
        raise VertexSetError(f"Diagonal squares of {k} leave the {n}x{n} board")
    masks = _board_masks(n)
    covered = 0
    for x in k.members:
        covered |= masks[x - 1]
    return covered == (1 << (n * n)) - 1


def diag_exact(n: int) -> IntSet:
    """Lexicographically least minimum diagonal dominating set"""
    masks = _board_masks(n)
    board = (1 << (n * n)) - 1
    for size in range(n + 1):
        for members in combinations(range(1, n + 1), size):
            covered = 0
            for x in members:
                covered |= masks[x - 1]
            if covered == board:
                return IntSet(members, n)
    raise AssertionError("the full diagonal dominates the board")


@dataclass(frozen=True)
class RTable:
    records: Tuple[RnRecord, ...]

    def to_primitive(self) -> Dict[str, Any]:
        return {
            "rows": [
                {"n": r.n, "r": r.r_value, "witness": list(r.witness.members)}
                for r in self.records
            ]
        }

    def to_rows(self) -> List[List[Any]]:
        rows: List[List[Any]] = [["n", "r", "witness"]]
        rows += [[r.n, r.r_value, r.witness.members] for r in self.records]
        return rows

    def to_human(self) -> str:
        return "\n".join(
            f"r({r.n}) = {r.r_value}  {r.witness}" for r in self.records
        )


@dataclass(frozen=True)
class QueensRow:
    n: int
    diag: int
    eqdim_path: int
    witness: IntSet


@dataclass(frozen=True)
class QueensTable:
    rows: Tuple[QueensRow, ...]

    def to_primitive(self) -> Dict[str, Any]:
        return {
            "rows": [
                {
                    "n": r.n,
                    "diag": r.diag,
                    "eqdim_path": r.eqdim_path,
                    "witness": list(r.witness.members),
                }
                for r in self.rows
            ]
        }

    def to_rows(self) -> List[List[Any]]:
        rows: List[List[Any]] = [["n", "diag", "eqdim_path", "witness"]]
        rows += [[r.n, r.diag, r.eqdim_path, r.witness.members] for r in self.rows]
        return rows

    def to_human(self) -> str:
        return "\n".join(
            f"n={r.n:<3} diag={r.diag:<3} eqdim(P_n)={r.eqdim_path:<3} {r.witness}"
            for r in self.rows
        )


def queens_table(n_max: int, limit: int = R_EXACT_LIMIT) -> QueensTable:
    rows = []
    # the empty set equalizes P_1 but no queen means an uncovered 1x1 board
    for n in range(2, n_max + 1):
        witness = diag_exact(n)
        eqdim_path = n - r_exact(ceil(n / 2), limit).r_value
        logger.info(f"n={n}: diag={len(witness)}, eqdim(P_n)={eqdim_path}")
        rows.append(QueensRow(n, len(witness), eqdim_path, witness))
    return QueensTable(tuple(rows))


@main.command("r-table")
@click.option("--n-max", type=int, default=25, show_default=True)
@format_option
@click.pass_context
def r_table_command(ctx: click.Context, n_max: int, format: Optional[str]) -> None:
    """
    Tabulate r(n), the largest 3-AP-free subset of [n], with a witness.
    """
    run = resolve_run(ctx, "r-table", format=format or "tsv")
    with reported_errors("tabulate r(n)"):
        table = RTable(tuple(r_table(n_max, settings_of(ctx).r_limit)))
    emit(table, run.format)


@main.command("queens")
@click.option("--n-max", type=int, default=12, show_default=True)
@format_option
@click.pass_context
def queens_command(ctx: click.Context, n_max: int, format: Optional[str]) -> None:
    """
    Compare diag(n), found by direct board search, with eqdim(P_n).
    """
    run = resolve_run(ctx, "queens", format=format)
    with reported_errors("tabulate diagonal domination"):
        table = queens_table(n_max, settings_of(ctx).r_limit)
    emit(table, run.format)
