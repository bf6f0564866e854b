"""Exact minimum set cover over pair space

Every exact parameter (eqdim, dim, psi) is phrased as: choose the fewest
vertices whose pair masks jointly cover a universe of vertex pairs. Pair {x, y}
with x < y lives at bit x * n + y.

Target sizes are tried upward from a lower bound; for each size the candidate
sets are walked depth-first in lexicographic order of their sorted members, so
the first hit is both minimum and lexicographically least. Work is bounded by a
node-expansion budget rather than wall time.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .graph import VertexSet, bits_of, full_mask, iter_bits


logger = logging.getLogger(__name__)


def pair_bit(x: int, y: int, n: int) -> int:
    if x > y:
        x, y = y, x
    return 1 << (x * n + y)


def pair_of(index: int, n: int) -> Tuple[int, int]:
    return divmod(index, n)


def pair_universe(n: int) -> int:
    universe = 0
    full = full_mask(n)
    for x in range(n):
        universe |= (full & ~full_mask(x + 1)) << (x * n)
    return universe


def incident_pairs(w: int, n: int) -> int:
    """Pairs having w as one endpoint"""
    mask = (full_mask(n) & ~full_mask(w + 1)) << (w * n)
    for x in range(w):
        mask |= 1 << (x * n + w)
    return mask


def class_pairs(classes: Iterable[int], n: int) -> int:
    """Pairs whose two endpoints fall in the same class of a partition"""
    mask = 0
    full = full_mask(n)
    for members in classes:
        for x in iter_bits(members):
            mask |= (members & full & ~full_mask(x + 1)) << (x * n)
    return mask


def first_pair(bits: int, n: int) -> Tuple[int, int]:
    """Lexicographically least pair of a nonempty pair mask"""
    return pair_of((bits & -bits).bit_length() - 1, n)


class _BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class CoverProblem:
    """One search variant: forced vertices plus candidates with pair masks"""

    n: int
    universe: int
    covers: Tuple[int, ...]
    forced: int = 0
    free: Optional[int] = None

    def candidates(self) -> Tuple[int, ...]:
        free = full_mask(self.n) & ~self.forced if self.free is None else self.free
        return tuple(iter_bits(free & ~self.forced))


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exact search

    value is None when the budget ran out; lower and upper then hold the
    best-known interval and witness is the set certifying upper.
    """

    value: Optional[int]
    witness: VertexSet
    lower: int
    upper: int
    nodes: int

    @property
    def exact(self) -> bool:
        return self.value is not None


@dataclass(frozen=True)
class _Kernel:
    candidates: Tuple[int, ...]
    covers: Tuple[int, ...]
    suffix: Tuple[int, ...]
    uncovered: int
    forced: int
    forced_count: int

    @staticmethod
    def build(problem: CoverProblem) -> "_Kernel":
        candidates = problem.candidates()
        covers = tuple(problem.covers[v] & problem.universe for v in candidates)
        suffix = [0] * (len(covers) + 1)
        for i in range(len(covers) - 1, -1, -1):
            suffix[i] = suffix[i + 1] | covers[i]
        covered = 0
        for v in iter_bits(problem.forced):
            covered |= problem.covers[v]
        return _Kernel(
            candidates=candidates,
            covers=covers,
            suffix=tuple(suffix),
            uncovered=problem.universe & ~covered,
            forced=problem.forced,
            forced_count=problem.forced.bit_count(),
        )


@dataclass
class _Walk:
    kernel: _Kernel
    budget: int
    nodes: int = 0
    chosen: List[int] = field(default_factory=list)

    def _pad(self, start: int, need: int) -> Optional[List[int]]:
        rest = self.kernel.candidates[start : start + need]
        if len(rest) < need:
            return None
        return self.chosen + list(rest)

    def branches(self, uncovered: int, need: int, start: int) -> List[int]:
        """Expand one node; the positions worth picking next, in order"""
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted()
        k = self.kernel
        if need <= 0 or uncovered & ~k.suffix[start]:
            return []
        gains = sorted(
            ((c & uncovered).bit_count() for c in k.covers[start:]), reverse=True
        )
        if sum(gains[:need]) < uncovered.bit_count():
            return []
        # every uncovered pair still needs a coverer at or after the next pick
        limit = start
        while uncovered & ~k.suffix[limit + 1] == 0:
            limit += 1
        limit = min(limit, len(k.candidates) - need)
        return [i for i in range(start, limit + 1) if k.covers[i] & uncovered]

    def descend(self, uncovered: int, need: int, start: int) -> Optional[List[int]]:
        if uncovered == 0:
            self.nodes += 1
            if self.nodes > self.budget:
                raise _BudgetExhausted()
            return self._pad(start, need)
        for i in self.branches(uncovered, need, start):
            found = self.pick(uncovered, need, i)
            if found is not None:
                return found
        return None

    def pick(self, uncovered: int, need: int, i: int) -> Optional[List[int]]:
        k = self.kernel
        self.chosen.append(k.candidates[i])
        try:
            return self.descend(uncovered & ~k.covers[i], need - 1, i + 1)
        finally:
            self.chosen.pop()


def _run_branch(
    kernel: _Kernel, uncovered: int, need: int, i: int, cap: int
) -> Tuple[Optional[List[int]], int, bool]:
    walk = _Walk(kernel, cap)
    try:
        found = walk.pick(uncovered, need, i)
    except _BudgetExhausted:
        return None, walk.nodes, True
    return found, walk.nodes, False


class CoverSearch:
    """Exact minimum cover across one or more variants

    With ordered=True every solution of an earlier variant precedes every
    solution of a later one, so the search stops at the first variant that
    succeeds at a given size.
    """

    def __init__(
        self,
        problems: Sequence[CoverProblem],
        n: int,
        budget: int,
        workers: int = 1,
        ordered: bool = False,
    ) -> None:
        self._kernels = [_Kernel.build(p) for p in problems]
        self._n = n
        self._budget = budget
        self._workers = workers
        self._ordered = ordered
        self._nodes = 0
        self._pool: Optional[ProcessPoolExecutor] = None

    def _size(self, kernel: _Kernel, size: int) -> Optional[int]:
        need = size - kernel.forced_count
        if need < 0:
            return None
        remaining = self._budget - self._nodes
        if kernel.uncovered == 0:
            if need > len(kernel.candidates):
                return None
            return kernel.forced | bits_of(kernel.candidates[:need])
        root = _Walk(kernel, remaining)
        try:
            positions = root.branches(kernel.uncovered, need, 0)
        finally:
            self._nodes += root.nodes
        remaining -= root.nodes
        if self._pool is not None and len(positions) > 1:
            futures = [
                self._pool.submit(
                    _run_branch, kernel, kernel.uncovered, need, i, remaining
                )
                for i in positions
            ]
            outcomes = (f.result() for f in futures)
        else:
            outcomes = (
                _run_branch(
                    kernel, kernel.uncovered, need, i, self._budget - self._nodes
                )
                for i in positions
            )
        # replay in branch order so the accounting matches a serial walk
        for found, nodes, exhausted in outcomes:
            self._nodes += nodes
            if exhausted or self._nodes > self._budget:
                raise _BudgetExhausted()
            if found is not None:
                return kernel.forced | bits_of(found)
        return None

    def run(self, lower: int, upper: int, upper_witness: VertexSet) -> SearchResult:
        lower = max(lower, 0)
        if self._workers > 1:
            self._pool = ProcessPoolExecutor(max_workers=self._workers)
        try:
            for size in range(lower, upper + 1):
                logger.debug(f"Searching size {size} ({self._nodes} nodes so far)")
                best: Optional[int] = None
                for kernel in self._kernels:
                    try:
                        bits = self._size(kernel, size)
                    except _BudgetExhausted:
                        logger.warning(
                            f"Search budget of {self._budget} nodes exhausted "
                            f"at size {size}"
                        )
                        return SearchResult(
                            value=None,
                            witness=upper_witness,
                            lower=size,
                            upper=upper,
                            nodes=min(self._nodes, self._budget),
                        )
                    if bits is None:
                        continue
                    candidate = VertexSet(bits, self._n)
                    if best is None or (
                        candidate.members() < VertexSet(best, self._n).members()
                    ):
                        best = bits
                    if self._ordered:
                        break
                if best is not None:
                    logger.debug(
                        f"Found a cover of size {size} after {self._nodes} nodes"
                    )
                    return SearchResult(
                        value=size,
                        witness=VertexSet(best, self._n),
                        lower=size,
                        upper=size,
                        nodes=self._nodes,
                    )
        finally:
            if self._pool is not None:
                self._pool.shutdown()
                self._pool = None
        raise AssertionError(f"No cover up to the certified upper bound {upper}")


def min_cover(
    problems: Sequence[CoverProblem],
    n: int,
    lower: int,
    upper: int,
    upper_witness: VertexSet,
    budget: int,
    workers: int = 1,
    ordered: bool = False,
) -> SearchResult:
    search = CoverSearch(problems, n, budget=budget, workers=workers, ordered=ordered)
    return search.run(lower, upper, upper_witness)
