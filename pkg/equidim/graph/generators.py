"""Named graph families with a documented canonical vertex numbering

- path/cycle: label i (1-based) is vertex i-1
- complete_multipartite: parts are consecutive blocks in the given order
- star: centre 0, leaves 1..n-1
- bistar(r, s): centre a=0 with leaves 1..r-1, centre b=r with leaves r+1..r+s-1
- johnson(n, k): k-subsets of {0..n-1} in colex order
- h_graph(a, b): v=0, v_i=i, u_i=a+i
- gk_graph(k): v=0, B={1..k}, then the 2^k binary words in binary order
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Tuple

import networkx as nx

from ..errors import FamilySpecError
from .common import Graph, build_graph, complement
from .formats import from_networkx


logger = logging.getLogger(__name__)


class FamilyKind(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_MULTIPARTITE = "complete_multipartite"
    STAR = "star"
    BISTAR = "bistar"
    JOHNSON = "johnson"
    H_GRAPH = "h_graph"
    GK_GRAPH = "gk_graph"
    COMPLEMENT = "complement"


_ARITY: Dict[FamilyKind, Optional[int]] = {
    FamilyKind.PATH: 1,
    FamilyKind.CYCLE: 1,
    FamilyKind.COMPLETE: 1,
    FamilyKind.COMPLETE_MULTIPARTITE: None,
    FamilyKind.STAR: 1,
    FamilyKind.BISTAR: 2,
    FamilyKind.JOHNSON: 2,
    FamilyKind.H_GRAPH: 2,
    FamilyKind.GK_GRAPH: 1,
}

_ALIASES = {"complete_bipartite": FamilyKind.COMPLETE_MULTIPARTITE}


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    params: Tuple[int, ...] = ()
    inner: Optional["FamilySpec"] = None

    def __post_init__(self) -> None:
        self._validate()

    def _validate(self) -> None:
        kind, p = self.kind, self.params
        if kind == FamilyKind.COMPLEMENT:
            if self.inner is None or p:
                raise FamilySpecError("complement takes exactly one inner spec")
            return
        if self.inner is not None:
            raise FamilySpecError(f"{kind.value} takes no inner spec")
        arity = _ARITY[kind]
        if arity is not None and len(p) != arity:
            raise FamilySpecError(
                f"{kind.value} takes {arity} parameter(s), got {len(p)}"
            )
        if kind in (FamilyKind.PATH, FamilyKind.COMPLETE) and p[0] < 1:
            raise FamilySpecError(f"{kind.value} needs n >= 1")
        elif kind == FamilyKind.CYCLE and p[0] < 3:
            raise FamilySpecError("cycle needs n >= 3")
        elif kind == FamilyKind.STAR and p[0] < 2:
            raise FamilySpecError("star needs order n >= 2")
        elif kind == FamilyKind.COMPLETE_MULTIPARTITE:
            if len(p) < 2 or min(p) < 1:
                raise FamilySpecError(
                    "complete_multipartite needs at least two parts of size >= 1"
                )
        elif kind == FamilyKind.BISTAR and min(p) < 1:
            raise FamilySpecError("bistar needs r, s >= 1")
        elif kind == FamilyKind.JOHNSON:
            n, k = p
            if not n > k >= 1:
                raise FamilySpecError(f"johnson needs n > k >= 1, got n={n}, k={k}")
        elif kind == FamilyKind.H_GRAPH:
            a, b = p
            if not (a >= 1 and 0 <= b < a):
                raise FamilySpecError(f"h_graph needs a >= 1 and 0 <= b < a, got {p}")
        elif kind == FamilyKind.GK_GRAPH and p[0] < 1:
            raise FamilySpecError("gk_graph needs k >= 1")

    @staticmethod
    def parse(text: str) -> "FamilySpec":
        """Parse 'kind:p1,p2,...' or 'complement:<spec>'"""
        head, sep, rest = text.strip().partition(":")
        head = head.strip().lower()
        try:
            kind = _ALIASES.get(head) or FamilyKind(head)
        except ValueError:
            known = ", ".join([k.value for k in FamilyKind] + list(_ALIASES))
            raise FamilySpecError(f"Unknown family {head!r}, expected one of {known}")
        if kind == FamilyKind.COMPLEMENT:
            if not rest:
                raise FamilySpecError("complement needs an inner spec")
            return FamilySpec(kind, (), FamilySpec.parse(rest))
        if not sep or not rest.strip():
            raise FamilySpecError(f"Family {head!r} needs parameters, e.g. {head}:8")
        try:
            params = tuple(int(x) for x in rest.split(","))
        except ValueError:
            raise FamilySpecError(f"Parameters must be integers: {rest!r}")
        return FamilySpec(kind, params)

    def __str__(self) -> str:
        if self.kind == FamilyKind.COMPLEMENT:
            return f"complement:{self.inner}"
        return f"{self.kind.value}:{','.join(str(x) for x in self.params)}"

    @property
    def order(self) -> int:
        kind, p = self.kind, self.params
        if kind == FamilyKind.COMPLEMENT:
            assert self.inner is not None
            return self.inner.order
        if kind in (FamilyKind.PATH, FamilyKind.CYCLE, FamilyKind.COMPLETE):
            return p[0]
        if kind == FamilyKind.STAR:
            return p[0]
        if kind == FamilyKind.COMPLETE_MULTIPARTITE:
            return sum(p)
        if kind == FamilyKind.BISTAR:
            return p[0] + p[1]
        if kind == FamilyKind.JOHNSON:
            return comb(*p)
        if kind == FamilyKind.H_GRAPH:
            return p[0] + p[1] + 1
        return 2 ** p[0] + p[0] + 1


def path_graph(n: int) -> Graph:
    return from_networkx(nx.path_graph(n), name=f"P_{n}")


def cycle_graph(n: int) -> Graph:
    return from_networkx(nx.cycle_graph(n), name=f"C_{n}")


def complete_graph(n: int) -> Graph:
    return from_networkx(nx.complete_graph(n), name=f"K_{n}")


def multipartite_blocks(sizes: Tuple[int, ...]) -> List[range]:
    blocks, start = [], 0
    for size in sizes:
        blocks.append(range(start, start + size))
        start += size
    return blocks


def complete_multipartite_graph(sizes: Tuple[int, ...]) -> Graph:
    # networkx numbers the parts as consecutive blocks, as multipartite_blocks does
    name = "K_{" + ",".join(str(s) for s in sizes) + "}"
    return from_networkx(nx.complete_multipartite_graph(*sizes), name=name)


def star_graph(n: int) -> Graph:
    return from_networkx(nx.star_graph(n - 1), name=f"K_{{1,{n - 1}}}")


def bistar_graph(r: int, s: int) -> Graph:
    h = nx.union(
        nx.star_graph(r - 1),
        nx.convert_node_labels_to_integers(nx.star_graph(s - 1), first_label=r),
    )
    h.add_edge(0, r)
    return from_networkx(h, name=f"K_2({r},{s})")


def johnson_vertices(n: int, k: int) -> List[Tuple[int, ...]]:
    """k-subsets of {0..n-1} in colexicographic order"""
    return sorted(combinations(range(n), k), key=lambda c: c[::-1])


def johnson_graph(n: int, k: int) -> Graph:
    subsets = johnson_vertices(n, k)
    masks = [sum(1 << x for x in c) for c in subsets]
    edges = [
        (i, j)
        for i, j in combinations(range(len(masks)), 2)
        if (masks[i] & masks[j]).bit_count() == k - 1
    ]
    names = ["{" + ",".join(str(x) for x in c) + "}" for c in subsets]
    return build_graph(len(subsets), edges, name=f"J({n},{k})", vertex_names=names)


def h_graph(a: int, b: int) -> Graph:
    edges = [(0, i) for i in range(1, a + 1)]
    edges += [(i, a + i) for i in range(1, b + 1)]
    names = ["v"] + [f"v{i}" for i in range(1, a + 1)]
    names += [f"u{i}" for i in range(1, b + 1)]
    return build_graph(a + b + 1, edges, name=f"H_{{{a},{b}}}", vertex_names=names)


def gk_word(w: int, k: int) -> str:
    return format(w, f"0{k}b")


def gk_graph(k: int) -> Graph:
    n = 2**k + k + 1
    edges = [(0, v) for v in range(1, n)]
    for w in range(2**k):
        word = gk_word(w, k)
        for j in range(1, k + 1):
            # j-th digit from the left
            if word[j - 1] == "1":
                edges.append((j, k + 1 + w))
    names = ["v"] + [str(j) for j in range(1, k + 1)]
    names += [gk_word(w, k) for w in range(2**k)]
    return build_graph(n, edges, name=f"G_{k}", vertex_names=names)


def generate(spec: FamilySpec) -> Graph:
    kind, p = spec.kind, spec.params
    logger.debug(f"Generating {spec}")
    if kind == FamilyKind.PATH:
        return path_graph(p[0])
    if kind == FamilyKind.CYCLE:
        return cycle_graph(p[0])
    if kind == FamilyKind.COMPLETE:
        return complete_graph(p[0])
    if kind == FamilyKind.COMPLETE_MULTIPARTITE:
        return complete_multipartite_graph(p)
    if kind == FamilyKind.STAR:
        return star_graph(p[0])
    if kind == FamilyKind.BISTAR:
        return bistar_graph(*p)
    if kind == FamilyKind.JOHNSON:
        return johnson_graph(*p)
    if kind == FamilyKind.H_GRAPH:
        return h_graph(*p)
    if kind == FamilyKind.GK_GRAPH:
        return gk_graph(p[0])
    assert spec.inner is not None
    return complement(generate(spec.inner))
