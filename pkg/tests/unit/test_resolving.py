import random

import pytest

from equidim.apfree import path_equalizer
from equidim.conjectures import connected_corpus, enumerate_connected
from equidim.equalizer import eqdim_exact
from equidim.errors import GraphError, VerificationError, VertexSetError
from equidim.graph import Graph, VertexSet
from equidim.graph.generators import (
    bistar_graph,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from equidim.resolving import (
    completion_set,
    dim_exact,
    doubly_from_eqdim,
    is_doubly_resolving,
    psi_exact,
    tree_psi,
    verify_doubly_resolving,
    verify_resolving,
)


def test_end_of_path_resolves() -> None:
    g = path_graph(5)
    assert verify_resolving(g, VertexSet.of([0], 5)).valid
    certificate = verify_resolving(g, VertexSet.of([2], 5), resolvers=True)
    assert not certificate.valid
    assert certificate.failing_pair == (0, 4)


def test_resolver_map_covers_every_pair() -> None:
    certificate = verify_resolving(path_graph(4), VertexSet.of([0], 4), resolvers=True)
    assert certificate.resolver_map is not None
    assert len(certificate.resolver_map) == 6


@pytest.mark.parametrize(
    "g,dim,psi",
    [
        (path_graph(6), 1, 2),
        (cycle_graph(5), 2, 2),
        (cycle_graph(6), 2, 3),
        (complete_graph(4), 3, 3),
        (complete_multipartite_graph((3, 3)), 4, 4),
        (star_graph(5), 3, 4),
        (bistar_graph(3, 3), 2, 4),
    ],
)
def test_dim_and_psi_of_families(g: Graph, dim: int, psi: int) -> None:
    found_dim = dim_exact(g)
    found_psi = psi_exact(g)
    assert found_dim.value == dim
    assert found_psi.value == psi
    assert verify_resolving(g, found_dim.witness).valid
    assert is_doubly_resolving(g, found_psi.witness)


def test_dim_of_multipartite_and_petersen(petersen: Graph) -> None:
    assert dim_exact(complete_multipartite_graph((2, 3, 3))).value == 5
    assert dim_exact(petersen).value == 3


def test_witnesses_are_lexicographically_least() -> None:
    assert dim_exact(cycle_graph(6)).witness.members() == (0, 1)
    assert psi_exact(path_graph(6)).witness.members() == (0, 5)


def test_single_vertex() -> None:
    g = complete_graph(1)
    assert dim_exact(g).value == 0
    assert psi_exact(g).value == 0


def test_doubly_resolving_needs_two_vertices() -> None:
    with pytest.raises(VertexSetError):
        verify_doubly_resolving(path_graph(3), VertexSet.of([0], 3))


def test_doubly_failing_pair() -> None:
    # on C_5, u = 0 and v = 1 shift the distances to 0 and 4 alike
    certificate = verify_doubly_resolving(cycle_graph(5), VertexSet.of([0, 1], 5))
    assert not certificate.valid
    assert certificate.failing_pair == (0, 4)
    assert verify_doubly_resolving(cycle_graph(5), VertexSet.of([0, 2], 5)).valid


@pytest.mark.parametrize("n", [4, 6, 8, 9])
def test_doubly_construction_on_paths(n: int) -> None:
    g = path_graph(n)
    a = VertexSet.of([0], n)
    b = path_equalizer(n)
    construction = doubly_from_eqdim(g, a, b)
    assert is_doubly_resolving(g, construction.s)
    assert len(construction.s) <= construction.bound
    assert construction.c.bits & b.bits == 0


def test_doubly_construction_from_exact_witnesses(petersen: Graph) -> None:
    a = dim_exact(petersen).witness
    b = eqdim_exact(petersen).witness
    construction = doubly_from_eqdim(petersen, a, b)
    assert is_doubly_resolving(petersen, construction.s)
    assert len(construction.s) <= len(a) + 2 * len(b)


def test_completion_set_of_a_resolving_equalizer() -> None:
    g = path_graph(3)
    # from the centre, only the far end shifts alike under 0 and 1
    c = completion_set(g, VertexSet.of([0], 3), VertexSet.of([1], 3))
    assert c.members() == (2,)


def test_doubly_construction_checks_its_inputs() -> None:
    g = path_graph(5)
    with pytest.raises(VerificationError):
        doubly_from_eqdim(g, VertexSet.of([2], 5), path_equalizer(5))
    with pytest.raises(VerificationError):
        doubly_from_eqdim(g, VertexSet.of([0], 5), VertexSet.of([0], 5))


def test_tree_psi() -> None:
    count, leaves = tree_psi(bistar_graph(3, 4))
    assert count == 5
    assert leaves.members() == (1, 2, 4, 5, 6)
    assert psi_exact(bistar_graph(3, 4)).witness == leaves
    with pytest.raises(GraphError):
        tree_psi(cycle_graph(5))


def _widen(s: VertexSet, rng: random.Random) -> VertexSet:
    return VertexSet(s.bits | rng.getrandbits(s.n), s.n)


def test_doubly_construction_on_random_witness_pairs() -> None:
    rng = random.Random(5)
    for g in connected_corpus(2, 5):
        a, b = dim_exact(g).witness, eqdim_exact(g).witness
        for _ in range(3):
            wide_a, wide_b = _widen(a, rng), _widen(b, rng)
            construction = doubly_from_eqdim(g, wide_a, wide_b)
            assert is_doubly_resolving(g, construction.s)
            assert len(construction.s) <= len(wide_a) + 2 * len(wide_b)


def test_doubly_construction_on_six_vertex_witness_pairs() -> None:
    rng = random.Random(6)
    graphs = rng.sample(list(enumerate_connected(6)), 50)
    for g in graphs:
        a, b = dim_exact(g).witness, eqdim_exact(g).witness
        wide_a, wide_b = _widen(a, rng), _widen(b, rng)
        construction = doubly_from_eqdim(g, wide_a, wide_b)
        assert is_doubly_resolving(g, construction.s)
        assert len(construction.s) <= len(wide_a) + 2 * len(wide_b)
