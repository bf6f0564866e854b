import pytest

from equidim.errors import (
    DisconnectedGraphError,
    FamilySpecError,
    GraphError,
    VertexSetError,
)
from equidim.graph import (
    FamilyKind,
    FamilySpec,
    Graph,
    VertexSet,
    build_graph,
    complement,
    generate,
    is_connected,
)
from equidim.graph.generators import (
    bistar_graph,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    gk_graph,
    h_graph,
    johnson_graph,
    path_graph,
    star_graph,
)


def test_build_graph_collapses_duplicate_edges() -> None:
    g = build_graph(3, [(0, 1), (1, 0), (1, 2)])
    assert g.edge_count == 2
    assert list(g.edges()) == [(0, 1), (1, 2)]


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_build_graph_rejects_bad_edges(edges: list) -> None:
    with pytest.raises(GraphError):
        build_graph(3, edges)


def test_graph_rejects_asymmetric_adjacency() -> None:
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))


def test_distances_of_a_cycle(c6: Graph) -> None:
    d = c6.distances
    assert d[0] == (0, 1, 2, 3, 2, 1)
    assert d.diameter == 3
    assert d.levels[0][3] == 1 << 3


def test_disconnected_graph_has_no_distances() -> None:
    g = build_graph(4, [(0, 1), (2, 3)])
    assert not is_connected(g)
    with pytest.raises(DisconnectedGraphError):
        g.distances


def test_complement_of_path() -> None:
    h = complement(path_graph(4))
    assert sorted(h.edges()) == [(0, 2), (0, 3), (1, 3)]


def test_bipartition_of_even_and_odd_cycles() -> None:
    parts = cycle_graph(6).bipartition()
    assert parts is not None
    assert parts[0].members() == (0, 2, 4)
    assert cycle_graph(5).bipartition() is None


def test_vertex_set_labels_and_order() -> None:
    s = VertexSet.from_labels([1, 3, 7], 8)
    assert s.members() == (0, 2, 6)
    assert str(s) == "{1,3,7}"
    assert len(s.complement()) == 5
    assert VertexSet.of([0, 3], 4).sort_key() < VertexSet.of([1, 2], 4).sort_key()
    assert VertexSet.of([0], 4).issubset(VertexSet.of([0, 3], 4))
    assert not VertexSet.of([1], 4).issubset(VertexSet.of([0, 3], 4))
    with pytest.raises(VertexSetError):
        s.issubset(VertexSet.of([0], 4))


def test_vertex_set_rejects_out_of_range() -> None:
    with pytest.raises(VertexSetError):
        VertexSet.from_labels([0], 3)
    with pytest.raises(VertexSetError):
        VertexSet(1 << 5, 4)


def test_leaves_and_support_vertices() -> None:
    g = bistar_graph(3, 2)
    assert g.leaves().members() == (1, 2, 4)
    assert g.support_vertices().members() == (0, 3)
    assert g.neighbors(0).members() == (1, 2, 3)


@pytest.mark.parametrize(
    "text,order,edges",
    [
        ("path:5", 5, 4),
        ("cycle:7", 7, 7),
        ("complete:4", 4, 6),
        ("complete_multipartite:2,3", 5, 6),
        ("complete_bipartite:2,2", 4, 4),
        ("star:5", 5, 4),
        ("bistar:3,2", 5, 4),
        ("johnson:5,2", 10, 30),
        ("h_graph:3,1", 5, 4),
        ("gk_graph:2", 7, 10),
        ("complement:path:4", 4, 3),
    ],
)
def test_family_specs_generate(text: str, order: int, edges: int) -> None:
    spec = FamilySpec.parse(text)
    g = generate(spec)
    assert spec.order == order
    assert g.n == order
    assert g.edge_count == edges


@pytest.mark.parametrize(
    "text",
    [
        "path",
        "path:0",
        "cycle:2",
        "star:1",
        "johnson:2,2",
        "h_graph:2,2",
        "tree:5",
        "path:x",
    ],
)
def test_family_specs_are_validated(text: str) -> None:
    with pytest.raises(FamilySpecError):
        FamilySpec.parse(text)


def test_family_spec_round_trips_through_str() -> None:
    spec = FamilySpec.parse("complement:cycle:5")
    assert spec.kind == FamilyKind.COMPLEMENT
    assert str(spec) == "complement:cycle:5"


def test_johnson_vertices_are_named_in_colex_order() -> None:
    g = johnson_graph(4, 2)
    assert g.vertex_names == ("{0,1}", "{0,2}", "{1,2}", "{0,3}", "{1,3}", "{2,3}")
    # complementary pairs are the only non-neighbours
    assert not g.has_edge(0, 5)
    assert g.degree(0) == 4


def test_special_families() -> None:
    assert star_graph(4).max_degree == 3
    assert complete_graph(5).min_degree == 4
    h = h_graph(3, 2)
    assert h.vertex_names == ("v", "v1", "v2", "v3", "u1", "u2")
    assert h.is_tree()
    gk = gk_graph(2)
    assert gk.vertex_names[3:] == ("00", "01", "10", "11")
    # word 11 sees both vertices of B
    assert gk.has_edge(6, 1) and gk.has_edge(6, 2)
    assert not gk.has_edge(3, 1)


def test_classic_families_keep_canonical_numbering() -> None:
    assert sorted(path_graph(4).edges()) == [(0, 1), (1, 2), (2, 3)]
    assert sorted(cycle_graph(4).edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert star_graph(4).neighbors(0).members() == (1, 2, 3)
    assert sorted(complete_multipartite_graph((1, 2)).edges()) == [(0, 1), (0, 2)]
    assert sorted(bistar_graph(2, 2).edges()) == [(0, 1), (0, 2), (2, 3)]
    assert complete_graph(5).edge_count == 10
