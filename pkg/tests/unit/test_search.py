from equidim.equalizer import eqdim_exact
from equidim.graph import VertexSet
from equidim.graph.generators import cycle_graph
from equidim.search import (
    CoverProblem,
    class_pairs,
    first_pair,
    incident_pairs,
    min_cover,
    pair_bit,
    pair_of,
    pair_universe,
)


# on three vertices the pairs 01, 02, 12 sit at bits 1, 2, 5
COVERS = (0b000110, 0b100010, 0b100100)


def test_pair_space_layout() -> None:
    assert pair_universe(3) == 0b100110
    assert pair_bit(2, 1, 3) == 1 << 5
    assert pair_of(5, 3) == (1, 2)
    assert first_pair(0b100100, 3) == (0, 2)


def test_incident_and_class_pairs() -> None:
    assert incident_pairs(1, 3) == 0b100010
    assert class_pairs([0b011, 0b100], 3) == 0b000010
    assert class_pairs([0b111], 3) == pair_universe(3)


def test_min_cover_finds_lexicographically_least_set() -> None:
    problem = CoverProblem(3, pair_universe(3), COVERS)
    result = min_cover([problem], 3, 0, 3, VertexSet.full(3), budget=1000)
    assert result.exact
    assert result.value == 2
    assert result.witness.members() == (0, 1)


def test_forced_vertices_are_always_kept() -> None:
    problem = CoverProblem(3, pair_universe(3), COVERS, forced=0b100)
    result = min_cover([problem], 3, 0, 3, VertexSet.full(3), budget=1000)
    assert result.witness.members() == (0, 2)


def test_variants_are_merged_or_taken_in_order() -> None:
    forced = CoverProblem(3, pair_universe(3), COVERS, forced=0b100)
    free = CoverProblem(3, pair_universe(3), COVERS)
    merged = min_cover([forced, free], 3, 0, 3, VertexSet.full(3), budget=1000)
    assert merged.witness.members() == (0, 1)
    ordered = min_cover(
        [forced, free], 3, 0, 3, VertexSet.full(3), budget=1000, ordered=True
    )
    assert ordered.witness.members() == (0, 2)


def test_exhausted_budget_returns_certified_interval() -> None:
    problem = CoverProblem(3, pair_universe(3), COVERS)
    upper = VertexSet.full(3)
    result = min_cover([problem], 3, 0, 3, upper, budget=1)
    assert not result.exact
    assert result.value is None
    assert result.lower == 1
    assert result.upper == 3
    assert result.witness == upper
    assert result.nodes <= 1


def test_worker_count_does_not_change_the_result() -> None:
    g = cycle_graph(11)
    serial = eqdim_exact(g, workers=1)
    parallel = eqdim_exact(g, workers=2)
    assert serial == parallel
    assert serial.value == 7
