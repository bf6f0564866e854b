from math import ceil

import pytest

from equidim.apfree import (
    IntSet,
    IntSetError,
    Parity,
    diag_exact,
    greedy_3ap_free,
    is_3ap_free,
    is_diagonal_dominating,
    is_even_sum,
    lift,
    lift_parity,
    path_equalizer,
    queens_table,
    r_exact,
    r_table,
)
from equidim.equalizer import eqdim_exact, is_distance_equalizer
from equidim.errors import LimitExceededError, VertexSetError
from equidim.graph import VertexSet
from equidim.graph.generators import path_graph


R_VALUES = [1, 2, 2, 3, 4, 4, 4, 4, 5, 5, 6, 6, 7, 8]


def test_intset_validation() -> None:
    assert IntSet.of([4, 1, 2, 1], 5).members == (1, 2, 4)
    with pytest.raises(IntSetError):
        IntSet((2, 1), 3)
    with pytest.raises(IntSetError):
        IntSet((0, 1), 3)
    with pytest.raises(IntSetError):
        IntSet((1, 4), 3)


def test_progressions_and_parity() -> None:
    assert not is_3ap_free(IntSet.of([1, 2, 3], 3))
    assert not is_3ap_free(IntSet.of([1, 4, 7], 7))
    assert is_3ap_free(IntSet.of([1, 2, 4, 5], 5))
    assert is_even_sum(IntSet.of([2, 4, 8], 8))
    assert not is_even_sum(IntSet.of([1, 2], 2))


def test_greedy_set() -> None:
    assert greedy_3ap_free(14).members == (1, 2, 4, 5, 10, 11, 13, 14)


def test_r_table_values() -> None:
    records = r_table(len(R_VALUES))
    assert [r.r_value for r in records] == R_VALUES
    for record in records:
        assert len(record.witness) == record.r_value
        assert is_3ap_free(record.witness)


def test_r_witness_is_lexicographically_least() -> None:
    assert r_exact(4).witness.members == (1, 2, 4)
    assert r_exact(5).witness.members == (1, 2, 4, 5)


def test_r_of_larger_n() -> None:
    assert r_exact(25).r_value == 10


def test_r_limits() -> None:
    with pytest.raises(IntSetError):
        r_exact(0)
    with pytest.raises(LimitExceededError):
        r_exact(200)


def test_lift() -> None:
    k = IntSet.of([1, 2, 4], 4)
    assert lift(k, Parity.EVEN, 8).members == (2, 4, 8)
    assert lift(k, Parity.ODD, 7).members == (1, 3, 7)
    assert lift_parity(k, 8) == Parity.EVEN
    assert lift_parity(k, 7) == Parity.ODD
    with pytest.raises(IntSetError):
        lift(k, Parity.EVEN, 7)


@pytest.mark.parametrize(
    "n,labels", [(7, (2, 4, 5, 6)), (8, (1, 3, 5, 6, 7)), (2, (1,))]
)
def test_path_equalizer(n: int, labels: tuple) -> None:
    assert path_equalizer(n).labels() == labels


@pytest.mark.parametrize("n", range(2, 15))
def test_path_equalizer_is_minimum(n: int) -> None:
    s = path_equalizer(n)
    assert len(s) == n - r_exact(ceil(n / 2)).r_value
    if n <= 10:
        assert len(s) == eqdim_exact(path_graph(n)).value


def test_diagonal_domination() -> None:
    assert not is_diagonal_dominating(IntSet.of([1], 3), 3)
    assert is_diagonal_dominating(IntSet.of([2], 3), 3)
    assert len(diag_exact(4)) == 2
    with pytest.raises(VertexSetError):
        is_diagonal_dominating(IntSet.of([2, 4], 4), 3)


def test_queens_match_paths() -> None:
    table = queens_table(8)
    assert [row.n for row in table.rows] == list(range(2, 9))
    for row in table.rows:
        assert row.diag == row.eqdim_path
        assert is_diagonal_dominating(row.witness, row.n)
    assert "diag=" in table.to_human()


def _check_path_correspondence(n: int) -> None:
    g = path_graph(n)
    for bits in range(1 << n):
        s = VertexSet(bits, n)
        rest = IntSet.of(s.complement().labels(), n)
        expected = is_3ap_free(rest) and is_even_sum(rest)
        assert is_distance_equalizer(g, s) == expected, (n, s.labels())


@pytest.mark.parametrize("n", range(1, 11))
def test_path_equalizers_are_complements_of_even_sum_progression_free_sets(
    n: int,
) -> None:
    _check_path_correspondence(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(11, 15))
def test_path_correspondence_on_longer_paths(n: int) -> None:
    _check_path_correspondence(n)


@pytest.mark.slow
def test_queens_match_paths_up_to_fourteen() -> None:
    assert all(row.diag == row.eqdim_path for row in queens_table(14).rows)
