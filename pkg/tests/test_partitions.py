import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jackmoments.partitions import (
    EMPTY,
    Partition,
    diagram_cells,
    enumerate_partitions,
    partition_count,
)


def test_weight_zero_gives_empty_partition():
    assert enumerate_partitions(0) == [EMPTY]
    assert EMPTY.weight == 0 and EMPTY.length == 0
    assert Partition(()) == Partition((0, 0)) == EMPTY


def test_weight_four_order():
    got = [p.parts for p in enumerate_partitions(4)]
    assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_weight_four_max_length_two():
    assert [p.parts for p in enumerate_partitions(4, max_length=2)] == [(4,), (3, 1), (2, 2)]


def test_impossible_constraints_are_empty():
    assert enumerate_partitions(5, max_length=1, max_part=2) == []
    assert enumerate_partitions(3, max_length=0) == []


def test_rejects_increasing_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_trailing_zeros_stripped_and_read_back():
    k = Partition((3, 1, 0, 0))
    assert k.parts == (3, 1)
    assert k.part(1) == 3 and k.part(3) == 0
    assert k.padded(4) == (3, 1, 0, 0)


@pytest.mark.parametrize("n", range(31))
def test_count_matches_partition_function(n):
    assert len(enumerate_partitions(n)) == partition_count(n)


def test_partition_function_known_values():
    assert [partition_count(n) for n in (0, 1, 4, 10, 30)] == [1, 1, 5, 42, 5604]


def _cell(kappa, i, j):
    return next(c for c in diagram_cells(kappa) if (c.row, c.col) == (i, j))


def test_cells_examples():
    assert diagram_cells(EMPTY) == []
    c = _cell(Partition.of(2, 1), 1, 1)
    assert (c.arm, c.coarm, c.leg, c.coleg) == (1, 0, 1, 0)
    c = _cell(Partition.of(3), 1, 2)
    assert (c.arm, c.coarm, c.leg, c.coleg) == (1, 1, 0, 0)


partitions = st.integers(0, 14).flatmap(lambda n: st.sampled_from(enumerate_partitions(n)))


@settings(max_examples=150, deadline=None)
@given(partitions)
def test_cell_count_and_nonnegativity(kappa):
    cells = diagram_cells(kappa)
    assert len(cells) == kappa.weight
    assert all(min(c.arm, c.coarm, c.leg, c.coleg) >= 0 for c in cells)
    assert [(c.row, c.col) for c in cells] == sorted((c.row, c.col) for c in cells)


@settings(max_examples=150, deadline=None)
@given(partitions)
def test_conjugation_swaps_arms_and_legs(kappa):
    conj = {(c.col, c.row): c for c in diagram_cells(kappa.conjugate())}
    for c in diagram_cells(kappa):
        d = conj[(c.row, c.col)]
        assert (c.arm, c.coarm) == (d.leg, d.coleg)
        assert (c.leg, c.coleg) == (d.arm, d.coarm)
    assert kappa.conjugate().conjugate() == kappa


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 12), st.integers(1, 6), st.integers(1, 6))
def test_enumeration_respects_bounds_and_is_unique(n, ml, mp):
    parts = enumerate_partitions(n, max_length=ml, max_part=mp)
    assert len(set(parts)) == len(parts)
    assert all(p.weight == n and p.length <= ml and p.part(1) <= mp for p in parts)
    assert parts == sorted(parts, key=lambda p: p.parts, reverse=True)
