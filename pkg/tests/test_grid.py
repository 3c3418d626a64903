import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_edges, brute_pairs, random_partial
from gridcoloring.grid import (
    EMPTY,
    PairSet,
    PartialColoring,
    build_grid,
    realized_pairs,
    verify,
)


def test_smallest_square():
    g = build_grid([2, 2])
    assert g.num_vertices == 4
    assert g.num_edges == 4


def test_square_edge_count_n8():
    assert build_grid([8, 8]).num_edges == 112


def test_cube_counts_against_brute_force():
    g = build_grid([3, 3, 3])
    assert g.num_vertices == 27
    assert g.num_edges == 3 * 9 * 2 == len(brute_edges([3, 3, 3])) == 54


@pytest.mark.parametrize("dims", [[1], [5], [1, 6], [3, 4], [4, 4], [2, 3, 4], [2, 2, 2, 2]])
def test_edges_match_brute_force(dims):
    g = build_grid(dims)
    got = {(g.cell_of(u), g.cell_of(v)) for u, v in g.edges.tolist()}
    assert got == set(brute_edges(dims))


@pytest.mark.parametrize("m,n", [(1, 1), (2, 5), (7, 3), (10, 10)])
def test_rectangle_edge_formula(m, n):
    assert build_grid([m, n]).num_edges == m * (n - 1) + n * (m - 1)


@pytest.mark.parametrize("d,n", [(1, 5), (2, 6), (3, 4), (4, 3)])
def test_cube_edge_formula(d, n):
    assert build_grid([n] * d).num_edges == d * n ** (d - 1) * (n - 1)


def test_edge_enumeration_is_deterministic():
    assert np.array_equal(build_grid([4, 5]).edges, build_grid([4, 5]).edges)


@pytest.mark.parametrize("dims", [[], [0], [3, 0], [2, -1]])
def test_bad_dims_rejected(dims):
    with pytest.raises(ValueError):
        build_grid(dims)


def test_cell_indexing_is_one_based_row_major():
    g = build_grid([2, 3])
    assert list(g.cells())[:4] == [(1, 1), (1, 2), (1, 3), (2, 1)]
    assert g.flat_of((2, 1)) == 3
    assert g.cell_of(5) == (2, 3)
    with pytest.raises(IndexError):
        g.flat_of((3, 1))


def test_realized_pairs_examples():
    c = PartialColoring.from_flat([2, 2], [1, 2, 3, 2], 3)
    assert set(realized_pairs(c)) == {(1, 2), (1, 3), (2, 3)}
    mono = PartialColoring.from_flat([2, 2], [1, 1, 1, 1], 1)
    assert len(realized_pairs(mono)) == 0
    c = PartialColoring.from_flat([2, 2], [1, 2, 2, 3], 3)
    assert set(realized_pairs(c)) == {(1, 2), (2, 3)}


def test_empty_cells_contribute_nothing():
    c = PartialColoring.from_flat([1, 3], [1, None, 2], 2)
    assert len(realized_pairs(c)) == 0
    assert c[(1, 2)] is None and not c.is_total


def test_verify_examples():
    c = PartialColoring.from_flat([2, 2], [1, 2, 3, 2], 3)
    rep = verify(c, 3)
    assert rep.is_complete
    # cells (1,2) and (2,2) are both 2
    assert rep.improper_edges == [((1, 2), (2, 2))]
    c = PartialColoring.from_flat([2, 2], [1, 2, 2, 3], 3)
    assert not verify(c, 3).is_complete
    assert set(verify(c, 3).missing_pairs) == {(1, 3)}
    assert verify(c, 3, remainder=[(1, 3)]).is_complete


def test_verify_flags_monochromatic_edges():
    c = PartialColoring.from_flat([1, 3], [5, 5, 1], 5)
    rep = verify(c)
    assert not rep.is_proper
    assert rep.improper_edges == [((1, 1), (1, 2))]


def test_verify_reports_out_of_range_colors():
    c = PartialColoring.from_flat([2, 2], [1, 2, 3, 4], 4)
    rep = verify(c, 3)
    assert rep.out_of_range == [(2, 2)]
    assert not rep.ok


def test_coloring_rejects_bad_colors():
    with pytest.raises(ValueError):
        PartialColoring.from_flat([1, 2], [0, 1], 2)
    with pytest.raises(ValueError):
        PartialColoring.from_flat([1, 2], [1, 3], 2)


def test_coloring_is_immutable():
    c = PartialColoring.from_flat([1, 2], [1, 2], 2)
    with pytest.raises(ValueError):
        c.array[0, 0] = 2


def test_pairset_basics():
    s = PairSet(4, [(2, 1), (3, 4)])
    assert (1, 2) in s and (2, 1) in s and (1, 3) not in s
    assert len(s) == 2
    assert list(s) == [(1, 2), (3, 4)]
    assert len(PairSet.all_pairs(5)) == math.comb(5, 2)
    assert (PairSet.all_pairs(4) - s) | s == PairSet.all_pairs(4)
    assert s <= PairSet.all_pairs(4)
    with pytest.raises(ValueError):
        PairSet(3, [(2, 2)])
    with pytest.raises(ValueError):
        PairSet(3, [(1, 4)])


def test_pairset_between():
    s = PairSet.between(5, range(1, 4), [4, 5])
    assert len(s) == 6 and (3, 5) in s and (4, 5) not in s


colorings = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 5).flatmap(
        lambda n: st.integers(1, 6).flatmap(
            lambda k: st.lists(
                st.one_of(st.none(), st.integers(1, k)), min_size=m * n, max_size=m * n
            ).map(lambda cells: PartialColoring.from_flat([m, n], cells, k))
        )
    )
)


@settings(max_examples=200, deadline=None)
@given(colorings)
def test_realized_pairs_matches_brute_scan(c):
    assert set(realized_pairs(c)) == brute_pairs(c.array)


@settings(max_examples=200, deadline=None)
@given(colorings)
def test_complete_means_all_pairs(c):
    rep = verify(c)
    assert rep.is_complete == (len(rep.realized) == math.comb(c.k, 2))
    assert rep.is_complete == (not rep.missing_pairs)
    assert rep.is_proper == (not rep.improper_edges)


@settings(max_examples=200, deadline=None)
@given(colorings, st.data())
def test_extending_never_loses_pairs(c, data):
    arr = c.array.copy()
    empties = np.argwhere(arr == EMPTY)
    for idx in empties:
        if data.draw(st.booleans()):
            arr[tuple(idx)] = data.draw(st.integers(1, c.k))
    assert realized_pairs(c) <= realized_pairs(c.with_array(arr))


@settings(max_examples=200, deadline=None)
@given(colorings)
def test_symmetries_preserve_pairs(c):
    base = realized_pairs(c)
    a = c.array
    for moved in (a.T, a[::-1], a[:, ::-1], np.rot90(a), np.rot90(a, 2), np.rot90(a, 3)):
        assert realized_pairs(c.with_array(np.ascontiguousarray(moved))) == base


def test_verify_agrees_with_brute_force_3d():
    rng = np.random.default_rng(7)
    for _ in range(50):
        c = random_partial(rng, (3, 2, 4), 5)
        assert set(realized_pairs(c)) == brute_pairs(c.array)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=1, max_size=3))
def test_closed_form_counts_match_adjacency(dims):
    g = build_grid(dims)
    assert g.num_edges == len(g.edges) == len(brute_edges(dims))
    assert g.max_degree == max(len(a) for a in g.neighbors)
