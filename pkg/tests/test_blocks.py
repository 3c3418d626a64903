import numpy as np
import pytest

from conftest import brute_complete
from gridcoloring.blocks import (
    fill_proper,
    modified_roichman_coloring,
    roichman_coloring,
    two_ribbon_coloring,
    two_ribbon_target,
)
from gridcoloring.grid import EMPTY, realized_pairs, verify


def test_roichman_m4():
    r = roichman_coloring(4)
    assert r.coloring.dims == (34, 4)
    assert r.psi_hat == 16 and r.coloring.k == 16
    assert verify(r.coloring, 16).is_complete


def test_roichman_empty_cells():
    m = 6
    arr = roichman_coloring(m).coloring.array
    i = np.arange(1, arr.shape[0] + 1)[:, None]
    j = np.arange(1, m + 1)[None, :]
    odd = (i + j) % 2 == 1
    expected_empty = odd & ((j == 1) | (j == m) | (i == 1))
    assert np.array_equal(arr == EMPTY, expected_empty)


def test_roichman_neighbor_offsets():
    # an interior odd cell of color a sees a+4(j-1)-3 .. a+4(j-1) (0-based colors)
    m = 4
    r = roichman_coloring(m).coloring
    psi = 8 * (m - 2)
    arr = r.array - 1
    N = arr.shape[0]
    checked = 0
    for i in range(2, N):
        for j in range(2, m):
            if (i + j) % 2 == 0:
                continue
            a = arr[i - 1, j - 1]
            nb = sorted(int(arr[x - 1, y - 1]) for x, y in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)))
            want = sorted((a + 4 * (j - 1) - t) % psi for t in range(4))
            assert nb == want
            checked += 1
    assert checked > 0


def test_roichman_column_one_values():
    # even cells of column 1 sit in odd rows 2r+1 and carry 3r+2 (0-based)
    m = 5
    arr = roichman_coloring(m).coloring.array - 1
    psi = 8 * (m - 2)
    for r_ in range((m - 1) // 2 + 1):
        row = 2 * r_ + 1
        if row <= m:
            assert arr[0, row - 1] == (3 * r_ + 2) % psi


@pytest.mark.parametrize("m", range(4, 13))
def test_roichman_complete_and_proper(m):
    r = roichman_coloring(m)
    rep = verify(r.coloring, 8 * (m - 2))
    assert rep.is_complete and rep.is_proper
    filled = roichman_coloring(m, fill=True).coloring
    assert filled.is_total
    rep = verify(filled, 8 * (m - 2))
    assert rep.is_complete and rep.is_proper
    assert brute_complete(filled.array, 8 * (m - 2))


@pytest.mark.parametrize("m", range(4, 9))
def test_roichman_rows_attain_all_colors(m):
    psi = 8 * (m - 2)
    arr = roichman_coloring(m).coloring.array
    N = arr.shape[0]
    for j in range(2, m):
        evens = {int(arr[i - 1, j - 1]) for i in range(1, N + 1) if (i + j) % 2 == 0}
        odds = {int(arr[i - 1, j - 1]) for i in range(2, N + 1) if (i + j) % 2 == 1}
        assert evens == set(range(1, psi + 1))
        assert odds == set(range(1, psi + 1))


def test_roichman_rejects_small_m():
    with pytest.raises(ValueError):
        roichman_coloring(3)


def test_modified_roichman_m3():
    r = modified_roichman_coloring(3)
    assert r.coloring.dims == (33, 3)
    assert r.psi_bar == 17 == r.coloring.k
    assert verify(r.coloring, 17).is_complete
    assert r.coloring.is_total


@pytest.mark.parametrize("m", range(3, 13))
def test_modified_roichman_complete(m):
    c = modified_roichman_coloring(m).coloring
    assert c.dims == (16 * (m - 1) + 1, m)
    assert verify(c, 8 * m - 7).is_complete
    assert brute_complete(c.array, 8 * m - 7)


def test_modified_roichman_not_proper():
    assert not verify(modified_roichman_coloring(4).coloring).is_proper


def test_column_wrap_in_larger_rectangle():
    # in R_{m+1}, column 1 and column 16m-15 hold equal even colors row by row
    m = 4
    big = roichman_coloring(m + 1).coloring.array
    nbar = 16 * (m - 1) + 1
    for row in range(1, m + 2):
        if (1 + row) % 2 == 0:
            assert big[0, row - 1] == big[nbar - 1, row - 1]


def test_modified_roichman_rejects_small_m():
    with pytest.raises(ValueError):
        modified_roichman_coloring(2)


def test_ribbon_k2():
    r = two_ribbon_coloring(2)
    assert r.coloring.dims == (2, 5) and r.coloring.k == 5 and r.coloring.is_total
    want = {(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)}
    assert set(two_ribbon_target(2)) == want
    assert want <= set(realized_pairs(r.coloring))


def test_ribbon_k8():
    r = two_ribbon_coloring(8)
    assert r.coloring.dims == (2, 11)
    target = two_ribbon_target(8)
    assert len(target) == 27
    assert target <= realized_pairs(r.coloring)


@pytest.mark.parametrize("k", range(2, 101))
def test_ribbon_sweep(k):
    r = two_ribbon_coloring(k)
    assert r.target_pairs() <= realized_pairs(r.coloring)
    arr = r.coloring.array
    evens = sorted(int(arr[i - 1, j - 1]) for i in (1, 2) for j in range(2, k + 2) if (i + j) % 2 == 0)
    assert evens == list(range(1, k + 1))


def test_ribbon_rejects_small_k():
    with pytest.raises(ValueError):
        two_ribbon_coloring(1)


def test_fill_proper_smallest_free_color():
    from gridcoloring.grid import PartialColoring

    c = PartialColoring.from_flat([1, 3], [1, None, 2], 3)
    assert fill_proper(c).to_flat() == [1, 3, 2]
