"""Rectangular building blocks with explicit complete colorings.

All three blocks live on grids ``[width, height]`` where a cell ``(i, j)``
has column ``i`` and row ``j``; parity of a cell means parity of ``i + j``
("even" cells carry the arithmetic progression, "odd" cells are derived
from their left neighbor).

* Roichman rectangle ``R_m``: ``[16(m-2)+2, m]``, ``8(m-2)`` colors, proper.
* Modified Roichman rectangle: ``[16(m-1)+1, m]``, ``8m-7`` colors, not proper.
* 2-ribbon: ``[2, k+3]``, meets ``k+1, k+2, k+3`` against ``1..k`` and each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import EMPTY, PairSet, PartialColoring, build_grid

__all__ = [
    "RoichmanRectangle",
    "ModifiedRoichmanRectangle",
    "TwoRibbon",
    "roichman_coloring",
    "modified_roichman_coloring",
    "two_ribbon_coloring",
    "two_ribbon_target",
    "fill_proper",
]


def _roichman_raw(m: int) -> np.ndarray:
    """Roichman's coloring with colors ``0..8(m-2)-1``; empty cells are ``EMPTY``."""
    height = 16 * (m - 2) + 2
    psi = 8 * (m - 2)
    i = np.arange(1, height + 1)[:, None]
    j = np.arange(1, m + 1)[None, :]
    even = (i + j) % 2 == 0
    # (i + 3j) is even whenever i + j is, so this is an integer on both
    # the (even, even) and (odd, odd) cells
    even_color = ((i + 3 * j) // 2) % psi
    out = np.where(even, even_color, EMPTY)
    # odd cell: left neighbor's color shifted by 2 - 4(j - 1)
    left = np.roll(even_color, 1, axis=0)
    odd_color = (left - 4 * (j - 1) + 2) % psi
    fill = ~even & (i >= 2) & (j >= 2) & (j <= m - 1)
    return np.where(fill, odd_color, out).astype(np.int64)


def fill_proper(c: PartialColoring) -> PartialColoring:
    """Give every empty cell the smallest color missing from its neighbors.

    Cells are visited in row-major order; later fills see earlier ones, so
    the result is proper as long as ``c`` was proper and ``k`` exceeds the
    maximum degree.
    """
    arr = c.array.copy()
    flat = arr.ravel()
    nbrs = c.graph.neighbors
    for v in np.nonzero(flat == EMPTY)[0].tolist():
        used = {int(flat[u]) for u in nbrs[v]}
        color = next(x for x in range(1, c.k + 2) if x not in used)
        if color > c.k:
            raise ValueError(f"no free color for cell {c.graph.cell_of(v)} with k={c.k}")
        flat[v] = color
    return PartialColoring(c.graph, arr, c.k)


@dataclass(frozen=True)
class RoichmanRectangle:
    m: int
    coloring: PartialColoring

    @property
    def height(self) -> int:
        return 16 * (self.m - 2) + 2

    @property
    def psi_hat(self) -> int:
        return 8 * (self.m - 2)


def roichman_coloring(m: int, fill: bool = False) -> RoichmanRectangle:
    """Roichman's ``8(m-2)``-complete proper coloring of the ``[16(m-2)+2, m]`` grid.

    Without ``fill`` the odd cells of rows ``1`` and ``m`` and of column ``1``
    stay empty; with it they are colored by :func:`fill_proper`.
    """
    if m < 4:
        raise ValueError("Roichman rectangles need m >= 4")
    raw = _roichman_raw(m)
    arr = np.where(raw == EMPTY, EMPTY, raw + 1)
    c = PartialColoring(build_grid(arr.shape), arr, 8 * (m - 2))
    if fill:
        c = fill_proper(c)
    return RoichmanRectangle(m, c)


@dataclass(frozen=True)
class ModifiedRoichmanRectangle:
    m: int
    coloring: PartialColoring

    @property
    def height(self) -> int:
        return 16 * (self.m - 1) + 1

    @property
    def psi_bar(self) -> int:
        return 8 * self.m - 7


def modified_roichman_coloring(m: int) -> ModifiedRoichmanRectangle:
    """An ``(8m-7)``-complete coloring of the ``[16(m-1)+1, m]`` grid.

    Take Roichman's coloring of ``R_{m+1}``, drop its first column and first
    row, and color the empty odd cells of the last row: a new color
    ``8(m-1)+1`` when the left neighbor's color is even, otherwise a copy of
    the left neighbor.  The result is total but not proper.
    """
    if m < 3:
        raise ValueError("modified Roichman rectangles need m >= 3")
    psi = 8 * (m - 1)
    big = _roichman_raw(m + 1)
    height = 16 * (m - 1) + 1
    last = m  # 0-based index of row m+1 in the big rectangle
    i = np.arange(1, height + 2)
    odd_last = (i + (m + 1)) % 2 == 1
    left = np.roll(big[:, last], 1)
    new = np.where(left % 2 == 0, psi, left)
    col = big[:, last].copy()
    sel = odd_last & (i >= 2)
    col[sel] = new[sel]
    big[:, last] = col
    arr = big[1:, 1:] + 1
    assert (arr >= 1).all()
    return ModifiedRoichmanRectangle(m, PartialColoring(build_grid(arr.shape), arr, psi + 1))


@dataclass(frozen=True)
class TwoRibbon:
    k: int
    coloring: PartialColoring

    def target_pairs(self) -> PairSet:
        return two_ribbon_target(self.k)


def two_ribbon_target(k: int) -> PairSet:
    """``[k] x {k+1, k+2, k+3}`` plus the three pairs among the new colors."""
    fresh = (k + 1, k + 2, k + 3)
    return PairSet.between(k + 3, range(1, k + 1), fresh) | PairSet(
        k + 3, [(k + 1, k + 2), (k + 1, k + 3), (k + 2, k + 3)]
    )


def _mod1(x: int, r: int) -> int:
    """``x mod r`` taking values in ``1..r``."""
    return (x - 1) % r + 1


def two_ribbon_coloring(k: int) -> TwoRibbon:
    """Total coloring of ``[2, k+3]`` realizing :func:`two_ribbon_target`.

    Even cells in columns ``1..k+1`` run through ``1..k`` (wrapping to 1);
    every odd cell gets ``k + (j mod 3)``, so each even cell in columns
    ``2..k+1`` sees all three new colors.  The even cells of the last two
    columns carry new colors arranged to meet each other.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    length = k + 3
    arr = np.zeros((2, length), dtype=np.int64)
    for i in (1, 2):
        for j in range(1, length + 1):
            if (i + j) % 2 == 1:
                color = k + _mod1(j, 3)
            elif j <= k + 1:
                color = _mod1(j, k)
            elif j == k + 2:
                color = k + _mod1(k, 3)
            else:
                color = k + _mod1(k + 1, 3)
            arr[i - 1, j - 1] = color
    return TwoRibbon(k, PartialColoring(build_grid(arr.shape), arr, k + 3))
