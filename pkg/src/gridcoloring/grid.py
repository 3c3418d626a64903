"""Grid graphs, partial colorings, color-pair sets and the completeness verifier.

Cells are addressed by 1-indexed coordinate tuples ``(i, j, ...)`` with
``1 <= i <= dims[0]`` and so on.  Internally a coloring is a numpy integer
array of shape ``dims`` (index ``[i - 1, j - 1]``) holding colors ``1..k``
and :data:`EMPTY` for unassigned cells.  Flattening is C order, so the last
coordinate varies fastest.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "EMPTY",
    "GridGraph",
    "PartialColoring",
    "PairSet",
    "VerificationReport",
    "build_grid",
    "realized_pairs",
    "verify",
]

#: Marker for a cell without a color.  Never a valid color.
EMPTY = -1

Cell = tuple


def _check_dims(dims: Sequence[int]) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if not dims:
        raise ValueError("a grid needs at least one dimension")
    if any(d < 1 for d in dims):
        raise ValueError(f"grid side lengths must be >= 1, got {list(dims)}")
    return dims


class GridGraph:
    """The rectangular grid with side lengths ``dims``.

    Two cells are adjacent iff their coordinates differ by exactly one in a
    single axis.  Edges are enumerated axis by axis, then in C order of the
    lower endpoint, and stored as pairs of flat (row-major) vertex indices.
    """

    def __init__(self, dims: Sequence[int]):
        self.dims = _check_dims(dims)

    def __repr__(self) -> str:
        return f"GridGraph({list(self.dims)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GridGraph) and self.dims == other.dims

    def __hash__(self) -> int:
        return hash(self.dims)

    @property
    def ndim(self) -> int:
        return len(self.dims)

    @property
    def num_vertices(self) -> int:
        return int(np.prod(self.dims))

    @cached_property
    def edges(self) -> np.ndarray:
        """``(|E|, 2)`` array of flat vertex indices, lower index first."""
        idx = np.arange(self.num_vertices).reshape(self.dims)
        chunks = []
        for axis, size in enumerate(self.dims):
            if size < 2:
                continue
            lo = np.take(idx, range(size - 1), axis=axis).ravel()
            hi = np.take(idx, range(1, size), axis=axis).ravel()
            chunks.append(np.stack([lo, hi], axis=1))
        if not chunks:
            return np.zeros((0, 2), dtype=np.int64)
        out = np.concatenate(chunks).astype(np.int64)
        out.setflags(write=False)
        return out

    @property
    def num_edges(self) -> int:
        v = self.num_vertices
        return sum(v // d * (d - 1) for d in self.dims)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Adjacency lists over flat indices, each sorted ascending."""
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges.tolist():
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @property
    def max_degree(self) -> int:
        # an interior coordinate has two neighbors along its axis, an end one
        return sum(min(2, d - 1) for d in self.dims)

    def cell_of(self, flat: int) -> Cell:
        """1-indexed coordinates of a flat vertex index."""
        return tuple(int(x) + 1 for x in np.unravel_index(flat, self.dims))

    def flat_of(self, cell: Sequence[int]) -> int:
        if len(cell) != self.ndim or any(not 1 <= c <= d for c, d in zip(cell, self.dims)):
            raise IndexError(f"cell {tuple(cell)} outside grid {list(self.dims)}")
        return int(np.ravel_multi_index(tuple(c - 1 for c in cell), self.dims))

    def cells(self) -> Iterator[Cell]:
        """All cells in row-major order."""
        return itertools.product(*(range(1, d + 1) for d in self.dims))

    def adjacent(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return sum(abs(x - y) for x, y in zip(a, b)) == 1


def build_grid(dims: Sequence[int]) -> GridGraph:
    """Grid graph with the given side lengths."""
    return GridGraph(dims)


class PairSet:
    """A set of unordered pairs ``{i, j}`` with ``1 <= i < j <= k``.

    Backed by an upper-triangular boolean matrix indexed by color, so
    membership is O(1).  Instances are immutable.
    """

    __slots__ = ("k", "_mat")

    def __init__(self, k: int, pairs: Iterable[tuple[int, int]] = ()):
        if k < 0:
            raise ValueError("k must be >= 0")
        self.k = int(k)
        mat = np.zeros((self.k + 1, self.k + 1), dtype=bool)
        for a, b in pairs:
            a, b = int(a), int(b)
            if a == b:
                raise ValueError(f"diagonal pair {{{a}, {a}}} is not allowed")
            if not (1 <= a <= self.k and 1 <= b <= self.k):
                raise ValueError(f"pair {{{a}, {b}}} outside colors 1..{self.k}")
            if a > b:
                a, b = b, a
            mat[a, b] = True
        mat.setflags(write=False)
        self._mat = mat

    @classmethod
    def _from_matrix(cls, k: int, mat: np.ndarray) -> PairSet:
        obj = cls.__new__(cls)
        obj.k = int(k)
        mat = np.triu(mat, 1)
        mat[0, :] = False
        mat.setflags(write=False)
        obj._mat = mat
        return obj

    @classmethod
    def all_pairs(cls, k: int) -> PairSet:
        return cls._from_matrix(k, np.ones((k + 1, k + 1), dtype=bool))

    @classmethod
    def between(cls, k: int, left: Iterable[int], right: Iterable[int]) -> PairSet:
        """All pairs ``{a, b}`` with ``a`` in ``left``, ``b`` in ``right``, ``a != b``."""
        right = list(right)
        return cls(k, ((a, b) for a in left for b in right if a != b))

    @property
    def matrix(self) -> np.ndarray:
        return self._mat

    def __contains__(self, pair: object) -> bool:
        a, b = pair  # type: ignore[misc]
        if a == b:
            return False
        if a > b:
            a, b = b, a
        return 1 <= a and b <= self.k and bool(self._mat[a, b])

    def __len__(self) -> int:
        return int(self._mat.sum())

    def __iter__(self) -> Iterator[tuple[int, int]]:
        for a, b in zip(*np.nonzero(self._mat)):
            yield int(a), int(b)

    def __bool__(self) -> bool:
        return bool(self._mat.any())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PairSet):
            return NotImplemented
        return set(self) == set(other)

    def __hash__(self) -> int:
        return hash(frozenset(self))

    def __repr__(self) -> str:
        return f"PairSet(k={self.k}, {sorted(self)})"

    def _aligned(self, other: PairSet) -> tuple[int, np.ndarray, np.ndarray]:
        k = max(self.k, other.k)
        a = np.zeros((k + 1, k + 1), dtype=bool)
        b = np.zeros((k + 1, k + 1), dtype=bool)
        a[: self.k + 1, : self.k + 1] = self._mat
        b[: other.k + 1, : other.k + 1] = other._mat
        return k, a, b

    def __or__(self, other: PairSet) -> PairSet:
        k, a, b = self._aligned(other)
        return PairSet._from_matrix(k, a | b)

    def __and__(self, other: PairSet) -> PairSet:
        k, a, b = self._aligned(other)
        return PairSet._from_matrix(self.k, (a & b)[: self.k + 1, : self.k + 1])

    def __sub__(self, other: PairSet) -> PairSet:
        k, a, b = self._aligned(other)
        return PairSet._from_matrix(self.k, (a & ~b)[: self.k + 1, : self.k + 1])

    def issubset(self, other: PairSet) -> bool:
        k, a, b = self._aligned(other)
        return not (a & ~b).any()

    def issuperset(self, other: PairSet) -> bool:
        return other.issubset(self)

    __le__ = issubset
    __ge__ = issuperset

    def restricted(self, k: int) -> PairSet:
        """Pairs whose colors both lie in ``1..k``."""
        mat = np.zeros((k + 1, k + 1), dtype=bool)
        s = min(k, self.k) + 1
        mat[:s, :s] = self._mat[:s, :s]
        return PairSet._from_matrix(k, mat)


@dataclass(frozen=True, eq=False)
class PartialColoring:
    """Assignment of colors ``1..k`` to some cells of a grid.

    ``array`` has shape ``graph.dims``; unassigned cells hold :data:`EMPTY`.
    The array is copied and frozen on construction.
    """

    graph: GridGraph
    array: np.ndarray
    k: int

    def __post_init__(self) -> None:
        arr = np.array(self.array, dtype=np.int64, copy=True)
        if arr.shape != self.graph.dims:
            raise ValueError(f"array shape {arr.shape} does not match dims {list(self.graph.dims)}")
        bad = (arr != EMPTY) & ((arr < 1) | (arr > self.k))
        if bad.any():
            where = tuple(int(x) + 1 for x in np.argwhere(bad)[0])
            raise ValueError(f"cell {where} has color {arr[bad][0]} outside 1..{self.k}")
        arr.setflags(write=False)
        object.__setattr__(self, "array", arr)

    @classmethod
    def empty(cls, dims: Sequence[int], k: int) -> PartialColoring:
        g = build_grid(dims)
        return cls(g, np.full(g.dims, EMPTY, dtype=np.int64), k)

    @classmethod
    def from_array(cls, array, k: int | None = None) -> PartialColoring:
        """Wrap a nested list / array; ``None`` entries become empty cells."""
        arr = np.array(
            [[EMPTY if x is None else x for x in row] for row in array]
            if _has_none(array)
            else array
        )
        arr = np.asarray(arr, dtype=np.int64)
        if k is None:
            k = int(arr.max(initial=0))
        return cls(build_grid(arr.shape), arr, int(k))

    @classmethod
    def from_flat(cls, dims: Sequence[int], cells: Sequence[int | None], k: int) -> PartialColoring:
        """Build from a row-major list where ``None`` marks an empty cell."""
        g = build_grid(dims)
        if len(cells) != g.num_vertices:
            raise ValueError(f"expected {g.num_vertices} cells, got {len(cells)}")
        arr = np.array([EMPTY if x is None else int(x) for x in cells], dtype=np.int64)
        return cls(g, arr.reshape(g.dims), k)

    @property
    def dims(self) -> tuple[int, ...]:
        return self.graph.dims

    def __getitem__(self, cell: Sequence[int]) -> int | None:
        v = int(self.array[tuple(c - 1 for c in cell)])
        return None if v == EMPTY else v

    get = __getitem__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialColoring):
            return NotImplemented
        return (
            self.dims == other.dims
            and self.k == other.k
            and np.array_equal(self.array, other.array)
        )

    def __repr__(self) -> str:
        return f"PartialColoring(dims={list(self.dims)}, k={self.k}, assigned={self.num_assigned})"

    @property
    def num_assigned(self) -> int:
        return int((self.array != EMPTY).sum())

    @property
    def is_total(self) -> bool:
        return bool((self.array != EMPTY).all())

    def to_flat(self) -> list[int | None]:
        return [None if v == EMPTY else int(v) for v in self.array.ravel().tolist()]

    def colors_used(self) -> set[int]:
        return set(np.unique(self.array[self.array != EMPTY]).tolist())

    def with_array(self, array: np.ndarray, k: int | None = None) -> PartialColoring:
        return PartialColoring(build_grid(np.shape(array)), array, self.k if k is None else k)

    def with_k(self, k: int) -> PartialColoring:
        return PartialColoring(self.graph, self.array, k)


def _has_none(array) -> bool:
    if isinstance(array, np.ndarray):
        return array.dtype == object and any(x is None for x in array.ravel())
    try:
        return any(x is None for row in array for x in row)
    except TypeError:
        return False


def _edge_colors(c: PartialColoring) -> tuple[np.ndarray, np.ndarray]:
    flat = c.array.ravel()
    e = c.graph.edges
    return flat[e[:, 0]], flat[e[:, 1]]


def realized_pairs(c: PartialColoring) -> PairSet:
    """Color pairs carried by at least one edge with two distinct assigned colors."""
    a, b = _edge_colors(c)
    keep = (a != EMPTY) & (b != EMPTY) & (a != b)
    lo = np.minimum(a[keep], b[keep])
    hi = np.maximum(a[keep], b[keep])
    mat = np.zeros((c.k + 1, c.k + 1), dtype=bool)
    mat[lo, hi] = True
    return PairSet._from_matrix(c.k, mat)


@dataclass(frozen=True)
class VerificationReport:
    k: int
    is_complete: bool
    is_proper: bool
    missing_pairs: PairSet
    realized: PairSet
    improper_edges: list[tuple[Cell, Cell]] = field(default_factory=list)
    #: cells whose color lies outside ``1..k``; these make the report fail.
    out_of_range: list[Cell] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.is_complete and not self.out_of_range

    def summary(self) -> str:
        lines = [
            f"k = {self.k}",
            f"complete: {self.is_complete} ({len(self.realized)} pairs realized, "
            f"{len(self.missing_pairs)} missing)",
            f"proper: {self.is_proper} ({len(self.improper_edges)} monochromatic edges)",
        ]
        if self.out_of_range:
            lines.append(f"colors outside 1..{self.k}: {len(self.out_of_range)} cells")
        if self.missing_pairs:
            shown = sorted(self.missing_pairs)[:20]
            more = " ..." if len(self.missing_pairs) > 20 else ""
            lines.append("missing: " + " ".join(f"{{{a},{b}}}" for a, b in shown) + more)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "is_complete": self.is_complete,
            "is_proper": self.is_proper,
            "realized": len(self.realized),
            "missing_pairs": [list(p) for p in sorted(self.missing_pairs)],
            "improper_edges": [[list(u), list(v)] for u, v in self.improper_edges],
            "out_of_range": [list(x) for x in self.out_of_range],
        }


def verify(
    c: PartialColoring,
    k: int | None = None,
    remainder: PairSet | Iterable[tuple[int, int]] | None = None,
) -> VerificationReport:
    """Check ``c`` for ``k``-completeness (optionally excusing ``remainder``) and properness.

    Completeness requires every pair of ``1..k`` outside ``remainder`` to be
    realized.  Properness looks only at edges whose endpoints are both
    assigned.  Colors outside ``1..k`` are listed separately and do not
    contribute realized pairs.
    """
    k = c.k if k is None else int(k)
    if remainder is None:
        remainder = PairSet(k)
    elif not isinstance(remainder, PairSet):
        remainder = PairSet(k, remainder)
    elif remainder.k != k:
        remainder = remainder.restricted(k)

    flat = c.array.ravel()
    oor = np.nonzero((flat != EMPTY) & ((flat < 1) | (flat > k)))[0]
    out_of_range = [c.graph.cell_of(int(v)) for v in oor]

    a, b = _edge_colors(c)
    assigned = (a != EMPTY) & (b != EMPTY)
    bad_idx = np.nonzero(assigned & (a == b))[0]
    e = c.graph.edges
    improper = [(c.graph.cell_of(int(e[i, 0])), c.graph.cell_of(int(e[i, 1]))) for i in bad_idx]

    in_range = assigned & (a >= 1) & (a <= k) & (b >= 1) & (b <= k) & (a != b)
    mat = np.zeros((k + 1, k + 1), dtype=bool)
    mat[np.minimum(a[in_range], b[in_range]), np.maximum(a[in_range], b[in_range])] = True
    realized = PairSet._from_matrix(k, mat)
    missing = PairSet.all_pairs(k) - realized - remainder
    return VerificationReport(
        k=k,
        is_complete=not missing,
        is_proper=not improper,
        missing_pairs=missing,
        realized=realized,
        improper_edges=improper,
        out_of_range=out_of_range,
    )
