"""Counting upper bounds on the complete coloring number of a graph.

A ``k``-complete coloring needs a distinct edge for every one of the
``C(k, 2)`` color pairs, and every color class must touch ``k - 1`` other
classes, so it needs at least ``ceil((k - 1) / Delta)`` cells.  Both give
integer upper bounds on ``k``; everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb, isqrt
from typing import Sequence

from .grid import build_grid

__all__ = ["BoundReport", "edge_bound", "degree_bound", "grid_gamma_upper"]


def edge_bound(edge_count: int) -> int:
    """Largest ``k`` with ``k (k - 1) / 2 <= edge_count``."""
    if edge_count < 0:
        raise ValueError("edge_count must be >= 0")
    # k <= (1 + sqrt(1 + 8E)) / 2, then correct the integer estimate exactly
    k = (1 + isqrt(1 + 8 * edge_count)) // 2
    while comb(k + 1, 2) <= edge_count:
        k += 1
    while k > 1 and comb(k, 2) > edge_count:
        k -= 1
    return max(k, 1)


def _degree_ok(k: int, vertex_count: int, delta: int) -> bool:
    return k * (-(-(k - 1) // delta)) <= vertex_count


def degree_bound(vertex_count: int, delta: int) -> int:
    """Largest ``k`` with ``k * ceil((k - 1) / delta) <= vertex_count``.

    The left side is nondecreasing in ``k``, so a doubling search followed by
    bisection finds the boundary.
    """
    if vertex_count < 1:
        raise ValueError("vertex_count must be >= 1")
    if delta < 1:
        raise ValueError("delta must be >= 1")
    lo = 1
    hi = 2
    while _degree_ok(hi, vertex_count, delta):
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _degree_ok(mid, vertex_count, delta):
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class BoundReport:
    dims: tuple[int, ...]
    vertex_count: int
    edge_count: int
    delta: int
    edge_bound: int
    degree_bound: int
    combined: int

    def to_dict(self) -> dict:
        d = asdict(self)
        d["dims"] = list(self.dims)
        return d

    def summary(self) -> str:
        return (
            f"grid {'x'.join(map(str, self.dims))}: |V|={self.vertex_count} "
            f"|E|={self.edge_count} max degree={self.delta}\n"
            f"edge bound:   {self.edge_bound}\n"
            f"degree bound: {self.degree_bound}\n"
            f"Gamma <= {self.combined}"
        )


def grid_gamma_upper(dims: Sequence[int]) -> BoundReport:
    g = build_grid(dims)
    e = g.num_edges
    v = g.num_vertices
    delta = g.max_degree
    eb = edge_bound(e)
    # with no edges only the single-color coloring is complete
    db = degree_bound(v, delta) if delta > 0 else 1
    return BoundReport(
        dims=g.dims,
        vertex_count=v,
        edge_count=e,
        delta=delta,
        edge_bound=eb,
        degree_bound=db,
        combined=min(eb, db),
    )
