"""Complete colorings of paths.

``P_n`` is the path with vertices ``0..n``.  A complete proper coloring of
``P_n`` with ``q`` colors is the same thing as a walk of length ``n`` in the
complete graph ``K_q`` that uses every edge, which is why Eulerian circuits
of ``K_q`` show up here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .grid import PartialColoring, build_grid

__all__ = [
    "PathColoring",
    "EulerianCircuit",
    "eulerian_circuit",
    "extension_path_coloring",
    "reverse",
    "path_achromatic_number",
    "achromatic_path_coloring",
]


@dataclass(frozen=True)
class PathColoring:
    """Colors of the ``n + 1`` vertices of ``P_n``, in order."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if len(self.colors) < 1:
            raise ValueError("a path has at least one vertex")
        if any(not 1 <= c <= self.k for c in self.colors):
            raise ValueError(f"path colors must lie in 1..{self.k}")

    @property
    def n(self) -> int:
        """Path length (number of edges)."""
        return len(self.colors) - 1

    def __len__(self) -> int:
        return len(self.colors)

    def to_partial(self) -> PartialColoring:
        """The same coloring on the ``1 x (n + 1)`` grid."""
        g = build_grid([1, len(self.colors)])
        return PartialColoring(g, np.array([self.colors]), self.k)

    @classmethod
    def from_partial(cls, c: PartialColoring) -> PathColoring:
        if len(c.dims) != 2 or c.dims[0] != 1 or not c.is_total:
            raise ValueError("expected a total coloring on dims [1, n+1]")
        return cls(tuple(c.array[0].tolist()), c.k)


@dataclass(frozen=True)
class EulerianCircuit:
    q: int
    sequence: tuple[int, ...]

    def is_valid(self) -> bool:
        seq = self.sequence
        if len(seq) != comb(self.q, 2) + 1 or seq[0] != seq[-1]:
            return False
        seen = set()
        for a, b in zip(seq, seq[1:]):
            e = (min(a, b), max(a, b))
            if a == b or e in seen or not (1 <= a <= self.q and 1 <= b <= self.q):
                return False
            seen.add(e)
        return len(seen) == comb(self.q, 2)


def eulerian_circuit(q: int, start: int = 1) -> EulerianCircuit:
    """Eulerian circuit of ``K_q`` (vertices ``1..q``) beginning and ending at ``start``.

    Hierholzer's algorithm; at each step the lowest unused neighbor is taken,
    so the output is deterministic.
    """
    if q < 3 or q % 2 == 0:
        raise ValueError(f"K_q has an Eulerian circuit only for odd q >= 3, got q={q}")
    if not 1 <= start <= q:
        raise ValueError(f"start vertex {start} not in 1..{q}")
    unused = {v: set(range(1, q + 1)) - {v} for v in range(1, q + 1)}
    stack = [start]
    circuit: list[int] = []
    while stack:
        v = stack[-1]
        if unused[v]:
            u = min(unused[v])
            unused[v].discard(u)
            unused[u].discard(v)
            stack.append(u)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    return EulerianCircuit(q, tuple(circuit))


def extension_path_coloring(k: int) -> PathColoring:
    """Coloring of ``P_M`` that puts color ``k + 1`` next to every color of ``1..k``.

    Color ``k + 1`` sits on every third vertex; the others count up
    ``1, 2, 3, 4, ...`` in between.  ``M = 3k/2`` for even ``k`` and
    ``(3k - 1)/2`` for odd ``k``.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    length = 3 * k // 2 if k % 2 == 0 else (3 * k - 1) // 2
    colors = [k + 1 if i % 3 == 0 else 2 * (i // 3) + i % 3 for i in range(length + 1)]
    return PathColoring(tuple(colors), k + 1)


def reverse(p: PathColoring) -> PathColoring:
    return PathColoring(p.colors[::-1], p.k)


def _path_bounds_ok(q: int, n: int) -> bool:
    return comb(q, 2) <= n and q * (-(-(q - 1) // 2)) <= n + 1


def path_achromatic_number(n: int) -> int:
    """Maximal ``q`` with ``C(q, 2) <= n`` and ``q * ceil((q - 1) / 2) <= n + 1``."""
    if n < 2:
        raise ValueError("path length n must be >= 2")
    q = 1
    while _path_bounds_ok(q + 1, n):
        q += 1
    return q


def _proper_tail(colors: list[int], until: int, q: int) -> None:
    # any proper continuation works once every pair is present
    while len(colors) < until:
        colors.append(colors[-1] % q + 1)


def achromatic_path_coloring(n: int) -> PathColoring:
    """A complete proper coloring of ``P_n`` with ``path_achromatic_number(n)`` colors.

    Odd ``q``: walk an Eulerian circuit of ``K_q``, then keep stepping the
    color by one.  Even ``q``: walk an Eulerian circuit of ``K_{q-1}`` that
    starts and ends at ``q - 1``, continue with the reversed extension path
    (which starts at ``q - 1`` and meets the new color ``q`` against all the
    others), then step the color by one.
    """
    q = path_achromatic_number(n)
    if q == 2:
        colors = [1 + i % 2 for i in range(n + 1)]
        return PathColoring(tuple(colors), 2)
    if q % 2 == 1:
        colors = list(eulerian_circuit(q, start=1).sequence)
    else:
        head = list(eulerian_circuit(q - 1, start=q - 1).sequence) if q - 1 >= 3 else [q - 1]
        gadget = reverse(extension_path_coloring(q - 1)).colors
        if gadget[0] != head[-1]:
            raise AssertionError("splice vertex colors disagree")
        colors = head + list(gadget[1:])
    if len(colors) > n + 1:
        raise AssertionError(f"construction needs {len(colors)} vertices, P_{n} has {n + 1}")
    _proper_tail(colors, n + 1, q)
    return PathColoring(tuple(colors), q)

