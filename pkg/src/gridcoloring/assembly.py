"""Moving colored cells around: copy-and-paste, transposition, embedding.

Rectangles are ``[width, height]``: the first coordinate is the column, the
second the row.  Copy-and-paste cuts a tall coloring into ``k`` horizontal
strips that share one boundary row and stands them side by side, so every
edge of the source survives inside some strip.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .grid import EMPTY, PartialColoring, build_grid
from .paths import PathColoring

__all__ = [
    "Rect",
    "PasteLayout",
    "copy_paste",
    "transpose",
    "embed_at",
    "snake_route",
    "route_embed",
    "snake_embed_path",
    "fill_empty",
    "reflect",
    "Construction",
    "theorem2_target",
    "theorem2_coloring",
    "construct_gn",
]


@dataclass(frozen=True)
class Rect:
    """Axis-aligned block of cells: 1-based ``origin`` corner and side lengths ``dims``."""

    origin: tuple[int, int]
    dims: tuple[int, int]

    def cells(self) -> Iterable[tuple[int, int]]:
        (x0, y0), (w, h) = self.origin, self.dims
        for x in range(x0, x0 + w):
            for y in range(y0, y0 + h):
                yield (x, y)

    @property
    def area(self) -> int:
        return self.dims[0] * self.dims[1]

    def to_dict(self) -> dict:
        return {"origin": list(self.origin), "dims": list(self.dims)}


@dataclass(frozen=True)
class PasteLayout:
    k: int
    source_dims: tuple[int, int]
    target_dims: tuple[int, int]
    #: where each strip landed in the target, in order
    strips: list[Rect] = field(default_factory=list)
    #: source rows (1-based, inclusive) carried by each strip
    strip_rows: list[tuple[int, int]] = field(default_factory=list)
    #: blocks of the target guaranteed to hold no color
    empty_regions: list[Rect] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "source_dims": list(self.source_dims),
            "target_dims": list(self.target_dims),
            "strips": [r.to_dict() for r in self.strips],
            "strip_rows": [list(r) for r in self.strip_rows],
            "empty_regions": [r.to_dict() for r in self.empty_regions],
        }


def _require_2d(c: PartialColoring, what: str) -> None:
    if len(c.dims) != 2:
        raise ValueError(f"{what} needs a 2D coloring, got dims {list(c.dims)}")


def copy_paste(
    src: PartialColoring, target_dims: Sequence[int], k: int
) -> tuple[PartialColoring, PasteLayout]:
    """Refold ``src`` (``[m1, n1]``) into ``[m2, n2]`` using ``k`` strips.

    Needs ``k * m1 <= m2`` and ``n1 + (k - 1) <= k * n2``.  Strip ``r`` carries
    source rows ``(r-1)(n2-1)+1 .. r(n2-1)+1`` and is placed at columns
    ``(r-1)m1+1 .. r*m1``.  Every pair realized by ``src`` is realized by
    the result.
    """
    _require_2d(src, "copy_paste")
    m1, n1 = src.dims
    m2, n2 = (int(x) for x in target_dims)
    if k < 1:
        raise ValueError("strip count k must be >= 1")
    if k * m1 > m2:
        raise ValueError(f"k*m1 <= m2 violated: {k}*{m1} > {m2}")
    if n1 + (k - 1) > k * n2:
        raise ValueError(f"n1 + (k-1) <= k*n2 violated: {n1}+{k - 1} > {k}*{n2}")

    padded_rows = k * n2 - (k - 1)
    padded = np.full((m1, padded_rows), EMPTY, dtype=np.int64)
    padded[:, :n1] = src.array
    out = np.full((m2, n2), EMPTY, dtype=np.int64)
    strips, rows, empty = [], [], []
    for r in range(k):
        start = r * (n2 - 1)
        out[r * m1 : (r + 1) * m1, :] = padded[:, start : start + n2]
        strips.append(Rect((r * m1 + 1, 1), (m1, n2)))
        rows.append((start + 1, start + n2))
        # the padding rows (past n1) that fall in this strip
        first_pad = max(n1, start)
        if first_pad < start + n2:
            y0 = first_pad - start + 1
            empty.append(Rect((r * m1 + 1, y0), (m1, n2 - y0 + 1)))
    if m2 > k * m1:
        empty.append(Rect((k * m1 + 1, 1), (m2 - k * m1, n2)))
    layout = PasteLayout(k, (m1, n1), (m2, n2), strips, rows, empty)
    return PartialColoring(build_grid((m2, n2)), out, src.k), layout


def transpose(c: PartialColoring) -> PartialColoring:
    """Swap the two coordinates: cell ``(i, j)`` moves to ``(j, i)``."""
    _require_2d(c, "transpose")
    return PartialColoring(build_grid(c.dims[::-1]), c.array.T, c.k)


def reflect(c: PartialColoring, axis: int = 0) -> PartialColoring:
    """Mirror the coloring along one axis."""
    return PartialColoring(c.graph, np.flip(c.array, axis=axis), c.k)


def embed_at(
    c: PartialColoring, host: PartialColoring, offset: Sequence[int]
) -> PartialColoring:
    """Overlay ``c`` onto ``host`` translated by ``offset`` (0 = no shift).

    Assigned cells of ``c`` may land on empty host cells or on host cells of
    the same color.  The result uses ``max(c.k, host.k)`` colors.
    """
    if len(offset) != len(host.dims) or len(c.dims) != len(host.dims):
        raise ValueError("offset, coloring and host must have the same dimension")
    if any(o < 0 or o + d > h for o, d, h in zip(offset, c.dims, host.dims)):
        raise ValueError(
            f"{list(c.dims)} at offset {list(offset)} does not fit in {list(host.dims)}"
        )
    out = host.array.copy()
    window = tuple(slice(o, o + d) for o, d in zip(offset, c.dims))
    sub = out[window]
    mine = c.array != EMPTY
    clash = mine & (sub != EMPTY) & (sub != c.array)
    if clash.any():
        where = tuple(int(x) + 1 + o for x, o in zip(np.argwhere(clash)[0], offset))
        raise ValueError(f"conflicting colors at host cell {where}")
    sub[mine] = c.array[mine]
    return PartialColoring(host.graph, out, max(c.k, host.k))


def snake_route(a: int, b: int) -> list[tuple[int, int]]:
    """Boustrophedon order of the ``[a, b]`` grid: column by column, alternating direction."""
    route = []
    for x in range(1, a + 1):
        ys = range(1, b + 1) if x % 2 == 1 else range(b, 0, -1)
        route.extend((x, y) for y in ys)
    return route


def route_embed(
    p: PathColoring | Sequence[int],
    dims: Sequence[int],
    route: Sequence[tuple[int, ...]],
    k: int | None = None,
) -> PartialColoring:
    """Lay the path's colors along ``route``; cells past the path stay empty.

    Consecutive route cells must be adjacent so that every path edge becomes
    a grid edge.
    """
    colors = p.colors if isinstance(p, PathColoring) else tuple(p)
    if k is None:
        k = p.k if isinstance(p, PathColoring) else max(colors)
    if len(colors) > len(route):
        raise ValueError(f"path has {len(colors)} vertices but the route only {len(route)} cells")
    g = build_grid(dims)
    used = route[: len(colors)]
    if len(set(used)) != len(used):
        raise ValueError("route visits a cell twice")
    for u, v in zip(used, used[1:]):
        if not g.adjacent(u, v):
            raise ValueError(f"route steps from {u} to non-adjacent {v}")
    arr = np.full(g.dims, EMPTY, dtype=np.int64)
    for cell, color in zip(used, colors):
        arr[tuple(x - 1 for x in cell)] = color
    return PartialColoring(g, arr, k)


def snake_embed_path(p: PathColoring, region_dims: Sequence[int]) -> PartialColoring:
    a, b = region_dims
    if len(p) > a * b:
        raise ValueError(f"path with {len(p)} vertices does not fit in {a}x{b}")
    return route_embed(p, (a, b), snake_route(a, b))


def fill_empty(c: PartialColoring, color: int = 1) -> PartialColoring:
    """Assign ``color`` to every empty cell; never loses a realized pair."""
    return PartialColoring(c.graph, np.where(c.array == EMPTY, color, c.array), c.k)


# --- complete colorings of the n x n grid -----------------------------------


@dataclass(frozen=True)
class Construction:
    """A complete coloring of ``G_n`` and where it came from."""

    n: int
    coloring: PartialColoring
    k: int
    #: "theorem2", "certificate" or "search"
    method: str
    upper_bound: int

    def __iter__(self):
        return iter((self.coloring, self.k))

    def provenance(self) -> dict:
        return {"method": self.method, "k_achieved": self.k, "upper_bound": self.upper_bound}


def theorem2_target(n: int) -> int:
    """Color count the strip construction reaches: ``2n-6``, ``2n-7`` or ``2n-9`` by ``n mod 4``."""
    return {0: 2 * n - 6, 1: 2 * n - 6, 2: 2 * n - 7, 3: 2 * n - 9}[n % 4]


def _ribbon_block(k0: int, m: int) -> PartialColoring:
    """2-ribbon for ``k0`` refolded into ``[16, m+1]`` and transposed to ``[m+1, 16]``."""
    from .blocks import two_ribbon_coloring

    ribbon = two_ribbon_coloring(k0).coloring
    folded, _ = copy_paste(ribbon, (16, m + 1), 8)
    return transpose(folded)


def _embed_empty_only(c: PartialColoring, host: PartialColoring, offset) -> PartialColoring:
    window = host.array[tuple(slice(o, o + d) for o, d in zip(offset, c.dims))]
    if ((c.array != EMPTY) & (window != EMPTY)).any():
        raise AssertionError("gadget would overwrite colored cells")
    return embed_at(c, host, offset)


def theorem2_coloring(n: int) -> PartialColoring:
    """Strip construction of a complete coloring of ``G_n`` (needs ``n >= 20``).

    A modified Roichman rectangle ``[m, 16m-15]`` (``m = n // 4``) is folded
    into four strips filling columns ``1..4m``.  That leaves a block of empty
    rows at the bottom of the last strip and ``n - 4m`` empty columns, which
    host the gadgets adding the last few colors:

    * ``n = 4m``: an extension path (one new color) snaked through the
      ``[m, 12]`` gap;
    * ``n = 4m+1``: a folded 2-ribbon (three new colors) in the ``[m+1, 16]``
      block formed by the gap and the last column;
    * ``n = 4m+2, 4m+3``: a folded 2-ribbon in the bottom ``[m+1, 16]`` block
      plus an extension path routed through what remains of the gap and up
      and down the free columns, finishing inside the ribbon block's empty
      corner.
    """
    from .blocks import modified_roichman_coloring
    from .paths import extension_path_coloring

    if n < 20:
        raise ValueError("the strip construction needs n >= 20")
    m = n // 4
    r = n % 4
    base = transpose(modified_roichman_coloring(m).coloring)  # [m, 16m-15]
    host, layout = copy_paste(base, (n, n), 4)
    k0 = 8 * m - 7
    if r == 0:
        path = snake_embed_path(extension_path_coloring(k0), (m, 12))
        return _embed_empty_only(path, host, (3 * m, n - 12))
    if r == 1:
        return _embed_empty_only(_ribbon_block(k0, m), host, (3 * m, n - 16))

    # n = 4m+2 or 4m+3: the ribbon takes the bottom 16 rows of columns
    # 3m+1..4m+1; its folded form leaves columns 4m-2..4m+1 of the last two
    # rows empty
    host = _embed_empty_only(_ribbon_block(k0 + 1, m), host, (3 * m, n - 16))
    gap = next(g for g in layout.empty_regions if g.origin[0] == 3 * m + 1)
    top = max(gap.origin[1], 1)
    rows = list(range(top, n - 16 + 1))
    if len(rows) % 2:
        rows = rows[1:]
    route: list[tuple[int, int]] = []
    # snake the remaining gap rows, finishing at the right end of row n-16
    for idx, y in enumerate(rows):
        xs = range(4 * m, 3 * m, -1) if (len(rows) - idx) % 2 == 0 else range(3 * m + 1, 4 * m + 1)
        route.extend((x, y) for x in xs)
    route.extend((4 * m + 1, y) for y in range(n - 16, 0, -1))
    route.extend((4 * m + 2, y) for y in range(1, n + 1))
    route.extend([(4 * m + 1, n), (4 * m + 1, n - 1)])
    path = route_embed(extension_path_coloring(k0), (n, n), route)
    return _embed_empty_only(path, host, (0, 0))


def _certificates() -> dict[int, dict]:
    import json
    from importlib import resources

    try:
        text = resources.files("gridcoloring").joinpath("data/certificates.json").read_text()
    except FileNotFoundError:
        return {}
    return {int(key): val for key, val in json.loads(text).items()}


def construct_gn(
    n: int,
    method: str = "auto",
    *,
    fill: bool = True,
    search_seconds: float = 10.0,
    seed: int = 0,
) -> Construction:
    """Best complete coloring of the ``n x n`` grid this package can produce.

    ``method``:

    * ``"theorem2"`` - the strip construction, ``n >= 20``;
    * ``"certificate"`` - a stored search result, ``n < 20``;
    * ``"search"`` - anneal downward from ``2n - 1`` with ``search_seconds``
      per target;
    * ``"auto"`` - ``theorem2`` for ``n >= 20``, else the stored certificate,
      else search.

    With ``fill`` every cell the construction leaves empty gets color 1,
    which keeps all realized pairs.
    """
    from .bounds import grid_gamma_upper
    from .grid import verify

    if n < 2:
        raise ValueError("n must be >= 2")
    upper = grid_gamma_upper([n, n]).combined
    if method == "auto":
        if n >= 20:
            method = "theorem2"
        elif n in _certificates():
            method = "certificate"
        else:
            method = "search"

    if method == "theorem2":
        c = theorem2_coloring(n)
        k = theorem2_target(n)
    elif method == "certificate":
        certs = _certificates()
        if n not in certs:
            raise ValueError(f"no stored certificate for n={n}")
        k = certs[n]["k"]
        c = PartialColoring.from_flat((n, n), certs[n]["cells"], k)
    elif method == "search":
        c, k = _search_gn(n, upper, search_seconds, seed)
    else:
        raise ValueError(f"unknown method {method!r}")

    if c.k != k:
        c = c.with_k(k)
    if fill:
        c = fill_empty(c, 1)
    if not verify(c, k).ok:
        raise AssertionError(f"{method} produced an incomplete coloring for n={n}")
    return Construction(n, c, k, method, upper)


def _search_gn(n: int, upper: int, seconds: float, seed: int) -> tuple[PartialColoring, int]:
    from .search import SearchConfig, local_search

    g = build_grid((n, n))
    for k in range(upper, 1, -1):
        out = local_search(g, SearchConfig(k=k, strategy="local", seed=seed, max_seconds=seconds))
        if out.found:
            return out.witness, k
    return PartialColoring(g, np.ones((n, n), dtype=np.int64), 1), 1
