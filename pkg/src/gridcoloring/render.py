"""Text and SVG pictures of 2D colorings."""

from __future__ import annotations

import colorsys
from dataclasses import dataclass
from typing import Literal
from xml.sax.saxutils import escape

import numpy as np

from . import io
from .grid import EMPTY, PartialColoring

__all__ = ["RenderSpec", "render", "palette", "layer"]

_GOLDEN = 0.618033988749895


@dataclass(frozen=True)
class RenderSpec:
    format: Literal["ascii", "svg", "json"] = "ascii"
    cell_size: int = 24


def palette(color: int) -> str:
    """Fixed fill for a color index: hues spaced by the golden ratio."""
    h = (color * _GOLDEN) % 1.0
    r, g, b = colorsys.hls_to_rgb(h, 0.72, 0.55)
    return f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}"


def layer(c: PartialColoring, z: int) -> PartialColoring:
    """The 2D coloring at third coordinate ``z`` (1-based) of a 3D coloring."""
    if len(c.dims) != 3:
        raise ValueError("slicing needs a 3D coloring")
    if not 1 <= z <= c.dims[2]:
        raise ValueError(f"slice {z} outside 1..{c.dims[2]}")
    return c.with_array(c.array[:, :, z - 1])


def _ascii(c: PartialColoring) -> str:
    arr = c.array
    width = max(len(str(c.k)), 1)
    rows = [
        " ".join(".".rjust(width) if v == EMPTY else str(v).rjust(width) for v in row)
        for row in arr.tolist()
    ]
    bar = "+" + "-" * (len(rows[0]) + 2) + "+"
    return "\n".join([bar, *(f"| {r} |" for r in rows), bar]) + "\n"


def _svg(c: PartialColoring, size: int) -> str:
    h, w = c.array.shape
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w * size}" height="{h * size}" '
        f'viewBox="0 0 {w * size} {h * size}">'
    ]
    font = max(6, size // 2)
    for r in range(h):
        for col in range(w):
            v = int(c.array[r, col])
            x, y = col * size, r * size
            fill = "#ffffff" if v == EMPTY else palette(v)
            label = "." if v == EMPTY else str(v)
            out.append(
                f'<rect x="{x}" y="{y}" width="{size}" height="{size}" '
                f'fill="{fill}" stroke="#333333" stroke-width="1"/>'
            )
            out.append(
                f'<text x="{x + size / 2:g}" y="{y + size / 2:g}" font-size="{font}" '
                f'text-anchor="middle" dominant-baseline="central">{escape(label)}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(c: PartialColoring, spec: RenderSpec | str = "ascii") -> str:
    """Render ``c``; rows of the picture follow the first coordinate."""
    if isinstance(spec, str):
        spec = RenderSpec(spec)  # type: ignore[arg-type]
    if spec.format == "json":
        return io.dumps(c)
    if len(c.dims) == 1:
        c = c.with_array(np.asarray(c.array).reshape(1, -1))
    if len(c.dims) != 2:
        raise ValueError(
            f"{spec.format} rendering needs a 2D coloring (got dims {list(c.dims)}); "
            "use --slice Z to draw one layer"
        )
    if spec.format == "ascii":
        return _ascii(c)
    if spec.format == "svg":
        return _svg(c, spec.cell_size)
    raise ValueError(f"unknown format {spec.format!r}")
