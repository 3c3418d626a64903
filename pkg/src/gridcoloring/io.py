"""JSON interchange format for colorings.

A document looks like::

    {"dims": [2, 2], "k": 3, "cells": [1, 2, 3, 2], "remainder": [[1, 3]]}

``cells`` is row-major (last coordinate fastest) with ``null`` for empty
cells; ``remainder`` is optional.  Other top-level keys (for instance a
``provenance`` record) are carried through untouched by :func:`loads` and
ignored by the coloring itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .grid import PairSet, PartialColoring

__all__ = ["InterchangeError", "Document", "dumps", "loads", "read", "write"]


class InterchangeError(ValueError):
    """Malformed interchange document; ``location`` says where."""

    def __init__(self, message: str, location: str):
        super().__init__(f"{location}: {message}")
        self.location = location


@dataclass
class Document:
    coloring: PartialColoring
    remainder: PairSet | None = None
    extra: dict[str, Any] = field(default_factory=dict)


def to_dict(
    c: PartialColoring, remainder: PairSet | None = None, extra: dict | None = None
) -> dict:
    doc: dict[str, Any] = {"dims": list(c.dims), "k": c.k, "cells": c.to_flat()}
    if remainder is not None:
        doc["remainder"] = [list(p) for p in sorted(remainder)]
    if extra:
        for key in sorted(extra):
            doc[key] = extra[key]
    return doc


def dumps(c: PartialColoring, remainder: PairSet | None = None, extra: dict | None = None) -> str:
    """Serialize deterministically: fixed key order, one line, trailing newline."""
    return json.dumps(to_dict(c, remainder, extra), separators=(", ", ": ")) + "\n"


def _fail(msg: str, where: str) -> None:
    raise InterchangeError(msg, where)


def from_dict(doc: Any) -> Document:
    if not isinstance(doc, dict):
        _fail("top level must be an object", "$")
    for key in ("dims", "k", "cells"):
        if key not in doc:
            _fail(f"missing required key {key!r}", "$")
    dims, k, cells = doc["dims"], doc["k"], doc["cells"]
    if not isinstance(dims, list) or not dims or not all(
        isinstance(d, int) and not isinstance(d, bool) and d >= 1 for d in dims
    ):
        _fail("dims must be a nonempty list of positive integers", "$.dims")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        _fail("k must be a positive integer", "$.k")
    if not isinstance(cells, list):
        _fail("cells must be a list", "$.cells")
    total = 1
    for d in dims:
        total *= d
    if len(cells) != total:
        _fail(f"expected {total} cells for dims {dims}, got {len(cells)}", "$.cells")
    for idx, x in enumerate(cells):
        if x is not None and (not isinstance(x, int) or isinstance(x, bool) or not 1 <= x <= k):
            _fail(f"cell value {x!r} is neither null nor a color in 1..{k}", f"$.cells[{idx}]")
    remainder = None
    if "remainder" in doc:
        rem = doc["remainder"]
        if not isinstance(rem, list):
            _fail("remainder must be a list of pairs", "$.remainder")
        for idx, p in enumerate(rem):
            if (
                not isinstance(p, list)
                or len(p) != 2
                or not all(isinstance(x, int) and 1 <= x <= k for x in p)
                or p[0] == p[1]
            ):
                _fail("expected a pair of distinct colors in 1..k", f"$.remainder[{idx}]")
        remainder = PairSet(k, [tuple(p) for p in rem])
    extra = {key: val for key, val in doc.items() if key not in ("dims", "k", "cells", "remainder")}
    return Document(PartialColoring.from_flat(dims, cells, k), remainder, extra)


def loads(text: str) -> Document:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InterchangeError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return from_dict(doc)


def read(path: str | Path) -> Document:
    return loads(Path(path).read_text(encoding="utf-8"))


def write(path: str | Path, c: PartialColoring, remainder: PairSet | None = None, extra=None) -> None:
    Path(path).write_text(dumps(c, remainder, extra), encoding="utf-8")
