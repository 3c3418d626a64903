"""Command-line entry point: ``gridcoloring <subcommand> ...``.

Artifacts go to stdout (or ``--out``), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .assembly import construct_gn
from .blocks import modified_roichman_coloring, roichman_coloring, two_ribbon_coloring
from .bounds import grid_gamma_upper
from .grid import PairSet, PartialColoring, build_grid, verify
from .paths import PathColoring, achromatic_path_coloring, path_achromatic_number
from .render import RenderSpec, layer, render
from .search import EXHAUSTED, FOUND, SearchConfig, search

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_BUDGET = 2
EXIT_MALFORMED = 3


def _dims(text: str) -> list[int]:
    try:
        dims = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not dims or any(d < 1 for d in dims):
        raise argparse.ArgumentTypeError("side lengths must be positive")
    return dims


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit_coloring(args, c: PartialColoring, extra: dict | None = None) -> None:
    if args.format in (None, "json"):
        _emit(args, io.dumps(c, extra=extra))
    else:
        _emit(args, render(c, RenderSpec(args.format, args.cell_size)))


def cmd_bounds(args) -> int:
    rep = grid_gamma_upper(args.dims)
    _log(rep.summary())
    _emit(args, json.dumps(rep.to_dict()) + "\n")
    return EXIT_OK


def cmd_path(args) -> int:
    n = args.n
    q = path_achromatic_number(n)
    k = q if args.k is None else args.k
    if not 2 <= k <= q:
        _log(f"P_{n} admits complete proper colorings with 2..{q} colors, not {k}")
        return EXIT_FAIL
    # shortest path with achromatic number k, then step colors along the tail
    short = next(m for m in range(2, n + 1) if path_achromatic_number(m) == k)
    colors = list(achromatic_path_coloring(short).colors)
    while len(colors) < n + 1:
        colors.append(colors[-1] % k + 1)
    p = PathColoring(tuple(colors), k)
    _log(f"P_{n}: {k}-complete proper coloring (achromatic number {q})")
    _emit_coloring(args, p.to_partial())
    return EXIT_OK


def cmd_roichman(args) -> int:
    r = roichman_coloring(args.m, fill=args.fill)
    _log(f"Roichman rectangle m={args.m}: dims {list(r.coloring.dims)}, {r.psi_hat} colors")
    _emit_coloring(args, r.coloring)
    return EXIT_OK


def cmd_modified_roichman(args) -> int:
    r = modified_roichman_coloring(args.m)
    _log(f"modified Roichman rectangle m={args.m}: dims {list(r.coloring.dims)}, {r.psi_bar} colors")
    _emit_coloring(args, r.coloring)
    return EXIT_OK


def cmd_ribbon(args) -> int:
    r = two_ribbon_coloring(args.k)
    _emit_coloring(args, r.coloring)
    return EXIT_OK


def cmd_construct(args) -> int:
    res = construct_gn(args.n, args.method, seed=args.seed, search_seconds=args.budget_secs)
    _log(f"G_{args.n}: {res.k}-complete via {res.method} (upper bound {res.upper_bound})")
    _emit_coloring(args, res.coloring, {"provenance": res.provenance()})
    return EXIT_OK


def cmd_search(args) -> int:
    cfg = SearchConfig(
        k=args.k,
        proper_only=args.proper,
        strategy=args.strategy,
        seed=args.seed,
        max_seconds=args.budget_secs,
        max_nodes=args.max_nodes,
        restarts=args.restarts,
    )
    out = search(build_grid(args.dims), cfg)
    _log(json.dumps(out.to_dict()))
    if out.status == FOUND:
        _emit_coloring(args, out.witness)
        return EXIT_OK
    return EXIT_FAIL if out.status == EXHAUSTED else EXIT_BUDGET


def _load(path: str) -> io.Document | None:
    try:
        return io.read(path)
    except io.InterchangeError as exc:
        _log(f"{path}: malformed coloring file at {exc}")
    except OSError as exc:
        _log(f"{path}: {exc.strerror}")
    return None


def cmd_verify(args) -> int:
    doc = _load(args.file)
    if doc is None:
        return EXIT_MALFORMED
    k = doc.coloring.k if args.k is None else args.k
    remainder = doc.remainder
    if args.remainder:
        try:
            raw = json.loads(Path(args.remainder).read_text(encoding="utf-8"))
            if isinstance(raw, dict):
                raw = raw.get("remainder", [])
            remainder = PairSet(k, [tuple(p) for p in raw])
        except (OSError, ValueError, TypeError) as exc:
            _log(f"{args.remainder}: malformed remainder: {exc}")
            return EXIT_MALFORMED
    rep = verify(doc.coloring, k, remainder)
    _log(rep.summary())
    _emit(args, json.dumps(rep.to_dict()) + "\n")
    ok = rep.ok and (rep.is_proper or not args.proper)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_render(args) -> int:
    doc = _load(args.file)
    if doc is None:
        return EXIT_MALFORMED
    c = doc.coloring
    if args.slice is not None:
        c = layer(c, args.slice)
    try:
        text = render(c, RenderSpec(args.format or "ascii", args.cell_size))
    except ValueError as exc:
        _log(str(exc))
        return EXIT_FAIL
    _emit(args, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the artifact here instead of stdout")
    # default resolved per command: json for artifacts, ascii for render
    common.add_argument("--format", choices=["json", "ascii", "svg"], default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cell-size", type=int, default=24, help="svg cell size in pixels")

    p = argparse.ArgumentParser(prog="gridcoloring", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bounds", parents=[common], help="counting upper bounds for a grid")
    s.add_argument("--dims", type=_dims, required=True)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("path", parents=[common], help="complete proper coloring of a path")
    s.add_argument("--n", type=int, required=True, help="path length (edges)")
    s.add_argument("--k", type=int, help="number of colors (default: the maximum)")
    s.set_defaults(func=cmd_path)

    s = sub.add_parser("roichman", parents=[common], help="Roichman rectangle coloring")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--fill", action="store_true", help="color the empty cells properly")
    s.set_defaults(func=cmd_roichman)

    s = sub.add_parser("modified-roichman", parents=[common], help="modified Roichman rectangle")
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_modified_roichman)

    s = sub.add_parser("ribbon", parents=[common], help="2-ribbon gadget")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_ribbon)

    s = sub.add_parser("construct", parents=[common], help="complete coloring of the n x n grid")
    s.add_argument("--n", type=int, required=True)
    s.add_argument(
        "--method", choices=["auto", "theorem2", "certificate", "search"], default="auto"
    )
    s.add_argument("--budget-secs", type=float, default=10.0, help="per target, for search")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("search", parents=[common], help="search for a k-complete coloring")
    s.add_argument("--dims", type=_dims, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--proper", action="store_true")
    s.add_argument("--strategy", choices=["exhaustive", "local"], default="exhaustive")
    s.add_argument("--budget-secs", type=float, default=None)
    s.add_argument("--max-nodes", type=int, default=None)
    s.add_argument("--restarts", type=int, default=1)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("verify", parents=[common], help="check a coloring file")
    s.add_argument("file")
    s.add_argument("--k", type=int, help="color count (default: the file's k)")
    s.add_argument("--remainder", help="JSON list of excused pairs")
    s.add_argument("--proper", action="store_true", help="also require a proper coloring")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("render", parents=[common], help="draw a coloring file")
    s.add_argument("file")
    s.add_argument("--slice", type=int, help="third coordinate of the layer to draw (3D)")
    s.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        _log(f"error: {exc}")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
