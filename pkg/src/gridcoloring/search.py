"""Exact and heuristic search for complete colorings of small grids.

The exhaustive search assigns cells in row-major order using canonical
colors (a cell may only open the next unused color), maintains per-pair edge
counts incrementally, and prunes with two counting arguments:

* every still-missing pair needs its own edge among the edges not yet
  fully assigned;
* every color must end up on at least ``ceil((k-1)/Delta)`` cells.

Grid symmetries (axis flips, and permutations of equal-length axes) are
broken with partial lex-leader checks: a branch is cut as soon as some
symmetric image of the assigned prefix is already known to give a smaller
canonical string.  This never discards the lex-least member of an orbit, so
``exhausted-none`` stays a proof of infeasibility.

The local search is simulated annealing over total colorings with
single-cell recolor moves, minimizing the number of missing pairs (plus
monochromatic edges when a proper coloring is requested).
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .bounds import grid_gamma_upper
from .grid import GridGraph, PartialColoring, build_grid, verify

__all__ = [
    "SearchConfig",
    "SearchOutcome",
    "GammaResult",
    "BudgetExceeded",
    "exhaustive_search",
    "local_search",
    "search",
    "compute_gamma_exact",
    "grid_symmetries",
]

FOUND = "found"
EXHAUSTED = "exhausted-none"
BUDGET = "budget-exceeded"


@dataclass(frozen=True)
class SearchConfig:
    """Search parameters.

    The annealing schedule multiplies the temperature by ``cooling`` every
    ``steps_per_temp`` moves, from ``t_start`` down to ``t_end``; after
    ``stagnation`` moves without a new best it reheats to ``t_start``.
    """

    k: int
    proper_only: bool = False
    strategy: Literal["exhaustive", "local"] = "exhaustive"
    seed: int = 0
    max_seconds: float | None = None
    max_nodes: int | None = None
    symmetry: bool = True
    restarts: int = 1
    t_start: float = 1.0
    t_end: float = 0.05
    cooling: float = 0.97
    steps_per_temp: int = 400
    stagnation: int = 60_000


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    witness: PartialColoring | None
    nodes_explored: int
    elapsed: float
    #: smallest objective reached (missing pairs + improper edges); 0 when found
    best_cost: int = 0
    seed: int | None = None

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "nodes_explored": self.nodes_explored,
            "elapsed": round(self.elapsed, 6),
            "best_cost": self.best_cost,
            "seed": self.seed,
        }


class _OutOfBudget(Exception):
    pass


class _Budget:
    def __init__(self, max_nodes: int | None, max_seconds: float | None):
        self.max_nodes = max_nodes
        self.deadline = None if max_seconds is None else time.perf_counter() + max_seconds
        self.nodes = 0

    def tick(self, n: int = 1) -> None:
        self.nodes += n
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _OutOfBudget
        # clock reads are comparatively slow; sample them
        if self.deadline is not None and self.nodes % 1024 < n and time.perf_counter() > self.deadline:
            raise _OutOfBudget


def grid_symmetries(g: GridGraph) -> list[np.ndarray]:
    """Non-identity automorphisms of the grid as flat-index permutations.

    Generated by flipping any subset of axes and permuting axes of equal
    length; for a square this is the dihedral group of order 8.
    """
    idx = np.arange(g.num_vertices).reshape(g.dims)
    out = []
    seen = {idx.ravel().tobytes()}
    for perm in itertools.permutations(range(g.ndim)):
        if any(g.dims[a] != g.dims[b] for a, b in zip(perm, range(g.ndim))):
            continue
        moved = np.transpose(idx, perm)
        for flips in itertools.product((False, True), repeat=g.ndim):
            t = moved
            for axis, f in enumerate(flips):
                if f:
                    t = np.flip(t, axis=axis)
            key = t.ravel().tobytes()
            if key not in seen:
                seen.add(key)
                out.append(t.ravel().copy())
    return out


def _check_cfg(g: GridGraph, cfg: SearchConfig) -> None:
    if cfg.k < 1:
        raise ValueError("k must be >= 1")


def exhaustive_search(g: GridGraph, cfg: SearchConfig) -> SearchOutcome:
    """Depth-first search for a ``cfg.k``-complete coloring of ``g``."""
    _check_cfg(g, cfg)
    start = time.perf_counter()
    k = cfg.k
    n = g.num_vertices
    nbrs = g.neighbors
    earlier = [tuple(u for u in nbrs[v] if u < v) for v in range(n)]
    # open_edges[t]: edges with an endpoint at position >= t
    closed_prefix = np.cumsum([0] + [len(e) for e in earlier])
    open_edges = [g.num_edges - int(closed_prefix[t]) for t in range(n + 1)]
    delta = max(g.max_degree, 1)
    need = -(-(k - 1) // delta)

    syms = grid_symmetries(g) if cfg.symmetry else []
    # known[s][t]: length of the prefix of the image string fully determined
    # once positions < t are assigned
    known = []
    for perm in syms:
        running = np.maximum.accumulate(perm)
        known.append([int(np.searchsorted(running, t, side="left")) for t in range(n + 1)])

    color = [0] * n
    count = [0] * ((k + 1) * (k + 1))
    cells_of = [0] * (k + 1)
    state = {"missing": k * (k - 1) // 2, "deficit": k * need if k > 1 else 0}
    budget = _Budget(cfg.max_nodes, cfg.max_seconds)

    def lex_ok(t: int) -> bool:
        for s, perm in enumerate(syms):
            lo, hi = known[s][t - 1], known[s][t]
            if hi <= lo:
                continue
            relabel: dict[int, int] = {}
            for i in range(hi):
                c = color[perm[i]]
                r = relabel.get(c)
                if r is None:
                    r = relabel[c] = len(relabel) + 1
                if r != color[i]:
                    if r < color[i]:
                        return False
                    break
        return True

    def assign(v: int, a: int) -> None:
        color[v] = a
        cells_of[a] += 1
        if cells_of[a] <= need:
            state["deficit"] -= 1
        for u in earlier[v]:
            b = color[u]
            if b != a:
                key = a * (k + 1) + b if a < b else b * (k + 1) + a
                if count[key] == 0:
                    state["missing"] -= 1
                count[key] += 1

    def unassign(v: int) -> None:
        a = color[v]
        for u in earlier[v]:
            b = color[u]
            if b != a:
                key = a * (k + 1) + b if a < b else b * (k + 1) + a
                count[key] -= 1
                if count[key] == 0:
                    state["missing"] += 1
        if cells_of[a] <= need:
            state["deficit"] += 1
        cells_of[a] -= 1
        color[v] = 0

    def dfs(t: int, used: int) -> bool:
        if t == n:
            return state["missing"] == 0
        for a in range(1, min(k, used + 1) + 1):
            if cfg.proper_only and any(color[u] == a for u in earlier[t]):
                continue
            budget.tick()
            assign(t, a)
            ok = (
                state["missing"] <= open_edges[t + 1]
                and state["deficit"] <= n - t - 1
                and (not syms or lex_ok(t + 1))
            )
            if ok and dfs(t + 1, max(used, a)):
                return True
            unassign(t)
        return False

    try:
        hit = dfs(0, 0)
    except _OutOfBudget:
        return SearchOutcome(BUDGET, None, budget.nodes, time.perf_counter() - start, seed=None)
    elapsed = time.perf_counter() - start
    if not hit:
        return SearchOutcome(EXHAUSTED, None, budget.nodes, elapsed, best_cost=-1)
    witness = PartialColoring(g, np.array(color).reshape(g.dims), k)
    return SearchOutcome(FOUND, witness, budget.nodes, elapsed)


def _anneal(g: GridGraph, cfg: SearchConfig, rng: random.Random, budget: _Budget):
    """One annealing run; returns ``(best_cost, best_colors)``."""
    k = cfg.k
    n = g.num_vertices
    nbrs = g.neighbors
    stride = k + 1
    color = [rng.randint(1, k) for _ in range(n)]
    count = [0] * (stride * stride)
    for u, v in g.edges.tolist():
        a, b = color[u], color[v]
        if a != b:
            count[a * stride + b if a < b else b * stride + a] += 1
    missing = sum(
        1 for a in range(1, k + 1) for b in range(a + 1, k + 1) if count[a * stride + b] == 0
    )
    improper = 0
    if cfg.proper_only:
        improper = sum(1 for u, v in g.edges.tolist() if color[u] == color[v])
    cost = missing + improper
    best, best_colors = cost, color[:]
    temp = cfg.t_start
    since_best = 0
    step = 0
    while cost > 0:
        try:
            budget.tick()
        except _OutOfBudget:
            break
        v = rng.randrange(n)
        a = color[v]
        b = rng.randint(1, k - 1)
        if b >= a:
            b += 1
        d = 0
        for u in nbrs[v]:
            x = color[u]
            if x != a:
                key = a * stride + x if a < x else x * stride + a
                count[key] -= 1
                if count[key] == 0:
                    d += 1
            elif cfg.proper_only:
                d -= 1
            if x != b:
                key = b * stride + x if b < x else x * stride + b
                if count[key] == 0:
                    d -= 1
                count[key] += 1
            elif cfg.proper_only:
                d += 1
        if d <= 0 or rng.random() < math.exp(-d / temp):
            color[v] = b
            cost += d
            if cost < best:
                best, best_colors, since_best = cost, color[:], 0
        else:
            for u in nbrs[v]:
                x = color[u]
                if x != b:
                    count[b * stride + x if b < x else x * stride + b] -= 1
                if x != a:
                    count[a * stride + x if a < x else x * stride + a] += 1
        step += 1
        since_best += 1
        if step % cfg.steps_per_temp == 0:
            temp = max(temp * cfg.cooling, cfg.t_end)
        if since_best >= cfg.stagnation:
            temp, since_best = cfg.t_start, 0
    return best, best_colors


def local_search(g: GridGraph, cfg: SearchConfig) -> SearchOutcome:
    """Simulated annealing; deterministic for a fixed ``(seed, restarts, max_nodes)``.

    Each restart gets an equal share of the node budget (and of the time
    budget) and its own generator seeded from ``(seed, restart index)``.
    Never returns ``exhausted-none``.
    """
    _check_cfg(g, cfg)
    start = time.perf_counter()
    if cfg.k == 1:
        return SearchOutcome(FOUND, _trivial_witness(g), 0, 0.0, seed=cfg.seed)
    if g.num_edges == 0:
        return SearchOutcome(BUDGET, None, 0, 0.0, best_cost=1, seed=cfg.seed)
    restarts = max(1, cfg.restarts)
    total_nodes = 0
    best_cost, best_seed = None, cfg.seed
    for r in range(restarts):
        per_nodes = None if cfg.max_nodes is None else cfg.max_nodes // restarts
        left = None
        if cfg.max_seconds is not None:
            left = (cfg.max_seconds - (time.perf_counter() - start)) / (restarts - r)
        budget = _Budget(per_nodes, left)
        rng = random.Random(f"{cfg.seed}:{r}")
        cost, colors = _anneal(g, cfg, rng, budget)
        total_nodes += budget.nodes
        if cost == 0:
            w = PartialColoring(g, np.array(colors).reshape(g.dims), cfg.k)
            return SearchOutcome(FOUND, w, total_nodes, time.perf_counter() - start, 0, cfg.seed)
        if best_cost is None or cost < best_cost:
            best_cost = cost
    return SearchOutcome(
        BUDGET, None, total_nodes, time.perf_counter() - start,
        best_cost=best_cost, seed=best_seed,
    )


def search(g: GridGraph, cfg: SearchConfig) -> SearchOutcome:
    """Dispatch on ``cfg.strategy`` and double-check any witness."""
    if cfg.strategy == "exhaustive":
        out = exhaustive_search(g, cfg)
    elif cfg.strategy == "local":
        out = local_search(g, cfg)
    else:
        raise ValueError(f"unknown strategy {cfg.strategy!r}")
    if out.witness is not None:
        rep = verify(out.witness, cfg.k)
        if not rep.ok or (cfg.proper_only and not rep.is_proper):
            raise AssertionError("search produced a witness the verifier rejects")
    return out


@dataclass(frozen=True)
class GammaResult:
    gamma: int
    witness: PartialColoring
    upper_bound: int
    #: why ``gamma + 1`` is impossible: "upper-bound" or "exhausted-none"
    certificate: str


class BudgetExceeded(RuntimeError):
    def __init__(self, lower: int, upper: int, witness: PartialColoring | None):
        super().__init__(f"search budget exhausted; value lies in [{lower}, {upper}]")
        self.lower = lower
        self.upper = upper
        self.witness = witness


def _trivial_witness(g: GridGraph) -> PartialColoring:
    return PartialColoring(g, np.ones(g.dims, dtype=np.int64), 1)


def compute_gamma_exact(
    g: GridGraph | list[int],
    *,
    proper_only: bool = False,
    max_nodes: int | None = 5_000_000,
    max_seconds: float | None = None,
    symmetry: bool = True,
) -> GammaResult:
    """Largest ``k`` admitting a ``k``-complete coloring (proper if requested).

    Tries ``k`` downward from the counting upper bound with exhaustive
    search; the first success is optimal because every larger ``k`` was
    either excluded by the bound or exhausted.  The budget applies per
    value of ``k``.
    """
    if not isinstance(g, GridGraph):
        g = build_grid(g)
    upper = grid_gamma_upper(g.dims).combined
    certificate = "upper-bound"
    for k in range(upper, 0, -1):
        if k == 1:
            if proper_only and g.num_edges:
                # one color on an edge is improper; 1-complete needs nothing else
                raise AssertionError("a 2-coloring of a grid always exists")
            return GammaResult(1, _trivial_witness(g), upper, certificate)
        cfg = SearchConfig(
            k=k, proper_only=proper_only, max_nodes=max_nodes,
            max_seconds=max_seconds, symmetry=symmetry,
        )
        out = search(g, cfg)
        if out.status == FOUND:
            return GammaResult(k, out.witness, upper, certificate)
        if out.status == BUDGET:
            raise BudgetExceeded(1, k, None)
        certificate = "exhausted-none"
    raise AssertionError("unreachable")


def merge_colors(c: PartialColoring, a: int, b: int) -> PartialColoring:
    """Recolor ``b`` as ``a`` and close the gap; a ``k``-complete input gives ``k-1``-complete."""
    if a == b:
        raise ValueError("need two different colors")
    arr = c.array.copy()
    arr[arr == b] = a
    arr[arr > b] -= 1
    return PartialColoring(c.graph, arr, c.k - 1)
