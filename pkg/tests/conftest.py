"""Shared oracles.  Each one avoids the package's own edge lists and search."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from gridcoloring.grid import EMPTY, PartialColoring, build_grid

_ACCEPTANCE_LINES: list[str] = []


def brute_edges(dims) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All unordered cell pairs at L1 distance 1, by checking every pair."""
    cells = list(itertools.product(*(range(1, d + 1) for d in dims)))
    return [
        (a, b)
        for a, b in itertools.combinations(cells, 2)
        if sum(abs(x - y) for x, y in zip(a, b)) == 1
    ]


def brute_pairs(arr: np.ndarray) -> set[tuple[int, int]]:
    """Realized pairs by stepping +1 along every axis from every cell."""
    arr = np.asarray(arr)
    out = set()
    for idx in np.ndindex(arr.shape):
        a = int(arr[idx])
        if a == EMPTY:
            continue
        for axis in range(arr.ndim):
            j = list(idx)
            j[axis] += 1
            if j[axis] >= arr.shape[axis]:
                continue
            b = int(arr[tuple(j)])
            if b != EMPTY and b != a:
                out.add((min(a, b), max(a, b)))
    return out


def brute_complete(arr, k: int) -> bool:
    return len(brute_pairs(arr)) == k * (k - 1) // 2 and all(
        1 <= a <= k for a in np.asarray(arr).ravel() if a != EMPTY
    )


def path_walk_feasible(n: int, q: int) -> bool:
    """Is there a complete proper ``q``-coloring of ``P_n``?

    Such a coloring is an ``n``-step walk in ``K_q`` covering every edge; this
    runs the reachability DP over (current vertex, set of edges used).
    """
    if q == 1:
        return True
    edges = list(itertools.combinations(range(q), 2))
    bit = {e: 1 << i for i, e in enumerate(edges)}
    full = (1 << len(edges)) - 1
    reach = np.zeros((q, full + 1), dtype=bool)
    reach[0, 0] = True  # by symmetry the walk may start at vertex 0
    masks = np.arange(full + 1)
    for _ in range(n):
        nxt = np.zeros_like(reach)
        for a in range(q):
            src = masks[reach[a]]
            if src.size == 0:
                continue
            for b in range(q):
                if a != b:
                    nxt[b, src | bit[(min(a, b), max(a, b))]] = True
        reach = nxt
    return bool(reach[:, full].any())


def random_partial(rng: np.random.Generator, dims, k: int, p_empty: float = 0.2) -> PartialColoring:
    arr = rng.integers(1, k + 1, size=dims)
    arr[rng.random(dims) < p_empty] = EMPTY
    return PartialColoring(build_grid(dims), arr, k)


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion, printed at session end."""

    def record(name: str, ok: bool, detail: str = "") -> bool:
        _ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" - {detail}" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
