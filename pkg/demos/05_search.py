"""Exact and heuristic search on small grids."""

from gridcoloring import SearchConfig, build_grid, compute_gamma_exact
from gridcoloring.search import search

# Exhaustive search proves the 2x2 grid has no complete 4-coloring.
out = search(build_grid([2, 2]), SearchConfig(k=4))
print("G_2, k=4:", out.status, f"({out.nodes_explored} nodes)")

res = compute_gamma_exact([3, 5])
print(f"3x5 grid: Gamma = {res.gamma} (bound {res.upper_bound}, certificate {res.certificate})")

# Annealing finds witnesses where exhaustive search would take too long.
for dims, k in (([5, 5], 9), ([6, 6], 11), ([3, 3, 3], 10)):
    out = search(build_grid(dims), SearchConfig(k=k, strategy="local", seed=1, max_seconds=60))
    print(f"{dims} k={k}: {out.status} in {out.elapsed:.2f}s")
