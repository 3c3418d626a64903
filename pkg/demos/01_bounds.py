"""How many colors can a complete coloring of a grid possibly use?

Two counting limits apply: every pair of colors needs its own edge, and every
color class must touch all other classes through its cells' edges.
"""

from gridcoloring import grid_gamma_upper

for dims in ([2, 2], [5, 5], [20, 20], [3, 3, 3], [8, 8, 8]):
    rep = grid_gamma_upper(dims)
    print(f"{str(dims):12} |V|={rep.vertex_count:4} |E|={rep.edge_count:5} "
          f"edge bound {rep.edge_bound:3}  degree bound {rep.degree_bound:3}  -> {rep.combined}")

# On squares the two limits meet at 2n - 1.
assert all(grid_gamma_upper([n, n]).combined == 2 * n - 1 for n in range(2, 50))
