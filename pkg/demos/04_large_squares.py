"""Complete colorings of large square grids built from the blocks.

A modified Roichman rectangle is cut into four strips that fill most of the
square; a ribbon and a snaked path in the leftover columns add the last
colors.
"""

import time

from gridcoloring import construct_gn, grid_gamma_upper
from gridcoloring.render import render

for n in (20, 21, 22, 23, 40, 60):
    t0 = time.perf_counter()
    res = construct_gn(n)
    print(f"n={n}: {res.k} colors (bound {grid_gamma_upper([n, n]).combined}) "
          f"via {res.method} in {time.perf_counter() - t0:.3f}s")

print(render(construct_gn(20).coloring))
