"""The building blocks: Roichman rectangles, their modified form, and 2-ribbons."""

from gridcoloring import verify
from gridcoloring.render import render
from gridcoloring.blocks import modified_roichman_coloring, roichman_coloring, two_ribbon_coloring
from gridcoloring.grid import realized_pairs

r = roichman_coloring(4, fill=True)
rep = verify(r.coloring, r.psi_hat)
print(f"Roichman m=4: dims {r.coloring.dims}, {r.psi_hat} colors, "
      f"complete={rep.is_complete} proper={rep.is_proper}")
print(render(r.coloring))

mr = modified_roichman_coloring(3)
print(f"modified Roichman m=3: dims {mr.coloring.dims}, {mr.psi_bar} colors, "
      f"complete={verify(mr.coloring, mr.psi_bar).is_complete}")

# The ribbon realizes every pair between colors 1..k and the three new ones.
rb = two_ribbon_coloring(6)
print(render(rb.coloring))
print("target covered:", rb.target_pairs() <= realized_pairs(rb.coloring))
