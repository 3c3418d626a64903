"""Complete proper colorings of paths.

A complete proper coloring of a path is a walk through the complete graph on
the colors that uses every edge.  Odd color counts give an Eulerian circuit;
even counts need a short detour on top of one.
"""

from gridcoloring import achromatic_path_coloring, eulerian_circuit, path_achromatic_number, verify

print("circuit of K_5:", eulerian_circuit(5).sequence)

for n in (6, 7, 10, 17, 40):
    p = achromatic_path_coloring(n)
    rep = verify(p.to_partial(), p.k)
    print(f"P_{n}: {p.k} colors, complete={rep.is_complete} proper={rep.is_proper}")
    print("   ", " ".join(map(str, p.colors)))

print("achromatic numbers n=2..30:", [path_achromatic_number(n) for n in range(2, 31)])
