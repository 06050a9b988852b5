"""
The 20+15 subset graph, its path factor, and its interval coloring
==================================================================

X-vertices are the 2- and 3-element subsets of {1..6}, joined when one
contains the other. The graph is (3,4)-biregular, ships with a factor
of five length-6 paths, and colors with exactly six colors.
"""

from interval6.bigraph import biregular34_k, xv, yv
from interval6.checker import check_interval, check_proper_path_factor, vertex_colors
from interval6.coloring import color_from_factor
from interval6.generators import subset_graph_6
from interval6.oracle import oracle_full_3regular

g, factor = subset_graph_6()
k = biregular34_k(g)
print(f"graph: |X|={g.x_count} |Y|={g.y_count} edges={g.edge_count} (k={k})")

print("factor paths:")
for p in factor.paths:
    print(" ", " ".join(v.label for v in p.vertices), f"(length {p.length})")
assert check_proper_path_factor(g, factor)

coloring = color_from_factor(g, factor)
assert check_interval(g, coloring)
print(f"interval coloring found, palette {coloring.palette_size}")
print("colors used:", sorted(set(coloring.colors)))

# every vertex sees a consecutive run: degree 3 on X, degree 4 on Y
for v in [xv(0), xv(7), yv(0), yv(14)]:
    print(f"  {v.label}: {vertex_colors(g, coloring, v)}")

# the other known sufficient condition fails here: no 3-regular subgraph
# covers all of Y, so the factor route is the only one that applies
print("full 3-regular subgraph:", oracle_full_3regular(g))
