"""
Factoring through a full 3-regular subgraph
===========================================

The second sufficient condition: a 3-regular subgraph covering all of Y
yields a link graph F on Y (from two classes of a proper 3-edge-coloring)
plus a triple system (neighborhoods of the left-out X-vertices). A mixed
transversal of the triples turns both into a proper path factor.
"""

from interval6.bigraph import build
from interval6.checker import check_interval, check_proper_path_factor
from interval6.coloring import color_from_factor
from interval6.generators import random_34_biregular
from interval6.pathfactor import search_full_3regular
from interval6.transversal import (
    build_f,
    factor_from_mixed_transversal,
    find_mixed_transversal,
    proper_3_edge_color,
)

g = build(4, 3, [(i, j) for i in range(4) for j in range(3)])
print(f"complete (3,4) instance: |X|={g.x_count} |Y|={g.y_count}")

cert = search_full_3regular(g)
print("subgraph edges:", sorted(cert.edge_set))

colors = proper_3_edge_color(g, cert.edge_set)
for c in (1, 2, 3):
    klass = sorted(e for e, got in colors.items() if got == c)
    print(f"  color {c} matching: edges {klass}")

f, triples = build_f(g, cert)
print("F cycles:", f.cycles)
print("triples:", triples.triples)

mixed = find_mixed_transversal(f, triples)
print("mixed transversal:", mixed.members, [p.case for p in mixed.parts])

factor = factor_from_mixed_transversal(g, cert)
assert check_proper_path_factor(g, factor)
for p in factor.paths:
    print("  path:", " ".join(v.label for v in p.vertices))

coloring = color_from_factor(g, factor)
assert check_interval(g, coloring)
print("interval coloring verified, palette", coloring.palette_size)

# the same chain on a bigger random instance, when the subgraph exists
for seed in range(50):
    g = random_34_biregular(3, seed=seed)
    cert = search_full_3regular(g)
    if cert is None:
        continue
    factor = factor_from_mixed_transversal(g, cert)
    if factor is None:
        continue
    assert check_proper_path_factor(g, factor)
    print(f"random k=3 instance, seed {seed}: factor lengths",
          sorted(p.length for p in factor.paths))
    break
