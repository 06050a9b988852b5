"""
Where each construction breaks
==============================

Three hand-built witnesses. The eight-triples graph defeats the cover
pipeline but not the search; the claw multigraph has a full 3-regular
subgraph yet no factor at all (and is still interval colorable); the
synthetic link structures defeat the transversal machinery itself.
"""

from interval6.generators import (
    claw_triple_graph,
    eight_triples_graph,
    independent_obstruction,
    no_mixed_transversal_instance,
    spread_obstruction,
)
from interval6.oracle import oracle_full_3regular, oracle_interval_coloring, oracle_path_factor
from interval6.pathfactor import find_y_cover, search_proper_path_factor
from interval6.transversal import (
    find_independent_transversal,
    find_mixed_transversal,
    find_spread_transversal,
    fstar_components,
)

g = eight_triples_graph()
print("eight-triples graph: Y-cover:", find_y_cover(g))
print("  full 3-regular subgraph:", oracle_full_3regular(g))
res = search_proper_path_factor(g, lengths=(6,))
print("  but search finds a factor:", sorted(p.length for p in res.factor.paths))

g = claw_triple_graph()
print("claw multigraph: full 3-regular subgraph edges:",
      sorted(oracle_full_3regular(g).edge_set))
print("  path factor:", oracle_path_factor(g))
print("  interval 6-coloring exists anyway:",
      oracle_interval_coloring(g, 6) is not None)

f, ts = independent_obstruction(12)
print(f"independent obstruction: {len(f.cycles)} cycles, {len(ts.triples)} triples")
print("  independent transversal:", find_independent_transversal(f, ts))
print("  spread transversal:", find_spread_transversal(f, ts))

f, ts = spread_obstruction(8)
print(f"spread obstruction: {len(f.cycles)} cycles, {len(ts.triples)} triples")
print("  spread transversal:", find_spread_transversal(f, ts))
print("  independent transversal:", find_independent_transversal(f, ts))

# splicing the two kills both cases at once: connected, so one case must
# apply globally, and each is blocked by its own counting argument
f, ts = no_mixed_transversal_instance()
comps = fstar_components(f, ts)
print(f"spliced instance: {len(comps)} component, {len(f.cycles)} cycles, "
      f"{len(ts.triples)} triples")
print("  mixed transversal:", find_mixed_transversal(f, ts))
