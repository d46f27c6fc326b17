"""Topological structures on a working graph: cliques, neighborhoods, paths.

Run:  python3 demos/graph_constructions.py
"""

from superph import (GF2, MultiGraph, QQ, SuperHypergraph, clique_delta,
                     cliques, embedded_betti, full_subset,
                     neighborhood_complex, path_complex)

print("=" * 72)
print("1. Cliques of a multigraph are cells, not vertex sets")
print("=" * 72)
g = MultiGraph(["v", "w"], {"e1": ("v", "w"), "e2": ("v", "w")})
for c in cliques(g, 2):
    print("  clique:", c.key)
ds = clique_delta(g, max_dim=2)
print("clique Δ-set cells:", ds.counts, "- two 1-cells share both vertices")
sh = SuperHypergraph(ds, full_subset(ds))
print("homology over QQ:", embedded_betti(sh, QQ, "ambient"),
      "(a circle: the two parallel edges bound a loop)")

print()
print("=" * 72)
print("2. Neighborhood complex vs clique complex of the path a-b-c")
print("=" * 72)
path = MultiGraph("abc", {"ab": ("a", "b"), "bc": ("b", "c")})
print("neighborhood complex:",
      [tuple(sorted(s)) for s in neighborhood_complex(path)])
print("clique Δ-set cells:", clique_delta(path, max_dim=2).counts)
print("-> the neighborhood complex is disconnected ({a,c} vs {b}) while the")
print("   clique complex is the path itself: different topologies, one graph.")

print()
print("=" * 72)
print("3. Path complex of a digraph = marked paths in its completion")
print("=" * 72)
dg = MultiGraph("abc", {"e1": ("a", "b"), "e2": ("b", "c")}, directed=True)
sh = path_complex(dg, 2)
print("parental cells per dimension:", sh.x.counts)
print("marked (directed paths of g):", dict(sh.h.members))
top = next(iter(sh.h.at(2)))
face = sh.x.faces[2][top][1]
print("d1 of the length-2 path lands at",
      sh.x.label(1, face).key, "- in the parental set, not marked")
print("embedded Betti over GF(2):", embedded_betti(sh, GF2),
      "(path homology of a directed path: a point)")

print()
print("=" * 72)
print("4. A directed cycle has path homology of a circle")
print("=" * 72)
cyc = MultiGraph("abc", {"e1": ("a", "b"), "e2": ("b", "c"), "e3": ("c", "a")},
                 directed=True)
sh2 = path_complex(cyc, 2)
print("embedded Betti over QQ:", embedded_betti(sh2, QQ))
