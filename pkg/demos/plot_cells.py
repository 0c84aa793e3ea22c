"""
Cell 2-cycles of squares of graphs
==================================

2-cycles built from products of edges, in the full and deleted square,
with symmetric parts and the t x t audit.
"""

from gf2cycles.cells import (
    CellUniverse,
    disjoint_products_gap,
    h2_dim,
    knn_tilde_map,
    symmetric_h2,
    two_k5_bridge,
    txt_audit,
)
from gf2cycles.graphs import complete_bipartite, complete_graph

#####################################################################
# Full and deleted squares
# ------------------------

for name, g in [("K4", complete_graph(4)), ("K3,3", complete_bipartite(3, 3)), ("K5", complete_graph(5))]:
    print(f"{name}: full {h2_dim(CellUniverse(g))}, deleted {h2_dim(CellUniverse(g, 'deleted'))}")

#####################################################################
# Swap-symmetric 2-cycles
# -----------------------

print("K4 swap-symmetric:", symmetric_h2(CellUniverse(complete_graph(4)), "swap").dim)

#####################################################################
# K_{n,n} against tilde n
# -----------------------

print("K4,4 <-> tilde4 map ok:", knn_tilde_map(4).ok)

#####################################################################
# Audit of the t x t count
# ------------------------
# Computed value and orbit count agree with each other but not with the
# closed form.

print("\n".join(txt_audit(4).lines()))

#####################################################################
# Two K5 joined by an edge
# ------------------------

rep = disjoint_products_gap(two_k5_bridge())
print(f"h2 {rep.h2_dim}, spanned by disjoint products {rep.products_rank}, gap {rep.gap}")
