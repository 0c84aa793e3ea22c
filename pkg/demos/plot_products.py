"""
Box products and deleted squares
================================

1-cycles of K box L modulo boundaries of cells, the deleted square, and a
span query that returns a separating functional.
"""

from gf2cycles.graphs import complete_bipartite, complete_graph
from gf2cycles.products import (
    box_product,
    boundary_space,
    deleted_square_quotient_dim,
    span_harness,
    symmetric_square_dim,
    triodic_cycle,
)

#####################################################################
# Kunneth
# -------
# The quotient has dimension dim Z1(K) + dim Z1(L).

K, L = complete_graph(4), complete_bipartite(2, 3)
print("K4 box K2,3 quotient:", boundary_space(box_product(K, L)).quotient_dim)

#####################################################################
# Symmetric square
# ----------------

for n in (2, 3, 4):
    print(f"K{n}: swap-symmetric 1-cycles of the square, dim {symmetric_square_dim(complete_graph(n))}")

#####################################################################
# Deleted square
# --------------

for name, g in [("K3", complete_graph(3)), ("K4", complete_graph(4)), ("K3,3", complete_bipartite(3, 3))]:
    print(f"{name}: deleted square quotient {deleted_square_quotient_dim(g)}")

#####################################################################
# A triodic cycle outside the span
# --------------------------------

g = complete_graph(4)
res = span_harness(g, triodic_cycle(box_product(g, g), 0, 1, 2, 3), ["boundaries"], ambient="deleted_square")
print("triodic cycle in K4:", res.verdict)
