"""
Cycle spaces of graphs and their symmetric parts
================================================

Counts 1-cycles of small graphs, then the cycles fixed by a free involution,
checked against exhaustive enumeration.
"""

from math import comb

from gf2cycles import bruteforce
from gf2cycles.graphs import complete_bipartite, complete_graph, cycle_graph, tilde_graph
from gf2cycles.symmetry import antipodal, part_swap, symmetric_cycle_dim

#####################################################################
# Complete graphs
# ---------------
# dim Z1(K_n) = C(n-1, 2); enumeration confirms the count for small n.

for n in range(3, 6):
    g = complete_graph(n)
    print(f"K{n}: dim {g.cycle_space_dim()}  C(n-1,2)={comb(n - 1, 2)}  enumerated {bruteforce.count_graph_cycles(g)}")

#####################################################################
# Complete bipartite graphs
# -------------------------

for n in range(2, 5):
    print(f"K{n},{n}: dim {complete_bipartite(n, n).cycle_space_dim()}")

#####################################################################
# Symmetric cycles
# ----------------
# The antipodal map of an even cycle and the part swap of tilde n are free
# involutions; the fixed subspace is compared with the closed form.

for name, g, t in [
    ("C6", cycle_graph(6), antipodal(cycle_graph(6))),
    ("tilde4", tilde_graph(4), part_swap(4)),
]:
    rep = symmetric_cycle_dim(g, t)
    print(f"{name}: symmetric dim {rep.symmetric_dim}, closed form {rep.formula_dim}")
