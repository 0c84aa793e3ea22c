"""
2-hypergraphs, rook cycles and Euler characteristic
===================================================
"""

from gf2cycles import bruteforce
from gf2cycles.hypergraphs import RookGrid, complete_hypergraph, euler_report, equal_counts_pair

#####################################################################
# Complete 2-hypergraphs
# ----------------------

for n in range(4, 7):
    print(f"n={n}: b2 {euler_report(complete_hypergraph(n)).b2}")

#####################################################################
# Rook cycles
# -----------
# Dimension (n-1)^ell, with a decomposition into corner boxes.

for n, ell in ((2, 3), (3, 2), (3, 3)):
    print(f"[{n}]^{ell}: dim {RookGrid(n, ell).space_dim()}, enumerated {bruteforce.count_rook_cycles(n, ell)}")

#####################################################################
# Same counts, different b2
# -------------------------

for h in equal_counts_pair():
    e = euler_report(h)
    print(f"V={e.V} E={e.E} F={e.F} b2={e.b2} identity={e.identity_holds}")
