"""Acceptance criteria; each test carries a ``criterion`` marker and the
terminal summary prints one PASS/FAIL line per criterion."""

import random
from itertools import combinations_with_replacement
from math import comb

import pytest

from gf2cycles import bruteforce
from gf2cycles.cells import (
    CellUniverse,
    disjoint_products_gap,
    h2_dim,
    h2_space,
    knn_tilde_map,
    symmetric_h2,
    symmetric_generators_check,
    two_k5_bridge,
    txt_audit,
)
from gf2cycles.graphs import complete_bipartite, complete_graph, cycle_graph, path_graph, tilde_graph, wheel_graph
from gf2cycles.hypergraphs import (
    Hypergraph2,
    RookGrid,
    complete_2cycle_space,
    complete_hypergraph,
    euler_report,
    octahedron,
    projective_plane,
    stacked_disk,
    equal_counts_pair,
    tripartite_hypergraph,
)
from gf2cycles.linalg import BitVec, rank
from gf2cycles.products import (
    box_product,
    boundary_space,
    deleted_box_square,
    deleted_square_quotient_dim,
    span_harness,
    swap_involution,
    symmetric_square_dim,
    symmetric_square_formula,
    triodic_cycle,
)
from gf2cycles.symmetry import (
    antipodal,
    part_swap,
    subdivide_all,
    symmetric_cycle_basis,
    symmetric_cycle_dim,
    tilde_fold,
    tilde_unfold,
)
from gf2cycles.graphs import cycle_space_basis, is_one_cycle


@pytest.mark.criterion(1, "cycle space of K_n has dimension C(n-1,2), n=3..6; enumeration n<=5")
def test_c01_complete_graphs():
    for n in range(3, 7):
        g = complete_graph(n)
        assert g.cycle_space_dim() == comb(n - 1, 2)
        assert len(cycle_space_basis(g)[1]) == comb(n - 1, 2)
        if n <= 5:
            assert bruteforce.count_graph_cycles(g) == 2 ** comb(n - 1, 2)
    assert 2 ** complete_graph(4).cycle_space_dim() == 8


@pytest.mark.criterion(2, "cycle space of K_{n,n} has dimension (n-1)^2, n=2..4; enumeration n<=3")
def test_c02_complete_bipartite():
    for n in range(2, 5):
        g = complete_bipartite(n, n)
        assert len(cycle_space_basis(g)[1]) == (n - 1) ** 2
        if n <= 3:
            assert bruteforce.count_graph_cycles(g) == 2 ** ((n - 1) ** 2)


def _symmetric_fixtures():
    out = [("C6", cycle_graph(6), antipodal(cycle_graph(6))), ("C8", cycle_graph(8), antipodal(cycle_graph(8)))]
    out += [(f"tilde{n}", tilde_graph(n), part_swap(n)) for n in (3, 4, 5)]
    for name, g, t in list(out[:4]):
        h, s = subdivide_all(g, t)
        out.append((name + "'", h, s))
    return out


@pytest.mark.criterion(3, "symmetric 1-cycles: closed form equals fixed-subspace dimension on 9 fixtures")
def test_c03_symmetric_formula():
    checked = 0
    for name, g, t in _symmetric_fixtures():
        rep = symmetric_cycle_dim(g, t)
        assert rep.formula_dim is not None and rep.agrees, name
        if g.nedges <= 20:
            assert bruteforce.count_graph_cycles(g, t.edge_perm()) == 2**rep.symmetric_dim, name
        checked += 1
    assert checked >= 5


@pytest.mark.criterion(4, "symmetric 1-cycles of tilde n number 2^C(n-1,2): fold bijection and fixed subspace agree")
def test_c04_tilde_symmetric():
    for n in (3, 4, 5):
        g, t = tilde_graph(n), part_swap(n)
        direct = len(symmetric_cycle_basis(g, t))
        kn = complete_graph(n)
        _, zk = cycle_space_basis(kn)
        lifted = [tilde_unfold(n, z) for z in zk]
        assert all(is_one_cycle(g, c) and t.apply(c) == c for c in lifted)
        assert all(tilde_fold(n, c) == z for c, z in zip(lifted, zk))
        via_fold = rank(c.vec for c in lifted)
        assert direct == via_fold == comb(n - 1, 2)


@pytest.mark.criterion(5, "1-cycles mod boundaries: K3^2, K22^2, K23^2, K4^2 give 2, 2, 4, 6")
def test_c05_quotient_golden():
    graphs = [complete_graph(3), complete_bipartite(2, 2), complete_bipartite(2, 3), complete_graph(4)]
    assert [boundary_space(box_product(g, g)).quotient_dim for g in graphs] == [2, 2, 4, 6]


@pytest.mark.criterion(6, "Kunneth: quotient dim of K box L = dim Z1(K) + dim Z1(L) on 15 connected pairs")
def test_c06_kunneth():
    pool = [complete_graph(3), complete_graph(4), complete_bipartite(2, 2), complete_bipartite(2, 3), complete_bipartite(3, 3)]
    pairs = list(combinations_with_replacement(pool, 2))
    assert len(pairs) >= 10
    for K, L in pairs:
        assert boundary_space(box_product(K, L)).quotient_dim == K.cycle_space_dim() + L.cycle_space_dim()


@pytest.mark.criterion(7, "swap-symmetric 1-cycles of K box K: VE - C(V,2) for K2, P3, K3, K4; enumeration K2, P3")
def test_c07_symmetric_square():
    for g in (complete_graph(2), path_graph(3), complete_graph(3), complete_graph(4)):
        dim = symmetric_square_dim(g)
        assert dim == symmetric_square_formula(g) == g.nverts * g.nedges - comb(g.nverts, 2)
    for g in (complete_graph(2), path_graph(3)):
        p = box_product(g, g)
        perm = swap_involution(p).edge_perm()
        assert bruteforce.count_graph_cycles(p.graph, perm) == 2 ** symmetric_square_dim(g)


@pytest.mark.criterion(8, "deleted box-square mod boundaries: 1, 1, 5, 7, 8, 12")
def test_c08_deleted_golden():
    graphs = [complete_graph(3), complete_bipartite(2, 2), complete_bipartite(2, 3), complete_graph(4), complete_bipartite(3, 3), complete_graph(5)]
    assert [deleted_square_quotient_dim(g) for g in graphs] == [1, 1, 5, 7, 8, 12]


@pytest.mark.criterion(9, "triodic cycle is not a sum of deleted boundaries in K_{3,1} and K_4, with checked certificate")
def test_c09_triodic():
    for g, star in ((complete_bipartite(3, 1), (3, 0, 1, 2)), (complete_graph(4), (0, 1, 2, 3))):
        p = box_product(g, g)
        t = triodic_cycle(p, *star)
        res = span_harness(g, t, ["boundaries"], ambient="deleted_square")
        assert res.verdict == "NOT_IN_SPAN"
        d = deleted_box_square(g)
        y = res.functional
        tgt = d.restrict(t)
        assert y.dot(tgt.vec) == 1
        assert all(y.dot(b.vec) == 0 for b in d.boundaries)


@pytest.mark.criterion(10, "2-cycles of the complete 2-hypergraph on [n]: C(n-1,3), n=4..7; enumeration n<=5")
def test_c10_complete_hypergraph():
    for n in range(4, 8):
        assert complete_2cycle_space(n)[0] == comb(n - 1, 3)
        assert euler_report(complete_hypergraph(n)).b2 == comb(n - 1, 3)
        if n <= 5:
            assert bruteforce.count_two_cycles(complete_hypergraph(n)) == 2 ** comb(n - 1, 3)


@pytest.mark.criterion(11, "rook cycles: dims match enumeration for (2,2),(3,2),(2,3),(3,3); 100 decompositions each")
def test_c11_rook():
    rng = random.Random(11)
    for n, ell in ((2, 2), (3, 2), (2, 3), (3, 3)):
        g = RookGrid(n, ell)
        dim = g.space_dim()
        assert bruteforce.count_rook_cycles(n, ell) == 2**dim == 2 ** g.claimed_dim()
        basis = g.basis()
        for _ in range(100):
            bits = 0
            for b in basis:
                if rng.getrandbits(1):
                    bits ^= b.bits
            c = BitVec(g.npoints, bits)
            assert g.is_rook_cycle(c)
            acc = 0
            for a in g.decompose(c):
                acc ^= g.corner_box(a).bits
            assert acc == bits


@pytest.mark.criterion(12, "b0 - b1 + b2 = V - E + F on all fixtures; the equal-count pair has b2 = 0 and 1")
def test_c12_euler():
    h1, h2 = equal_counts_pair()
    fixtures = [
        Hypergraph2(3, ((0, 1, 2),)),
        Hypergraph2(6, ((0, 1, 2), (3, 4, 5))),
        complete_hypergraph(4),
        complete_hypergraph(6),
        projective_plane(),
        stacked_disk(4),
        tripartite_hypergraph(3),
        Hypergraph2.from_faces(6, [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]),
        h1,
        h2,
    ]
    for h in fixtures:
        assert euler_report(h).identity_holds
    e1, e2 = euler_report(h1), euler_report(h2)
    assert (e1.V, e1.E, e1.F) == (e2.V, e2.E, e2.F)
    assert (e1.b2, e2.b2) == (0, 1)
    assert octahedron(3, (0, 1), (0, 1), (0, 1))


@pytest.mark.criterion(13, "cell 2-cycles of K x K: (E-V+1)^2 for K3, K4, K3,3 by kernel and by product basis")
def test_c13_full_square():
    for g in (complete_graph(3), complete_graph(4), complete_bipartite(3, 3)):
        u = CellUniverse(g)
        q = g.nedges - g.nverts + 1
        product_basis = h2_space(u).basis
        assert rank(c.vec for c in product_basis) == h2_dim(u) == q * q


@pytest.mark.criterion(14, "deleted squares: 0 for C5, K3,2, K4, W4, W5; unique full 2-cycle for K3,3, K5; 1 and 25 for K_{n,n}")
def test_c14_deleted_squares():
    for g in (cycle_graph(5), complete_bipartite(3, 2), complete_graph(4), wheel_graph(4), wheel_graph(5)):
        assert h2_dim(CellUniverse(g, "deleted")) == 0
    for g in (complete_bipartite(3, 3), complete_graph(5)):
        u = CellUniverse(g, "deleted")
        basis = h2_space(u).basis
        assert len(basis) == 1 and basis[0] == u.full()
    for n in (3, 4):
        assert h2_dim(CellUniverse(complete_bipartite(n, n), "deleted")) == (n * n - 3 * n + 1) ** 2


@pytest.mark.criterion(15, "K_{n,n} deleted square to tilde n square: involutive, adjacency-preserving, bijective on 2-cycles")
def test_c15_knn_map():
    for n in (3, 4):
        rep = knn_tilde_map(n)
        assert rep.involutive and rep.adjacency_preserved and rep.cycles_bijective and rep.ok


@pytest.mark.criterion(16, "swap-symmetric cell 2-cycles: q(q+1)/2 = 1, 6, 10 for K3, K4, K3,3")
def test_c16_swap_symmetric():
    got = [symmetric_h2(CellUniverse(g), "swap") for g in (complete_graph(3), complete_graph(4), complete_bipartite(3, 3))]
    assert [r.dim for r in got] == [1, 6, 10]
    assert all(r.agrees for r in got)


@pytest.mark.criterion(17, "symmetrized disjoint 4-cycle tori and K3,3 deleted squares span symmetric 2-cycles of K_{n,n}, n=3,4")
def test_c17_symmetric_generators():
    for n, dim in ((3, 1), (4, 13)):
        rep = symmetric_generators_check(n)
        assert rep.target_dim == dim and rep.spans


@pytest.mark.criterion(18, "audit of t x t symmetric 2-cycles in tilde4 square: computed 13 (orbit oracle 13) vs closed form 6")
def test_c18_audit():
    a = txt_audit(4)
    assert a.computed_dim == a.orbit_dim == 13
    assert a.formula_dim == 6
    assert not a.agrees
    assert a.lines()[-1] == "verdict: DISAGREEMENT"


@pytest.mark.criterion(19, "two K5 joined by an edge: products of disjoint cycles leave a gap of 2 in the deleted-square 2-cycles")
def test_c19_two_k5():
    rep = disjoint_products_gap(two_k5_bridge())
    assert (rep.h2_dim, rep.products_rank, rep.gap) == (74, 72, 2)
    assert not rep.single_cycle_suffices
