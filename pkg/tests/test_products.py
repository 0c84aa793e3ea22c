import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from gf2cycles.graphs import (
    DomainError,
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    cycle_space_basis,
    is_one_cycle,
    path_graph,
    wheel_graph,
)
from gf2cycles.linalg import combine, fixed_subspace_basis, rank, solve_in_span
from gf2cycles.products import (
    antidiagonal_cycle,
    boundary_space,
    box_product,
    deleted_box_square,
    deleted_square_quotient_dim,
    diagonal_cycle,
    homologous,
    kunneth_reduce,
    left_cycle,
    near_diagonal_cycle,
    projections,
    right_cycle,
    span_harness,
    special_cycle,
    swap_involution,
    symmetric_square_basis,
    symmetric_square_dim,
    symmetric_square_formula,
    symmetrized_cycle,
    triodic_cycle,
)
from gf2cycles.symmetry import edge_action

K3 = complete_graph(3)
CONNECTED = [K3, complete_graph(4), complete_bipartite(2, 2), complete_bipartite(2, 3), complete_bipartite(3, 3)]


@st.composite
def trees(draw, max_v=6):
    n = draw(st.integers(1, max_v))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    return Graph.from_edges(n, [(p, v) for v, p in zip(range(1, n), parents)])


def degrees(g):
    return sorted(len(a) for a in g.adjacency)


def test_small_products():
    p = box_product(complete_graph(2), complete_graph(2)).graph
    assert (p.nverts, p.nedges, degrees(p), p.is_connected()) == (4, 4, [2] * 4, True)
    grid = box_product(path_graph(3), path_graph(3)).graph
    assert (grid.nverts, grid.nedges) == (9, 12)
    assert degrees(grid) == [2] * 4 + [3] * 4 + [4]
    p = box_product(K3, K3).graph
    assert (p.nverts, p.nedges) == (9, 18)


@pytest.mark.parametrize("K,L", [(K3, path_graph(3)), (complete_bipartite(2, 3), K3)])
def test_product_invariants(K, L):
    p = box_product(K, L)
    assert p.graph.nverts == K.nverts * L.nverts
    assert p.graph.nedges == K.nverts * L.nedges + K.nedges * L.nverts
    for b in p.boundaries:
        assert len(b) == 4 and is_one_cycle(p.graph, b)


def test_boundary_matches_display():
    p = box_product(K3, K3)
    s, t = K3.index(0, 1), K3.index(1, 2)
    assert p.boundary(s, t) == p.walk([(0, 1), (1, 1), (1, 2), (0, 2)])


@pytest.mark.parametrize("g,dim", [(K3, 2), (complete_bipartite(2, 2), 2), (complete_bipartite(2, 3), 4), (complete_graph(4), 6)])
def test_quotient_golden(g, dim):
    hs = boundary_space(box_product(g, g))
    assert hs.quotient_dim == dim
    assert hs.quotient_dim == len(hs.z1_basis) - hs.boundary_rank


@pytest.mark.parametrize("K", CONNECTED)
def test_product_with_tree(K):
    T = path_graph(4)
    assert boundary_space(box_product(K, T)).quotient_dim == K.cycle_space_dim()


@settings(max_examples=25, deadline=None)
@given(trees(), trees())
def test_trees_have_no_classes(T1, T2):
    assert boundary_space(box_product(T1, T2)).quotient_dim == 0


@pytest.mark.parametrize("K,L", list(combinations(CONNECTED, 2))[:6])
def test_kunneth_dims(K, L):
    assert boundary_space(box_product(K, L)).quotient_dim == K.cycle_space_dim() + L.cycle_space_dim()


def test_homologous_examples():
    p = box_product(K3, K3)
    d = diagonal_cycle(p, [0, 1, 2])
    assert homologous(p, d, d)
    assert homologous(p, d, symmetrized_cycle(p, 0, [0, 1, 2]))
    assert not homologous(p, left_cycle(p, 0, [0, 1, 2]), p.graph.empty())
    with pytest.raises(DomainError):
        homologous(p, p.graph.edge_set([(0, 1)]), d)


def test_diagonal_expansion():
    # diag(123) = 1 x K3 + K3 x 1 + 12#23 + 12#31 + 23#31
    p = box_product(K3, K3)
    e = K3.index
    rhs = left_cycle(p, 0, [0, 1, 2]) ^ right_cycle(p, 0, [0, 1, 2])
    for s, t in [((0, 1), (1, 2)), ((0, 1), (0, 2)), ((1, 2), (0, 2))]:
        rhs = rhs ^ p.boundary(e(*s), e(*t))
    assert diagonal_cycle(p, [0, 1, 2]) == rhs


def test_projection_examples():
    p = box_product(K3, K3)
    for b in p.boundaries:
        cx, cy = projections(p, b)
        assert not cx and not cy
    c = K3.walk([0, 1, 2])
    assert projections(p, left_cycle(p, 1, [0, 1, 2])) == (K3.empty(), c)
    assert projections(p, diagonal_cycle(p, [0, 1, 2])) == (c, c)


def test_kunneth_reduce_examples():
    p = box_product(K3, K3)
    b = p.boundaries[1]
    r = kunneth_reduce(p, b, 0, 0)
    assert not r.c_k and not r.c_l
    assert combine([x.vec for x in p.boundaries], r.witness, p.graph.nedges) == b.vec
    r = kunneth_reduce(p, diagonal_cycle(p, [0, 1, 2]), 0, 0)
    assert r.c_k == K3.full() and r.c_l == K3.full()
    two = Graph.from_edges(4, [(0, 1), (2, 3)])
    q = box_product(two, K3)
    with pytest.raises(DomainError):
        kunneth_reduce(q, q.graph.empty(), 0, 0)


@pytest.mark.parametrize("K,L", [(K3, complete_bipartite(2, 3)), (complete_graph(4), K3)])
def test_kunneth_reduce_planted(K, L):
    rng = random.Random(7)
    p = box_product(K, L)
    _, zk = cycle_space_basis(K)
    _, zl = cycle_space_basis(L)
    for _ in range(20):
        ck, cl = K.empty(), L.empty()
        for z in zk:
            if rng.random() < 0.5:
                ck = ck ^ z
        for z in zl:
            if rng.random() < 0.5:
                cl = cl ^ z
        a, b = rng.randrange(K.nverts), rng.randrange(L.nverts)
        c = p.times_vertex(ck, rng.randrange(L.nverts)) ^ p.vertex_times(rng.randrange(K.nverts), cl)
        for bd in p.boundaries:
            if rng.random() < 0.3:
                c = c ^ bd
        r = kunneth_reduce(p, c, a, b)
        assert (r.c_k, r.c_l) == (ck, cl)
        rest = c ^ p.times_vertex(ck, b) ^ p.vertex_times(a, cl)
        assert combine([x.vec for x in p.boundaries], r.witness, p.graph.nedges) == rest.vec


def test_planted_zero_left_projection():
    # a cycle whose left projection is empty is homologous to a x (right projection)
    p = box_product(complete_graph(4), K3)
    rng = random.Random(3)
    for _ in range(10):
        z = left_cycle_any(p, rng)
        _, zy = projections(p, z)
        assert homologous(p, z, p.vertex_times(rng.randrange(4), zy))


def left_cycle_any(p, rng):
    c = p.vertex_times(rng.randrange(p.left.nverts), p.right.full())
    for b in p.boundaries:
        if rng.random() < 0.4:
            c = c ^ b
    return c


def test_special_cycle_shapes():
    p = box_product(K3, K3)
    d = diagonal_cycle(p, [0, 1, 2])
    assert d == p.walk([(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)])
    a = antidiagonal_cycle(p, [0, 1, 2])
    assert a == p.walk([(0, 0), (1, 0), (1, 2), (2, 2), (2, 1), (0, 1)])
    nd = near_diagonal_cycle(p, [0, 1, 2])
    assert all(x != y for x, y in map(p.pair, nd.vertices()))
    assert special_cycle(p, "diagonal", [0, 1, 2]) == d
    with pytest.raises(ValueError):
        special_cycle(p, "diagonal", [0, 1])
    with pytest.raises(ValueError):
        special_cycle(p, "sideways", [0, 1, 2])


def test_triodic_cycle():
    S = complete_bipartite(3, 1)
    p = box_product(S, S)
    t = triodic_cycle(p, 3, 0, 1, 2)
    assert len(t) == 12 and is_one_cycle(p.graph, t)
    assert all(x != y for x, y in map(p.pair, t.vertices()))
    assert t == p.walk([(0, 2), (0, 3), (0, 1), (3, 1), (2, 1), (2, 3), (2, 0), (3, 0), (1, 0), (1, 3), (1, 2), (3, 2)])
    with pytest.raises(ValueError):
        triodic_cycle(p, 0, 1, 2, 3)


def test_deleted_square_shapes():
    d = deleted_box_square(K3).graph
    assert (d.nverts, d.nedges, degrees(d), d.is_connected()) == (6, 6, [2] * 6, True)
    d = deleted_box_square(complete_bipartite(3, 1)).graph
    assert (d.nverts, d.nedges, degrees(d), d.is_connected()) == (12, 12, [2] * 12, True)
    d = deleted_box_square(path_graph(3)).graph
    comps = d.components()
    assert len(comps) == 2 and d.nedges == 4 and degrees(d) == [1, 1, 1, 1, 2, 2]


@pytest.mark.parametrize(
    "g,dim",
    [(K3, 1), (complete_bipartite(2, 2), 1), (complete_bipartite(2, 3), 5), (complete_graph(4), 7), (complete_bipartite(3, 3), 8), (complete_graph(5), 12)],
)
def test_deleted_quotient_golden(g, dim):
    assert deleted_square_quotient_dim(g) == dim


@pytest.mark.parametrize("g", [K3, complete_graph(4), complete_bipartite(2, 3), wheel_graph(4), cycle_graph(5)])
def test_deleted_square_dim_consistent(g):
    d = deleted_box_square(g)
    assert d.cycle_space_dim() == d.graph.nedges - d.graph.nverts + len(d.graph.components())
    for b in d.boundaries:
        assert len(b) == 4 and is_one_cycle(d.graph, b)


@pytest.mark.parametrize("g", [complete_graph(2), path_graph(3), K3, complete_graph(4)])
def test_symmetric_square(g):
    assert symmetric_square_dim(g) == symmetric_square_formula(g)


def test_symmetric_square_disconnected():
    with pytest.raises(DomainError):
        symmetric_square_dim(Graph.from_edges(4, [(0, 1), (2, 3)]))


@pytest.mark.parametrize("g", [K3, complete_graph(4), path_graph(3)])
def test_symmetric_boundaries(g):
    p = box_product(g, g)
    act = edge_action(swap_involution(p))
    bvecs = [b.vec for b in p.boundaries]
    gens = [v for v in bvecs if act.apply(v) == v] + [v ^ act.apply(v) for v in bvecs]
    # symmetric elements of the boundary span
    indep = []
    for v in bvecs:
        if rank(indep + [v]) > len(indep):
            indep.append(v)
    for v in fixed_subspace_basis(indep, act):
        assert solve_in_span(gens, v) is not None


@pytest.mark.parametrize("g", [K3, complete_graph(4)])
def test_symmetric_classes(g):
    p = box_product(g, g)
    _, zk = cycle_space_basis(g)
    bvecs = [b.vec for b in p.boundaries]
    sym = [c.vec for c in symmetric_square_basis(g)]
    symmetrized = [(p.vertex_times(0, z) ^ p.times_vertex(z, 0)).vec for z in zk]
    for v in sym:
        assert solve_in_span(symmetrized + bvecs, v) is not None
    rb = rank(bvecs)
    classes = rank(sym + bvecs) - rb
    assert rank(symmetrized + bvecs) - rb == len(zk) == classes


def test_harness_examples():
    p = box_product(K3, K3)
    nd = near_diagonal_cycle(p, [0, 1, 2])
    full = span_harness(K3, nd, ["boundaries", "symmetrized"])
    assert full.in_span and full.check(nd)
    deleted = span_harness(K3, nd, ["boundaries", "symmetrized"], ambient="deleted_square")
    assert not deleted.in_span
    assert deleted.check(deleted_box_square(K3).restrict(nd))
    left = left_cycle(p, 0, [0, 1, 2])
    res = span_harness(K3, left, ["diagonal", "boundaries"])
    assert not res.in_span and res.check(left)
    with pytest.raises(ValueError):
        span_harness(K3, left, ["nonsense"])
    with pytest.raises(DomainError):
        span_harness(K3, p.graph.edge_set([(0, 1)]), ["boundaries"])


@pytest.mark.parametrize("g,star", [(complete_bipartite(3, 1), (3, 0, 1, 2)), (complete_graph(4), (0, 1, 2, 3))])
def test_triodic_not_sum_of_deleted_boundaries(g, star):
    p = box_product(g, g)
    t = triodic_cycle(p, *star)
    res = span_harness(g, t, ["boundaries"], ambient="deleted_square")
    assert not res.in_span
    assert res.check(deleted_box_square(g).restrict(t))
