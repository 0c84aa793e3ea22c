"""Box products of graphs, 1-cycles modulo boundaries and deleted box-squares."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .graphs import (
    DomainError,
    EdgeSet,
    Graph,
    cycle_space_basis,
    is_one_cycle,
    simple_cycles,
)
from .linalg import BitVec, fixed_subspace_basis, rank, separating_functional, solve_in_span
from .symmetry import Involution, edge_action

# edge labels: ("v", a, tau) is (a, tau) with a in V(K), tau in E(L);
#              ("e", sigma, b) is (sigma, b) with sigma in E(K), b in V(L)
Label = tuple


@dataclass(frozen=True)
class BoxProduct:
    """K box L on vertex pairs (a, b), flattened to ``a * |V(L)| + b``."""

    left: Graph
    right: Graph

    @cached_property
    def graph(self) -> Graph:
        K, L = self.left, self.right
        m = L.nverts
        edges = [(a * m + u, a * m + v) for a in range(K.nverts) for u, v in L.edges]
        edges += [(u * m + b, v * m + b) for u, v in K.edges for b in range(m)]
        return Graph.from_edges(K.nverts * m, edges)

    def vertex(self, a: int, b: int) -> int:
        return a * self.right.nverts + b

    def pair(self, v: int) -> tuple[int, int]:
        return divmod(v, self.right.nverts)

    @cached_property
    def labels(self) -> tuple[Label, ...]:
        out = []
        for x, y in self.graph.edges:
            a, b = self.pair(x)
            c, d = self.pair(y)
            if a == c:
                out.append(("v", a, self.right.index(b, d)))
            else:
                out.append(("e", self.left.index(a, c), b))
        return tuple(out)

    def vertex_edge(self, a: int, tau: int) -> int:
        """Index of the product edge (a, tau)."""
        u, v = self.right.edges[tau]
        return self.graph.index(self.vertex(a, u), self.vertex(a, v))

    def edge_vertex(self, sigma: int, b: int) -> int:
        """Index of the product edge (sigma, b)."""
        u, v = self.left.edges[sigma]
        return self.graph.index(self.vertex(u, b), self.vertex(v, b))

    def boundary(self, sigma: int, tau: int) -> EdgeSet:
        """The 4-cycle (a,u)(b,u)(b,v)(a,v) for sigma = ab, tau = uv."""
        a, b = self.left.edges[sigma]
        u, v = self.right.edges[tau]
        idx = [self.edge_vertex(sigma, u), self.vertex_edge(b, tau), self.edge_vertex(sigma, v), self.vertex_edge(a, tau)]
        return EdgeSet(self.graph, BitVec.from_indices(self.graph.nedges, idx))

    @cached_property
    def cells(self) -> tuple[tuple[int, int], ...]:
        return tuple((s, t) for s in range(self.left.nedges) for t in range(self.right.nedges))

    @cached_property
    def boundaries(self) -> tuple[EdgeSet, ...]:
        return tuple(self.boundary(s, t) for s, t in self.cells)

    def vertex_times(self, a: int, c: EdgeSet) -> EdgeSet:
        """a x C: the copy of an edge set of L in the fibre over vertex a of K."""
        if c.host != self.right:
            raise ValueError("edge set is not on the right factor")
        return EdgeSet(self.graph, BitVec.from_indices(self.graph.nedges, (self.vertex_edge(a, t) for t in c.indices())))

    def times_vertex(self, c: EdgeSet, b: int) -> EdgeSet:
        """C x b: the copy of an edge set of K over vertex b of L."""
        if c.host != self.left:
            raise ValueError("edge set is not on the left factor")
        return EdgeSet(self.graph, BitVec.from_indices(self.graph.nedges, (self.edge_vertex(s, b) for s in c.indices())))

    def walk(self, pairs: Sequence[tuple[int, int]]) -> EdgeSet:
        """Edge set of the closed walk through the given vertex pairs."""
        return self.graph.walk([self.vertex(a, b) for a, b in pairs])


def box_product(K: Graph, L: Graph) -> BoxProduct:
    return BoxProduct(K, L)


@dataclass(frozen=True)
class HomologySpace:
    z1_basis: list[EdgeSet] = field(repr=False)
    boundary_rank: int
    quotient_dim: int


def boundary_space(p: BoxProduct) -> HomologySpace:
    _, basis = cycle_space_basis(p.graph)
    r = rank(b.vec for b in p.boundaries)
    return HomologySpace(basis, r, len(basis) - r)


def _require_cycle(p: BoxProduct, c: EdgeSet) -> None:
    if not is_one_cycle(p.graph, c):
        raise DomainError("not a 1-cycle of the product")


def homologous(p: BoxProduct, c1: EdgeSet, c2: EdgeSet) -> bool:
    _require_cycle(p, c1)
    _require_cycle(p, c2)
    return solve_in_span([b.vec for b in p.boundaries], (c1 ^ c2).vec) is not None


def projections(p: BoxProduct, c: EdgeSet) -> tuple[EdgeSet, EdgeSet]:
    """Mod-2 projections (c_x on K, c_y on L) of a 1-cycle of K box L."""
    _require_cycle(p, c)
    cx = cy = 0
    for i in c.indices():
        kind, x, y = p.labels[i]
        if kind == "v":
            cy ^= 1 << y
        else:
            cx ^= 1 << x
    return EdgeSet(p.left, BitVec(p.left.nedges, cx)), EdgeSet(p.right, BitVec(p.right.nedges, cy))


@dataclass(frozen=True)
class KunnethReduction:
    c_k: EdgeSet
    c_l: EdgeSet
    witness: BitVec  # coefficients over p.boundaries


def kunneth_reduce(p: BoxProduct, c: EdgeSet, a: int, b: int) -> KunnethReduction:
    """Write c ~ c_x x b + a x c_y and return the boundaries making up the difference."""
    if not (p.left.is_connected() and p.right.is_connected()):
        raise DomainError("both factors must be connected")
    ck, cl = projections(p, c)
    rest = c ^ p.times_vertex(ck, b) ^ p.vertex_times(a, cl)
    witness = solve_in_span([x.vec for x in p.boundaries], rest.vec)
    if witness is None:
        raise AssertionError("difference is not a sum of boundaries")
    return KunnethReduction(ck, cl, witness)


# ---------------------------------------------------------------------------
# special cycles in K box K


def _square(p: BoxProduct) -> Graph:
    if p.left != p.right:
        raise ValueError("special cycles live in the square K box K")
    return p.left


def _cycle_vertices(K: Graph, cycle: Sequence[int], minimum: int = 3) -> list[int]:
    cyc = list(cycle)
    if len(cyc) < minimum or len(set(cyc)) != len(cyc):
        raise ValueError(f"need a simple cycle with at least {minimum} vertices")
    for i in range(len(cyc)):
        if not K.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]):
            raise ValueError(f"{cyc} is not a cycle of the graph")
    return cyc


def left_cycle(p: BoxProduct, a: int, cycle: Sequence[int]) -> EdgeSet:
    K = _square(p)
    return p.vertex_times(a, K.walk(_cycle_vertices(K, cycle)))


def right_cycle(p: BoxProduct, a: int, cycle: Sequence[int]) -> EdgeSet:
    K = _square(p)
    return p.times_vertex(K.walk(_cycle_vertices(K, cycle)), a)


def symmetrized_cycle(p: BoxProduct, a: int, cycle: Sequence[int]) -> EdgeSet:
    return left_cycle(p, a, cycle) ^ right_cycle(p, a, cycle)


def diagonal_cycle(p: BoxProduct, cycle: Sequence[int]) -> EdgeSet:
    """(v1,v1)(v1,v2)(v2,v2)(v2,v3)...(vk,vk)(vk,v1)."""
    v = _cycle_vertices(_square(p), cycle)
    k = len(v)
    walk = []
    for i in range(k):
        walk += [(v[i], v[i]), (v[i], v[(i + 1) % k])]
    return p.walk(walk)


def near_diagonal_cycle(p: BoxProduct, cycle: Sequence[int]) -> EdgeSet:
    """(v1,v2)(v1,v3)(v2,v3)(v2,v4)...(vk,v1)(vk,v2)."""
    v = _cycle_vertices(_square(p), cycle)
    k = len(v)
    walk = []
    for i in range(k):
        walk += [(v[i], v[(i + 1) % k]), (v[i], v[(i + 2) % k])]
    return p.walk(walk)


def antidiagonal_cycle(p: BoxProduct, cycle: Sequence[int]) -> EdgeSet:
    """(v1,v1)(v2,v1)(v2,vk)(v3,vk)...(vk,v2)(v1,v2): first coordinate runs
    forward, second backward."""
    v = _cycle_vertices(_square(p), cycle)
    k = len(v)
    walk = []
    for i in range(k):
        walk += [(v[i], v[-i % k]), (v[(i + 1) % k], v[-i % k])]
    return p.walk(walk)


def triodic_cycle(p: BoxProduct, center: int, leaf1: int, leaf2: int, leaf3: int) -> EdgeSet:
    """12-edge cycle of a K_{3,1} subgraph with the given center and leaves.

    With leaves 1, 2, 3 and center o the walk is
    (1,3)(1,o)(1,2)(o,2)(3,2)(3,o) followed by the same six vertices with
    coordinates swapped.
    """
    K = _square(p)
    leaves = (leaf1, leaf2, leaf3)
    if len({center, *leaves}) != 4 or not all(K.has_edge(center, x) for x in leaves):
        raise ValueError("center and leaves do not span a K_{3,1} subgraph")
    o = center
    half = [(leaf1, leaf3), (leaf1, o), (leaf1, leaf2), (o, leaf2), (leaf3, leaf2), (leaf3, o)]
    return p.walk(half + [(y, x) for x, y in half])


def special_cycle(p: BoxProduct, kind: str, *args) -> EdgeSet:
    """Dispatch by name: left/right/symmetrized take (a, cycle); diagonal,
    near_diagonal, antidiagonal take (cycle); triodic takes (center, l1, l2, l3)."""
    makers = {
        "left": left_cycle,
        "right": right_cycle,
        "symmetrized": symmetrized_cycle,
        "diagonal": diagonal_cycle,
        "near_diagonal": near_diagonal_cycle,
        "antidiagonal": antidiagonal_cycle,
        "triodic": triodic_cycle,
    }
    if kind not in makers:
        raise ValueError(f"unknown special cycle {kind!r}")
    return makers[kind](p, *args)


# ---------------------------------------------------------------------------
# deleted box-square


@dataclass(frozen=True)
class DeletedBoxSquare:
    """Induced subgraph of K box K on pairs (a, b) with a != b."""

    base: Graph
    square: BoxProduct = field(repr=False)
    graph: Graph = field(repr=False)
    vertices: tuple[int, ...]  # square-vertex of each deleted-square vertex
    edge_map: dict[int, int] = field(repr=False)  # square edge -> deleted edge
    cells: tuple[tuple[int, int], ...]
    boundaries: tuple[EdgeSet, ...] = field(repr=False)

    def restrict(self, c: EdgeSet) -> EdgeSet:
        """Carry an edge set of K box K that avoids the diagonal into this graph."""
        if c.host != self.square.graph:
            raise ValueError("edge set is not on the square")
        try:
            idx = [self.edge_map[i] for i in c.indices()]
        except KeyError:
            raise DomainError("edge set meets the diagonal") from None
        return EdgeSet(self.graph, BitVec.from_indices(self.graph.nedges, idx))

    def lift(self, c: EdgeSet) -> EdgeSet:
        inv = {d: s for s, d in self.edge_map.items()}
        return EdgeSet(self.square.graph, BitVec.from_indices(self.square.graph.nedges, (inv[i] for i in c.indices())))

    def cycle_space_dim(self) -> int:
        return self.graph.cycle_space_dim()


def _adjacent_edges(K: Graph, s: int, t: int) -> bool:
    return bool(set(K.edges[s]) & set(K.edges[t]))


def deleted_box_square(K: Graph) -> DeletedBoxSquare:
    p = box_product(K, K)
    keep = [v for v in range(p.graph.nverts) if p.pair(v)[0] != p.pair(v)[1]]
    new = {v: i for i, v in enumerate(keep)}
    pairs, order = [], []
    for i, (x, y) in enumerate(p.graph.edges):
        if x in new and y in new:
            pairs.append((new[x], new[y]))
            order.append(i)
    g = Graph.from_edges(len(keep), pairs)
    edge_map = {i: g.index(new[x], new[y]) for i, (x, y) in ((i, p.graph.edges[i]) for i in order)}
    cells = tuple((s, t) for s, t in p.cells if not _adjacent_edges(K, s, t))
    proto = DeletedBoxSquare(K, p, g, tuple(keep), edge_map, cells, ())
    bnds = tuple(proto.restrict(p.boundary(s, t)) for s, t in cells)
    return DeletedBoxSquare(K, p, g, tuple(keep), edge_map, cells, bnds)


def deleted_square_quotient_dim(K: Graph) -> int:
    d = deleted_box_square(K)
    return d.cycle_space_dim() - rank(b.vec for b in d.boundaries)


def swap_involution(p: BoxProduct) -> Involution:
    """(x, y) -> (y, x) on the vertices of K box K."""
    _square(p)
    n = p.left.nverts
    return Involution(p.graph, tuple(p.vertex(b, a) for a in range(n) for b in range(n)))


def symmetric_square_basis(K: Graph) -> list[EdgeSet]:
    p = box_product(K, K)
    _, basis = cycle_space_basis(p.graph)
    fixed = fixed_subspace_basis([c.vec for c in basis], edge_action(swap_involution(p)))
    return [EdgeSet(p.graph, v) for v in fixed]


def symmetric_square_dim(K: Graph) -> int:
    """Dimension of the swap-symmetric 1-cycles of K box K (K connected)."""
    if not K.is_connected():
        raise DomainError("graph is not connected")
    return len(symmetric_square_basis(K))


def symmetric_square_formula(K: Graph) -> int:
    V, E = K.nverts, K.nedges
    return V * E - V * (V - 1) // 2


# ---------------------------------------------------------------------------
# span harness

FAMILIES = ("boundaries", "left", "right", "symmetrized", "diagonal", "near_diagonal", "antidiagonal", "triodic")


def _oriented(cycles: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    out = []
    for c in cycles:
        out += [c, (c[0],) + tuple(reversed(c[1:]))]
    return out


def family_members(p: BoxProduct, name: str) -> list[tuple[str, EdgeSet]]:
    """All members of a named family in K box K, deduplicated, with labels."""
    K = _square(p)
    cycles = simple_cycles(K)
    found: dict[int, tuple[str, EdgeSet]] = {}

    def put(label: str, c: EdgeSet) -> None:
        if c and c.vec.bits not in found:
            found[c.vec.bits] = (label, c)

    if name == "boundaries":
        for (s, t), b in zip(p.cells, p.boundaries):
            put(f"{K.edges[s]}#{K.edges[t]}", b)
    elif name in ("left", "right", "symmetrized"):
        maker = {"left": left_cycle, "right": right_cycle, "symmetrized": symmetrized_cycle}[name]
        for a in range(K.nverts):
            for c in cycles:
                put(f"{name}({a},{c})", maker(p, a, c))
    elif name in ("diagonal", "near_diagonal"):
        maker = diagonal_cycle if name == "diagonal" else near_diagonal_cycle
        for c in _oriented(cycles):
            put(f"{name}{c}", maker(p, c))
    elif name == "antidiagonal":
        for c in _oriented(cycles):
            for r in range(len(c)):
                rot = c[r:] + c[:r]
                put(f"antidiagonal{rot}", antidiagonal_cycle(p, rot))
    elif name == "triodic":
        for o in range(K.nverts):
            nbrs = K.adjacency[o]
            for x in nbrs:
                for y in nbrs:
                    for z in nbrs:
                        if len({x, y, z}) == 3:
                            put(f"triodic({o};{x},{y},{z})", triodic_cycle(p, o, x, y, z))
    else:
        raise ValueError(f"unknown family {name!r}; expected one of {FAMILIES}")
    return list(found.values())


@dataclass(frozen=True)
class HarnessResult:
    verdict: str  # "IN_SPAN" or "NOT_IN_SPAN"
    generators: list[tuple[str, EdgeSet]] = field(repr=False)
    coefficients: BitVec | None = None
    functional: BitVec | None = None

    @property
    def in_span(self) -> bool:
        return self.verdict == "IN_SPAN"

    def used(self) -> list[str]:
        if self.coefficients is None:
            return []
        return [self.generators[i][0] for i in self.coefficients.ones()]

    def check(self, target: EdgeSet) -> bool:
        """Re-verify the certificate from scratch."""
        vecs = [g.vec for _, g in self.generators]
        if self.in_span:
            acc = BitVec.zeros(target.vec.size)
            for i in self.coefficients.ones():
                acc = acc ^ vecs[i]
            return acc == target.vec
        return self.functional.dot(target.vec) == 1 and all(self.functional.dot(v) == 0 for v in vecs)


def span_harness(
    K: Graph,
    target: EdgeSet,
    families: Sequence[str],
    ambient: str = "square",
    mod_boundaries: bool = False,
) -> HarnessResult:
    """Decide whether ``target`` is a sum of members of the named families.

    ``target`` is an edge set of K box K.  With ``ambient="deleted_square"``
    only family members avoiding the diagonal take part and the question is
    asked inside the deleted box-square.  The answer carries either the
    coefficients of a representation or a functional vanishing on every
    generator but not on the target.
    """
    if ambient not in ("square", "deleted_square"):
        raise ValueError(f"unknown ambient {ambient!r}")
    p = box_product(K, K)
    if target.host != p.graph:
        raise ValueError("target is not an edge set of K box K")
    names = list(families)
    if mod_boundaries and "boundaries" not in names:
        names.append("boundaries")
    for name in names:
        if name not in FAMILIES:
            raise ValueError(f"unknown family {name!r}; expected one of {FAMILIES}")
    members = [m for name in names for m in family_members(p, name)]
    if ambient == "deleted_square":
        d = deleted_box_square(K)
        if not is_one_cycle(p.graph, target):
            raise DomainError("target is not a 1-cycle")
        tgt = d.restrict(target)
        gens = []
        for label, c in members:
            try:
                gens.append((label, d.restrict(c)))
            except DomainError:
                continue
    else:
        if not is_one_cycle(p.graph, target):
            raise DomainError("target is not a 1-cycle")
        tgt, gens = target, members
    vecs = [c.vec for _, c in gens]
    coeffs = solve_in_span(vecs, tgt.vec)
    if coeffs is not None:
        return HarnessResult("IN_SPAN", gens, coefficients=coeffs)
    return HarnessResult("NOT_IN_SPAN", gens, functional=separating_functional(vecs, tgt.vec))
