"""Involutions of graphs and the symmetric part of the cycle space."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graphs import (
    DomainError,
    EdgeSet,
    Graph,
    complete_graph,
    cycle_space_basis,
    is_one_cycle,
    tilde_graph,
)
from .linalg import BitMatrix, BitVec, fixed_subspace_basis


@dataclass(frozen=True)
class Involution:
    """Edge-preserving vertex permutation ``perm`` with ``perm[perm[v]] == v``."""

    host: Graph = field(repr=False)
    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        perm = tuple(self.perm)
        object.__setattr__(self, "perm", perm)
        n = self.host.nverts
        if sorted(perm) != list(range(n)):
            raise ValueError("perm is not a permutation of the vertices")
        if any(perm[perm[v]] != v for v in range(n)):
            raise ValueError("perm is not an involution")
        for u, v in self.host.edges:
            if not self.host.has_edge(perm[u], perm[v]):
                raise ValueError(f"perm does not preserve edge {(u, v)}")

    @classmethod
    def identity(cls, g: Graph) -> Involution:
        return cls(g, tuple(range(g.nverts)))

    def fixed_vertices(self) -> list[int]:
        return [v for v, w in enumerate(self.perm) if v == w]

    def edge_perm(self) -> tuple[int, ...]:
        g, p = self.host, self.perm
        return tuple(g.index(p[u], p[v]) for u, v in g.edges)

    def symmetric_edges(self) -> list[int]:
        return [i for i, j in enumerate(self.edge_perm()) if i == j]

    def apply(self, c: EdgeSet) -> EdgeSet:
        ep = self.edge_perm()
        return EdgeSet(self.host, BitVec.from_indices(c.vec.size, (ep[i] for i in c.indices())))


def part_swap(n: int) -> Involution:
    """The involution j <-> j' of the graph ``tilde_graph(n)``."""
    return Involution(tilde_graph(n), tuple(range(n, 2 * n)) + tuple(range(n)))


def antipodal(g: Graph) -> Involution:
    """Antipodal map of an even cycle on vertices 0..n-1 in cyclic order."""
    n = g.nverts
    if n % 2:
        raise ValueError("antipodal map needs an even cycle")
    return Involution(g, tuple((v + n // 2) % n for v in range(n)))


def edge_action(t: Involution) -> BitMatrix:
    """Permutation matrix of the induced action on edge sets."""
    return BitMatrix.from_permutation(t.edge_perm())


@dataclass(frozen=True)
class SymmetryReport:
    fixed_vertices: int
    symmetric_edges: int
    symmetric_dim: int
    formula_dim: int | None = None

    @property
    def agrees(self) -> bool | None:
        if self.formula_dim is None:
            return None
        return self.formula_dim == self.symmetric_dim


def symmetric_cycle_basis(g: Graph, t: Involution) -> list[EdgeSet]:
    if t.host != g:
        raise ValueError("involution acts on a different graph")
    _, basis = cycle_space_basis(g)
    fixed = fixed_subspace_basis([c.vec for c in basis], edge_action(t))
    return [EdgeSet(g, v) for v in fixed]


def symmetric_formula(g: Graph, t: Involution) -> int | None:
    """(E - V + 2)/2 with no symmetric edges, (E - V + I)/2 with I of them;
    None unless g is connected and t fixes no vertex."""
    if t.fixed_vertices() or not g.is_connected():
        return None
    diff = g.nedges - g.nverts
    nsym = len(t.symmetric_edges())
    return (diff + 2) // 2 if nsym == 0 else (diff + nsym) // 2


def symmetric_cycle_dim(g: Graph, t: Involution) -> SymmetryReport:
    """Dimension of the symmetric 1-cycles, with the closed form when it applies.

    The closed form is (E - V + 2)/2 without symmetric edges and
    (E - V + I)/2 with I > 0 of them, valid for connected graphs whose
    involution fixes no vertex.
    """
    dim = len(symmetric_cycle_basis(g, t))
    report = SymmetryReport(len(t.fixed_vertices()), len(t.symmetric_edges()), dim, symmetric_formula(g, t))
    if report.agrees is False:
        raise AssertionError(f"closed form {report.formula_dim} disagrees with computed dimension {dim}")
    return report


def subdivide_all(g: Graph, t: Involution) -> tuple[Graph, Involution]:
    """Subdivide every edge; edge ``i`` gets the midpoint vertex ``V + i``."""
    n = g.nverts
    edges = []
    for i, (u, v) in enumerate(g.edges):
        edges += [(u, n + i), (v, n + i)]
    h = Graph.from_edges(n + g.nedges, edges)
    ep = t.edge_perm()
    return h, Involution(h, t.perm + tuple(n + ep[i] for i in range(g.nedges)))


def satisfies_star(g: Graph, t: Involution) -> bool:
    """No vertex is adjacent to two distinct mutually symmetric vertices."""
    p = t.perm
    for v in range(g.nverts):
        nbrs = set(g.adjacency[v])
        if any(p[u] != u and p[u] in nbrs for u in nbrs):
            return False
    return True


def quotient_graph(g: Graph, t: Involution) -> Graph:
    """Glue each vertex with its image; orbits are numbered by smallest member."""
    if t.host != g:
        raise ValueError("involution acts on a different graph")
    if not g.is_connected():
        raise DomainError("graph is not connected")
    if t.fixed_vertices():
        raise DomainError("involution has fixed vertices")
    if t.symmetric_edges():
        raise DomainError("involution has symmetric edges")
    if not satisfies_star(g, t):
        raise DomainError("some vertex is adjacent to two mutually symmetric vertices")
    reps = sorted(v for v in range(g.nverts) if v < t.perm[v])
    orbit = {}
    for k, v in enumerate(reps):
        orbit[v] = orbit[t.perm[v]] = k
    return Graph.from_edges(len(reps), [(orbit[u], orbit[v]) for u, v in g.edges])


def tilde_unfold(n: int, d: EdgeSet) -> EdgeSet:
    """Inverse of :func:`tilde_fold`: edge ij of K_n becomes {ij', ji'}."""
    g = tilde_graph(n)
    pairs = []
    for i, j in d.pairs():
        pairs += [(i, n + j), (j, n + i)]
    return g.edge_set(pairs)


def tilde_fold(n: int, c: EdgeSet) -> EdgeSet:
    """Send a part-swap symmetric 1-cycle of tilde n to a 1-cycle of K_n.

    Vertices i and i' are both sent to i, so ij' and ji' both land on ij.
    """
    g = tilde_graph(n)
    t = part_swap(n)
    if not is_one_cycle(g, c):
        raise DomainError("not a 1-cycle")
    if t.apply(c) != c:
        raise DomainError("not symmetric under the part swap")
    kn = complete_graph(n)
    pairs = {(min(u, v - n), max(u, v - n)) for u, v in c.pairs()}
    out = kn.edge_set(sorted(pairs))
    assert tilde_unfold(n, out) == c
    return out


def tilde_hat(n: int, i: int, j: int) -> EdgeSet:
    """Sum of the edges of the closed walk 1 2' 3 1' i j' (1-based labels)."""
    g = tilde_graph(n)
    walk = [0, n + 1, 2, n, i - 1, n + j - 1]
    bits = 0
    for k in range(6):
        bits ^= 1 << g.index(walk[k], walk[(k + 1) % 6])
    return EdgeSet(g, BitVec(g.nedges, bits))


def tilde_hat_basis(n: int) -> list[EdgeSet]:
    """Cycles ``tilde_hat(n, i, j)`` over edges ij' with i, j > 1 and (i, j) != (3, 2)."""
    if n < 3:
        raise ValueError("needs n >= 3")
    return [
        tilde_hat(n, i, j)
        for i in range(2, n + 1)
        for j in range(2, n + 1)
        if i != j and (i, j) != (3, 2)
    ]


def tilde_symmetric_basis(n: int) -> tuple[EdgeSet, list[tuple[EdgeSet, EdgeSet]]]:
    """Basis of the cycle space of tilde n made of one fixed cycle and swapped pairs.

    Returns the 6-cycle on {1,2,3,1',2',3'} and pairs (hat(ij'), hat(23') + hat(ji'))
    for i > j > 1, (i, j) != (3, 2); the part swap exchanges the two members of
    each pair.
    """
    fixed = tilde_hat(n, 2, 3)
    pairs = []
    for j, i in combinations(range(2, n + 1), 2):
        if (i, j) != (3, 2):
            pairs.append((tilde_hat(n, i, j), fixed ^ tilde_hat(n, j, i)))
    return fixed, pairs
