"""Graphs with a canonical edge order, their 1-cycle spaces and fundamental cycles."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import BitMatrix, BitVec, combine, iter_ones, relations_span_kernel


class DomainError(ValueError):
    """Input is well formed but violates an operation's precondition."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..nverts-1``.

    ``edges`` is sorted lexicographically with ``u < v`` in each pair; edge
    ``i`` is coordinate ``i`` of every edge set over this graph.
    """

    nverts: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        prev = None
        for u, v in self.edges:
            if not u < v:
                raise ValueError(f"edge {(u, v)} is a loop or not written as (min, max)")
            if v >= self.nverts:
                raise ValueError(f"edge {(u, v)} has an endpoint outside 0..{self.nverts - 1}")
            if prev is not None and (u, v) <= prev:
                raise ValueError("edges must be sorted and duplicate-free")
            prev = (u, v)

    @classmethod
    def from_edges(cls, nverts: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build a graph from edges in any order and orientation."""
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            canon.add((min(u, v), max(u, v)))
        return cls(nverts, tuple(sorted(canon)))

    @property
    def nedges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.nverts)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(n)) for n in nbrs)

    @cached_property
    def incidence(self) -> tuple[int, ...]:
        """For each vertex, the bitmask of edges containing it."""
        masks = [0] * self.nverts
        for i, (u, v) in enumerate(self.edges):
            masks[u] |= 1 << i
            masks[v] |= 1 << i
        return tuple(masks)

    def index(self, u: int, v: int) -> int:
        try:
            return self.edge_index[(min(u, v), max(u, v))]
        except KeyError:
            raise KeyError(f"{(u, v)} is not an edge") from None

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def edge_set(self, pairs: Iterable[Sequence[int]] = ()) -> EdgeSet:
        """Edge set containing the given edges (each listed at most once)."""
        return EdgeSet(self, BitVec.from_indices(self.nedges, (self.index(u, v) for u, v in pairs)))

    def walk(self, vertices: Sequence[int]) -> EdgeSet:
        """Mod-2 sum of the edges of the closed walk ``v0 v1 ... vk v0``."""
        bits = 0
        k = len(vertices)
        for i in range(k):
            bits ^= 1 << self.index(vertices[i], vertices[(i + 1) % k])
        return EdgeSet(self, BitVec(self.nedges, bits))

    def empty(self) -> EdgeSet:
        return EdgeSet(self, BitVec.zeros(self.nedges))

    def full(self) -> EdgeSet:
        return EdgeSet(self, BitVec(self.nedges, (1 << self.nedges) - 1))

    def components(self) -> list[list[int]]:
        seen = [False] * self.nverts
        comps = []
        for s in range(self.nverts):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def cycle_space_dim(self) -> int:
        return self.nedges - self.nverts + len(self.components())

    def to_json(self) -> dict:
        return {"nverts": self.nverts, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> Graph:
        return cls.from_edges(int(data["nverts"]), data["edges"])


@dataclass(frozen=True)
class EdgeSet:
    """A set of edges of ``host``, stored as a vector over its edge indices."""

    host: Graph = field(repr=False)
    vec: BitVec

    def __post_init__(self) -> None:
        if self.vec.size != self.host.nedges:
            raise ValueError("edge set length does not match the host graph")

    def _check(self, other: EdgeSet) -> None:
        if other.host is not self.host and other.host != self.host:
            raise ValueError("edge sets live on different graphs")

    def __xor__(self, other: EdgeSet) -> EdgeSet:
        self._check(other)
        return EdgeSet(self.host, self.vec ^ other.vec)

    def __bool__(self) -> bool:
        return bool(self.vec)

    def __len__(self) -> int:
        return self.vec.weight()

    def __contains__(self, edge: Sequence[int]) -> bool:
        u, v = edge
        i = self.host.edge_index.get((min(u, v), max(u, v)))
        return i is not None and bool(self.vec[i])

    def indices(self) -> list[int]:
        return self.vec.ones()

    def pairs(self) -> list[tuple[int, int]]:
        return [self.host.edges[i] for i in iter_ones(self.vec.bits)]

    def degree(self, v: int) -> int:
        return (self.host.incidence[v] & self.vec.bits).bit_count()

    def vertices(self) -> set[int]:
        return {x for e in self.pairs() for x in e}


def _check_host(g: Graph, c: EdgeSet) -> None:
    if c.host is not g and c.host != g:
        raise ValueError("edge set is not hosted on this graph")


def is_one_cycle(g: Graph, c: EdgeSet) -> bool:
    """Every vertex meets an even number of edges of ``c``."""
    _check_host(g, c)
    bits = c.vec.bits
    return all((m & bits).bit_count() % 2 == 0 for m in g.incidence)


# ---------------------------------------------------------------------------
# named generators


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_bipartite(m: int, n: int) -> Graph:
    """Left part ``0..m-1``, right part ``m..m+n-1``; the copy j' of left vertex j is ``m+j``."""
    return Graph(m + n, tuple((a, m + b) for a in range(m) for b in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices."""
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def wheel_graph(n: int) -> Graph:
    """Hub 0 joined to every vertex of the rim cycle 1..n."""
    if n < 3:
        raise ValueError("a wheel needs a rim of at least 3 vertices")
    rim = [(j, j + 1) for j in range(1, n)] + [(1, n)]
    return Graph.from_edges(n + 1, [(0, j) for j in range(1, n + 1)] + rim)


def tilde_graph(n: int) -> Graph:
    """K_{n,n} without the n edges joining j to its copy j' (vertex n+j)."""
    return Graph(2 * n, tuple((a, n + b) for a in range(n) for b in range(n) if a != b))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.nverts
    return Graph.from_edges(offset, edges)


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    """Replace edge uv by the path u - w - v through a new vertex w."""
    if not g.has_edge(u, v):
        raise KeyError(f"{(u, v)} is not an edge")
    w = g.nverts
    edges = [e for e in g.edges if e != (min(u, v), max(u, v))] + [(u, w), (v, w)]
    return Graph.from_edges(g.nverts + 1, edges)


_GENERATORS = {
    "complete": (complete_graph, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "cycle": (cycle_graph, 1),
    "path": (path_graph, 1),
    "wheel": (wheel_graph, 1),
    "tilde": (tilde_graph, 1),
}


def named_graph(name: str, *params):
    """Build a graph from a generator name and its parameters.

    ``disjoint_union`` takes graphs, ``subdivide_edge`` a graph and two
    endpoints; the others take positive integers.
    """
    if name == "disjoint_union":
        if not params or not all(isinstance(p, Graph) for p in params):
            raise ValueError("disjoint_union takes one or more graphs")
        return disjoint_union(*params)
    if name == "subdivide_edge":
        if len(params) != 3 or not isinstance(params[0], Graph):
            raise ValueError("subdivide_edge takes a graph and two endpoints")
        return subdivide_edge(*params)
    if name not in _GENERATORS:
        raise ValueError(f"unknown generator {name!r}")
    fn, arity = _GENERATORS[name]
    if len(params) != arity:
        raise ValueError(f"{name} takes {arity} parameter(s), got {len(params)}")
    if not all(isinstance(p, int) and p > 0 for p in params):
        raise ValueError(f"{name} parameters must be positive integers")
    return fn(*params)


# ---------------------------------------------------------------------------
# spanning forests and fundamental cycles


@dataclass(frozen=True)
class SpanningForest:
    host: Graph = field(repr=False)
    tree_edges: EdgeSet
    components: int
    parent: tuple[int, ...]  # -1 at roots
    parent_edge: tuple[int, ...]
    depth: tuple[int, ...]
    nontree: tuple[int, ...]

    def path_edges(self, u: int, v: int) -> int:
        """Bitmask of tree edges on the path between u and v (same component)."""
        bits = 0
        d, p, pe = self.depth, self.parent, self.parent_edge
        while d[u] > d[v]:
            bits ^= 1 << pe[u]
            u = p[u]
        while d[v] > d[u]:
            bits ^= 1 << pe[v]
            v = p[v]
        while u != v:
            if p[u] < 0 or p[v] < 0:
                raise DomainError("vertices lie in different components")
            bits ^= (1 << pe[u]) ^ (1 << pe[v])
            u, v = p[u], p[v]
        return bits

    def fundamental_cycle(self, edge: int) -> EdgeSet:
        g = self.host
        if self.tree_edges.vec[edge]:
            raise ValueError(f"edge {g.edges[edge]} is a tree edge")
        u, v = g.edges[edge]
        return EdgeSet(g, BitVec(g.nedges, self.path_edges(u, v) | (1 << edge)))


def spanning_forest(g: Graph) -> SpanningForest:
    """Breadth-first forest grown from the smallest vertex of each component."""
    n = g.nverts
    parent = [-1] * n
    parent_edge = [-1] * n
    depth = [0] * n
    seen = [False] * n
    tree = 0
    comps = 0
    for s in range(n):
        if seen[s]:
            continue
        comps += 1
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = u
                    e = g.index(u, w)
                    parent_edge[w] = e
                    depth[w] = depth[u] + 1
                    tree |= 1 << e
                    queue.append(w)
    nontree = tuple(i for i in range(g.nedges) if not (tree >> i) & 1)
    return SpanningForest(
        g,
        EdgeSet(g, BitVec(g.nedges, tree)),
        comps,
        tuple(parent),
        tuple(parent_edge),
        tuple(depth),
        nontree,
    )


def cycle_space_basis(g: Graph) -> tuple[SpanningForest, list[EdgeSet]]:
    """Fundamental cycles, one per non-tree edge in edge-index order."""
    forest = spanning_forest(g)
    return forest, [forest.fundamental_cycle(e) for e in forest.nontree]


def decompose_cycle(g: Graph, forest: SpanningForest, c: EdgeSet) -> BitVec:
    """Coefficients of ``c`` over the fundamental cycles of ``forest``.

    The coefficient of a fundamental cycle is 1 exactly when its non-tree
    edge lies in ``c``.
    """
    _check_host(g, c)
    if not is_one_cycle(g, c):
        raise DomainError("not a 1-cycle")
    coeffs = BitVec(len(forest.nontree), sum(1 << k for k, e in enumerate(forest.nontree) if c.vec[e]))
    basis = [forest.fundamental_cycle(e).vec for e in forest.nontree]
    assert combine(basis, coeffs, g.nedges) == c.vec
    return coeffs


def simple_cycle_split(g: Graph, c: EdgeSet) -> list[EdgeSet]:
    """Split a 1-cycle into edge-disjoint simple cycles.

    Walks along unused edges until a vertex repeats, peels off the simple
    cycle closed at that vertex and continues.
    """
    _check_host(g, c)
    if not is_one_cycle(g, c):
        raise DomainError("not a 1-cycle")
    remaining = c.vec.bits
    out = []
    while remaining:
        start = g.edges[(remaining & -remaining).bit_length() - 1][0]
        path = [start]
        pos = {start: 0}
        while True:
            u = path[-1]
            avail = g.incidence[u] & remaining
            if not avail:
                # only a bare start vertex can run out of edges
                break
            e = avail & -avail
            remaining ^= e
            a, b = g.edges[e.bit_length() - 1]
            w = b if a == u else a
            if w not in pos:
                pos[w] = len(path)
                path.append(w)
                continue
            loop = path[pos[w]:]
            bits = e
            for i in range(len(loop) - 1):
                bits |= 1 << g.index(loop[i], loop[i + 1])
            out.append(EdgeSet(g, BitVec(g.nedges, bits)))
            for x in loop[1:]:
                del pos[x]
            del path[pos[w] + 1:]
    return out


def simple_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All simple cycles as vertex sequences.

    Each cycle starts at its smallest vertex and is listed in the direction
    whose second vertex is smaller than its last.
    """
    out = []
    adj = g.adjacency
    for s in range(g.nverts):
        stack = [(s, [s], 1 << s)]
        while stack:
            u, path, used = stack.pop()
            for w in adj[u]:
                if w < s:
                    continue
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif not (used >> w) & 1:
                    stack.append((w, path + [w], used | (1 << w)))
    out.sort(key=lambda c: (len(c), c))
    return out


def relation_space_check(generators: Sequence[EdgeSet], elementary_relations: Sequence[BitVec]) -> bool:
    """Do the given relations span every linear relation among ``generators``?"""
    return relations_span_kernel([c.vec for c in generators], elementary_relations)


def incidence_matrix(g: Graph) -> BitMatrix:
    """Vertex-by-edge incidence; its kernel is the 1-cycle space."""
    return BitMatrix.from_ints(g.nedges, g.incidence)
