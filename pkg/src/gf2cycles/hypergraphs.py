"""2-hypergraphs (vertex sets with triangular faces), their 2-cycles and rook cycles."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from math import comb
from typing import Iterable, Sequence

from .graphs import DomainError, EdgeSet, Graph
from .linalg import BitMatrix, BitVec, dependencies, kernel_basis, rank, relations_span_kernel

Face = tuple[int, int, int]


@dataclass(frozen=True)
class Hypergraph2:
    """Faces are sorted vertex triples; edges are the 2-subsets of faces."""

    nverts: int
    faces: tuple[Face, ...]

    def __post_init__(self) -> None:
        faces = tuple(tuple(sorted(f)) for f in self.faces)
        object.__setattr__(self, "faces", faces)
        for f in faces:
            if len(f) != 3 or len(set(f)) != 3:
                raise ValueError(f"face {f} does not have 3 distinct vertices")
            if f[0] < 0 or f[2] >= self.nverts:
                raise ValueError(f"face {f} has a vertex outside 0..{self.nverts - 1}")
        if len(set(faces)) != len(faces):
            raise ValueError("duplicate face")

    @classmethod
    def from_faces(cls, nverts: int, faces: Iterable[Sequence[int]]) -> Hypergraph2:
        return cls(nverts, tuple(tuple(sorted(f)) for f in faces))

    @cached_property
    def face_index(self) -> dict[Face, int]:
        return {f: i for i, f in enumerate(self.faces)}

    @cached_property
    def graph(self) -> Graph:
        """The edge graph on all vertices."""
        edges = {(a, b) for f in self.faces for a, b in combinations(f, 2)}
        return Graph.from_edges(self.nverts, sorted(edges))

    @property
    def nedges(self) -> int:
        return self.graph.nedges

    @property
    def nfaces(self) -> int:
        return len(self.faces)

    def face_boundary(self, i: int) -> EdgeSet:
        a, b, c = self.faces[i]
        return self.graph.edge_set([(a, b), (a, c), (b, c)])

    @cached_property
    def boundaries(self) -> tuple[EdgeSet, ...]:
        return tuple(self.face_boundary(i) for i in range(self.nfaces))

    def face_set(self, faces: Iterable[Sequence[int]] = ()) -> FaceSet:
        try:
            idx = [self.face_index[tuple(sorted(f))] for f in faces]
        except KeyError as err:
            raise DomainError(f"face {err.args[0]} is not in the hypergraph") from None
        return FaceSet(self, BitVec.from_indices(self.nfaces, idx))

    def full(self) -> FaceSet:
        return FaceSet(self, BitVec(self.nfaces, (1 << self.nfaces) - 1))

    def edge_degrees(self) -> list[int]:
        deg = [0] * self.nedges
        for b in self.boundaries:
            for e in b.indices():
                deg[e] += 1
        return deg

    def is_face_connected(self) -> bool:
        """Any two faces are joined by a chain of faces sharing an edge."""
        if not self.faces:
            return True
        by_edge: dict[int, list[int]] = {}
        for i, b in enumerate(self.boundaries):
            for e in b.indices():
                by_edge.setdefault(e, []).append(i)
        seen, stack = {0}, [0]
        while stack:
            i = stack.pop()
            for e in self.boundaries[i].indices():
                for j in by_edge[e]:
                    if j not in seen:
                        seen.add(j)
                        stack.append(j)
        return len(seen) == self.nfaces

    def to_json(self) -> dict:
        return {"nverts": self.nverts, "faces": [list(f) for f in self.faces]}

    @classmethod
    def from_json(cls, data: dict) -> Hypergraph2:
        return cls.from_faces(int(data["nverts"]), data["faces"])


@dataclass(frozen=True)
class FaceSet:
    host: Hypergraph2 = field(repr=False)
    vec: BitVec

    def __post_init__(self) -> None:
        if self.vec.size != self.host.nfaces:
            raise ValueError("face vector length does not match the face count")

    def __xor__(self, other: FaceSet) -> FaceSet:
        if other.host != self.host:
            raise ValueError("face sets live on different hypergraphs")
        return FaceSet(self.host, self.vec ^ other.vec)

    def __bool__(self) -> bool:
        return bool(self.vec)

    def __len__(self) -> int:
        return self.vec.weight()

    def faces(self) -> list[Face]:
        return [self.host.faces[i] for i in self.vec.ones()]


def is_two_cycle(h: Hypergraph2, c: FaceSet) -> bool:
    """Every edge lies in an even number of faces of c."""
    if c.host != h:
        raise ValueError("face set belongs to a different hypergraph")
    counts: dict[tuple[int, int], int] = {}
    for f in c.faces():
        for e in combinations(f, 2):
            counts[e] = counts.get(e, 0) + 1
    by_count = all(k % 2 == 0 for k in counts.values())
    acc = 0
    for i in c.vec.ones():
        acc ^= h.boundaries[i].vec.bits
    assert by_count == (acc == 0), "edge-count and boundary criteria disagree"
    return by_count


def two_cycle_basis(h: Hypergraph2) -> list[FaceSet]:
    """Basis of the 2-cycles: linear relations among face boundaries."""
    return [FaceSet(h, v) for v in dependencies([b.vec for b in h.boundaries])]


def complete_hypergraph(n: int) -> Hypergraph2:
    return Hypergraph2(n, tuple(combinations(range(n), 3)))


def tetrahedron(h: Hypergraph2, quad: Sequence[int]) -> FaceSet:
    if len(set(quad)) != 4:
        raise ValueError("a tetrahedron needs 4 distinct vertices")
    return h.face_set(combinations(sorted(quad), 3))


def complete_2cycle_space(n: int) -> tuple[int, list[FaceSet]]:
    """Tetrahedra T_{i,j,k,n-1} for i < j < k < n-1; dimension C(n-1, 3)."""
    if n < 3:
        raise ValueError("needs n >= 3")
    h = complete_hypergraph(n)
    basis = [tetrahedron(h, (i, j, k, n - 1)) for i, j, k in combinations(range(n - 1), 3)]
    r = rank(c.vec for c in basis)
    if r != len(basis) or r != h.nfaces - rank(b.vec for b in h.boundaries):
        raise AssertionError("tetrahedra do not form a basis of the 2-cycles")
    return len(basis), basis


def decompose_two_cycle(n: int, c: FaceSet) -> BitVec:
    """Coefficients over the tetrahedron basis: T_{i,j,k,n-1} for every face
    {i,j,k} of c that avoids vertex n-1."""
    h = complete_hypergraph(n)
    if c.host != h:
        raise ValueError("face set is not on the complete hypergraph")
    if not is_two_cycle(h, c):
        raise DomainError("not a 2-cycle")
    order = {t: i for i, t in enumerate(combinations(range(n - 1), 3))}
    coeffs = BitVec.from_indices(len(order), (order[f] for f in c.faces() if f[2] != n - 1))
    _, basis = complete_2cycle_space(n)
    acc = 0
    for i in coeffs.ones():
        acc ^= basis[i].vec.bits
    assert acc == c.vec.bits
    return coeffs


def tetrahedra_relation_check(n: int) -> bool:
    """Each 5-subset A gives the relation sum of T_{A-j} = 0, and these relations
    span all linear relations among the tetrahedra of [n]."""
    h = complete_hypergraph(n)
    quads = list(combinations(range(n), 4))
    gens = [tetrahedron(h, q).vec for q in quads]
    where = {q: i for i, q in enumerate(quads)}
    rels = [
        BitVec.from_indices(len(quads), (where[q] for q in combinations(five, 4)))
        for five in combinations(range(n), 5)
    ]
    return relations_span_kernel(gens, rels)


# ---------------------------------------------------------------------------
# rook cycles


@dataclass(frozen=True)
class RookGrid:
    """The grid [n]^ell with points in lexicographic order (0-based coordinates)."""

    n: int
    ell: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.ell < 1:
            raise ValueError("need n >= 1 and ell >= 1")

    @property
    def npoints(self) -> int:
        return self.n**self.ell

    @cached_property
    def points(self) -> tuple[tuple[int, ...], ...]:
        return tuple(product(range(self.n), repeat=self.ell))

    def index(self, point: Sequence[int]) -> int:
        i = 0
        for x in point:
            if not 0 <= x < self.n:
                raise IndexError(f"coordinate {x} out of range")
            i = i * self.n + x
        return i

    @cached_property
    def rows(self) -> tuple[int, ...]:
        """Point masks of the ell * n^(ell-1) rows, indexed by (free axis, fixed values)."""
        out = []
        for axis in range(self.ell):
            for rest in product(range(self.n), repeat=self.ell - 1):
                mask = 0
                for x in range(self.n):
                    mask |= 1 << self.index(rest[:axis] + (x,) + rest[axis:])
                out.append(mask)
        return tuple(out)

    def point_set(self, points: Iterable[Sequence[int]]) -> BitVec:
        return BitVec.from_indices(self.npoints, (self.index(p) for p in points))

    def is_rook_cycle(self, c: BitVec) -> bool:
        return all((r & c.bits).bit_count() % 2 == 0 for r in self.rows)

    def parallelepiped(self, sides: Sequence[Sequence[int]]) -> BitVec:
        if len(sides) != self.ell or any(len(set(s)) != 2 for s in sides):
            raise ValueError("need ell two-element coordinate sets")
        return self.point_set(product(*sides))

    def corner_box(self, a: Sequence[int]) -> BitVec:
        """P(a) = {n-1, a_1} x ... x {n-1, a_ell} for a in [n-1]^ell."""
        top = self.n - 1
        return self.parallelepiped([(top, x) for x in a])

    def decompose(self, c: BitVec) -> list[tuple[int, ...]]:
        """Corners a with c = sum of P(a); they are the points of c in [n-1]^ell."""
        if c.size != self.npoints:
            raise ValueError("point set has the wrong length")
        if not self.is_rook_cycle(c):
            raise DomainError("not a rook cycle")
        top = self.n - 1
        corners = [self.points[i] for i in c.ones() if top not in self.points[i]]
        acc = 0
        for a in corners:
            acc ^= self.corner_box(a).bits
        assert acc == c.bits
        return corners

    def constraint_matrix(self) -> BitMatrix:
        return BitMatrix.from_ints(self.npoints, self.rows)

    def space_dim(self) -> int:
        return self.npoints - rank(self.constraint_matrix())

    def basis(self) -> list[BitVec]:
        return kernel_basis(self.constraint_matrix())

    def claimed_dim(self) -> int:
        return (self.n - 1) ** self.ell


@dataclass(frozen=True)
class RookBridge:
    hypergraph: Hypergraph2
    grid: RookGrid
    dim: int
    ok: bool

    def to_points(self, c: FaceSet) -> BitVec:
        return BitVec(self.grid.npoints, c.vec.bits)

    def to_faces(self, p: BitVec) -> FaceSet:
        return FaceSet(self.hypergraph, BitVec(self.hypergraph.nfaces, p.bits))


def tripartite_hypergraph(n: int) -> Hypergraph2:
    """Vertices (r, a) of [3] x [n] numbered r*n + a; faces are transversal
    triples listed so that face (a, b, c) has index a*n*n + b*n + c."""
    faces = [(a, n + b, 2 * n + c) for a, b, c in product(range(n), repeat=3)]
    return Hypergraph2(3 * n, tuple(faces))


def hyper_rook_bridge(n: int) -> RookBridge:
    """Face index equals point index in [n]^3; check both directions on bases."""
    h = tripartite_hypergraph(n)
    grid = RookGrid(n, 3)
    hb = two_cycle_basis(h)
    rb = grid.basis()
    ok = len(hb) == len(rb)
    ok &= all(grid.is_rook_cycle(BitVec(grid.npoints, c.vec.bits)) for c in hb)
    ok &= all(is_two_cycle(h, FaceSet(h, BitVec(h.nfaces, p.bits))) for p in rb)
    return RookBridge(h, grid, len(hb), ok)


def octahedron(n: int, a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> FaceSet:
    """Faces of the tripartite hypergraph over two choices in each row."""
    h = tripartite_hypergraph(n)
    return h.face_set((x, n + y, 2 * n + z) for x in a for y in b for z in c)


# ---------------------------------------------------------------------------
# Euler characteristic and extremal inequalities


@dataclass(frozen=True)
class EulerReport:
    b0: int
    b1: int
    b2: int
    V: int
    E: int
    F: int

    @property
    def identity_holds(self) -> bool:
        return self.b0 - self.b1 + self.b2 == self.V - self.E + self.F


def euler_report(h: Hypergraph2) -> EulerReport:
    g = h.graph
    r = rank(b.vec for b in h.boundaries)
    b0 = len(g.components())
    rep = EulerReport(b0, g.cycle_space_dim() - r, h.nfaces - r, h.nverts, h.nedges, h.nfaces)
    assert rep.identity_holds
    return rep


@dataclass(frozen=True)
class ExtremalVerdict:
    case: str  # "a", "b" or "none"
    face_connected: bool
    euler: int  # V - E + F
    bound: int | None

    @property
    def holds(self) -> bool:
        return self.bound is None or self.euler <= self.bound


def extremal_check(h: Hypergraph2) -> ExtremalVerdict:
    """Bound V - E + F for face-connected hypergraphs.

    Case a: every edge in exactly two faces, V - E + F <= 2, which by
    2E = 3F says F >= 2V - 4.  Case b: every edge in at most two faces and
    some edge in one, V - E + F <= 1.  A vertex on no face counts as a
    failure of face-connectivity.
    """
    deg = h.edge_degrees()
    covered = {v for f in h.faces for v in f}
    fc = h.is_face_connected() and len(covered) == h.nverts
    chi = h.nverts - h.nedges + h.nfaces
    if fc and deg and all(d == 2 for d in deg):
        v = ExtremalVerdict("a", fc, chi, 2)
    elif fc and deg and max(deg) <= 2 and 1 in deg:
        v = ExtremalVerdict("b", fc, chi, 1)
    else:
        v = ExtremalVerdict("none", fc, chi, None)
    assert v.holds, f"inequality fails in case {v.case}"
    return v


def pad_at_vertex(h: Hypergraph2, v: int) -> Hypergraph2:
    """Add a face meeting h only in vertex v (two new vertices)."""
    n = h.nverts
    return Hypergraph2(n + 2, h.faces + ((v, n, n + 1),))


def pad_on_edge(h: Hypergraph2, u: int, v: int) -> Hypergraph2:
    """Add a face meeting h only in the edge uv (one new vertex)."""
    if not h.graph.has_edge(u, v):
        raise DomainError(f"{(u, v)} is not an edge")
    n = h.nverts
    return Hypergraph2(n + 1, h.faces + (tuple(sorted((u, v, n))),))


RP2_FACES = (
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
)


def projective_plane() -> Hypergraph2:
    """The 6-vertex triangulation of the projective plane."""
    return Hypergraph2.from_faces(6, RP2_FACES)


def stacked_disk(k: int) -> Hypergraph2:
    """Triangle 012 with k vertices inserted one after another into the last face."""
    faces = [(0, 1, 2)]
    for i in range(k):
        a, b, c = faces.pop()
        v = 3 + i
        faces += [(a, b, v), (a, c, v), (b, c, v)]
    return Hypergraph2.from_faces(3 + k, faces)


def equal_counts_pair() -> tuple[Hypergraph2, Hypergraph2]:
    """Two face-connected hypergraphs with equal (V, E, F) = (9, 21, 13).

    H1 is a disk (no nonzero 2-cycle); H2 is the projective plane with
    three faces added along edges, so its full original face set stays the
    only nonzero 2-cycle.
    """
    h1 = stacked_disk(6)
    h2 = projective_plane()
    for u, v in ((0, 1), (1, 6), (6, 7)):
        h2 = pad_on_edge(h2, u, v)
    return h1, h2


def complete_hypergraph_dim(n: int) -> int:
    return comb(n - 1, 3)
