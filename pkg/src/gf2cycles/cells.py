"""Cell 2-cycles in the combinatorial square K x K and in the deleted square."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Sequence

from .graphs import (
    DomainError,
    EdgeSet,
    Graph,
    complete_bipartite,
    cycle_space_basis,
    disjoint_union,
    complete_graph,
    is_one_cycle,
    simple_cycles,
    tilde_graph,
)
from .linalg import BitMatrix, BitVec, fixed_subspace_basis, kernel_basis, rank, solve_in_span
from .products import box_product
from .symmetry import part_swap, tilde_symmetric_basis

MODES = ("square", "deleted")


@dataclass(frozen=True)
class CellUniverse:
    """Ordered cells (sigma, tau) of K x K; ``deleted`` keeps non-adjacent pairs only."""

    host: Graph
    mode: str = "square"

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")

    @cached_property
    def cells(self) -> tuple[tuple[int, int], ...]:
        E = self.host.nedges
        out = []
        for s in range(E):
            for t in range(E):
                if self.mode == "square" or not self.adjacent_edges(s, t):
                    out.append((s, t))
        return tuple(out)

    @cached_property
    def index(self) -> dict[tuple[int, int], int]:
        return {c: i for i, c in enumerate(self.cells)}

    def __len__(self) -> int:
        return len(self.cells)

    def adjacent_edges(self, s: int, t: int) -> bool:
        return bool(set(self.host.edges[s]) & set(self.host.edges[t]))

    def cell_set(self, cells=()) -> CellSet:
        try:
            idx = [self.index[tuple(c)] for c in cells]
        except KeyError as err:
            raise DomainError(f"cell {err.args[0]} is not in this universe") from None
        return CellSet(self, BitVec.from_indices(len(self), idx))

    def empty(self) -> CellSet:
        return CellSet(self, BitVec.zeros(len(self)))

    def full(self) -> CellSet:
        return CellSet(self, BitVec(len(self), (1 << len(self)) - 1))

    @cached_property
    def cell_columns(self) -> tuple[int, ...]:
        """Bitmask of constraint rows touched by each cell.

        Row ``(0, v, b)`` is the parity of cells (a, b) with a containing v;
        row ``(1, v, a)`` the mirrored one.  Rows are flattened to
        ``side * V * E + v * E + edge``.
        """
        V, E = self.host.nverts, self.host.nedges
        cols = []
        for s, t in self.cells:
            bits = 0
            for v in self.host.edges[s]:
                bits |= 1 << (v * E + t)
            for v in self.host.edges[t]:
                bits |= 1 << (V * E + v * E + s)
            cols.append(bits)
        return tuple(cols)

    def constraint_matrix(self) -> BitMatrix:
        """Rows are the section parity conditions, columns the cells."""
        nrows = 2 * self.host.nverts * self.host.nedges
        rows = [0] * nrows
        for j, col in enumerate(self.cell_columns):
            c = col
            while c:
                low = c & -c
                rows[low.bit_length() - 1] |= 1 << j
                c ^= low
        return BitMatrix.from_ints(len(self), [r for r in rows if r])

    def to_json(self) -> dict:
        return {"graph": self.host.to_json(), "mode": self.mode}


@dataclass(frozen=True)
class CellSet:
    universe: CellUniverse = field(repr=False)
    vec: BitVec

    def __post_init__(self) -> None:
        if self.vec.size != len(self.universe):
            raise ValueError("cell vector length does not match the universe")

    def __xor__(self, other: CellSet) -> CellSet:
        if other.universe != self.universe:
            raise ValueError("cell sets live in different universes")
        return CellSet(self.universe, self.vec ^ other.vec)

    def __bool__(self) -> bool:
        return bool(self.vec)

    def __len__(self) -> int:
        return self.vec.weight()

    def cells(self) -> list[tuple[int, int]]:
        return [self.universe.cells[i] for i in self.vec.ones()]

    def section(self, edge: int, side: int = 0) -> EdgeSet:
        """Side 0: edges a with (a, edge) in C.  Side 1: edges b with (edge, b) in C."""
        g = self.universe.host
        idx = [s if side == 0 else t for s, t in self.cells() if (t if side == 0 else s) == edge]
        return EdgeSet(g, BitVec.from_indices(g.nedges, idx))

    def to_json(self) -> dict:
        return {"universe": self.universe.to_json(), "cells": [list(c) for c in self.cells()]}


def _check_host(u: CellUniverse, c: CellSet) -> None:
    if c.universe != u:
        raise ValueError("cell set belongs to a different universe")


def sections_are_cycles(c: CellSet) -> bool:
    g = c.universe.host
    return all(is_one_cycle(g, c.section(e, side)) for e in range(g.nedges) for side in (0, 1))


def boundary_sum_vanishes(c: CellSet) -> bool:
    """The xor of the boundary 4-cycles of all cells is empty in K box K."""
    g = c.universe.host
    p = box_product(g, g)
    acc = 0
    for s, t in c.cells():
        acc ^= p.boundary(s, t).vec.bits
    return acc == 0


def is_cell_2cycle(u: CellUniverse, c: CellSet) -> bool:
    _check_host(u, c)
    by_sections = sections_are_cycles(c)
    by_boundary = boundary_sum_vanishes(c)
    assert by_sections == by_boundary, "section and boundary criteria disagree"
    return by_sections


def _is_kernel_vector(u: CellUniverse, c: CellSet) -> bool:
    acc = 0
    for j in c.vec.ones():
        acc ^= u.cell_columns[j]
    return acc == 0


def torus(u: CellUniverse, z1: EdgeSet, z2: EdgeSet) -> CellSet:
    """All cells (sigma, tau) with sigma in z1 and tau in z2."""
    g = u.host
    if not (is_one_cycle(g, z1) and is_one_cycle(g, z2)):
        raise DomainError("torus factors must be 1-cycles")
    return u.cell_set((s, t) for s in z1.indices() for t in z2.indices())


@dataclass(frozen=True)
class H2Space:
    universe: CellUniverse = field(repr=False)
    dim: int
    basis: list[CellSet] = field(repr=False)


def h2_kernel(u: CellUniverse) -> list[CellSet]:
    """Kernel of the section constraint matrix."""
    return [CellSet(u, v) for v in kernel_basis(u.constraint_matrix())]


def h2_space(u: CellUniverse) -> H2Space:
    """2-cycle space: product basis of fundamental cycles for the full square,
    constraint kernel for the deleted square."""
    if u.mode == "deleted":
        basis = h2_kernel(u)
    else:
        _, cycles = cycle_space_basis(u.host)
        basis = [torus(u, a, b) for a in cycles for b in cycles]
        q = len(cycles)
        assert rank(c.vec for c in basis) == q * q
    assert all(_is_kernel_vector(u, c) for c in basis)
    return H2Space(u, len(basis), basis)


def h2_dim(u: CellUniverse) -> int:
    return len(u) - rank(u.constraint_matrix())


def kunneth2_basis(g: Graph, cycles: Sequence[EdgeSet]) -> list[CellSet]:
    """Products C_i x C_j for a basis C_1..C_q of the 1-cycles of g."""
    q = g.cycle_space_dim()
    if not all(is_one_cycle(g, c) for c in cycles):
        raise DomainError("every input must be a 1-cycle")
    if len(cycles) != q or rank(c.vec for c in cycles) != q:
        raise DomainError(f"inputs do not form a basis of the {q}-dimensional cycle space")
    u = CellUniverse(g, "square")
    out = [torus(u, a, b) for a in cycles for b in cycles]
    if rank(c.vec for c in out) != q * q or q * q != h2_dim(u):
        raise AssertionError("products do not form a basis of the 2-cycles")
    return out


def in_h2_span(basis: Sequence[CellSet], c: CellSet) -> BitVec | None:
    return solve_in_span([b.vec for b in basis], c.vec)


# ---------------------------------------------------------------------------
# K_{n,n} deleted square versus the square of tilde n


def _knn_edge(n: int, g: Graph, left: int, right: int) -> int:
    return g.index(left, n + right)


@dataclass(frozen=True)
class KnnTildeReport:
    n: int
    domain_size: int
    image_size: int
    involutive: bool
    adjacency_preserved: bool
    cycles_bijective: bool
    mapping: dict[int, int] = field(repr=False)

    @property
    def ok(self) -> bool:
        return self.involutive and self.adjacency_preserved and self.cycles_bijective and self.domain_size == self.image_size


def cells_adjacent(u: CellUniverse, c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    """Distinct cells sharing an edge of K box K."""
    if c1 == c2:
        return False
    (s1, t1), (s2, t2) = c1, c2
    if s1 == s2 and u.adjacent_edges(t1, t2):
        return True
    return t1 == t2 and u.adjacent_edges(s1, s2)


def knn_tilde_cell(n: int, cell: tuple[tuple[int, int], tuple[int, int]]) -> tuple[tuple[int, int], tuple[int, int]]:
    """(s1 s2', t1 t2') -> (s1 t1', s2 t2') on (left, right) labels."""
    (s1, s2), (t1, t2) = cell
    return (s1, t1), (s2, t2)


def knn_tilde_map(n: int) -> KnnTildeReport:
    if n < 2:
        raise ValueError("needs n >= 2")
    knn, tn = complete_bipartite(n, n), tilde_graph(n)
    dom, img = CellUniverse(knn, "deleted"), CellUniverse(tn, "square")

    def labels(g: Graph, e: int) -> tuple[int, int]:
        a, b = g.edges[e]
        return a, b - n

    mapping = {}
    involutive = True
    for i, (s, t) in enumerate(dom.cells):
        fs, ft = knn_tilde_cell(n, (labels(knn, s), labels(knn, t)))
        j = img.index[(_knn_edge(n, tn, *fs), _knn_edge(n, tn, *ft))]
        mapping[i] = j
        back = knn_tilde_cell(n, (fs, ft))
        involutive &= (_knn_edge(n, knn, *back[0]), _knn_edge(n, knn, *back[1])) == (s, t)
    bijective = len(set(mapping.values())) == len(mapping) == len(img)

    adjacency = True
    for i, j in combinations(range(len(dom)), 2):
        a = cells_adjacent(dom, dom.cells[i], dom.cells[j])
        b = cells_adjacent(img, img.cells[mapping[i]], img.cells[mapping[j]])
        if a != b:
            adjacency = False
            break

    def push(c: CellSet) -> CellSet:
        return CellSet(img, BitVec.from_indices(len(img), (mapping[i] for i in c.vec.ones())))

    dom_basis = h2_kernel(dom)
    img_basis = h2_kernel(img)
    pushed = [push(c) for c in dom_basis]
    cycles_ok = (
        bijective
        and all(_is_kernel_vector(img, c) for c in pushed)
        and rank(c.vec for c in pushed) == len(img_basis)
    )
    return KnnTildeReport(n, len(dom), len(img), involutive and bijective, adjacency, cycles_ok, mapping)


# ---------------------------------------------------------------------------
# symmetric 2-cycles


def cell_permutation(u: CellUniverse, sym: str, n: int | None = None) -> tuple[int, ...]:
    """Cell permutation of ``swap`` ((s,t) -> (t,s)) or ``txt`` ((s,t) -> (ts,tt))."""
    if sym == "swap":
        return tuple(u.index[(t, s)] for s, t in u.cells)
    if sym == "txt":
        if n is None:
            n = u.host.nverts // 2
        if u.host != tilde_graph(n):
            raise DomainError("t x t acts only on the square of tilde n")
        ep = part_swap(n).edge_perm()
        return tuple(u.index[(ep[s], ep[t])] for s, t in u.cells)
    raise ValueError(f"unknown symmetry {sym!r}")


@dataclass(frozen=True)
class SymmetricH2Report:
    sym: str
    dim: int
    basis: list[CellSet] = field(repr=False)
    formula_dim: int | None = None

    @property
    def agrees(self) -> bool | None:
        if self.formula_dim is None:
            return None
        return self.dim == self.formula_dim


def txt_formula(n: int) -> int:
    """Claimed exponent C(q+2, 2), q = (n^2 - 3n)/2, for t x t symmetric 2-cycles."""
    q = (n * n - 3 * n) // 2
    return comb(q + 2, 2)


def symmetric_h2(u: CellUniverse, sym: str = "swap", n: int | None = None) -> SymmetricH2Report:
    """Fixed subspace of a cell involution inside the 2-cycle space.

    For the swap on a full square of a connected graph the closed form
    q(q+1)/2 with q = E - V + 1 is attached; for t x t on tilde n the
    claimed C(q+2, 2) is attached as well.  Disagreement is reported, not
    raised.
    """
    perm = cell_permutation(u, sym, n)
    space = h2_space(u).basis
    fixed = fixed_subspace_basis([c.vec for c in space], BitMatrix.from_permutation(perm))
    basis = [CellSet(u, v) for v in fixed]
    formula = None
    if sym == "swap" and u.mode == "square" and u.host.is_connected():
        q = u.host.cycle_space_dim()
        formula = q * (q + 1) // 2
    elif sym == "txt":
        formula = txt_formula(n if n is not None else u.host.nverts // 2)
    return SymmetricH2Report(sym, len(basis), basis, formula)


def swap_symmetric_basis(g: Graph) -> list[CellSet]:
    """C_i x C_j + C_j x C_i (i < j) and C_i x C_i over fundamental cycles."""
    u = CellUniverse(g, "square")
    _, cycles = cycle_space_basis(g)
    out = []
    for i, a in enumerate(cycles):
        out.append(torus(u, a, a))
        for b in cycles[i + 1:]:
            out.append(torus(u, a, b) ^ torus(u, b, a))
    return out


def txt_orbit_count(n: int) -> int:
    """Orbit count of t x t on the product basis built from a t-permuted 1-cycle basis.

    Over GF(2) the fixed subspace of a permutation representation has one
    basis vector per orbit, which gives an independent count.
    """
    g = tilde_graph(n)
    t = part_swap(n)
    fixed, pairs = tilde_symmetric_basis(n)
    members = [fixed] + [c for pair in pairs for c in pair]
    if rank(c.vec for c in members) != g.cycle_space_dim() or len(members) != g.cycle_space_dim():
        raise AssertionError("symmetric basis is not a basis")
    where = {c.vec.bits: i for i, c in enumerate(members)}
    act = [where[t.apply(c).vec.bits] for c in members]
    seen, orbits = set(), 0
    for i in range(len(members)):
        for j in range(len(members)):
            if (i, j) in seen:
                continue
            orbits += 1
            seen.update({(i, j), (act[i], act[j])})
    return orbits


@dataclass(frozen=True)
class AuditReport:
    n: int
    computed_dim: int
    orbit_dim: int
    formula_dim: int

    @property
    def agrees(self) -> bool:
        return self.computed_dim == self.formula_dim

    def lines(self) -> list[str]:
        verdict = "agreement" if self.agrees else "DISAGREEMENT"
        return [
            f"t x t symmetric 2-cycles in the square of tilde{self.n}",
            f"computed dim (fixed subspace): {self.computed_dim}",
            f"orbit-count oracle:            {self.orbit_dim}",
            f"closed form C(q+2,2):          {self.formula_dim}",
            f"verdict: {verdict}",
        ]


def txt_audit(n: int) -> AuditReport:
    rep = symmetric_h2(CellUniverse(tilde_graph(n), "square"), "txt", n)
    orbit = txt_orbit_count(n)
    if orbit != rep.dim:
        raise AssertionError(f"orbit count {orbit} differs from fixed-subspace dim {rep.dim}")
    return AuditReport(n, rep.dim, orbit, rep.formula_dim)


# ---------------------------------------------------------------------------
# generator families


def four_cycles_knn(n: int) -> list[EdgeSet]:
    g = complete_bipartite(n, n)
    out = []
    for a, b in combinations(range(n), 2):
        for c, d in combinations(range(n, 2 * n), 2):
            out.append(g.walk([a, c, b, d]))
    return out


def deleted_subsquare(u: CellUniverse, sub: EdgeSet) -> CellSet:
    """Cells of the deleted square of the subgraph spanned by ``sub``."""
    idx = sub.indices()
    return u.cell_set((s, t) for s in idx for t in idx if not u.adjacent_edges(s, t))


@dataclass(frozen=True)
class SpanReport:
    target_dim: int
    generators: int
    generator_rank: int
    spans: bool
    witnesses: list[BitVec | None] = field(repr=False)


def symmetric_generators_check(n: int) -> SpanReport:
    """Symmetrized tori of disjoint 4-cycles plus deleted squares of K_{3,3}
    subgraphs against the swap-symmetric 2-cycles of the deleted square of K_{n,n}."""
    if n < 2:
        raise ValueError("needs n >= 2")
    g = complete_bipartite(n, n)
    u = CellUniverse(g, "deleted")
    target = symmetric_h2(u, "swap").basis
    gens = []
    quads = four_cycles_knn(n)
    for q, r in combinations(quads, 2):
        if not (q.vertices() & r.vertices()):
            gens.append(torus(u, q, r) ^ torus(u, r, q))
    for left in combinations(range(n), 3):
        for right in combinations(range(n, 2 * n), 3):
            sub = g.edge_set((a, b) for a in left for b in right)
            gens.append(deleted_subsquare(u, sub))
    swap = cell_permutation(u, "swap")
    for c in gens:
        assert _is_kernel_vector(u, c)
        assert all(c.vec[swap[i]] for i in c.vec.ones())
    witnesses = [in_h2_span(gens, c) for c in target]
    return SpanReport(
        len(target),
        len(gens),
        rank(c.vec for c in gens),
        all(w is not None for w in witnesses),
        witnesses,
    )


def two_k5_bridge() -> Graph:
    """Two copies of K5 joined by one edge (vertices 4 and 5)."""
    g = disjoint_union(complete_graph(5), complete_graph(5))
    return Graph.from_edges(g.nverts, list(g.edges) + [(4, 5)])


@dataclass(frozen=True)
class GapReport:
    h2_dim: int
    products_rank: int
    products: int

    @property
    def gap(self) -> int:
        return self.h2_dim - self.products_rank

    @property
    def single_cycle_suffices(self) -> bool:
        return self.gap <= 1


def disjoint_products_gap(g: Graph) -> GapReport:
    """Compare the deleted-square 2-cycles with the span of products Z x W of
    vertex-disjoint simple cycles.  A gap of 2 or more means no single extra
    2-cycle completes the span."""
    u = CellUniverse(g, "deleted")
    cycles = [(set(c), g.walk(list(c))) for c in simple_cycles(g)]
    prods = []
    for (va, a), (vb, b) in combinations(cycles, 2):
        if not va & vb:
            prods += [torus(u, a, b), torus(u, b, a)]
    return GapReport(h2_dim(u), rank(c.vec for c in prods), len(prods))
