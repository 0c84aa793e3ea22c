"""Linear algebra over GF(2) on bit-packed vectors.

A vector of length ``n`` is stored as a Python int whose bit ``i`` is
coordinate ``i``.  Python ints are arbitrary precision, so a row is a packed
word array of any width and xor/and act on whole rows at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence


@dataclass(frozen=True)
class BitVec:
    """Immutable vector in GF(2)^size."""

    size: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.size:
            raise ValueError(f"bits set beyond length {self.size}")

    @classmethod
    def zeros(cls, size: int) -> BitVec:
        return cls(size, 0)

    @classmethod
    def from_indices(cls, size: int, indices: Iterable[int]) -> BitVec:
        bits = 0
        for i in indices:
            if not 0 <= i < size:
                raise IndexError(f"coordinate {i} out of range for length {size}")
            bits ^= 1 << i
        return cls(size, bits)

    @classmethod
    def from_str(cls, text: str) -> BitVec:
        """Parse ``"110"``; the leftmost character is coordinate 0."""
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"bad character {ch!r} in bit string")
        return cls(len(text), bits)

    def __len__(self) -> int:
        return self.size

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.size:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check(self, other: BitVec) -> None:
        if self.size != other.size:
            raise ValueError(f"length mismatch: {self.size} vs {other.size}")

    def __xor__(self, other: BitVec) -> BitVec:
        self._check(other)
        return BitVec(self.size, self.bits ^ other.bits)

    def __and__(self, other: BitVec) -> BitVec:
        self._check(other)
        return BitVec(self.size, self.bits & other.bits)

    def __or__(self, other: BitVec) -> BitVec:
        self._check(other)
        return BitVec(self.size, self.bits | other.bits)

    def dot(self, other: BitVec) -> int:
        self._check(other)
        return (self.bits & other.bits).bit_count() & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def ones(self) -> list[int]:
        return list(iter_ones(self.bits))

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.size))


def iter_ones(bits: int) -> Iterator[int]:
    """Yield the positions of set bits in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def xor_all(vectors: Iterable[BitVec], size: int) -> BitVec:
    acc = 0
    for v in vectors:
        if v.size != size:
            raise ValueError(f"length mismatch: {v.size} vs {size}")
        acc ^= v.bits
    return BitVec(size, acc)


def combine(vectors: Sequence[BitVec], coefficients: BitVec, size: int) -> BitVec:
    """Xor of the vectors selected by ``coefficients``."""
    if coefficients.size != len(vectors):
        raise ValueError("coefficient vector does not match the number of vectors")
    return xor_all((vectors[i] for i in iter_ones(coefficients.bits)), size)


@dataclass(frozen=True)
class BitMatrix:
    """Row-major matrix over GF(2)."""

    ncols: int
    rows: tuple[BitVec, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        for r in self.rows:
            if r.size != self.ncols:
                raise ValueError(f"row of length {r.size} in a matrix with {self.ncols} columns")

    @classmethod
    def from_ints(cls, ncols: int, rows: Iterable[int]) -> BitMatrix:
        return cls(ncols, tuple(BitVec(ncols, r) for r in rows))

    @classmethod
    def from_strs(cls, rows: Sequence[str]) -> BitMatrix:
        vecs = [BitVec.from_str(r) for r in rows]
        ncols = vecs[0].size if vecs else 0
        return cls(ncols, tuple(vecs))

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls.from_ints(n, (1 << i for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> BitMatrix:
        return cls.from_ints(ncols, [0] * nrows)

    @classmethod
    def from_permutation(cls, perm: Sequence[int]) -> BitMatrix:
        """Matrix sending coordinate ``i`` to coordinate ``perm[i]``.

        Row ``perm[i]`` has its single one in column ``i``, so that
        ``m.apply(e_i) == e_{perm[i]}``.
        """
        n = len(perm)
        if sorted(perm) != list(range(n)):
            raise ValueError("not a permutation")
        rows = [0] * n
        for i, j in enumerate(perm):
            rows[j] = 1 << i
        return cls.from_ints(n, rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def int_rows(self) -> list[int]:
        return [r.bits for r in self.rows]

    def transpose(self) -> BitMatrix:
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            for j in iter_ones(r.bits):
                cols[j] |= 1 << i
        return BitMatrix.from_ints(self.nrows, cols)

    def apply(self, v: BitVec) -> BitVec:
        """Matrix-vector product."""
        if v.size != self.ncols:
            raise ValueError(f"vector of length {v.size} for a matrix with {self.ncols} columns")
        out = 0
        for i, r in enumerate(self.rows):
            if (r.bits & v.bits).bit_count() & 1:
                out |= 1 << i
        return BitVec(self.nrows, out)

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        orows = other.int_rows()
        out = []
        for r in self.rows:
            acc = 0
            for j in iter_ones(r.bits):
                acc ^= orows[j]
            out.append(acc)
        return BitMatrix.from_ints(other.ncols, out)

    def __add__(self, other: BitMatrix) -> BitMatrix:
        if self.ncols != other.ncols or self.nrows != other.nrows:
            raise ValueError("shape mismatch")
        return BitMatrix(self.ncols, tuple(a ^ b for a, b in zip(self.rows, other.rows)))


class RREF(NamedTuple):
    reduced: BitMatrix
    rank: int
    pivots: list[int]


class Echelon:
    """Incrementally built, fully reduced row basis.

    Each stored row has a pivot at its lowest set bit and no other stored
    row has that bit set.  Rows may carry a ``tag`` int recording which
    inputs were xored into them.
    """

    def __init__(self) -> None:
        self.rows: dict[int, tuple[int, int]] = {}
        self.mask = 0

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, bits: int, tag: int = 0) -> tuple[int, int]:
        rows = self.rows
        hits = bits & self.mask
        while hits:
            low = hits & -hits
            rbits, rtag = rows[low.bit_length() - 1]
            bits ^= rbits
            tag ^= rtag
            hits ^= low
        return bits, tag

    def add(self, bits: int, tag: int = 0) -> tuple[int, int]:
        """Insert a row; return its residue and tag after reduction."""
        bits, tag = self.reduce(bits, tag)
        if bits:
            low = bits & -bits
            p = low.bit_length() - 1
            for q, (rbits, rtag) in self.rows.items():
                if rbits & low:
                    self.rows[q] = (rbits ^ bits, rtag ^ tag)
            self.rows[p] = (bits, tag)
            self.mask |= low
        return bits, tag

    def pivots(self) -> list[int]:
        return sorted(self.rows)


def rref(m: BitMatrix) -> RREF:
    ech = Echelon()
    for r in m.rows:
        ech.add(r.bits)
    pivots = ech.pivots()
    reduced = [ech.rows[p][0] for p in pivots]
    reduced += [0] * (m.nrows - len(reduced))
    return RREF(BitMatrix.from_ints(m.ncols, reduced), len(pivots), pivots)


def rank(vectors: Iterable[BitVec] | BitMatrix) -> int:
    rows = vectors.rows if isinstance(vectors, BitMatrix) else vectors
    ech = Echelon()
    for r in rows:
        ech.add(r.bits)
    return len(ech)


def kernel_basis(m: BitMatrix) -> list[BitVec]:
    """Basis of {v : m v = 0}, one vector per free column."""
    ech = Echelon()
    for r in m.rows:
        ech.add(r.bits)
    basis = []
    for f in range(m.ncols):
        if (ech.mask >> f) & 1:
            continue
        v = 1 << f
        for p, (rbits, _) in ech.rows.items():
            if (rbits >> f) & 1:
                v |= 1 << p
        basis.append(BitVec(m.ncols, v))
    return basis


def _common_size(vectors: Sequence[BitVec], target: BitVec | None = None) -> int:
    sizes = {v.size for v in vectors}
    if target is not None:
        sizes.add(target.size)
    if len(sizes) > 1:
        raise ValueError(f"vectors of different lengths: {sorted(sizes)}")
    return sizes.pop() if sizes else 0


def solve_in_span(basis: Sequence[BitVec], target: BitVec) -> BitVec | None:
    """Coefficients ``c`` with xor of ``basis[i]`` over ``c[i] = 1`` equal to target.

    Returns None when target is not in the span.
    """
    _common_size(basis, target)
    ech = Echelon()
    for i, v in enumerate(basis):
        ech.add(v.bits, 1 << i)
    residue, tag = ech.reduce(target.bits)
    if residue:
        return None
    return BitVec(len(basis), tag)


def separating_functional(vectors: Sequence[BitVec], target: BitVec) -> BitVec | None:
    """A vector orthogonal to every given vector but not to ``target``.

    Exists exactly when ``target`` is outside the span; None otherwise.
    """
    size = _common_size(vectors, target)
    for y in kernel_basis(BitMatrix(size, tuple(vectors))):
        if y.dot(target):
            return y
    return None


def dependencies(vectors: Sequence[BitVec]) -> list[BitVec]:
    """Basis of the linear relations among ``vectors`` (coefficient vectors)."""
    _common_size(vectors)
    ech = Echelon()
    out = []
    for i, v in enumerate(vectors):
        residue, tag = ech.add(v.bits, 1 << i)
        if not residue:
            out.append(BitVec(len(vectors), tag))
    return out


def is_involution(action: BitMatrix) -> bool:
    if action.nrows != action.ncols:
        return False
    return action @ action == BitMatrix.identity(action.ncols)


def fixed_subspace_basis(space: Sequence[BitVec], action: BitMatrix) -> list[BitVec]:
    """Basis of the vectors in span(space) fixed by an involution.

    ``space`` must be linearly independent.  The result is the image of the
    kernel of (action + I) restricted to the span.
    """
    size = _common_size(space)
    if space and action.ncols != size:
        raise ValueError("action does not act on the space's coordinates")
    if not is_involution(action):
        raise ValueError("action is not an involution")
    moved = [action.apply(v) ^ v for v in space]
    return [combine(space, c, size) for c in dependencies(moved)]


def relations_span_kernel(generators: Sequence[BitVec], relations: Sequence[BitVec]) -> bool:
    """True iff the given relations span all linear relations among generators.

    Raises ValueError if some given relation does not actually vanish.
    """
    size = _common_size(generators)
    for r in relations:
        if r.size != len(generators):
            raise ValueError("relation length differs from the number of generators")
        if combine(generators, r, size):
            raise ValueError(f"{r} is not a relation among the generators")
    kernel_dim = len(generators) - rank(generators)
    return rank(relations) == kernel_dim


__all__ = [
    "BitVec",
    "BitMatrix",
    "Echelon",
    "RREF",
    "combine",
    "dependencies",
    "fixed_subspace_basis",
    "is_involution",
    "iter_ones",
    "kernel_basis",
    "rank",
    "relations_span_kernel",
    "rref",
    "separating_functional",
    "solve_in_span",
    "xor_all",
]
