"""Exhaustive subset enumeration, used as an independent oracle for small cases.

Nothing here goes through the elimination code: subsets are listed as
integers and parity conditions are tested directly with numpy.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

LIMIT_BITS = 24
CHUNK = 1 << 20


class TooLarge(ValueError):
    pass


def _chunks(nbits: int):
    if nbits > LIMIT_BITS:
        raise TooLarge(f"2^{nbits} subsets exceeds the 2^{LIMIT_BITS} enumeration limit")
    total = 1 << nbits
    for start in range(0, total, CHUNK):
        yield np.arange(start, min(start + CHUNK, total), dtype=np.uint64)


def _even_everywhere(x: np.ndarray, masks: Sequence[int]) -> np.ndarray:
    ok = np.ones(x.shape, dtype=bool)
    for m in masks:
        ok &= (np.bitwise_count(x & np.uint64(m)) & 1) == 0
    return ok


def _permute_bits(x: np.ndarray, perm: Sequence[int]) -> np.ndarray:
    y = np.zeros_like(x)
    for i, j in enumerate(perm):
        y |= ((x >> np.uint64(i)) & np.uint64(1)) << np.uint64(j)
    return y


def count_even_subsets(nbits: int, masks: Sequence[int], perm: Sequence[int] | None = None) -> int:
    """Number of subsets meeting every mask evenly (and fixed by ``perm`` if given)."""
    count = 0
    for x in _chunks(nbits):
        ok = _even_everywhere(x, masks)
        if perm is not None:
            ok &= _permute_bits(x, perm) == x
        count += int(ok.sum())
    return count


def list_even_subsets(nbits: int, masks: Sequence[int]) -> list[int]:
    out: list[int] = []
    for x in _chunks(nbits):
        out += [int(v) for v in x[_even_everywhere(x, masks)]]
    return out


def count_graph_cycles(g, perm: Sequence[int] | None = None) -> int:
    """Edge subsets of even degree at every vertex; ``perm`` acts on edges."""
    return count_even_subsets(g.nedges, g.incidence, perm)


def count_two_cycles(h) -> int:
    """Face subsets covering every edge an even number of times."""
    masks = [0] * h.nedges
    for i, b in enumerate(h.boundaries):
        for e in b.indices():
            masks[e] |= 1 << i
    return count_even_subsets(h.nfaces, masks)


def count_rook_cycles(n: int, ell: int) -> int:
    """Rook cycles in [n]^ell.

    Direct enumeration when n^ell fits the limit; otherwise the grid is cut
    into n slices along the first axis.  Each slice must be a rook cycle of
    [n]^(ell-1) (found recursively by enumeration) and the slices must xor
    to zero, which is counted by a running table of partial xors.
    """
    from .hypergraphs import RookGrid

    if n**ell <= LIMIT_BITS:
        return count_even_subsets(n**ell, RookGrid(n, ell).rows)
    if ell == 1:
        raise TooLarge("grid too large to enumerate")
    inner = n ** (ell - 1)
    if inner > LIMIT_BITS:
        raise TooLarge("slices too large to enumerate")
    slices = list_even_subsets(inner, RookGrid(n, ell - 1).rows)
    table = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for acc, k in table.items():
            for s in slices:
                nxt[acc ^ s] = nxt.get(acc ^ s, 0) + k
        table = nxt
    return table.get(0, 0)
