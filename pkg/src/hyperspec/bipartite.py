"""Odd-bipartitions of even-uniform hypergraphs.

A vertex set ``v1`` odd-bipartitions ``G`` when every edge meets it in an odd
number of vertices. Because every edge has even size the complement then
works as well, so the search below only looks at sets containing vertex 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .errors import CapExceededError, EmptySideError, OddUniformityError, VertexRangeError
from .hypergraph import Hypergraph

DEFAULT_CAP = 28
_CHUNK = 1 << 20


@dataclass(frozen=True)
class OddBipartition:
    v1: frozenset[int]

    def __init__(self, v1: Iterable[int]):
        object.__setattr__(self, "v1", frozenset(int(v) for v in v1))

    def complement(self, n: int) -> "OddBipartition":
        return OddBipartition(set(range(1, n + 1)) - self.v1)

    def sorted(self) -> list[int]:
        return sorted(self.v1)


def _require_even(G: Hypergraph) -> None:
    if G.k % 2:
        raise OddUniformityError(f"odd-bipartiteness is only defined for even k, got k={G.k}")


def verify_odd_bipartition(G: Hypergraph, p: OddBipartition) -> bool:
    _require_even(G)
    v1 = p.v1
    if not v1 or len(v1) >= G.n:
        raise EmptySideError("both sides of the bipartition must be nonempty")
    if any(not 1 <= v <= G.n for v in v1):
        raise VertexRangeError(f"partition vertex outside 1..{G.n}")
    return all(sum(v in v1 for v in e) % 2 == 1 for e in G.edges)


def _parity64(x: np.ndarray) -> np.ndarray:
    x = x ^ (x >> np.uint64(32))
    x ^= x >> np.uint64(16)
    x ^= x >> np.uint64(8)
    x ^= x >> np.uint64(4)
    x ^= x >> np.uint64(2)
    x ^= x >> np.uint64(1)
    return x & np.uint64(1)


def find_odd_bipartition_exhaustive(G: Hypergraph, cap: int = DEFAULT_CAP) -> Optional[OddBipartition]:
    """Scan every vertex set containing vertex 1, smallest bitmask first.

    Bit ``i-1`` of a mask stands for vertex ``i``. All ``2**(n-1) - 1``
    proper subsets containing vertex 1 are tried in increasing mask order and
    the first one meeting every edge oddly is returned.
    """
    _require_even(G)
    n = G.n
    if n > cap:
        raise CapExceededError(f"exhaustive search limited to n <= {cap}, got n={n}", cap=cap)
    if n > 63:
        raise CapExceededError("bitmask search needs n <= 63")
    edge_masks = [np.uint64(sum(1 << (v - 1) for v in e)) for e in G.edges]
    total = (1 << (n - 1)) - 1  # excludes v1 = V
    one = np.uint64(1)
    for start in range(0, total, _CHUNK):
        t = np.arange(start, min(start + _CHUNK, total), dtype=np.uint64)
        masks = (t << one) | one
        for em in edge_masks:
            masks = masks[_parity64(masks & em) == one]
            if masks.size == 0:
                break
        if masks.size:
            best = int(masks[0])
            return OddBipartition(i + 1 for i in range(n) if best >> i & 1)
    return None
