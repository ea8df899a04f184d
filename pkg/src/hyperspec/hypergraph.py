"""Immutable k-uniform hypergraphs and their structural queries.

Vertices are labelled ``1..n`` at every public surface. Edges are stored as
sorted tuples; the edge order given at construction is preserved so edge
indices are stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateEdgeError, EdgeArityError, VertexRangeError


@dataclass(frozen=True, eq=False)
class Hypergraph:
    k: int
    n: int
    edges: tuple[tuple[int, ...], ...]
    incidence: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> np.ndarray:
        """``(m, k)`` array of 0-based vertex ids, one row per edge."""
        arr = np.array(self.edges, dtype=np.intp).reshape(self.m, self.k) - 1
        arr.setflags(write=False)
        return arr

    @cached_property
    def degree_array(self) -> np.ndarray:
        arr = np.array([len(inc) for inc in self.incidence], dtype=float)
        arr.setflags(write=False)
        return arr

    def degree(self, i: int) -> int:
        return len(self.incidence[i - 1])

    def edge_sets(self) -> set[frozenset[int]]:
        return {frozenset(e) for e in self.edges}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.k, self.n, self.edges) == (other.k, other.n, other.edges)

    def __hash__(self) -> int:
        return hash((self.k, self.n, self.edges))


@dataclass(frozen=True)
class DegreeProfile:
    degrees: dict[int, int]
    max: int
    min: int


@dataclass(frozen=True)
class SupervertexBlock:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]  # 0-based edge indices shared by every member
    degree: int

    @property
    def is_core(self) -> bool:
        return self.degree == 1


@dataclass(frozen=True)
class SupervertexPartition:
    blocks: tuple[SupervertexBlock, ...]

    def block_of(self, i: int) -> SupervertexBlock:
        for block in self.blocks:
            if i in block.vertices:
                return block
        raise VertexRangeError(f"vertex {i} not in partition")


def make_hypergraph(k: int, n: int, edges: Iterable[Sequence[int]]) -> Hypergraph:
    """Validate ``edges`` and build a :class:`Hypergraph`.

    Raises :class:`EdgeArityError` for an edge without exactly ``k`` distinct
    vertices, :class:`VertexRangeError` for an id outside ``1..n`` and
    :class:`DuplicateEdgeError` when two edges have the same vertex set.
    """
    k, n = int(k), int(n)
    if k < 2:
        raise EdgeArityError(f"uniformity k must be >= 2, got {k}")
    if n < k:
        raise VertexRangeError(f"need n >= k, got n={n}, k={k}")

    normalized = []
    seen = {}
    for idx, edge in enumerate(edges):
        verts = [int(v) for v in edge]
        for v in verts:
            if not 1 <= v <= n:
                raise VertexRangeError(f"edge {idx}: vertex {v} outside 1..{n}", edge=idx)
        key = tuple(sorted(set(verts)))
        if len(verts) != k or len(key) != k:
            raise EdgeArityError(
                f"edge {idx} has {len(key)} distinct vertices out of {len(verts)}, expected {k}",
                edge=idx,
            )
        if key in seen:
            raise DuplicateEdgeError(f"edge {idx} duplicates edge {seen[key]}", edge=idx)
        seen[key] = idx
        normalized.append(key)

    incidence: list[list[int]] = [[] for _ in range(n)]
    for idx, edge in enumerate(normalized):
        for v in edge:
            incidence[v - 1].append(idx)
    return Hypergraph(k, n, tuple(normalized), tuple(tuple(inc) for inc in incidence))


def degrees(G: Hypergraph) -> DegreeProfile:
    d = {i: len(inc) for i, inc in enumerate(G.incidence, start=1)}
    values = d.values()
    return DegreeProfile(d, max(values), min(values))


def is_regular(G: Hypergraph) -> tuple[bool, int | None]:
    prof = degrees(G)
    if prof.max == prof.min:
        return True, prof.max
    return False, None


def is_connected(G: Hypergraph) -> bool:
    """True when the vertex-edge incidence graph is a single component."""
    parent = list(range(G.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for edge in G.edges:
        root = find(edge[0] - 1)
        for v in edge[1:]:
            other = find(v - 1)
            if other != root:
                parent[other] = root
    return len({find(i) for i in range(G.n)}) == 1


def core_analysis(G: Hypergraph) -> tuple[frozenset[int], bool]:
    """Core vertices (degree one) and whether every edge holds one."""
    core = frozenset(i for i, inc in enumerate(G.incidence, start=1) if len(inc) == 1)
    cored = bool(G.edges) and all(any(v in core for v in e) for e in G.edges)
    return core, cored


def supervertices(G: Hypergraph) -> SupervertexPartition:
    """Group vertices whose incident edge sets coincide.

    Isolated vertices all have the empty edge set and therefore share a single
    degree-0 block.
    """
    groups: dict[tuple[int, ...], list[int]] = {}
    for i, inc in enumerate(G.incidence, start=1):
        groups.setdefault(inc, []).append(i)
    blocks = [SupervertexBlock(tuple(vs), inc, len(inc)) for inc, vs in groups.items()]
    blocks.sort(key=lambda b: b.vertices[0])
    return SupervertexPartition(tuple(blocks))


def relabel(G: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Apply ``i -> perm[i-1]`` to every vertex; ``perm`` is a permutation of 1..n."""
    if sorted(perm) != list(range(1, G.n + 1)):
        raise VertexRangeError("perm must be a permutation of 1..n")
    return make_hypergraph(G.k, G.n, [[perm[v - 1] for v in e] for e in G.edges])
