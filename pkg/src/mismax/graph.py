"""Immutable simple graphs on at most 64 vertices with bitmask adjacency.

Vertex sets are plain Python ints used as bit vectors: bit v set means
vertex v is in the set. All structural operations return new graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of a vertex-set mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask &= mask - 1


def set_of(vertices: Iterable[int]) -> int:
    """Build a vertex-set mask from an iterable of vertex indices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph: vertex count plus per-vertex adjacency masks.

    Invariants (checked at construction): adjacency is symmetric, loop-free,
    and every set bit is below n.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} has bits >= n")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @property
    def full_set(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ascending (u, v) pairs with u < v."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop edge ({u},{v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.full_set
    return Graph(g.n, tuple((full & ~row) & ~(1 << v) for v, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, vertices: int) -> Graph:
    """Subgraph induced by the vertex-set mask, relabeled 0..k-1 in ascending order."""
    if vertices & ~g.full_set:
        raise ValueError("vertex set contains members >= n")
    kept = list(bits(vertices))
    pos = {v: i for i, v in enumerate(kept)}
    rows = [0] * len(kept)
    for v in kept:
        for u in bits(g.adj[v] & vertices):
            rows[pos[v]] |= 1 << pos[u]
    return Graph(len(kept), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return induced_subgraph(g, g.full_set & ~(1 << v))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """G1 + G2 with G2's vertices shifted by |G1|; no cross edges."""
    if g1.n + g2.n > MAX_VERTICES:
        raise ValueError(f"union would exceed {MAX_VERTICES} vertices")
    shifted = tuple(row << g1.n for row in g2.adj)
    return Graph(g1.n + g2.n, g1.adj + shifted)


def degree(g: Graph, v: int) -> int:
    return g.adj[v].bit_count()


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("min_degree undefined on the empty-vertex graph")
    return min(row.bit_count() for row in g.adj)


def permute(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Relabel: vertex v of g becomes perm[v] in the result."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of the vertex range")
    rows = [0] * g.n
    for v in range(g.n):
        for u in bits(g.adj[v]):
            rows[perm[v]] |= 1 << perm[u]
    return Graph(g.n, tuple(rows))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)
