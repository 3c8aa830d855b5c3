"""Canonical labeling and isomorphism testing for small graphs.

The canonical key is the lexicographically minimal upper-triangle bit
string over all vertex relabelings, with the triangle read in column
order (0,1), (0,2), (1,2), (0,3), ... and earlier bits more significant.
Found by branch-and-bound over partial labelings with prefix pruning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, from_edges

CANON_MAX_N = 10


@dataclass(frozen=True)
class CanonicalForm:
    """Order plus the minimal upper-triangle edge bit string as an integer key."""

    n: int
    key: int

    def to_graph(self) -> Graph:
        return graph_from_triangle_mask(self.n, self.key)


def triangle_mask(g: Graph) -> int:
    """Pack the upper triangle column-by-column; pair (0,1) is the top bit."""
    mask = 0
    for j in range(1, g.n):
        for i in range(j):
            mask = mask << 1 | (g.adj[i] >> j & 1)
    return mask


def graph_from_triangle_mask(n: int, mask: int) -> Graph:
    nbits = n * (n - 1) // 2
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> (nbits - 1 - k) & 1:
                edges.append((i, j))
            k += 1
    return from_edges(n, edges)


def canonical_form(g: Graph) -> CanonicalForm:
    """Minimal-key canonical form; equal forms certify isomorphism (n <= 10)."""
    if g.n > CANON_MAX_N:
        raise ValueError(f"canonical labeling limited to n <= {CANON_MAX_N}, got {g.n}")
    n = g.n
    if n <= 1:
        return CanonicalForm(n, 0)
    adj = g.adj
    degrees = [row.bit_count() for row in adj]
    # candidate order: low degree first so small columns are tried early
    order = sorted(range(n), key=lambda v: (degrees[v], v))

    def twins(u: int, v: int) -> bool:
        # swapping u and v is an automorphism
        return (adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u))

    best: list[int] | None = None
    placed = [0] * n  # placed[k] = original vertex at canonical position k

    def search(depth: int, cols: list[int], used: int) -> None:
        nonlocal best
        if depth == n:
            if best is None or cols < best:
                best = cols.copy()
            return
        tried: list[int] = []
        for v in order:
            if used >> v & 1:
                continue
            # a twin of an already-tried sibling explores an isomorphic subtree
            if any(twins(v, w) for w in tried):
                continue
            tried.append(v)
            # column `depth`: bits to already-placed vertices, position 0 on top
            col = 0
            row = adj[v]
            for k in range(depth):
                col = col << 1 | (row >> placed[k] & 1)
            if best is not None:
                cols.append(col)
                worse = cols > best[: depth + 1]
                cols.pop()
                if worse:
                    continue
            placed[depth] = v
            cols.append(col)
            search(depth + 1, cols, used | 1 << v)
            cols.pop()

    search(0, [], 0)
    assert best is not None
    key = 0
    for depth, col in enumerate(best):
        key = key << depth | col
    return CanonicalForm(n, key)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n:
        return False
    if sorted(r.bit_count() for r in g1.adj) != sorted(r.bit_count() for r in g2.adj):
        return False
    return canonical_form(g1) == canonical_form(g2)


def _permutation_bit_tables(n: int, perm: list[int]) -> list[list[int]]:
    """Chunked lookup tables applying a vertex permutation to a triangle mask.

    Bit k of the mask counts from the LEAST significant end here; the orbit
    scan below only needs a consistent convention, not the canonical one.
    """
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    index = {p: k for k, p in enumerate(pairs)}
    nbits = len(pairs)
    dest = []
    for i, j in pairs:
        a, b = perm[i], perm[j]
        if a > b:
            a, b = b, a
        dest.append(index[(a, b)])
    nchunks = (nbits + 6) // 7
    tables = []
    for c in range(nchunks):
        tab = [0] * 128
        for val in range(128):
            out = 0
            for b in range(7):
                k = c * 7 + b
                if k < nbits and val >> b & 1:
                    out |= 1 << dest[k]
            tab[val] = out
        tables.append(tab)
    return tables


def count_isomorphism_classes(n: int) -> int:
    """Number of non-isomorphic simple graphs on n vertices, by exhaustive
    orbit counting over all 2^(n(n-1)/2) labeled graphs (n <= 7)."""
    if n > 7:
        raise ValueError("exhaustive class counting limited to n <= 7")
    if n <= 1:
        return 1
    nbits = n * (n - 1) // 2
    total = 1 << nbits
    swap = list(range(n))
    swap[0], swap[1] = swap[1], swap[0]
    cycle = list(range(1, n)) + [0]
    gens = [_permutation_bit_tables(n, p) for p in (swap, cycle)]
    nchunks = len(gens[0])
    visited = bytearray(total)
    classes = 0
    for m in range(total):
        if visited[m]:
            continue
        classes += 1
        visited[m] = 1
        stack = [m]
        while stack:
            x = stack.pop()
            chunks = [(x >> 7 * c) & 127 for c in range(nchunks)]
            for tables in gens:
                y = 0
                for c in range(nchunks):
                    y |= tables[c][chunks[c]]
                if not visited[y]:
                    visited[y] = 1
                    stack.append(y)
    return classes
