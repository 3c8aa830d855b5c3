"""Counting and enumeration of maximal independent sets by size.

The production path runs pivoted maximal-clique enumeration on the
complement graph; a 2^n subset-scan oracle provides an independent
cross-check for small orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graph import Graph, bits, complement

ORACLE_MAX_N = 24


@dataclass(frozen=True)
class SizeProfile:
    """counts[s] = number of maximal independent sets of size s, for s = 0..n."""

    n: int
    counts: tuple[int, ...]

    def get(self, s: int) -> int:
        """Count at size s; zero outside 0..n."""
        if 0 <= s <= self.n:
            return self.counts[s]
        return 0

    def total(self) -> int:
        return sum(self.counts)

    def coefficients(self) -> list[int]:
        """Polynomial coefficients, constant term first, trailing zeros trimmed."""
        coeffs = list(self.counts)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return coeffs


def _expand(adj: tuple[int, ...], visit, rmask: int, rsize: int, p: int, x: int) -> None:
    """Pivoted Bron-Kerbosch. Visits every maximal clique exactly once.

    Pivot is the vertex of P|X covering the most of P, lowest index on ties;
    candidates are expanded in ascending index order, which fixes the visit
    order deterministically.
    """
    if not p and not x:
        visit(rmask, rsize)
        return
    px = p | x
    best_u = -1
    best_cover = -1
    m = px
    while m:
        u = (m & -m).bit_length() - 1
        cover = (p & adj[u]).bit_count()
        if cover > best_cover:
            best_cover = cover
            best_u = u
        m &= m - 1
    cand = p & ~adj[best_u]
    while cand:
        b = cand & -cand
        v = b.bit_length() - 1
        _expand(adj, visit, rmask | b, rsize + 1, p & adj[v], x & adj[v])
        p &= ~b
        x |= b
        cand &= cand - 1


def maximal_clique_counts(adj: tuple[int, ...], n: int) -> list[int]:
    """Per-size maximal-clique counts for a bitmask adjacency, as a list of n+1 ints."""
    counts = [0] * (n + 1)

    def visit(_rmask: int, rsize: int) -> None:
        counts[rsize] += 1

    _expand(adj, visit, 0, 0, (1 << n) - 1, 0)
    return counts


def enumerate_mis(g: Graph, visit: Callable[[int], None]) -> int:
    """Visit every maximal independent set (as a vertex-set mask) exactly once.

    Returns the number visited. The order is the deterministic pivot order
    of the clique enumeration on the complement.
    """
    co = complement(g)
    seen = 0

    def inner(rmask: int, _rsize: int) -> None:
        nonlocal seen
        seen += 1
        visit(rmask)

    _expand(co.adj, inner, 0, 0, g.full_set, 0)
    return seen


def mis_size_profile(g: Graph) -> SizeProfile:
    """Size profile of maximal independent sets, via clique enumeration on the complement."""
    co = complement(g)
    return SizeProfile(g.n, tuple(maximal_clique_counts(co.adj, g.n)))


def maximal_clique_size_profile(g: Graph) -> SizeProfile:
    """Per-size counts of maximal cliques; equals mis_size_profile(complement(g))."""
    return SizeProfile(g.n, tuple(maximal_clique_counts(g.adj, g.n)))


def maximal_independence_polynomial(g: Graph) -> list[int]:
    """Coefficients of the maximal independence polynomial, constant term first."""
    return mis_size_profile(g).coefficients()


def polynomial_string(coeffs: list[int]) -> str:
    """Render coefficients like [0, 0, 3] as "3x^2"."""
    terms = []
    for power, c in enumerate(coeffs):
        if c == 0:
            continue
        if power == 0:
            terms.append(str(c))
        elif power == 1:
            terms.append(f"{c}x" if c != 1 else "x")
        else:
            terms.append(f"{c}x^{power}" if c != 1 else f"x^{power}")
    return " + ".join(terms) if terms else "0"


def _check_oracle_order(g: Graph) -> None:
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"oracle subset scan limited to n <= {ORACLE_MAX_N}, got {g.n}")


def oracle_mis_size_profile(g: Graph) -> SizeProfile:
    """Independent oracle: scan all 2^n subsets for maximal independent sets."""
    _check_oracle_order(g)
    n = g.n
    adj = g.adj
    counts = [0] * (n + 1)
    for s in range(1 << n):
        independent = True
        m = s
        while m:
            v = (m & -m).bit_length() - 1
            if adj[v] & s:
                independent = False
                break
            m &= m - 1
        if not independent:
            continue
        # maximal iff every outside vertex has a neighbor inside
        outside = g.full_set & ~s
        maximal = True
        m = outside
        while m:
            v = (m & -m).bit_length() - 1
            if not adj[v] & s:
                maximal = False
                break
            m &= m - 1
        if maximal:
            counts[s.bit_count()] += 1
    return SizeProfile(n, tuple(counts))


def independent_set_counts(g: Graph) -> list[int]:
    """Per-size counts of ALL independent sets (maximal or not); counts[0] = 1."""
    _check_oracle_order(g)
    n = g.n
    adj = g.adj
    counts = [0] * (n + 1)
    for s in range(1 << n):
        independent = True
        m = s
        while m:
            v = (m & -m).bit_length() - 1
            if adj[v] & s:
                independent = False
                break
            m &= m - 1
        if independent:
            counts[s.bit_count()] += 1
    return counts


def is_independent(g: Graph, s: int) -> bool:
    return all(not g.adj[v] & s for v in bits(s))


def is_maximal_independent(g: Graph, s: int) -> bool:
    if not is_independent(g, s):
        return False
    return all(g.adj[v] & s for v in bits(g.full_set & ~s))
