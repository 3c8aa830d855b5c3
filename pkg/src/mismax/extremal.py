"""Extremal bound f(n,t) = q^(t-r) (q+1)^r, extremal constructions,
proof-trace diagnostics, and the exhaustive bound verifier."""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Iterable, Iterator

from .canon import CanonicalForm, canonical_form
from .counting import (
    _expand,
    maximal_clique_counts,
    maximal_clique_size_profile,
    mis_size_profile,
)
from .graph import (
    Graph,
    complete_graph,
    degree,
    delete_vertex,
    disjoint_union,
    empty_graph,
    from_edges,
    induced_subgraph,
    min_degree,
)

EXHAUSTIVE_DEFAULT_MAX_N = 7
EXHAUSTIVE_HARD_MAX_N = 8

AUTO = "auto"


@dataclass(frozen=True)
class BoundDecomposition:
    """n = q*t + r with 0 <= r < t, and the bound value f = q^(t-r) (q+1)^r."""

    n: int
    t: int
    q: int
    r: int
    f: int


def bound_f(n: int, t: int) -> BoundDecomposition:
    """Maximum possible number of size-t maximal independent sets on n vertices."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    q, r = divmod(n, t)
    return BoundDecomposition(n, t, q, r, q ** (t - r) * (q + 1) ** r)


def build_H(n: int, t: int) -> Graph:
    """The extremal graph: disjoint union of t-r cliques K_q and r cliques K_{q+1}."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if n < t:
        raise ValueError(f"build_H needs n >= t, got n={n}, t={t}")
    q, r = divmod(n, t)
    g = empty_graph(0)
    for _ in range(t - r):
        g = disjoint_union(g, complete_graph(q))
    for _ in range(r):
        g = disjoint_union(g, complete_graph(q + 1))
    return g


def build_turan(n: int, k: int) -> Graph:
    """Turan graph T(n,k): complete k-partite, part sizes q (k-r parts) then q+1 (r parts).

    Built directly from its parts, not as a complement, so the complement
    correspondence with build_H stays an independent check.
    """
    if not 1 <= k <= n:
        raise ValueError(f"build_turan needs 1 <= k <= n, got n={n}, k={k}")
    q, r = divmod(n, k)
    sizes = [q] * (k - r) + [q + 1] * r
    part_of = []
    for p, size in enumerate(sizes):
        part_of.extend([p] * size)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if part_of[u] != part_of[v]
    ]
    return from_edges(n, edges)


def no_t_clique_condition(g: Graph, t: int) -> bool:
    """Degree threshold under which every t vertices share a common neighbor,
    forcing zero t-maximal cliques (the common-neighbor subcases)."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if g.n == 0:
        return False
    q, r = divmod(g.n, t)
    d = min_degree(g)
    if r > 0:
        return d >= g.n - q
    return d >= g.n - q + 1


@dataclass(frozen=True)
class SplitReport:
    """Partition of t-maximal cliques by containment of a chosen vertex."""

    v: int
    t: int
    a_count: int  # t-maximal cliques containing v
    b_count: int  # t-maximal cliques avoiding v
    nbhd_count: int  # (t-1)-maximal cliques of G[N(v)]
    gminus_count: int  # t-maximal cliques of G - v


def auto_split_vertex(g: Graph) -> int:
    """Lowest-index minimum-degree vertex, the proof's choice."""
    if g.n == 0:
        raise ValueError("graph has no vertices")
    d = min_degree(g)
    return next(v for v in range(g.n) if degree(g, v) == d)


def induction_split(g: Graph, t: int, v: int | str = AUTO) -> SplitReport:
    """Count the A/B split of t-maximal cliques around vertex v by direct enumeration."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if v == AUTO:
        v = auto_split_vertex(g)
    if not isinstance(v, int) or not 0 <= v < g.n:
        raise ValueError(f"vertex {v!r} out of range")

    vbit = 1 << v
    a_count = 0
    b_count = 0

    def visit(rmask: int, rsize: int) -> None:
        nonlocal a_count, b_count
        if rsize != t:
            return
        if rmask & vbit:
            a_count += 1
        else:
            b_count += 1

    _expand(g.adj, visit, 0, 0, g.full_set, 0)

    nbhd = induced_subgraph(g, g.adj[v])
    nbhd_counts = maximal_clique_counts(nbhd.adj, nbhd.n)
    nbhd_count = nbhd_counts[t - 1] if t - 1 <= nbhd.n else 0

    gminus = delete_vertex(g, v)
    gminus_counts = maximal_clique_counts(gminus.adj, gminus.n)
    gminus_count = gminus_counts[t] if t <= gminus.n else 0

    report = SplitReport(v, t, a_count, b_count, nbhd_count, gminus_count)
    assert report.a_count == report.nbhd_count
    assert report.b_count <= report.gminus_count
    total = maximal_clique_counts(g.adj, g.n)[t] if t <= g.n else 0
    assert report.a_count + report.b_count == total
    return report


def proof_subcase(g: Graph, t: int) -> str:
    """Which proof subcase (1a/1b/2a/2b) the pair (G, t) falls into."""
    if t < 1:
        raise ValueError("t must be >= 1")
    q, r = divmod(g.n, t)
    d = min_degree(g)
    if r > 0:
        return "1a" if d >= g.n - q else "1b"
    return "2a" if d >= g.n - q + 1 else "2b"


def labeled_graphs(n: int, allow_n8: bool = False) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices exactly once, by edge-mask order."""
    _check_exhaustive_order(n, allow_n8)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        yield from_edges(n, edges)


def _check_exhaustive_order(n: int, allow_n8: bool) -> None:
    limit = EXHAUSTIVE_HARD_MAX_N if allow_n8 else EXHAUSTIVE_DEFAULT_MAX_N
    if n > limit:
        if n == EXHAUSTIVE_HARD_MAX_N:
            raise ValueError("n = 8 exhaustive scan requires explicit opt-in")
        raise ValueError(f"exhaustive scan limited to n <= {EXHAUSTIVE_HARD_MAX_N}")


def moon_moser_total(n: int) -> int:
    """Classical maximum of the total maximal-independent-set count on n vertices."""
    if n < 2:
        raise ValueError("moon_moser_total needs n >= 2")
    if n % 3 == 0:
        return 3 ** (n // 3)
    if n % 3 == 2:
        return 2 * 3 ** ((n - 2) // 3)
    return 4 * 3 ** ((n - 4) // 3)


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    t: int
    f: int
    max_observed: int
    attainers: tuple[CanonicalForm, ...]
    bound_holds: bool
    unique_attainer: bool
    graphs_examined: int
    coverage: str


def _adj_from_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> list[int]:
    rows = [0] * n
    k = 0
    while mask:
        if mask & 1:
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        mask >>= 1
        k += 1
    return rows


def _scan_masks(args: tuple[int, int, int, int, str]) -> tuple[list[int], dict[int, list[int]]]:
    """Worker: scan labeled-graph masks [lo, hi) on n vertices.

    Returns (per-t maximum counts, {t: masks attaining bound_f(n,t)}).
    """
    n, lo, hi, full, side = args
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    bounds = [0] + [bound_f(n, t).f for t in range(1, n + 1)]
    max_counts = [0] * (n + 1)
    attainers: dict[int, list[int]] = {t: [] for t in range(1, n + 1)}
    for mask in range(lo, hi):
        rows = _adj_from_mask(n, pairs, mask)
        if side == "mis":
            # MIS profile of G = maximal-clique profile of its complement
            rows = [(full & ~row) & ~(1 << v) for v, row in enumerate(rows)]
        counts = maximal_clique_counts(tuple(rows), n)
        for t in range(1, n + 1):
            c = counts[t]
            if c > max_counts[t]:
                max_counts[t] = c
            if c == bounds[t]:
                attainers[t].append(mask)
    return max_counts, attainers


def verify_bound_exhaustive(
    n: int,
    ts: Iterable[int] | None = None,
    side: str = "mis",
    workers: int = 1,
    allow_n8: bool = False,
) -> list[ExtremalReport]:
    """Scan all labeled graphs on n vertices once, reporting one ExtremalReport
    per requested t. Deterministic regardless of worker count."""
    _check_exhaustive_order(n, allow_n8)
    if side not in ("mis", "clique"):
        raise ValueError("side must be 'mis' or 'clique'")
    ts = list(ts) if ts is not None else list(range(1, n + 1))
    for t in ts:
        if not 1 <= t <= n:
            raise ValueError(f"t={t} outside 1..{n}")
    nbits = n * (n - 1) // 2
    total = 1 << nbits
    full = (1 << n) - 1

    if workers > 1 and total >= 1 << 12:
        chunk = (total + workers - 1) // workers
        jobs = [
            (n, lo, min(lo + chunk, total), full, side)
            for lo in range(0, total, chunk)
        ]
        with multiprocessing.Pool(workers) as pool:
            parts = pool.map(_scan_masks, jobs)
    else:
        parts = [_scan_masks((n, 0, total, full, side))]

    max_counts = [0] * (n + 1)
    attainer_masks: dict[int, list[int]] = {t: [] for t in range(1, n + 1)}
    for mc, att in parts:
        for t in range(n + 1):
            max_counts[t] = max(max_counts[t], mc[t])
        for t, masks in att.items():
            attainer_masks[t].extend(masks)  # parts are in index order

    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    reports = []
    for t in ts:
        f = bound_f(n, t).f
        forms: list[CanonicalForm] = []
        seen = set()
        for mask in attainer_masks[t]:
            g = Graph(n, tuple(_adj_from_mask(n, pairs, mask)))
            cf = canonical_form(g)
            if cf not in seen:
                seen.add(cf)
                forms.append(cf)
        expected = build_H(n, t) if side == "mis" else build_turan(n, t)
        expected_cf = canonical_form(expected)
        reports.append(
            ExtremalReport(
                n=n,
                t=t,
                f=f,
                max_observed=max_counts[t],
                attainers=tuple(forms),
                bound_holds=max_counts[t] <= f,
                unique_attainer=forms == [expected_cf],
                graphs_examined=total,
                coverage=f"exhaustive-labeled({n})",
            )
        )
    return reports


def verify_bound_stream(
    graphs: Iterable[Graph],
    t: int,
    expected: Graph | None = None,
    side: str = "mis",
    source: str = "stream",
) -> ExtremalReport:
    """Verify the bound over an externally supplied stream of same-order graphs.

    Uniqueness is not certified for streams (coverage is not exhaustive);
    unique_attainer reflects only the graphs seen.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if side not in ("mis", "clique"):
        raise ValueError("side must be 'mis' or 'clique'")
    n = None
    max_observed = 0
    examined = 0
    attainer_graphs: list[Graph] = []
    f = 0
    for g in graphs:
        if n is None:
            n = g.n
            f = bound_f(n, t).f
        elif g.n != n:
            raise ValueError(f"mixed graph orders in stream: {n} then {g.n}")
        examined += 1
        if side == "mis":
            counts = mis_size_profile(g)
        else:
            counts = maximal_clique_size_profile(g)
        c = counts.get(t)
        if c > max_observed:
            max_observed = c
        if c == f:
            attainer_graphs.append(g)
    if n is None:
        raise ValueError("empty graph stream")
    forms: list[CanonicalForm] = []
    seen = set()
    for g in attainer_graphs:
        cf = canonical_form(g)
        if cf not in seen:
            seen.add(cf)
            forms.append(cf)
    if expected is None:
        expected = build_H(n, t) if side == "mis" else build_turan(n, t)
    expected_cf = canonical_form(expected) if expected.n == n else None
    return ExtremalReport(
        n=n,
        t=t,
        f=f,
        max_observed=max_observed,
        attainers=tuple(forms),
        bound_holds=max_observed <= f,
        unique_attainer=forms == [expected_cf],
        graphs_examined=examined,
        coverage=f"stream({source})",
    )
