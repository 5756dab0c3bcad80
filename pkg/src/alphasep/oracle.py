"""Exact exponential-time references and an independent feasibility checker.

The component computation here deliberately uses union-find rather than the
search-based decomposition in graph.py, so the two paths cross-validate
each other.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .graph import Graph, threshold

MAX_BRUTE_FORCE_N = 20


def component_sizes_union_find(g: Graph, removed: Iterable[int]) -> list[int]:
    """Residual component sizes via union-find (independent of graph.py BFS)."""
    n = g.n
    blocked = bytearray(n)
    for v in removed:
        blocked[v] = 1
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(n):
        if blocked[u]:
            continue
        for v in g.adj[u]:
            if v > u or blocked[v]:
                continue
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    counts: dict[int, int] = {}
    for v in range(n):
        if not blocked[v]:
            root = find(v)
            counts[root] = counts.get(root, 0) + 1
    return sorted(counts.values(), reverse=True)


def verify_separator(g: Graph, nodes: Iterable[int], tau: int) -> bool:
    """True iff every residual component has at most tau vertices."""
    sizes = component_sizes_union_find(g, nodes)
    return not sizes or sizes[0] <= tau


def brute_force_min_separator(g: Graph, alpha: float) -> tuple[int, frozenset[int]]:
    """Smallest feasible separator by subset enumeration.

    Subsets are tried in increasing cardinality, lexicographic within each,
    so the witness is deterministic.  Restricted to n <= 20.
    """
    if g.n > MAX_BRUTE_FORCE_N:
        raise ValueError(f"brute force limited to n <= {MAX_BRUTE_FORCE_N}, got {g.n}")
    tau = threshold(alpha, g.n)
    for k in range(g.n + 1):
        for subset in combinations(range(g.n), k):
            if verify_separator(g, subset, tau):
                return k, frozenset(subset)
    raise AssertionError("unreachable: removing all vertices is always feasible")


def brute_force_vertex_cover(g: Graph) -> int:
    """Minimum vertex cover cardinality by subset enumeration; n <= 20."""
    if g.n > MAX_BRUTE_FORCE_N:
        raise ValueError(f"brute force limited to n <= {MAX_BRUTE_FORCE_N}, got {g.n}")
    edges = list(g.edges())
    if not edges:
        return 0
    for k in range(g.n + 1):
        for subset in combinations(range(g.n), k):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in edges):
                return k
    raise AssertionError("unreachable: V covers every edge")
