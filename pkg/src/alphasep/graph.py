"""Undirected simple graphs: edge-list I/O, residual components, fast drop re-evaluation."""

from __future__ import annotations

import math
from typing import Iterable, Iterator

# Binary floats such as 0.2 carry ~1e-16 relative error; the guard keeps an
# exactly-integer product (e.g. 0.3 * 10) from crossing a floor/ceil boundary.
_EPS = 1e-9


def guarded_ceil(x: float) -> int:
    return math.ceil(x - _EPS)


def guarded_floor(x: float) -> int:
    return math.floor(x + _EPS)


class GraphFormatError(ValueError):
    """Malformed edge-list document."""


class Graph:
    """Immutable simple undirected graph over dense vertex ids 0..n-1.

    Neighbor lists are sorted tuples; no self-loops, no duplicate edges.
    Safe to share across threads and processes.
    """

    __slots__ = ("n", "m", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        neighbors: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) has endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
            neighbors[u].append(v)
            neighbors[v].append(u)
            m += 1
        self.m = m
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(ns)) for ns in neighbors
        )

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def load_graph(text: str, one_based: bool = False) -> Graph:
    """Parse an edge-list document: header line "n m", then m lines "u v".

    Lines starting with '#' and blank lines are skipped; LF and CRLF both
    accepted.  With one_based=True, vertex ids are shifted down by one.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    shift = 1 if one_based else 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: expected header 'n m'")
            try:
                header = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer header") from None
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected edge 'u v'")
        try:
            u, v = int(parts[0]) - shift, int(parts[1]) - shift
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id") from None
        if len(edges) >= header[1]:
            raise GraphFormatError(
                f"line {lineno}: more than the declared {header[1]} edges"
            )
        edges.append((u, v))
    if header is None:
        raise GraphFormatError("empty document: missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"declared {m} edges but found {len(edges)}")
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def threshold(alpha: float, n: int) -> int:
    """Largest allowed residual-component size: ceil(alpha * n)."""
    if n < 1:
        raise ValueError("n must be positive")
    if alpha < 1.0 / n - _EPS or alpha >= 1.0:
        raise ValueError(f"alpha must lie in [1/n, 1), got {alpha} for n={n}")
    return guarded_ceil(alpha * n)


class ComponentView:
    """Connected-component decomposition of a residual graph.

    comp_id[v] is the component index of remaining vertex v, negative for
    removed vertices.  sizes[i] is |C_i|.  Owned by one solution at a time.
    """

    __slots__ = ("comp_id", "sizes", "largest", "_order", "_agg_tau", "_agg")

    def __init__(self, comp_id: list[int], sizes: list[int]):
        self.comp_id = comp_id
        self.sizes = sizes
        self.largest = max(sizes) if sizes else 0
        self._order: list[int] | None = None
        self._agg_tau = -1
        self._agg = (0, 0)

    @property
    def count(self) -> int:
        return len(self.sizes)

    def order_by_size(self) -> list[int]:
        """Component indices sorted by size descending (cached)."""
        if self._order is None:
            self._order = sorted(
                range(len(self.sizes)), key=self.sizes.__getitem__, reverse=True
            )
        return self._order

    def excess_aggregates(self, tau: int) -> tuple[int, int]:
        """(total node excess over tau, number of oversized components); cached per tau."""
        if self._agg_tau != tau:
            total = 0
            count = 0
            for size in self.sizes:
                if size > tau:
                    total += size - tau
                    count += 1
            self._agg_tau = tau
            self._agg = (total, count)
        return self._agg


def components_after_removal(g: Graph, removed: Iterable[int]) -> ComponentView:
    """Decompose the residual graph left after deleting `removed` vertices.

    Iterative DFS, O(n + m).  removed = V yields an empty view.
    """
    n = g.n
    adj = g.adj
    # -1 marks unvisited, -2 removed; every remaining vertex ends up >= 0
    comp_id = [-1] * n
    for v in removed:
        comp_id[v] = -2
    sizes: list[int] = []
    stack: list[int] = []
    for start in range(n):
        if comp_id[start] != -1:
            continue
        cid = len(sizes)
        comp_id[start] = cid
        stack.append(start)
        size = 0
        while stack:
            v = stack.pop()
            size += 1
            for w in adj[v]:
                if comp_id[w] == -1:
                    comp_id[w] = cid
                    stack.append(w)
        sizes.append(size)
    return ComponentView(comp_id, sizes)


def split_component_view(g: Graph, view: ComponentView, u: int) -> ComponentView:
    """Decomposition after additionally removing u from the residual graph.

    Equivalent to components_after_removal with u added to the removal set,
    but only u's component is retraversed: O(n) for the id-array copy plus
    the size of that one component.
    """
    old = view.comp_id
    cid = old[u]
    if cid < 0:
        raise ValueError(f"vertex {u} is not in the residual graph")
    adj = g.adj
    comp_id = old.copy()
    sizes = list(view.sizes)
    comp_id[u] = -2
    # relabel the fragments u leaves behind; the first reuses u's old slot.
    # -3 marks queued vertices so the first fragment may reuse label cid.
    fragments = 0
    stack: list[int] = []
    for x in adj[u]:
        if comp_id[x] != cid:
            continue
        fid = cid if fragments == 0 else len(sizes)
        comp_id[x] = -3
        stack.append(x)
        size = 0
        while stack:
            y = stack.pop()
            comp_id[y] = fid
            size += 1
            for z in adj[y]:
                if comp_id[z] == cid:
                    comp_id[z] = -3
                    stack.append(z)
        if fragments == 0:
            sizes[cid] = size
        else:
            sizes.append(size)
        fragments += 1
    if fragments == 0:
        # u was a singleton component: close the gap left in the size list
        last = len(sizes) - 1
        if cid != last:
            for v in range(g.n):
                if comp_id[v] == last:
                    comp_id[v] = cid
            sizes[cid] = sizes[last]
        sizes.pop()
    return ComponentView(comp_id, sizes)


def reinstate_stats(g: Graph, view: ComponentView, w: int) -> tuple[int, set[int]]:
    """Size and member component ids of the component formed by returning w.

    The merged component absorbs w plus every residual component adjacent
    to it; cost O(deg(w)).
    """
    comp_id = view.comp_id
    sizes = view.sizes
    merged: set[int] = set()
    size = 1
    for u in g.adj[w]:
        cid = comp_id[u]
        if cid >= 0 and cid not in merged:
            merged.add(cid)
            size += sizes[cid]
    return size, merged


def removal_eval(
    g: Graph, view: ComponentView, s: Iterable[int], w: int, tau: int
) -> int:
    """Largest-component excess of the separator s minus {w}, without a full
    recomputation.

    view must be the decomposition of the residual graph under s, and w must
    belong to s.  Cost O(deg(w)) plus an O(deg(w)) scan of the cached
    size order.
    """
    if w not in s:
        raise ValueError(f"vertex {w} is not in the separator")
    merged_size, merged = reinstate_stats(g, view, w)
    rest = 0
    sizes = view.sizes
    for cid in view.order_by_size():
        if cid not in merged:
            rest = sizes[cid]
            break
    peak = merged_size if merged_size > rest else rest
    return peak - tau if peak > tau else 0
