"""Betweenness centrality for unweighted graphs (Brandes accumulation)."""

from __future__ import annotations

from collections import deque

from .graph import Graph


def betweenness(g: Graph) -> list[float]:
    """Betweenness score of every vertex, summing over unordered pairs.

    For vertex u: the fraction of shortest s-t paths through u, summed over
    all pairs {s, t} with s != u != t.  Unreachable pairs contribute zero,
    so disconnected graphs are fine.  O(nm) total.
    """
    n = g.n
    adj = g.adj
    scores = [0.0] * n
    for source in range(n):
        # single-source shortest paths with path counts
        dist = [-1] * n
        sigma = [0] * n
        preds: list[list[int]] = [[] for _ in range(n)]
        dist[source] = 0
        sigma[source] = 1
        order: list[int] = []
        queue = deque([source])
        while queue:
            v = queue.popleft()
            order.append(v)
            dv = dist[v]
            sv = sigma[v]
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dv + 1
                    queue.append(w)
                if dist[w] == dv + 1:
                    sigma[w] += sv
                    preds[w].append(v)
        # back-propagate pair dependencies
        delta = [0.0] * n
        for w in reversed(order):
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != source:
                scores[w] += delta[w]
    # each unordered pair was counted from both endpoints
    return [x / 2.0 for x in scores]
