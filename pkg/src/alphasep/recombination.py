"""Offspring construction from vertices shared by many good solutions."""

from __future__ import annotations

from collections import Counter
from random import Random
from typing import Iterable, Sequence

from .config import SolverConfig
from .graph import Graph, components_after_removal, guarded_floor
from .population import elite_subset
from .separator import Separator


def node_frequencies(node_sets: Iterable[frozenset[int]]) -> Counter:
    """How many of the given sets contain each vertex."""
    freq: Counter = Counter()
    for nodes in node_sets:
        freq.update(nodes)
    return freq


def fir(
    members: Sequence[Separator],
    g: Graph,
    tau: int,
    k: int,
    cfg: SolverConfig,
    rng: Random,
) -> Separator:
    """Build one offspring of exactly k vertices.

    A base solution is drawn from the elite subset; the floor(rho * k)
    vertices of the base that occur most often across a sampled reference
    subset are inherited, then the set is filled with uniform picks from
    oversized residual components (any missing vertex when none are
    oversized).
    """
    ref = rng.sample(list(members), min(cfg.theta_ref, len(members)))
    freq = node_frequencies(s.nodes for s in ref)
    elite = elite_subset(members, cfg.theta_elite, rng)
    base = elite[0] if len(elite) == 1 else rng.choice(elite)

    inherit = min(guarded_floor(cfg.rho * k), base.size)
    jitter = {v: rng.random() for v in sorted(base.nodes)}
    by_frequency = sorted(base.nodes, key=lambda v: (-freq[v], jitter[v]))
    nodes = set(by_frequency[:inherit])

    while len(nodes) < k:
        view = components_after_removal(g, nodes)
        comp_id = view.comp_id
        sizes = view.sizes
        pool = [
            v
            for v in range(g.n)
            if comp_id[v] >= 0 and sizes[comp_id[v]] > tau
        ]
        if not pool:
            pool = [v for v in range(g.n) if v not in nodes]
        nodes.add(rng.choice(pool))
    return Separator.build(g, frozenset(nodes), tau, cfg.objective)
