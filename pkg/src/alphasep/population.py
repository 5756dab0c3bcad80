"""Population maintenance: repair to a common size, quality-and-distance ranks."""

from __future__ import annotations

from random import Random
from typing import Sequence

from .graph import Graph
from .objective import ObjectiveKind, removal_excess
from .separator import Separator


def pair_distance(a: frozenset[int], b: frozenset[int]) -> int:
    """Manhattan distance between two vertex sets: |A u B| - |A n B|."""
    return len(a ^ b)


def total_distance(index: int, node_sets: Sequence[frozenset[int]]) -> int:
    """Sum of pair distances from member `index` to every other member."""
    own = node_sets[index]
    return sum(len(own ^ other) for j, other in enumerate(node_sets) if j != index)


def repair_member(
    g: Graph, s: Separator, k: int, tau: int, kind: ObjectiveKind, rng: Random
) -> Separator:
    """Greedily drop least-harmful vertices until exactly k remain.

    The result may be infeasible; that is expected after a size cut.
    """
    if s.size < k:
        raise ValueError(f"member has {s.size} < {k} nodes; cannot repair upward")
    while s.size > k:
        best_val = -1
        best: list[int] = []
        for w in sorted(s.nodes):
            val = removal_excess(g, s.view, s.nodes, w, tau, kind)
            if best_val < 0 or val < best_val:
                best_val = val
                best = [w]
            elif val == best_val:
                best.append(w)
        drop = best[0] if len(best) == 1 else rng.choice(best)
        s = Separator.build(g, s.nodes - {drop}, tau, kind)
    return s


def repair_population(
    members: Sequence[Separator],
    g: Graph,
    k: int,
    tau: int,
    kind: ObjectiveKind,
    rng: Random,
) -> list[Separator]:
    return [repair_member(g, s, k, tau, kind, rng) for s in members]


def min_ranks(keys: Sequence, reverse: bool = False) -> list[int]:
    """Competition ranks (1 = best): equal keys share the smallest rank.

    Ascending by default; reverse=True ranks the largest key first.
    """
    ranks = []
    for key in keys:
        if reverse:
            better = sum(1 for other in keys if other > key)
        else:
            better = sum(1 for other in keys if other < key)
        ranks.append(1 + better)
    return ranks


def management_scores(
    members: Sequence[Separator], mu: float
) -> tuple[list[float], list[int], list[int]]:
    """Combined quality/diversity score of each member of an extended
    population; the largest score marks the eviction candidate.

    Quality ranks ascend with the objective (rank 1 = lowest excess);
    distance ranks descend with total distance (rank 1 = most diverse).
    """
    node_sets = [s.nodes for s in members]
    quality_rank = min_ranks([s.excess for s in members])
    dists = [total_distance(i, node_sets) for i in range(len(members))]
    distance_rank = min_ranks(dists, reverse=True)
    scores = [
        mu * qr + (1.0 - mu) * dr for qr, dr in zip(quality_rank, distance_rank)
    ]
    return scores, quality_rank, distance_rank


def manage(
    members: Sequence[Separator], cand: Separator, mu: float, rng: Random
) -> list[Separator]:
    """Insert cand into the population unless it scores as the unique worst.

    Exact duplicates of an incumbent are discarded outright.  Among tied
    worst scores an incumbent is evicted in preference to the candidate.
    Population size is preserved.
    """
    if any(m.nodes == cand.nodes for m in members):
        return list(members)
    extended = list(members) + [cand]
    scores, _, _ = management_scores(extended, mu)
    worst = max(scores)
    cand_index = len(extended) - 1
    tied = [i for i, q in enumerate(scores) if q == worst]
    incumbents = [i for i in tied if i != cand_index]
    if not incumbents:
        return list(members)
    evict = incumbents[0] if len(incumbents) == 1 else rng.choice(incumbents)
    out = list(members)
    out[evict] = cand
    return out


def elite_subset(
    members: Sequence[Separator], k: int, rng: Random
) -> list[Separator]:
    """The k highest-quality members: lowest excess, ties broken by larger
    total distance, then uniformly at random."""
    node_sets = [s.nodes for s in members]
    dists = [total_distance(i, node_sets) for i in range(len(members))]
    jitter = [rng.random() for _ in members]
    order = sorted(
        range(len(members)),
        key=lambda i: (members[i].excess, -dists[i], jitter[i]),
    )
    return [members[i] for i in order[: max(1, k)]]
