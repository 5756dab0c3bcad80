"""Two-stage construction: randomized-greedy growth, then assisted shrinking."""

from __future__ import annotations

import time
from random import Random
from typing import Callable, Sequence

from .config import SolverConfig
from .graph import Graph, components_after_removal, guarded_ceil
from .objective import ObjectiveKind, is_feasible, removal_excess
from .separator import Separator
from .tssa import tssa


def grow_to_feasible(
    g: Graph,
    tau: int,
    eta: float,
    phi: Sequence[float],
    rng: Random,
    kind: ObjectiveKind = ObjectiveKind.LARGEST,
) -> Separator:
    """Grow a feasible separator from a random seed vertex.

    Each step samples ceil(eta * |remaining|) candidates without replacement
    and adds the one with the highest centrality score (ties uniform), until
    every residual component fits under tau.  eta = 1 is fully greedy.
    """
    n = g.n
    seed = rng.randrange(n)
    nodes = {seed}
    remaining = [v for v in range(n) if v != seed]
    while True:
        view = components_after_removal(g, nodes)
        if is_feasible(view, tau):
            break
        rcl_size = max(1, guarded_ceil(eta * len(remaining)))
        pool = rng.sample(remaining, rcl_size)
        best_score = max(phi[v] for v in pool)
        best = [v for v in pool if phi[v] == best_score]
        pick = best[0] if len(best) == 1 else rng.choice(best)
        nodes.add(pick)
        remaining.remove(pick)
    return Separator.build(g, frozenset(nodes), tau, kind)


def shrink(
    g: Graph,
    s: Separator,
    tau: int,
    cfg: SolverConfig,
    rng: Random,
    deadline: float | None = None,
    clock: Callable[[], float] = time.monotonic,
) -> Separator:
    """Repeatedly drop the least harmful vertex and let the local search
    restore feasibility at the reduced size; stop at the first failure.

    The input must be feasible; the output is feasible and never larger.
    """
    kind = cfg.objective
    while s.nodes:
        if deadline is not None and clock() >= deadline:
            break
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
        cand = Separator.build(g, s.nodes - {drop}, tau, kind)
        cand = tssa(g, cand, tau, cfg, rng, deadline, clock)
        if cand.excess == 0:
            s = cand
        else:
            break
    return s
