"""Top-level search: shrink the target size K while a feasible separator exists.

A population of feasible solutions seeds the search; each generation builds
one offspring by frequency-guided recombination, improves it locally, and
folds it back into the population.  Every feasible offspring lowers K by one.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from random import Random
from typing import Callable

from .centrality import betweenness
from .config import SolverConfig
from .construction import grow_to_feasible, shrink
from .graph import Graph, threshold
from .oracle import verify_separator
from .population import manage, repair_population
from .recombination import fir
from .separator import Separator
from .tssa import tssa

Clock = Callable[[], float]


@dataclass(frozen=True)
class SolveReport:
    """Outcome of one solver run.

    timeline holds (size, seconds) pairs: the first moment each improved
    separator size was reached, in strictly decreasing size order.
    """

    best_nodes: tuple[int, ...]
    best_size: int
    time_to_best: float
    total_time: float
    generations: int
    timeline: tuple[tuple[int, float], ...]

    def to_dict(self) -> dict:
        return {
            "best_nodes": list(self.best_nodes),
            "best_size": self.best_size,
            "time_to_best": self.time_to_best,
            "total_time": self.total_time,
            "generations": self.generations,
            "timeline": [[size, t] for size, t in self.timeline],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def k_decision_step(
    g: Graph,
    members: list[Separator],
    k: int,
    tau: int,
    cfg: SolverConfig,
    rng: Random,
    deadline: float | None = None,
    clock: Clock = time.monotonic,
) -> tuple[list[Separator], Separator | None]:
    """One generation at fixed size k: recombine, locally optimize, manage.

    Returns the updated population and the offspring when it is feasible.
    """
    offspring = fir(members, g, tau, k, cfg, rng)
    offspring = tssa(g, offspring, tau, cfg, rng, deadline, clock)
    members = manage(members, offspring, cfg.mu, rng)
    return members, (offspring if offspring.feasible else None)


def _finish(
    g: Graph,
    tau: int,
    best: Separator,
    timeline: list[tuple[int, float]],
    generations: int,
    total_time: float,
) -> SolveReport:
    if not verify_separator(g, best.nodes, tau):
        raise AssertionError("internal error: reported separator fails verification")
    return SolveReport(
        best_nodes=tuple(sorted(best.nodes)),
        best_size=best.size,
        time_to_best=timeline[-1][1],
        total_time=total_time,
        generations=generations,
        timeline=tuple(timeline),
    )


def solve(g: Graph, cfg: SolverConfig, clock: Clock = time.monotonic) -> SolveReport:
    """Find a small separator for g under cfg.alpha.

    Runs theta independent constructions, then lowers the target size K one
    unit at a time through the generation loop, stopping at the time limit
    or after stagnation_limit generations without improvement.  Fully
    deterministic given (graph, config, seed) and a deterministic clock.
    """
    cfg.validate(g.n)
    tau = threshold(cfg.alpha, g.n)
    start = clock()
    deadline = start + cfg.time_limit if cfg.time_limit is not None else None
    master = Random(cfg.seed)
    construct_seeds = [master.getrandbits(64) for _ in range(cfg.theta)]
    loop_seed = master.getrandbits(64)

    phi = betweenness(g)
    members: list[Separator] = []
    best: Separator | None = None
    timeline: list[tuple[int, float]] = []
    for i in range(cfg.theta):
        if members and deadline is not None and clock() >= deadline:
            break
        r = Random(construct_seeds[i])
        s = grow_to_feasible(g, tau, cfg.eta, phi, r, cfg.objective)
        s = shrink(g, s, tau, cfg, r, deadline, clock)
        members.append(s)
        if best is None or s.size < best.size:
            best = s
            timeline.append((s.size, clock() - start))
    assert best is not None

    generations = 0
    if len(members) == cfg.theta and best.size > 0:
        rng = Random(loop_seed)
        k = best.size - 1
        members = repair_population(members, g, k, tau, cfg.objective, rng)
        stagnation = 0
        while k > 0:
            if deadline is not None and clock() >= deadline:
                break
            if (
                cfg.stagnation_limit is not None
                and stagnation >= cfg.stagnation_limit
            ):
                break
            members, feasible = k_decision_step(
                g, members, k, tau, cfg, rng, deadline, clock
            )
            generations += 1
            if feasible is not None:
                best = feasible
                timeline.append((k, clock() - start))
                k -= 1
                stagnation = 0
                if k > 0:
                    members = repair_population(
                        members, g, k, tau, cfg.objective, rng
                    )
            else:
                stagnation += 1

    return _finish(g, tau, best, timeline, generations, clock() - start)


def solve_multistart(
    g: Graph, cfg: SolverConfig, clock: Clock = time.monotonic
) -> SolveReport:
    """Local-search-only baseline: repeat the two-stage construction and keep
    the best result.  Same stopping rules as solve(); generations counts
    completed constructions."""
    cfg.validate(g.n)
    tau = threshold(cfg.alpha, g.n)
    start = clock()
    deadline = start + cfg.time_limit if cfg.time_limit is not None else None
    master = Random(cfg.seed)
    phi = betweenness(g)
    best: Separator | None = None
    timeline: list[tuple[int, float]] = []
    restarts = 0
    stagnation = 0
    while True:
        if best is not None:
            if deadline is not None and clock() >= deadline:
                break
            if (
                cfg.stagnation_limit is not None
                and stagnation >= cfg.stagnation_limit
            ):
                break
        r = Random(master.getrandbits(64))
        s = grow_to_feasible(g, tau, cfg.eta, phi, r, cfg.objective)
        s = shrink(g, s, tau, cfg, r, deadline, clock)
        restarts += 1
        if best is None or s.size < best.size:
            best = s
            timeline.append((s.size, clock() - start))
            stagnation = 0
        else:
            stagnation += 1
    assert best is not None
    return _finish(g, tau, best, timeline, restarts, clock() - start)
