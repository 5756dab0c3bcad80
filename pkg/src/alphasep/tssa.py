"""Tabu-annealed local search over fixed-size separators.

Each iteration exchanges one vertex in for one out (two-phase move), with a
FIFO tabu list over recently unhelpful additions and a stagnation-annealed
probability of keeping a non-improving candidate.
"""

from __future__ import annotations

import math
import time
from random import Random
from typing import Callable

from .config import SolverConfig
from .graph import Graph, guarded_floor, split_component_view
from .objective import ObjectiveKind, removal_excess
from .separator import Separator


def tabu_capacity(gamma: float, n: int, k: int) -> int:
    """Dynamic tenure floor(gamma * (n - k)); below 1 the list is disabled."""
    return guarded_floor(gamma * (n - k))


class TabuList:
    """FIFO set of forbidden vertices with a fixed capacity.

    Capacity < 1 disables the list entirely.  On overflow the earliest
    inserted vertex is evicted.
    """

    __slots__ = ("capacity", "_fifo", "_members")

    def __init__(self, capacity: int):
        self.capacity = capacity
        self._fifo: list[int] = []
        self._members: set[int] = set()

    def __contains__(self, v: int) -> bool:
        return v in self._members

    def __len__(self) -> int:
        return len(self._fifo)

    @property
    def members(self) -> set[int]:
        """Current forbidden set (read-only use)."""
        return self._members

    def push(self, v: int) -> None:
        if self.capacity < 1 or v in self._members:
            return
        self._fifo.append(v)
        self._members.add(v)
        if len(self._fifo) > self.capacity:
            oldest = self._fifo.pop(0)
            self._members.discard(oldest)

    def clear(self) -> None:
        self._fifo.clear()
        self._members.clear()


def accept_prob(delta_f: float, xi: int, xi_max: int) -> float:
    """Probability of adopting a candidate whose objective changed by delta_f.

    Strict improvements are always kept; otherwise the probability decays
    exponentially with both the deterioration and the stagnation streak
    xi / xi_max.
    """
    if delta_f < 0:
        return 1.0
    if xi_max < 1:
        raise ValueError("xi_max must be >= 1")
    return math.exp(-delta_f * xi / xi_max)


def _pick_exchange(
    g: Graph,
    s: Separator,
    tabu: TabuList,
    tau: int,
    kind: ObjectiveKind,
    rng: Random,
) -> tuple[int, int, int]:
    """Choose the add/drop pair for one move.

    Returns (u, v, value) where value is the objective of S + {u} - {v}.
    u is uniform over non-solution non-tabu vertices (clearing the tabu list
    if that pool is empty); v minimizes the objective over all members of
    the enlarged set, ties uniform.
    """
    nodes = s.nodes
    forbidden = tabu.members
    candidates = [
        u for u in range(g.n) if u not in nodes and u not in forbidden
    ]
    if not candidates:
        tabu.clear()
        candidates = [u for u in range(g.n) if u not in nodes]
    u = candidates[0] if len(candidates) == 1 else rng.choice(candidates)

    view = split_component_view(g, s.view, u)
    # dropping u back restores the incoming set, whose value is cached
    best_val = s.excess
    best: list[int] = [u]
    if kind is ObjectiveKind.LARGEST:
        # inlined removal_excess: this loop dominates the whole search
        adj = g.adj
        comp_id = view.comp_id
        sizes = view.sizes
        order = view.order_by_size()
        for w in sorted(nodes):
            merged: set[int] = set()
            size = 1
            for x in adj[w]:
                cid = comp_id[x]
                if cid >= 0 and cid not in merged:
                    merged.add(cid)
                    size += sizes[cid]
            rest = 0
            for cid in order:
                if cid not in merged:
                    rest = sizes[cid]
                    break
            peak = size if size > rest else rest
            val = peak - tau if peak > tau else 0
            if val < best_val:
                best_val = val
                best = [w]
            elif val == best_val:
                best.append(w)
    else:
        enlarged = set(nodes)
        enlarged.add(u)
        for w in sorted(nodes):
            val = removal_excess(g, view, enlarged, w, tau, kind)
            if val < best_val:
                best_val = val
                best = [w]
            elif val == best_val:
                best.append(w)
    v = best[0] if len(best) == 1 else rng.choice(best)
    return u, v, best_val


def two_phase_move(
    g: Graph,
    s: Separator,
    tabu: TabuList,
    tau: int,
    kind: ObjectiveKind,
    rng: Random,
) -> tuple[Separator, int, int]:
    """One add-then-drop exchange; returns (candidate, added u, dropped v).

    The candidate has the same cardinality as s; when v == u it is s itself.
    """
    u, v, _ = _pick_exchange(g, s, tabu, tau, kind, rng)
    if v == u:
        return s, u, v
    cand = Separator.build(g, (s.nodes | {u}) - {v}, tau, kind)
    return cand, u, v


def tssa(
    g: Graph,
    s: Separator,
    tau: int,
    cfg: SolverConfig,
    rng: Random,
    deadline: float | None = None,
    clock: Callable[[], float] = time.monotonic,
) -> Separator:
    """Search for a feasible separator of |s| vertices.

    Returns the first feasible candidate encountered (including s itself),
    otherwise the last adopted solution once xi_max consecutive
    non-improving iterations accumulate.  The tabu list only records
    additions made on non-improving iterations.
    """
    if s.excess == 0:
        return s
    k = s.size
    if k == 0 or k >= g.n:
        return s
    capacity = tabu_capacity(cfg.gamma, g.n, k) if cfg.tabu_enabled else 0
    tabu = TabuList(capacity)
    kind = cfg.objective
    xi = 0
    xi_max = cfg.xi_max
    while xi < xi_max:
        if deadline is not None and clock() >= deadline:
            break
        u, v, val = _pick_exchange(g, s, tabu, tau, kind, rng)
        if val == 0:
            # v != u here: dropping u back would restore the infeasible s
            return Separator.build(g, (s.nodes | {u}) - {v}, tau, kind)
        delta = val - s.excess
        if delta < 0:
            s = Separator.build(g, (s.nodes | {u}) - {v}, tau, kind)
            xi = 0
        else:
            if rng.random() < accept_prob(delta, xi, xi_max) and v != u:
                s = Separator.build(g, (s.nodes | {u}) - {v}, tau, kind)
            xi += 1
            tabu.push(u)
    return s
