"""Auxiliary objectives for fixed-size separator candidates.

Three interchangeable measures of constraint violation, all zero exactly
when every residual component fits under the size threshold:

* largest: excess of the single largest component (the default),
* total: summed excess over all oversized components,
* count: number of oversized components.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable

from .graph import ComponentView, Graph, reinstate_stats, removal_eval


class ObjectiveKind(str, Enum):
    LARGEST = "largest"
    TOTAL = "total"
    COUNT = "count"


def f_prime(view: ComponentView, tau: int) -> int:
    """Excess of the largest residual component over tau; 0 iff feasible."""
    return view.largest - tau if view.largest > tau else 0


def f_double_prime(view: ComponentView, tau: int) -> int:
    """Total node excess over tau, summed across all components."""
    return view.excess_aggregates(tau)[0]


def f_triple_prime(view: ComponentView, tau: int) -> int:
    """Number of components larger than tau."""
    return view.excess_aggregates(tau)[1]


def is_feasible(view: ComponentView, tau: int) -> bool:
    return view.largest <= tau


def evaluate(view: ComponentView, tau: int, kind: ObjectiveKind) -> int:
    if kind is ObjectiveKind.LARGEST:
        return f_prime(view, tau)
    if kind is ObjectiveKind.TOTAL:
        return f_double_prime(view, tau)
    return f_triple_prime(view, tau)


def removal_excess(
    g: Graph,
    view: ComponentView,
    s: Iterable[int],
    w: int,
    tau: int,
    kind: ObjectiveKind = ObjectiveKind.LARGEST,
) -> int:
    """Objective value of s minus {w} under `kind`, without recomputing
    components.

    Same contract as graph.removal_eval, generalized: the reinstated
    component replaces the ones it absorbs, so total/count aggregates are
    patched in O(deg(w)).
    """
    if kind is ObjectiveKind.LARGEST:
        return removal_eval(g, view, s, w, tau)
    if w not in s:
        raise ValueError(f"vertex {w} is not in the separator")
    merged_size, merged = reinstate_stats(g, view, w)
    total, count = view.excess_aggregates(tau)
    sizes = view.sizes
    for cid in merged:
        size = sizes[cid]
        if size > tau:
            total -= size - tau
            count -= 1
    if merged_size > tau:
        total += merged_size - tau
        count += 1
    return total if kind is ObjectiveKind.TOTAL else count
