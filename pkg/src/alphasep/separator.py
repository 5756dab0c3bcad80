"""Candidate solution record: a vertex set with its cached evaluation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import ComponentView, Graph, components_after_removal
from .objective import ObjectiveKind, evaluate


@dataclass(frozen=True, eq=False)
class Separator:
    """A removal set together with its residual decomposition and objective.

    `excess` is the selected objective recomputed on `view`; zero means the
    separator is feasible.  Instances are value records: build a new one per
    candidate rather than mutating.
    """

    nodes: frozenset[int]
    view: ComponentView
    excess: int

    @property
    def size(self) -> int:
        return len(self.nodes)

    @property
    def feasible(self) -> bool:
        return self.excess == 0

    @classmethod
    def build(
        cls,
        g: Graph,
        nodes: Iterable[int],
        tau: int,
        kind: ObjectiveKind = ObjectiveKind.LARGEST,
    ) -> "Separator":
        node_set = frozenset(nodes)
        view = components_after_removal(g, node_set)
        return cls(node_set, view, evaluate(view, tau, kind))

    def __repr__(self) -> str:
        return f"Separator(size={self.size}, excess={self.excess})"
