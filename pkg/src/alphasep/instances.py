"""Random benchmark instances (Erdos-Renyi family) and edge-list output."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path
from random import Random

from .graph import Graph

MODELS = ("incremental", "gilbert")


@dataclass(frozen=True)
class InstanceSpec:
    n: int
    p: float
    seed: int
    model: str = "incremental"

    def validate(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not (0.0 < self.p < 1.0):
            raise ValueError("p must lie in (0, 1)")
        if self.model not in MODELS:
            raise ValueError(f"model must be one of {MODELS}")


def generate_er(spec: InstanceSpec) -> Graph:
    """Generate a random graph, deterministically per seed.

    incremental: vertices arrive one at a time, each joining every earlier
    vertex independently with probability p.  gilbert: every pair considered
    once in lexicographic order.  Both sample G(n, p); the edge streams
    differ for a fixed seed.
    """
    spec.validate()
    rng = Random(spec.seed)
    edges: list[tuple[int, int]] = []
    if spec.model == "incremental":
        for v in range(1, spec.n):
            for u in range(v):
                if rng.random() < spec.p:
                    edges.append((u, v))
    else:
        for u in range(spec.n):
            for v in range(u + 1, spec.n):
                if rng.random() < spec.p:
                    edges.append((u, v))
    return Graph(spec.n, edges)


def graph_to_edgelist(g: Graph) -> str:
    """Canonical edge-list text: header then sorted "u v" lines."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_instance(spec: InstanceSpec, path: str | Path) -> Graph:
    """Write the edge list plus a sidecar manifest recording the spec."""
    g = generate_er(spec)
    path = Path(path)
    path.write_text(graph_to_edgelist(g), encoding="utf-8")
    manifest = dict(asdict(spec), m=g.m)
    path.with_suffix(path.suffix + ".manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return g
