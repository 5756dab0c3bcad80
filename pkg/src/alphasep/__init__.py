"""alphasep: minimum alpha-separator search.

Find a smallest vertex set whose removal leaves every connected component
of a graph with at most ceil(alpha * n) vertices.
"""

from .config import SolverConfig
from .graph import (
    ComponentView,
    Graph,
    GraphFormatError,
    components_after_removal,
    load_graph,
    removal_eval,
    threshold,
)
from .instances import InstanceSpec, generate_er
from .objective import (
    ObjectiveKind,
    f_double_prime,
    f_prime,
    f_triple_prime,
    is_feasible,
)
from .oracle import brute_force_min_separator, brute_force_vertex_cover
from .separator import Separator
from .solver import SolveReport, solve, solve_multistart

__all__ = [
    "ComponentView",
    "Graph",
    "GraphFormatError",
    "InstanceSpec",
    "ObjectiveKind",
    "Separator",
    "SolveReport",
    "SolverConfig",
    "brute_force_min_separator",
    "brute_force_vertex_cover",
    "components_after_removal",
    "f_double_prime",
    "f_prime",
    "f_triple_prime",
    "generate_er",
    "is_feasible",
    "load_graph",
    "removal_eval",
    "solve",
    "solve_multistart",
    "threshold",
]

__version__ = "0.1.0"
