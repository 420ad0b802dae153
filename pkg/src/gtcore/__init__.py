"""Generalized two-mode cores of bipartite networks."""

from importlib import resources

from .boundary import (
    BoundaryCorner, Staircase, default_candidates, min_property, p_gamma, q_pi, staircase,
    staircase_walk,
)
from .formats import load_edgelist, load_network, load_pajek, save_pajek
from .generator import GenSpec, generate
from .heap import IndexedMinHeap
from .levels import LevelVector, core_levels, core_levels_mirrored
from .network import (
    BipartiteNetwork, Link, NetworkError, NodeSubset, induced_degree, induced_wdegree, mirror,
)
from .peel import CoreQuery, CoreResult, compute_core, core_leq, naive_core
from .properties import (
    CATALOGUE, PropertyFunction, check_monotonic, evaluate, evaluate_all, get_property,
    update_after_removal,
)

__version__ = "0.1.0"


def toy() -> BipartiteNetwork:
    """The bundled five-node example (a, b, c | x, y)."""
    return load_pajek(resources.files(__package__).joinpath("data/toy.net").read_text())
