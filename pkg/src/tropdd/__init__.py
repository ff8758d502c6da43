"""Extreme rays of tropical (max-plus) polyhedral cones by double description."""

__version__ = "0.1.0"

from .semiring import NEG_INF, IneqSystem, as_vector, combine, dot, dot_argmax, normalize, support, vector
from .hypergraph import Hypergraph, has_least_scc, minimal_sccs, reachable_from, scc_partition
from .extremality import extreme_types, is_extreme, tangent_hypergraph
from .dd import (
    AffineGenerators,
    AffineSystem,
    GeneratorSet,
    compute_extreme,
    compute_polyhedron,
    dehomogenize,
    homogenize,
    intersect_halfspace,
)

__all__ = [
    "NEG_INF", "IneqSystem", "as_vector", "combine", "dot", "dot_argmax", "normalize", "support", "vector",
    "Hypergraph", "has_least_scc", "minimal_sccs", "reachable_from", "scc_partition",
    "extreme_types", "is_extreme", "tangent_hypergraph",
    "AffineGenerators", "AffineSystem", "GeneratorSet", "compute_extreme", "compute_polyhedron",
    "dehomogenize", "homogenize", "intersect_halfspace",
]
