"""Hypergraph samplers and confiners: typical and worst case analysis, bound curves and exact oracles."""

from .errors import HypersampleError, PreconditionError
from .hypergraph import (
    DegreeProfile,
    Hypergraph,
    VertexSubset,
    WalkHypergraph,
    confinement,
    dual,
    edges_confined,
    hits_distribution,
    read_hypergraph,
    validate,
    vertices_covered,
    write_hypergraph,
)

__version__ = "0.1.0"
