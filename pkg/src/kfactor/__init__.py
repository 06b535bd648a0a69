"""Certify k-factor existence and check spectral sufficient conditions on small graphs."""

from .factoring import (
    DeficiencyWitness,
    FactorCertificate,
    FactorVerdict,
    brute_force_factor,
    deficiency,
    has_k_factor,
    min_deficiency,
    tutte_gadget,
)
from .families import FamilyInstance, conjecture_extremal, g1, g2
from .graph import Graph, complete, components, disjoint_union, is_isomorphic, join, random_graph
from .params import ParamReport, binding_number, is_t_tough, toughness
from .spectral import SpectralResult, compare_to_threshold, edge_shift, hong_nikiforov_bound, spectral_radius

__version__ = "0.1.0"

__all__ = [
    "DeficiencyWitness",
    "FactorCertificate",
    "FactorVerdict",
    "FamilyInstance",
    "Graph",
    "ParamReport",
    "SpectralResult",
    "binding_number",
    "brute_force_factor",
    "compare_to_threshold",
    "complete",
    "components",
    "conjecture_extremal",
    "deficiency",
    "disjoint_union",
    "edge_shift",
    "g1",
    "g2",
    "has_k_factor",
    "hong_nikiforov_bound",
    "is_isomorphic",
    "is_t_tough",
    "join",
    "min_deficiency",
    "random_graph",
    "spectral_radius",
    "toughness",
    "tutte_gadget",
]
