"""Finite generalized quadrangles: fields, forms, permutation groups,
incidence geometry, classical and hyperoval constructions, collineation
groups and arithmetic parameter sieving."""

__version__ = "0.1.0"

from .constructions import ClassicalFamily, Hyperoval, classical_gq, coset_geometry, regular_hyperoval, t2_star
from .counting import count_totally_singular, gaussian_binomial
from .fields import GF, FiniteField
from .forms import FormSpace, ResourceCapError, enumerate_totally_singular
from .geometry import (
    GeneralizedQuadrangle,
    GQAxiomError,
    IncidenceStructure,
    dual,
    incidence_graph,
    verify_gq,
)
from .perm import BlockSystem, Permutation, PermGroup
from .symmetry import (
    CollineationGroup,
    induced_collineations,
    is_antiflag_transitive,
    is_flag_transitive,
    is_locally_s_arc_transitive,
)

__all__ = [
    "BlockSystem", "ClassicalFamily", "CollineationGroup", "FiniteField", "FormSpace", "GF",
    "GQAxiomError", "GeneralizedQuadrangle", "Hyperoval", "IncidenceStructure", "PermGroup",
    "Permutation", "ResourceCapError", "classical_gq", "count_totally_singular", "coset_geometry",
    "dual", "enumerate_totally_singular", "gaussian_binomial", "incidence_graph", "induced_collineations",
    "is_antiflag_transitive", "is_flag_transitive", "is_locally_s_arc_transitive", "regular_hyperoval",
    "t2_star", "verify_gq",
]
