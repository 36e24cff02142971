"""Exact polyhedral geometry of graph edge cones.

The edge cone of a simple graph is the cone spanned by the columns of
its vertex-edge incidence matrix.  This package computes explicit
halfspace representations of that cone, its facets, the unique
canonical irreducible representation for connected bipartite graphs,
exact rational membership with violation witnesses, integer
decompositions into edge vectors, and perfect-matching decisions with
certificates.  A generator-only brute-force oracle cross-checks every
combinatorial answer.  All arithmetic is exact; all public objects are
immutable and safe to share between threads.
"""

__version__ = "0.1.0"

from .cone import (ComponentTag, ConeRepresentation, CoordinateTag, Halfspace,
                   Hyperplane, IndependentSetTag, MembershipResult,
                   affine_hull, cone_dimension, coordinate_halfspace,
                   full_representation, independent_set_halfspace, membership)
from .errors import (EdgeListParseError, EnumerationGateError,
                     GraphRequirementError, NotSupportingHyperplaneError)
from .facets import (Facet, bipartite_facet_check, canonical_representation,
                     dual_facet, face_dimension, facets, is_facet,
                     remove_redundant)
from .graph import (DEFAULT_MAX_VERTICES, Graph, bipartite_component_count,
                    edge_vectors, independent_sets, is_independent,
                    neighbor_set, parse_graph, vertex_set)
from .lattice import (DecompositionResult, EdgeDecomposition, MatchingResult,
                      has_perfect_matching, integer_decompose, parity_check)
from .oracle import (ValidationReport, brute_force_facet_generator_sets,
                     brute_force_facets, cross_validate, fm_membership)
from .rational import rational_rank

__all__ = [
    "ComponentTag", "ConeRepresentation", "CoordinateTag", "DEFAULT_MAX_VERTICES",
    "DecompositionResult", "EdgeDecomposition", "EdgeListParseError",
    "EnumerationGateError", "Facet", "Graph", "GraphRequirementError",
    "Halfspace", "Hyperplane", "IndependentSetTag", "MatchingResult",
    "MembershipResult", "NotSupportingHyperplaneError", "ValidationReport",
    "affine_hull", "bipartite_component_count", "bipartite_facet_check",
    "brute_force_facet_generator_sets", "brute_force_facets",
    "canonical_representation", "cone_dimension", "coordinate_halfspace",
    "cross_validate", "dual_facet", "edge_vectors", "face_dimension", "facets",
    "fm_membership", "full_representation", "has_perfect_matching",
    "independent_set_halfspace", "independent_sets", "integer_decompose",
    "is_facet", "is_independent", "membership", "neighbor_set", "parity_check",
    "parse_graph", "rational_rank", "remove_redundant", "vertex_set",
]
