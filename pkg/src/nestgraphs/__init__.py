"""Edge-transitive Nest graphs: construction, automorphism groups and censuses."""

__version__ = "0.1.0"

from .autgroup import are_isomorphic, automorphism_group, canonical_form, orbits, search, stabilizer_order
from .bicirculant import (
    BicirculantParams,
    NamedAutomorphism,
    NestParams,
    ParameterError,
    PreconditionError,
    build,
    canonical_params,
    is_automorphism,
    isomorphism_moves,
    named_automorphism,
    parse_params,
)
from .classify import (
    CensusRow,
    Girth3Verdict,
    enumerate_edge_transitive,
    gen_at_families,
    gen_family_ii,
    gen_family_iii,
    girth3_oracle,
    universality_predicate,
)
from .graph import GraphError, LabeledGraph, girth, is_bipartite
from .kernels import BACKEND
from .perm import Permutation, PermGroup
from .symmetry import (
    TransitivityReport,
    alternets,
    classify,
    cycle_census,
    induced_orientation,
    lambda_from_params,
    local_structure,
    s_vertex,
    s_walk,
)
