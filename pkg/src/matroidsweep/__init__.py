"""Shelling orders of matroid independence complexes via polytope sweeps."""

from .errors import MatroidSweepError
from .matroid import HVector, Matroid, catalan, f_vector, from_bases, graphic, h_vector, minor, uniform
from .multicomplex import (
    MonomialLabeling,
    NoLabeling,
    find_pure_labeling,
    h_decomposition_identity,
    verify_labeling,
)
from .polytope import (
    FaceLattice,
    Functional,
    PolytopeGraph,
    SignVector,
    face_lattice_oracle,
    lex_binary_functional,
    sign_vector,
    vertices_and_graph,
)
from .poset import (
    GaleOrientation,
    RestrictionPoset,
    StructureReport,
    build_poset,
    check_structure,
    gale_order,
    internal_poset,
    linear_extension_shelling_check,
    poset_isomorphic,
)
from .shelling import (
    RestrictionSets,
    extend_partial_shelling,
    internally_passive_set,
    is_polytopal_shelling,
    is_shelling,
    line_shelling_order,
    restriction_sets,
    weight_order,
)
from .sweep import (
    ResultStore,
    SearchParams,
    Sweep,
    SweepRecord,
    initial_functional,
    pivot_candidates,
    run_search,
    sweep_from_witness_segments,
    sweep_restriction_sets,
    validate_sweep,
)

__all__ = [
    "MatroidSweepError",
    "Matroid",
    "HVector",
    "from_bases",
    "uniform",
    "graphic",
    "catalan",
    "minor",
    "f_vector",
    "h_vector",
    "Functional",
    "SignVector",
    "PolytopeGraph",
    "FaceLattice",
    "vertices_and_graph",
    "sign_vector",
    "face_lattice_oracle",
    "lex_binary_functional",
    "RestrictionSets",
    "is_shelling",
    "restriction_sets",
    "internally_passive_set",
    "line_shelling_order",
    "weight_order",
    "is_polytopal_shelling",
    "extend_partial_shelling",
    "Sweep",
    "SweepRecord",
    "SearchParams",
    "ResultStore",
    "initial_functional",
    "pivot_candidates",
    "run_search",
    "validate_sweep",
    "sweep_restriction_sets",
    "sweep_from_witness_segments",
    "RestrictionPoset",
    "StructureReport",
    "GaleOrientation",
    "build_poset",
    "check_structure",
    "gale_order",
    "internal_poset",
    "linear_extension_shelling_check",
    "poset_isomorphic",
    "MonomialLabeling",
    "NoLabeling",
    "find_pure_labeling",
    "verify_labeling",
    "h_decomposition_identity",
]
