"""Switching calculus for skew exponent matrices over Z/lZ.

Decides when two skew polynomial algebras at l-th roots of unity have
equivalent graded module categories, normalizes matrices to modular
Eulerian form, builds the point simplicial complex, and counts
equivalence classes exactly.
"""

from .algfrontend import (
    ClassificationReport,
    SkewAlgebraSpec,
    central_variable_form,
    classify_pair,
    grmod_witness_as_lambdas,
)
from .census import (
    BRUTE_GUARD,
    EULERIAN_ENUM_GUARD,
    REFERENCE_TABLES,
    CensusResult,
    CycleType,
    FixedPointSystem,
    brute_force_census,
    count_eulerian_classes,
    count_switching_classes,
    cycle_types,
    enumerate_eulerian_representatives,
    fixed_point_system,
)
from .errors import NotCoprimeError, ResourceGuardError
from .eulerian import (
    ORBIT_GUARD,
    RowSumProfile,
    eulerian_in_orbit,
    eulerize,
    is_modular_eulerian,
    row_sum_profile,
)
from .modlinalg import IntMatrix, SnfResult, count_solutions_mod, smith_normal_form
from .pointcomplex import (
    ComponentDescriptor,
    SimplicialComplex,
    complexes_isomorphic,
    dimension,
    facets,
    facets_via_isolations,
    independence_number,
    is_face,
    variety_components,
)
from .skewmat import (
    AltMatrix,
    EquivWitness,
    Permutation,
    SwitchExponents,
    TripleTensor,
    canonical_class_form,
    canonical_iso_form,
    isolate,
    isomorphic,
    make,
    potential_witness,
    relabel,
    switch,
    switch_many,
    switching_equivalent,
    triple_tensor,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "AltMatrix",
    "BRUTE_GUARD",
    "CensusResult",
    "ClassificationReport",
    "ComponentDescriptor",
    "CycleType",
    "EULERIAN_ENUM_GUARD",
    "EquivWitness",
    "FixedPointSystem",
    "IntMatrix",
    "NotCoprimeError",
    "ORBIT_GUARD",
    "Permutation",
    "REFERENCE_TABLES",
    "ResourceGuardError",
    "RowSumProfile",
    "SimplicialComplex",
    "SkewAlgebraSpec",
    "SnfResult",
    "SwitchExponents",
    "TripleTensor",
    "brute_force_census",
    "canonical_class_form",
    "canonical_iso_form",
    "central_variable_form",
    "classify_pair",
    "complexes_isomorphic",
    "count_eulerian_classes",
    "count_solutions_mod",
    "count_switching_classes",
    "cycle_types",
    "dimension",
    "enumerate_eulerian_representatives",
    "eulerian_in_orbit",
    "eulerize",
    "facets",
    "facets_via_isolations",
    "fixed_point_system",
    "grmod_witness_as_lambdas",
    "independence_number",
    "is_face",
    "is_modular_eulerian",
    "isolate",
    "isomorphic",
    "make",
    "potential_witness",
    "relabel",
    "row_sum_profile",
    "smith_normal_form",
    "switch",
    "switch_many",
    "switching_equivalent",
    "triple_tensor",
    "variety_components",
    "verify_witness",
]
