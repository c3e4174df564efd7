"""Exact weight profiles of boundary cohomology for Siegel modular threefolds.

Given a dominant highest weight (k1, k2, r) of the rank-two symplectic
similitude group, this package computes, in exact integer arithmetic: the
Kostant decomposition of nilpotent cohomology along both maximal parabolics,
the classical and perverse weight profiles of the boundary restrictions of
the direct image and of the intermediate extension, and the avoided weight
interval [-k + 1, k] with k = min(k1 - k2, k2).
"""

from .boundary import (
    CohomologyEntry,
    StratumDatum,
    group_cohomology_dim,
    klingen_profile,
    perverse_reindex,
    siegel_profile,
)
from .errors import (
    BadParabolicIndex,
    DegreeOutOfRange,
    DivisionFailure,
    EmptyStrata,
    InputBoundExceeded,
    InvalidStratum,
    MixedStrata,
    NotDominant,
    ParityViolation,
    PreconditionViolation,
    SiegelWeightsError,
)
from .intersection import (
    AnalysisReport,
    IntermediateProfile,
    analysis_report,
    avoided_interval,
    intermediate_profile,
    kernel_map_ranks,
    rank_inequality_check,
)
from .kostant import (
    LeviModule,
    character,
    euler_check,
    freudenthal_character,
    freudenthal_mass,
    freudenthal_multiplicities,
    levi_character,
    nilpotent_cohomology,
    weyl_dimension,
)
from .laurent import LaurentPolynomial
from .root_data import (
    KLINGEN,
    POSITIVE_ROOTS,
    RHO,
    ROOT_DATUM,
    SIEGEL,
    RootDatum,
    WeightTriple,
    is_dominant,
    is_regular,
    k_invariant,
    levi_restriction_weight,
    levi_root,
    make_weight,
    motivic_weight,
    nilradical_roots,
)
from .weyl import (
    IDENTITY,
    LONGEST,
    S1,
    S2,
    WeylElement,
    all_elements,
    act,
    compose,
    dot,
    length,
    minimal_representatives,
    sign,
)

__all__ = [
    "AnalysisReport",
    "BadParabolicIndex",
    "CohomologyEntry",
    "DegreeOutOfRange",
    "DivisionFailure",
    "EmptyStrata",
    "IDENTITY",
    "InputBoundExceeded",
    "IntermediateProfile",
    "InvalidStratum",
    "KLINGEN",
    "LaurentPolynomial",
    "LeviModule",
    "LONGEST",
    "MixedStrata",
    "NotDominant",
    "POSITIVE_ROOTS",
    "ParityViolation",
    "PreconditionViolation",
    "RHO",
    "ROOT_DATUM",
    "RootDatum",
    "S1",
    "S2",
    "SIEGEL",
    "SiegelWeightsError",
    "StratumDatum",
    "WeightTriple",
    "WeylElement",
    "act",
    "all_elements",
    "analysis_report",
    "avoided_interval",
    "character",
    "compose",
    "dot",
    "euler_check",
    "freudenthal_character",
    "freudenthal_mass",
    "freudenthal_multiplicities",
    "group_cohomology_dim",
    "intermediate_profile",
    "is_dominant",
    "is_regular",
    "k_invariant",
    "kernel_map_ranks",
    "klingen_profile",
    "length",
    "levi_character",
    "levi_restriction_weight",
    "levi_root",
    "make_weight",
    "minimal_representatives",
    "motivic_weight",
    "nilpotent_cohomology",
    "nilradical_roots",
    "perverse_reindex",
    "rank_inequality_check",
    "siegel_profile",
    "sign",
    "weyl_dimension",
]
