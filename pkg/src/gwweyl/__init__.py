"""Exact computations in representation rings and Grothendieck-Witt rings of
split reductive groups: root data, characters, signs of self-dual
representations, restriction to diagonal subgroups and augmentation-ideal
completions at finite precision."""

from .char_ring import (
    K0Class,
    LaurentPoly,
    decompose_character,
    freudenthal_character,
    lambda_character,
    tensor_decompose,
    weyl_character,
    weyl_dimension,
)
from .completion import (
    TruncSeries,
    atiyah_segal_map,
    completion_map,
    finite_stage,
    graded_topology_check,
    limit_consistency,
    series_mul,
    series_subst,
    stage_transition,
)
from .diag_restrict import (
    restrict_lambda,
    to_elementary_symmetric,
    v_to_b,
    verify_triangularity,
)
from .errors import GWWeylError
from .gw_coeff import GWCoeff, gw_rank, hyperbolic_minus, hyperbolic_plus
from .gw_ring import (
    GWPoly,
    augmentation,
    borel_to_lambda,
    duality_data,
    forgetful,
    lambda_to_borel,
    sign_of_weight,
    sp_generator_set,
)
from .rep_ring import express_in_generators, k0_mul, preset_generators, restrict_along
from .root_system import (
    CartanType,
    build_root_system,
    dominance_leq,
    dual_dominant_weight,
    duality_involution,
    is_dominant,
    weyl_group,
)
from .torsor_check import verify_lift_identity

__version__ = "0.1.0"

__all__ = [
    "atiyah_segal_map",
    "augmentation",
    "borel_to_lambda",
    "build_root_system",
    "CartanType",
    "completion_map",
    "decompose_character",
    "dominance_leq",
    "dual_dominant_weight",
    "duality_data",
    "duality_involution",
    "express_in_generators",
    "finite_stage",
    "forgetful",
    "freudenthal_character",
    "graded_topology_check",
    "gw_rank",
    "GWCoeff",
    "GWPoly",
    "GWWeylError",
    "hyperbolic_minus",
    "hyperbolic_plus",
    "is_dominant",
    "k0_mul",
    "K0Class",
    "lambda_character",
    "lambda_to_borel",
    "LaurentPoly",
    "limit_consistency",
    "preset_generators",
    "restrict_along",
    "restrict_lambda",
    "series_mul",
    "series_subst",
    "sign_of_weight",
    "sp_generator_set",
    "stage_transition",
    "tensor_decompose",
    "to_elementary_symmetric",
    "TruncSeries",
    "v_to_b",
    "verify_lift_identity",
    "verify_triangularity",
    "weyl_character",
    "weyl_dimension",
    "weyl_group",
]
