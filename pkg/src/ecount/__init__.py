"""Exact counting in complete graphs, certified by interval enclosures of e."""

from .certified import (
    CertifiedFloor,
    EForm,
    IntervalReal,
    certified_floor,
    certified_floor_info,
    eform_eval,
    eform_lt,
    eform_sign,
    enclose_e,
    enclose_e_inv,
    frac_e_nfact,
)
from .counts import (
    BoundsChain,
    PathCycleCounts,
    average_path_length,
    bound_M,
    bound_N,
    chain_check,
    cycle_count,
    cycle_length_sum,
    derangement_eq2,
    derangement_eq3,
    derangement_eq4,
    derangement_eq5,
    derangement_eq6,
    derangement_lambda,
    derangement_thm7,
    path_argmax_lengths,
    path_count,
    path_count_by_length,
    path_cycle_counts,
    path_length_sum,
)
from .errors import DomainError, InvariantViolation, PrecisionCapError
from .exact import (
    DerangementPoly,
    derangements,
    dpoly,
    dpoly_eval,
    factorial,
    partial_sum_pos,
)
from .oracles import (
    QuadratureResult,
    brute_cycles,
    brute_derangements,
    brute_paths,
    quad_gamma,
)
from .specials import (
    GammaQuery,
    IntegralIdentity,
    exp_enclosure,
    hyp1f1,
    hyp2f0,
    hyp2f0_identity_check,
    hyp2f0_special,
    inc_gamma_int,
    integral_identities,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsChain",
    "CertifiedFloor",
    "DerangementPoly",
    "DomainError",
    "EForm",
    "GammaQuery",
    "IntegralIdentity",
    "IntervalReal",
    "InvariantViolation",
    "PathCycleCounts",
    "PrecisionCapError",
    "QuadratureResult",
    "average_path_length",
    "bound_M",
    "bound_N",
    "brute_cycles",
    "brute_derangements",
    "brute_paths",
    "certified_floor",
    "certified_floor_info",
    "chain_check",
    "cycle_count",
    "cycle_length_sum",
    "derangement_eq2",
    "derangement_eq3",
    "derangement_eq4",
    "derangement_eq5",
    "derangement_eq6",
    "derangement_lambda",
    "derangement_thm7",
    "derangements",
    "dpoly",
    "dpoly_eval",
    "eform_eval",
    "eform_lt",
    "eform_sign",
    "enclose_e",
    "enclose_e_inv",
    "exp_enclosure",
    "factorial",
    "frac_e_nfact",
    "hyp1f1",
    "hyp2f0",
    "hyp2f0_identity_check",
    "hyp2f0_special",
    "inc_gamma_int",
    "integral_identities",
    "partial_sum_pos",
    "path_argmax_lengths",
    "path_count",
    "path_count_by_length",
    "path_cycle_counts",
    "path_length_sum",
    "quad_gamma",
    "__version__",
]
