"""Increasing tableaux, m-Narayana and m-Schroder lattice paths, K-promotion
and exact cyclic sieving checks."""

__version__ = "0.1.0"

from .errors import (
    ActionOrderMismatch,
    AlreadyStandard,
    DivisionNotExact,
    DomainError,
    MissingValue,
    NotFixed,
    NotHook,
    NotIncreasing,
    NotSmall,
    NotStandard,
    ShapeMismatch,
    TabkitError,
)
from .polynomial import QPolynomial, cyclotomic
from .tableaux import (
    Content,
    IncreasingTableau,
    Partition,
    ascent_set,
    content,
    enumerate_all_inc,
    enumerate_inc,
    hook_length_count,
    validate,
)
from .paths import (
    LatticePath,
    SchroderPath,
    ascents,
    enumerate_chain_paths,
    enumerate_schroder,
    narayana_closed,
    narayana_polynomial,
)
from .bijections import (
    inc_to_schroder,
    large_to_row_increasing,
    path_to_syt,
    phi,
    phi_fiber,
    phi_step,
    row_increasing_to_large,
    schroder_to_inc,
    syt_to_path,
)
from .promotion import (
    PromotionOrbit,
    content_rotation_check,
    fixed_count,
    gamma,
    k_promote,
    k_promote_hook,
    orbit_decomposition,
    promotion_order,
    psi,
)
from .csp import (
    CspReport,
    RootOfUnityValue,
    csp_verify,
    evaluate_at_root,
    hook_csp_polynomial,
    lemma2_fiber_count,
    q_binomial,
    q_binomial_at_root,
    rect_counterexample,
)

__all__ = [
    "__version__",
    "ActionOrderMismatch",
    "AlreadyStandard",
    "DivisionNotExact",
    "DomainError",
    "MissingValue",
    "NotFixed",
    "NotHook",
    "NotIncreasing",
    "NotSmall",
    "NotStandard",
    "ShapeMismatch",
    "TabkitError",
    "QPolynomial",
    "cyclotomic",
    "Content",
    "IncreasingTableau",
    "Partition",
    "ascent_set",
    "content",
    "enumerate_all_inc",
    "enumerate_inc",
    "hook_length_count",
    "validate",
    "LatticePath",
    "SchroderPath",
    "ascents",
    "enumerate_chain_paths",
    "enumerate_schroder",
    "narayana_closed",
    "narayana_polynomial",
    "inc_to_schroder",
    "large_to_row_increasing",
    "path_to_syt",
    "phi",
    "phi_fiber",
    "phi_step",
    "row_increasing_to_large",
    "schroder_to_inc",
    "syt_to_path",
    "PromotionOrbit",
    "content_rotation_check",
    "fixed_count",
    "gamma",
    "k_promote",
    "k_promote_hook",
    "orbit_decomposition",
    "promotion_order",
    "psi",
    "CspReport",
    "RootOfUnityValue",
    "csp_verify",
    "evaluate_at_root",
    "hook_csp_polynomial",
    "lemma2_fiber_count",
    "q_binomial",
    "q_binomial_at_root",
    "rect_counterexample",
]
