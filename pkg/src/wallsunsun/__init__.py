"""Wall-Sun-Sun primes for the Lucas sequences U_n = k*U_{n-1} + U_{n-2}.

A prime p is k-Wall-Sun-Sun when the period of (U_n) mod p^2 equals the
period mod p. Under mild hypotheses on k this is equivalent to the
trinomial x^{2p} - k x^p - 1 failing to be monogenic, and the package
computes both sides of that equivalence (plus two intermediate criteria)
so they can be checked against each other at scale.
"""

from .errors import (
    CriterionUnsupportedError,
    FactorizationBudgetError,
    HypothesisError,
    InconsistencyError,
)
from .intmath import (
    DEFAULT_FACTOR_BUDGET,
    Factorization,
    factorize,
    is_prime,
    is_squarefree,
    jacobi,
    mod_pow,
)
from .lucas import companion_order, lucas_u, period_p_squared, pisano_period
from .quadring import QuadElem, conjugate, eval_fp_alpha, ord_alpha, qr_mul, qr_pow
from .trinomial import (
    IndexVerdict,
    MonogenicityReport,
    Trinomial,
    discriminant_resultant,
    fp_discriminant,
    gh_coprimality,
    index_check_prime,
    index_d_value,
    is_monogenic_fp,
    wss_trinomial,
)
from .wss import (
    SearchHit,
    SearchResult,
    WssClassification,
    WssHypotheses,
    classify,
    delta_p,
    is_wss_by_alpha,
    is_wss_by_entry,
    is_wss_by_monogenicity,
    is_wss_by_period,
    search,
    validate_k,
)

__version__ = "0.1.0"

__all__ = [
    "CriterionUnsupportedError",
    "FactorizationBudgetError",
    "HypothesisError",
    "InconsistencyError",
    "DEFAULT_FACTOR_BUDGET",
    "Factorization",
    "factorize",
    "is_prime",
    "is_squarefree",
    "jacobi",
    "mod_pow",
    "companion_order",
    "lucas_u",
    "period_p_squared",
    "pisano_period",
    "QuadElem",
    "conjugate",
    "eval_fp_alpha",
    "ord_alpha",
    "qr_mul",
    "qr_pow",
    "IndexVerdict",
    "MonogenicityReport",
    "Trinomial",
    "discriminant_resultant",
    "fp_discriminant",
    "gh_coprimality",
    "index_check_prime",
    "index_d_value",
    "is_monogenic_fp",
    "wss_trinomial",
    "SearchHit",
    "SearchResult",
    "WssClassification",
    "WssHypotheses",
    "classify",
    "delta_p",
    "is_wss_by_alpha",
    "is_wss_by_entry",
    "is_wss_by_monogenicity",
    "is_wss_by_period",
    "search",
    "validate_k",
    "__version__",
]
