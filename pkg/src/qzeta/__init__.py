"""qzeta: exact q-series engine for q-multiple zeta values.

Compute integral q-expansions of (modified) qMZVs, verify the cyclic-sum,
Ohno and Ohno-Zagier relation families order by order, reproduce the exact
rank tables of the coefficient matrices, mine and certify integer linear
relations, and evaluate everything numerically as a cross-check.
"""

from qzeta._version import __version__
from qzeta.errors import (
    BadConstantTerm,
    BadQ,
    CacheIOError,
    DivergenceDetected,
    DivergentSum,
    MiningVerificationError,
    NoPartAtLeastTwo,
    NotAdmissible,
    QZetaError,
    WeightTooSmall,
    ZeroConstantTerm,
)
from qzeta.expand import (
    Expander,
    expand_bruteforce,
    expand_modified,
    expand_raw,
    expand_ssum,
    expand_tsum,
)
from qzeta.genfun import (
    TSeries,
    WPoly,
    ohno_zagier_lhs,
    ohno_zagier_rhs,
    polylog,
    qdiff,
    verify_genfun_change_of_vars,
    verify_log_product,
    verify_ohno_zagier,
    verify_qdiff_recurrences,
    verify_qhyp_equation,
)
from qzeta.indices import (
    code_of,
    compositions,
    decode,
    dual,
    enumerate_admissible,
    enumerate_by,
    enumerate_by_admissible,
    height,
    is_admissible,
    parse_index,
    weight,
)
from qzeta.kernel import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from qzeta.numeric import (
    NumericResult,
    check_heine,
    check_mzv_relation,
    check_solution_formula,
    eval_from_series,
    eval_mzv,
    eval_qmzv,
)
from qzeta.ranklab import (
    RatMatrix,
    Relation,
    build_A_le_k,
    build_Ak,
    in_span,
    mine_mixed_weight,
    mine_relations,
    mzv_limit,
    nullspace,
    rank_exact,
    upper_bound_from_relations,
)
from qzeta.relations import (
    VerificationReport,
    verify_cyclic,
    verify_cyclic_lemma,
    verify_duality,
    verify_ohno,
)
from qzeta.series import QSeries

__all__ = [
    "__version__",
    "KERNEL_IMPLEMENTATION",
    "QSeries",
    "TSeries",
    "WPoly",
    "Expander",
    "NumericResult",
    "RatMatrix",
    "Relation",
    "VerificationReport",
    "QZetaError",
    "ZeroConstantTerm",
    "BadConstantTerm",
    "NotAdmissible",
    "WeightTooSmall",
    "NoPartAtLeastTwo",
    "DivergentSum",
    "BadQ",
    "DivergenceDetected",
    "MiningVerificationError",
    "CacheIOError",
    "expand_modified",
    "expand_raw",
    "expand_bruteforce",
    "expand_tsum",
    "expand_ssum",
    "code_of",
    "decode",
    "dual",
    "weight",
    "height",
    "is_admissible",
    "parse_index",
    "enumerate_admissible",
    "enumerate_by",
    "enumerate_by_admissible",
    "compositions",
    "verify_cyclic",
    "verify_cyclic_lemma",
    "verify_ohno",
    "verify_duality",
    "polylog",
    "qdiff",
    "verify_qdiff_recurrences",
    "verify_qhyp_equation",
    "ohno_zagier_lhs",
    "ohno_zagier_rhs",
    "verify_ohno_zagier",
    "verify_log_product",
    "verify_genfun_change_of_vars",
    "eval_from_series",
    "build_Ak",
    "build_A_le_k",
    "rank_exact",
    "nullspace",
    "upper_bound_from_relations",
    "mine_relations",
    "mine_mixed_weight",
    "in_span",
    "mzv_limit",
    "eval_qmzv",
    "eval_mzv",
    "check_mzv_relation",
    "check_heine",
    "check_solution_formula",
]
