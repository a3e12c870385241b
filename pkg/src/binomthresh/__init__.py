"""binomthresh: exact and certified-float computation of the binomial
threshold sequences

    f(n) = least k >= 1 with C(n,k) > 2**n / (n+1)
    L(n) = least k >= 1 with C(n,k) > 2**n / n

for n >= 3, together with range verification of their structural properties,
an asymptotic-residual analysis, and cache/b-file serialization.
"""

from .analysis import (
    ResidualRecord,
    ResidualSummary,
    asymptotic_approx,
    remark21_check,
    residual_records,
    residual_summary,
)
from .errors import CorruptCacheError, DomainError, ResourceLimitError
from .exact import (
    ExactOrdering,
    ThresholdKind,
    binomial_exact,
    compare_exact,
    exceeds,
    lemma21_holds,
)
from .fastpath import (
    Certainty,
    FastVerdict,
    LogFactorialTable,
    build_table,
    compare_fast,
    exceeds_hybrid,
    shared_table,
)
from .sequence import (
    CHECK_IDS,
    SequenceRecord,
    VerificationReport,
    compute_L,
    compute_f,
    compute_range,
    compute_range_parallel,
    extend_range,
    lemma22_minimal_n,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "CHECK_IDS",
    "Certainty",
    "CorruptCacheError",
    "DomainError",
    "ExactOrdering",
    "FastVerdict",
    "LogFactorialTable",
    "ResidualRecord",
    "ResidualSummary",
    "ResourceLimitError",
    "SequenceRecord",
    "ThresholdKind",
    "VerificationReport",
    "asymptotic_approx",
    "binomial_exact",
    "build_table",
    "compare_exact",
    "compare_fast",
    "compute_L",
    "compute_f",
    "compute_range",
    "compute_range_parallel",
    "exceeds",
    "exceeds_hybrid",
    "extend_range",
    "lemma21_holds",
    "lemma22_minimal_n",
    "remark21_check",
    "residual_records",
    "residual_summary",
    "shared_table",
    "verify",
]
