from .__query import LQuery, make_query, as_shift
from .__engine import (
    LResult,
    evaluate,
    evaluate_detailed,
    completed,
    fe_residual,
    split_residual,
    evaluate_shifts,
    direct_series,
    conjugation_residual,
    period_identity_residual,
    truncation_length,
    tail_bound,
    root_number,
)
