"""Exact counting of full-rank k x k column submatrices over GF(2)."""

from .codes import (
    DEFAULT_MAX_ENUM_DIM,
    CodePair,
    WeightEnumerator,
    dual_of,
    effective_distance,
    macwilliams,
    min_weight,
    weight_enumerator,
)
from .counting import (
    DEFAULT_BUDGET,
    BruteForceResult,
    CountReport,
    SubsetIndex,
    analyze,
    brute_force_counts,
    complement_duality_check,
    condition_check,
    full_rank_count_formula,
    row_op_invariance_check,
    singular_count_formula,
)
from .errors import (
    BudgetError,
    ConditionError,
    ConsistencyError,
    DimensionError,
    FormatError,
    Gf2CountError,
    IndexSetError,
    RankError,
    ZeroCodeError,
)
from .gf2 import (
    BitMatrix,
    SystematicForm,
    from_text_rows,
    mat_mul_transpose,
    parse_matrix,
    permute_columns,
    rank,
    select_columns,
    systematic_form,
)

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "SystematicForm",
    "from_text_rows",
    "parse_matrix",
    "rank",
    "systematic_form",
    "select_columns",
    "permute_columns",
    "mat_mul_transpose",
    "WeightEnumerator",
    "CodePair",
    "weight_enumerator",
    "macwilliams",
    "min_weight",
    "dual_of",
    "effective_distance",
    "CountReport",
    "BruteForceResult",
    "SubsetIndex",
    "analyze",
    "brute_force_counts",
    "condition_check",
    "singular_count_formula",
    "full_rank_count_formula",
    "complement_duality_check",
    "row_op_invariance_check",
    "DEFAULT_BUDGET",
    "DEFAULT_MAX_ENUM_DIM",
    "Gf2CountError",
    "FormatError",
    "DimensionError",
    "IndexSetError",
    "RankError",
    "ZeroCodeError",
    "ConditionError",
    "BudgetError",
    "ConsistencyError",
]
