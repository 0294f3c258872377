"""Fuzzy-AHP ranking engine.

Ingests an alternatives-by-criteria ratings table, derives criterion
weights by triangular-fuzzy extent analysis behind a Saaty consistency
gate, ranks by weighted score, and cross-checks the result against an
independent straight-line recomputation.
"""

from .consistency import (
    CR_LIMIT,
    SAATY_RANDOM_INDEX,
    ComparisonMatrix,
    ConsistencyReport,
    build_comparison,
    check,
    consistency_index,
    consistency_ratio,
    lambda_max,
    random_index,
    register_derivation_rule,
)
from .dataset import DatasetSchema, RatingMatrix, column_means, load_csv
from .errors import (
    AllZeroDegrees,
    DimensionMismatch,
    EmptyDataset,
    EmptyInput,
    FahpError,
    GateRejected,
    LengthMismatch,
    MissingColumn,
    NoConvergence,
    NonNumericCell,
    NonPositiveSupport,
    NonScaleEntry,
    OrderTooSmall,
    OutOfRange,
    PipelineError,
    TooFewCriteria,
    UnknownDerivationRule,
    UnknownIntensity,
    UnknownStage,
    UnsupportedOrder,
    ZeroRandomIndex,
)
from .extent import (
    WeightVector,
    min_degree,
    min_degrees,
    possibility,
    synthetic_extents,
    weights,
)
from .normalize import NormalizedMatrix, normalize, saw_normalize
from .pipeline import PipelineResult, RunConfig, run, run_to_consistency
from .ranking import (
    RankingReport,
    RankRow,
    ScoreVector,
    ValidationRecord,
    build_report,
    mse,
    rank,
    score,
    validate,
)
from .reference import reference_scores, reference_weights
from .tfn import (
    FuzzyComparisonMatrix,
    ScaleTable,
    Tfn,
    default_scale_table,
    fuzzify,
    scale_lookup,
    tfn_add,
    tfn_reciprocal,
)

__version__ = "0.1.0"

__all__ = [
    "AllZeroDegrees",
    "ComparisonMatrix",
    "ConsistencyReport",
    "CR_LIMIT",
    "DatasetSchema",
    "DimensionMismatch",
    "EmptyDataset",
    "EmptyInput",
    "FahpError",
    "FuzzyComparisonMatrix",
    "GateRejected",
    "LengthMismatch",
    "MissingColumn",
    "NoConvergence",
    "NonNumericCell",
    "NonPositiveSupport",
    "NonScaleEntry",
    "NormalizedMatrix",
    "OrderTooSmall",
    "OutOfRange",
    "PipelineError",
    "PipelineResult",
    "RankRow",
    "RankingReport",
    "RatingMatrix",
    "RunConfig",
    "SAATY_RANDOM_INDEX",
    "ScaleTable",
    "ScoreVector",
    "Tfn",
    "TooFewCriteria",
    "UnknownDerivationRule",
    "UnknownIntensity",
    "UnknownStage",
    "UnsupportedOrder",
    "ValidationRecord",
    "WeightVector",
    "ZeroRandomIndex",
    "build_comparison",
    "build_report",
    "check",
    "column_means",
    "consistency_index",
    "consistency_ratio",
    "default_scale_table",
    "fuzzify",
    "lambda_max",
    "load_csv",
    "min_degree",
    "min_degrees",
    "mse",
    "normalize",
    "possibility",
    "rank",
    "random_index",
    "reference_scores",
    "reference_weights",
    "register_derivation_rule",
    "run",
    "run_to_consistency",
    "saw_normalize",
    "scale_lookup",
    "score",
    "synthetic_extents",
    "tfn_add",
    "tfn_reciprocal",
    "validate",
    "weights",
]
