"""cmstats: confusion-matrix analytics for multi-class classifiers.

Construct labeled confusion matrices, compute per-class and whole-matrix
statistics with explicit undefined-value semantics, interpret them on
ordinal benchmark scales, sweep ROC/PR curves, and rank competing models
with weighted composite scores.
"""

from .compare import CompareReport, CompareRow, class_score, compare, overall_score
from .curves import (
    PR,
    ROC,
    CurvePoints,
    ScoreMatrix,
    auc_trapezoid,
    binarize_at_threshold,
    curve,
    default_thresholds,
)
from .errors import (
    AllBenchmarksUndefinedError,
    CmStatsError,
    DegenerateCurveError,
    EmptyInputError,
    InvalidLabelError,
    InvalidScaleError,
    InvalidScoreError,
    InvalidWeightError,
    LabelMismatchError,
    NegativeCountError,
    NotEnoughModelsError,
    OutOfRangeError,
    ShapeError,
    UnknownLabelError,
    UnsortedPointsError,
    UnsupportedMicroMetricError,
    VectorLengthError,
)
from .matrix import ClassCounts, ConfusionMatrix
from .metrics import (
    MICRO_METRICS,
    ClassMetricId,
    MetricValue,
    binary_metric,
    class_metric,
    macro_metric,
    micro_metric,
)
from .overall import (
    OverallMetricId,
    chi_square,
    cohen_kappa,
    cramer_v,
    goodman_kruskal_lambda,
    krippendorff_alpha,
    overall_accuracy,
    overall_mcc,
    overall_metric,
    pearson_c,
)
from .report import build_report, render_report_csv, render_report_text
from .scales import (
    BenchmarkResult,
    BenchmarkScale,
    ScaleLevel,
    default_scales,
    interpret,
    load_scales,
)

__version__ = "0.1.0"

__all__ = [
    "AllBenchmarksUndefinedError",
    "BenchmarkResult",
    "BenchmarkScale",
    "ClassCounts",
    "ClassMetricId",
    "CmStatsError",
    "CompareReport",
    "CompareRow",
    "ConfusionMatrix",
    "CurvePoints",
    "DegenerateCurveError",
    "EmptyInputError",
    "InvalidLabelError",
    "InvalidScaleError",
    "InvalidScoreError",
    "InvalidWeightError",
    "LabelMismatchError",
    "MICRO_METRICS",
    "MetricValue",
    "NegativeCountError",
    "NotEnoughModelsError",
    "OutOfRangeError",
    "OverallMetricId",
    "PR",
    "ROC",
    "ScaleLevel",
    "ScoreMatrix",
    "ShapeError",
    "UnknownLabelError",
    "UnsortedPointsError",
    "UnsupportedMicroMetricError",
    "VectorLengthError",
    "auc_trapezoid",
    "binarize_at_threshold",
    "binary_metric",
    "build_report",
    "chi_square",
    "class_metric",
    "class_score",
    "cohen_kappa",
    "compare",
    "cramer_v",
    "curve",
    "default_scales",
    "default_thresholds",
    "goodman_kruskal_lambda",
    "interpret",
    "krippendorff_alpha",
    "load_scales",
    "macro_metric",
    "micro_metric",
    "overall_accuracy",
    "overall_mcc",
    "overall_metric",
    "overall_score",
    "pearson_c",
    "render_report_csv",
    "render_report_text",
]
