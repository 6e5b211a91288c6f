"""Per-class metrics with macro/micro aggregation.

Metric values are ``float | None``: None means the formula is undefined
for the given counts (zero denominator or a log of a non-positive
argument). None is propagated, never coerced to 0 or NaN, and serializes
to JSON null.
"""

from __future__ import annotations

import math
from enum import Enum

from .errors import UnsupportedMicroMetricError
from .matrix import ClassCounts, ConfusionMatrix

MetricValue = float | None

SQRT3_OVER_PI = math.sqrt(3.0) / math.pi


class ClassMetricId(str, Enum):
    ACC = "ACC"
    TPR = "TPR"
    TNR = "TNR"
    PPV = "PPV"
    NPV = "NPV"
    FPR = "FPR"
    FNR = "FNR"
    F1 = "F1"
    MCC = "MCC"
    AUC = "AUC"
    PLR = "PLR"
    NLR = "NLR"
    DP = "DP"
    YULE_Q = "YULE_Q"

    def __str__(self) -> str:  # plain token in messages and reports
        return self.value


#: Metrics for which pooled-count micro averaging is defined.
MICRO_METRICS = frozenset(
    {
        ClassMetricId.TPR,
        ClassMetricId.TNR,
        ClassMetricId.PPV,
        ClassMetricId.NPV,
        ClassMetricId.FPR,
        ClassMetricId.FNR,
        ClassMetricId.F1,
    }
)


def _ratio(num: int, den: int) -> MetricValue:
    return None if den == 0 else num / den


def binary_metric(counts: ClassCounts, metric: ClassMetricId) -> MetricValue:
    """Evaluate one metric from raw tp/fp/fn/tn counts.

    This is the single formula table shared by per-class, micro-averaged
    and threshold-swept evaluation.
    """
    tp, fp, fn, tn = counts.tp, counts.fp, counts.fn, counts.tn
    metric = ClassMetricId(metric)
    if metric is ClassMetricId.ACC:
        return _ratio(tp + tn, counts.total)
    if metric is ClassMetricId.TPR:
        return _ratio(tp, tp + fn)
    if metric is ClassMetricId.TNR:
        return _ratio(tn, tn + fp)
    if metric is ClassMetricId.PPV:
        return _ratio(tp, tp + fp)
    if metric is ClassMetricId.NPV:
        return _ratio(tn, tn + fn)
    if metric is ClassMetricId.FPR:
        return _ratio(fp, fp + tn)
    if metric is ClassMetricId.FNR:
        return _ratio(fn, fn + tp)
    if metric is ClassMetricId.F1:
        # Pooled form: defined whenever 2tp+fp+fn > 0, and equal to
        # 2*PPV*TPR/(PPV+TPR) wherever both exist.
        return _ratio(2 * tp, 2 * tp + fp + fn)
    if metric is ClassMetricId.MCC:
        den_sq = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn)
        if den_sq == 0:
            return None
        return (tp * tn - fp * fn) / math.sqrt(den_sq)
    if metric is ClassMetricId.AUC:
        tpr = _ratio(tp, tp + fn)
        tnr = _ratio(tn, tn + fp)
        if tpr is None or tnr is None:
            return None
        return (tpr + tnr) / 2.0
    if metric is ClassMetricId.PLR:
        tpr = _ratio(tp, tp + fn)
        fpr = _ratio(fp, fp + tn)
        if tpr is None or fpr is None or fpr == 0.0:
            return None
        return tpr / fpr
    if metric is ClassMetricId.NLR:
        fnr = _ratio(fn, fn + tp)
        tnr = _ratio(tn, tn + fp)
        if fnr is None or tnr is None or tnr == 0.0:
            return None
        return fnr / tnr
    if metric is ClassMetricId.DP:
        tpr = _ratio(tp, tp + fn)
        tnr = _ratio(tn, tn + fp)
        if tpr is None or tnr is None:
            return None
        # Both log arguments must be strictly positive and finite.
        if not (0.0 < tpr < 1.0 and 0.0 < tnr < 1.0):
            return None
        return SQRT3_OVER_PI * (math.log(tpr / (1.0 - tnr)) + math.log(tnr / (1.0 - tpr)))
    if metric is ClassMetricId.YULE_Q:
        concordant = tp * tn
        discordant = fp * fn
        if concordant + discordant == 0:
            return None
        return (concordant - discordant) / (concordant + discordant)
    raise AssertionError(f"unhandled metric {metric}")


def class_metric(cm: ConfusionMatrix, metric: ClassMetricId, label: object) -> MetricValue:
    """One-vs-rest metric for a single class."""
    return binary_metric(cm.class_counts(label), metric)


def macro_metric(cm: ConfusionMatrix, metric: ClassMetricId) -> MetricValue:
    """Unweighted mean over classes; None if any class value is None."""
    values = []
    for label in cm.labels:
        v = class_metric(cm, metric, label)
        if v is None:
            return None
        values.append(v)
    return sum(values) / len(values)


def micro_metric(cm: ConfusionMatrix, metric: ClassMetricId) -> MetricValue:
    """Metric applied once to class-pooled counts."""
    metric = ClassMetricId(metric)
    if metric not in MICRO_METRICS:
        raise UnsupportedMicroMetricError(
            f"micro averaging is not defined for {metric}; "
            f"supported: {sorted(m.value for m in MICRO_METRICS)}"
        )
    pooled = ClassCounts(
        tp=sum(cm.class_counts(label).tp for label in cm.labels),
        fp=sum(cm.class_counts(label).fp for label in cm.labels),
        fn=sum(cm.class_counts(label).fn for label in cm.labels),
        tn=sum(cm.class_counts(label).tn for label in cm.labels),
    )
    return binary_metric(pooled, metric)
