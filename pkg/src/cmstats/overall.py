"""Whole-matrix association and agreement statistics.

All functions return ``float | None`` with the same undefined semantics
as the per-class metrics. Definedness checks are done on exact integer
quantities so e.g. kappa is 1.0 exactly iff the matrix is diagonal.
"""

from __future__ import annotations

import math
from enum import Enum

from .matrix import ConfusionMatrix
from .metrics import MetricValue


class OverallMetricId(str, Enum):
    OVERALL_ACC = "OVERALL_ACC"
    KAPPA = "KAPPA"
    CHI2 = "CHI2"
    CRAMER_V = "CRAMER_V"
    PEARSON_C = "PEARSON_C"
    OVERALL_MCC = "OVERALL_MCC"
    LAMBDA_A = "LAMBDA_A"
    LAMBDA_B = "LAMBDA_B"
    KRIPPENDORFF_ALPHA = "KRIPPENDORFF_ALPHA"

    def __str__(self) -> str:
        return self.value


def overall_accuracy(cm: ConfusionMatrix) -> MetricValue:
    """Proportion of samples on the diagonal."""
    return cm.trace() / cm.n


def cohen_kappa(cm: ConfusionMatrix) -> MetricValue:
    """Chance-corrected agreement (Po - Pe) / (1 - Pe); None when Pe = 1."""
    n = cm.n
    pe_num = sum(r * c for r, c in zip(cm.row_sums, cm.col_sums))  # Pe = pe_num / n^2
    n_sq = n * n
    if pe_num == n_sq:
        return None
    return (cm.trace() * n - pe_num) / (n_sq - pe_num)


def chi_square(cm: ConfusionMatrix) -> MetricValue:
    """Pearson chi-square; cells with zero expected count contribute 0."""
    n = cm.n
    total = 0.0
    for i in range(cm.k):
        for j in range(cm.k):
            expected = cm.row_sums[i] * cm.col_sums[j] / n
            if expected == 0.0:
                continue
            diff = cm.counts[i][j] - expected
            total += diff * diff / expected
    return total


def cramer_v(cm: ConfusionMatrix) -> MetricValue:
    chi2 = chi_square(cm)
    return math.sqrt(chi2 / (cm.n * (cm.k - 1)))


def pearson_c(cm: ConfusionMatrix) -> MetricValue:
    chi2 = chi_square(cm)
    return math.sqrt(chi2 / (chi2 + cm.n))


def overall_mcc(cm: ConfusionMatrix) -> MetricValue:
    """Multi-class Matthews correlation in covariance form."""
    s = cm.n
    c = cm.trace()
    cross = sum(p * t for p, t in zip(cm.col_sums, cm.row_sums))
    pred_sq = s * s - sum(p * p for p in cm.col_sums)
    act_sq = s * s - sum(t * t for t in cm.row_sums)
    if pred_sq == 0 or act_sq == 0:
        return None
    return (c * s - cross) / math.sqrt(pred_sq * act_sq)


def goodman_kruskal_lambda(cm: ConfusionMatrix, direction: str) -> MetricValue:
    """Proportional reduction in prediction error.

    Direction "A" predicts the actual class from the predicted one
    (conditions on columns); "B" predicts the predicted class from the
    actual one (conditions on rows). The paper of record names both
    without fixing the convention; this one is documented in the CLI.
    """
    if direction == "A":
        within = sum(
            max(cm.counts[i][j] for i in range(cm.k)) for j in range(cm.k)
        )
        marginal = max(cm.row_sums)
    elif direction == "B":
        within = sum(max(row) for row in cm.counts)
        marginal = max(cm.col_sums)
    else:
        raise ValueError(f'lambda direction must be "A" or "B", got {direction!r}')
    if cm.n == marginal:
        return None
    return (within - marginal) / (cm.n - marginal)


def krippendorff_alpha(cm: ConfusionMatrix) -> MetricValue:
    """Nominal two-rater alpha from the coincidence matrix.

    Actual and predicted labels are treated as two raters over n units;
    the coincidence matrix is counts + counts^T.
    """
    k = cm.k
    coincidence = [
        [cm.counts[i][j] + cm.counts[j][i] for j in range(k)] for i in range(k)
    ]
    marginals = [sum(row) for row in coincidence]
    big_n = sum(marginals)  # = 2n
    disagree_obs = sum(
        coincidence[i][j] for i in range(k) for j in range(k) if i != j
    )
    disagree_exp = sum(
        marginals[i] * marginals[j] for i in range(k) for j in range(k) if i != j
    )
    if disagree_exp == 0:
        return None
    d_o = disagree_obs / big_n
    d_e = disagree_exp / (big_n * (big_n - 1))
    return 1.0 - d_o / d_e


def overall_metric(cm: ConfusionMatrix, metric: OverallMetricId) -> MetricValue:
    """Dispatch by id; the route used by reports and benchmark scoring."""
    metric = OverallMetricId(metric)
    if metric is OverallMetricId.OVERALL_ACC:
        return overall_accuracy(cm)
    if metric is OverallMetricId.KAPPA:
        return cohen_kappa(cm)
    if metric is OverallMetricId.CHI2:
        return chi_square(cm)
    if metric is OverallMetricId.CRAMER_V:
        return cramer_v(cm)
    if metric is OverallMetricId.PEARSON_C:
        return pearson_c(cm)
    if metric is OverallMetricId.OVERALL_MCC:
        return overall_mcc(cm)
    if metric is OverallMetricId.LAMBDA_A:
        return goodman_kruskal_lambda(cm, "A")
    if metric is OverallMetricId.LAMBDA_B:
        return goodman_kruskal_lambda(cm, "B")
    if metric is OverallMetricId.KRIPPENDORFF_ALPHA:
        return krippendorff_alpha(cm)
    raise AssertionError(f"unhandled metric {metric}")
