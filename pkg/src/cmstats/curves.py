"""Threshold-swept ROC and precision-recall curves with trapezoidal AUC.

Multi-class score sets are handled strictly one-vs-rest: each curve
treats one class as positive and every other sample as negative. A
sample is predicted positive at threshold t when its score for the
class is >= t.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DegenerateCurveError,
    EmptyInputError,
    InvalidScoreError,
    ShapeError,
    UnknownLabelError,
    UnsortedPointsError,
    VectorLengthError,
)
from .matrix import ClassCounts, _as_label, _normalize_labels

ROC = "ROC"
PR = "PR"


@dataclass(frozen=True)
class ScoreMatrix:
    """Per-sample class scores in [0, 1] plus the actual labels.

    Rows are not required to sum to 1, so one-vs-rest scores from
    arbitrary models are accepted.
    """

    labels: tuple[str, ...]
    actual: tuple[str, ...]
    scores: tuple[tuple[float, ...], ...]
    _index: dict[str, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        labels = _normalize_labels(self.labels)
        actual = tuple(_as_label(a) for a in self.actual)
        if not actual:
            raise EmptyInputError("score matrix has no samples")
        if len(self.scores) != len(actual):
            raise VectorLengthError(
                f"{len(actual)} actual labels but {len(self.scores)} score rows"
            )
        unknown = set(actual) - set(labels)
        if unknown:
            raise UnknownLabelError(f"actual labels not in header: {sorted(unknown)}")
        rows = []
        for row in self.scores:
            if len(row) != len(labels):
                raise ShapeError(
                    f"score rows must have {len(labels)} columns, got {len(row)}"
                )
            vals = tuple(float(v) for v in row)
            if any(not (0.0 <= v <= 1.0) or math.isnan(v) for v in vals):
                raise InvalidScoreError(f"scores must be finite and in [0, 1]: {list(vals)}")
            rows.append(vals)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "actual", actual)
        object.__setattr__(self, "scores", tuple(rows))
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(labels)})

    @classmethod
    def from_csv(cls, lines: Iterable[str]) -> "ScoreMatrix":
        """Parse the interchange CSV: header ``actual,<label1>,...``, one
        sample per row."""
        reader = csv.reader(lines)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyInputError("scores CSV is empty") from None
        if len(header) < 3 or header[0].strip() != "actual":
            raise ShapeError(
                'scores CSV header must be "actual,<label1>,<label2>,..."'
            )
        labels = tuple(h.strip() for h in header[1:])
        actual = []
        scores = []
        for row in reader:
            if not row:
                continue
            if len(row) != len(header):
                raise ShapeError(
                    f"scores CSV row has {len(row)} fields, expected {len(header)}"
                )
            actual.append(row[0].strip())
            try:
                scores.append(tuple(float(v) for v in row[1:]))
            except ValueError as exc:
                raise InvalidScoreError(f"bad score value in row {row}: {exc}") from None
        return cls(labels, tuple(actual), tuple(scores))

    @property
    def n(self) -> int:
        return len(self.actual)

    def column(self, label: object) -> tuple[float, ...]:
        key = _as_label(label)
        try:
            j = self._index[key]
        except KeyError:
            raise UnknownLabelError(
                f"unknown class {key!r}; known classes: {list(self.labels)}"
            ) from None
        return tuple(row[j] for row in self.scores)


@dataclass(frozen=True)
class CurvePoints:
    kind: str
    label: str
    thresholds: tuple[float, ...]
    points: tuple[tuple[float, float], ...]
    auc: float
    #: (threshold, x, y) per point in output order; threshold is None for
    #: synthetic ROC anchors. This is what the point-file writer emits.
    samples: tuple[tuple[float | None, float, float], ...] = ()


def binarize_at_threshold(sm: ScoreMatrix, label: object, threshold: float) -> ClassCounts:
    """Hard-label counts for one class at one threshold (score >= t is positive)."""
    key = _as_label(label)
    column = sm.column(key)
    tp = fp = fn = tn = 0
    for actual, score in zip(sm.actual, column):
        is_positive = actual == key
        predicted_positive = score >= threshold
        if is_positive and predicted_positive:
            tp += 1
        elif is_positive:
            fn += 1
        elif predicted_positive:
            fp += 1
        else:
            tn += 1
    return ClassCounts(tp=tp, fp=fp, fn=fn, tn=tn)


def auc_trapezoid(points: Sequence[tuple[float, float]]) -> float:
    """Trapezoidal integral of a polyline given by (x, y) pairs sorted by x."""
    if len(points) < 2:
        raise UnsortedPointsError("need at least 2 points to integrate")
    area = 0.0
    for (x1, y1), (x2, y2) in zip(points, points[1:]):
        if x2 < x1:
            raise UnsortedPointsError(
                f"points must be sorted by ascending x, got {x1} then {x2}"
            )
        area += (x2 - x1) * (y1 + y2) / 2.0
    return area


def default_thresholds(sm: ScoreMatrix, label: object) -> tuple[float, ...]:
    """Descending distinct scores of the class column, plus a sentinel
    above the maximum so the all-negative operating point is included."""
    distinct = sorted(set(sm.column(label)), reverse=True)
    sentinel = distinct[0] + 1.0
    return (sentinel, *distinct)


def curve(
    sm: ScoreMatrix,
    label: object,
    kind: str = ROC,
    thresholds: Sequence[float] | None = None,
) -> CurvePoints:
    """Sweep thresholds for one class and integrate the resulting curve.

    ROC points are (FPR, TPR) and get (0,0)/(1,1) anchors when missing.
    PR points are (recall, precision); thresholds where precision is
    undefined are dropped and no synthetic endpoints are added, so the
    AUC covers the observed recall range only.
    """
    if kind not in (ROC, PR):
        raise ValueError(f'curve kind must be "{ROC}" or "{PR}", got {kind!r}')
    key = _as_label(label)
    positives = sum(1 for a in sm.actual if a == key)
    if positives == 0 or positives == sm.n:
        raise DegenerateCurveError(
            f"class {key!r} has {positives} positive of {sm.n} samples; "
            "TPR or FPR is undefined at every threshold"
        )
    if thresholds is None:
        swept = default_thresholds(sm, key)
    else:
        swept = tuple(float(t) for t in thresholds)
        if not swept:
            raise EmptyInputError("threshold list is empty")
        if any(not (0.0 <= t <= 1.0) for t in swept):
            raise InvalidScoreError("user thresholds must lie in [0, 1]")
        swept = tuple(sorted(swept, reverse=True))
    samples: list[tuple[float | None, float, float]] = []
    for t in swept:
        counts = binarize_at_threshold(sm, key, t)
        tpr = counts.tp / (counts.tp + counts.fn)
        if kind == ROC:
            fpr = counts.fp / (counts.fp + counts.tn)
            samples.append((t, fpr, tpr))
        else:
            if counts.tp + counts.fp == 0:
                continue
            precision = counts.tp / (counts.tp + counts.fp)
            samples.append((t, tpr, precision))
    samples.sort(key=lambda s: s[1])
    if kind == ROC:
        if (samples[0][1], samples[0][2]) != (0.0, 0.0):
            samples.insert(0, (None, 0.0, 0.0))
        if (samples[-1][1], samples[-1][2]) != (1.0, 1.0):
            samples.append((None, 1.0, 1.0))
    points = [(x, y) for _, x, y in samples]
    area = auc_trapezoid(points) if len(points) >= 2 else 0.0
    return CurvePoints(
        kind=kind,
        label=key,
        thresholds=swept,
        points=tuple(points),
        auc=area,
        samples=tuple(samples),
    )
