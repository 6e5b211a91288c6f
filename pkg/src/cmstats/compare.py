"""Composite scoring and ranking of competing confusion matrices.

Each model gets two scores in [0, 1]: the overall score averages the
normalized ranks of the 7 whole-matrix benchmarks, the class score
averages the 6 per-class benchmarks over all classes, optionally
weighted by class importance. Benchmarks that are undefined for a model
are dropped and the surviving weights renormalized, so a model is never
penalized for a structurally-undefined statistic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import (
    AllBenchmarksUndefinedError,
    InvalidWeightError,
    LabelMismatchError,
    NotEnoughModelsError,
    UnknownLabelError,
)
from .matrix import ConfusionMatrix
from .metrics import class_metric
from .overall import overall_metric
from .scales import BenchmarkScale, default_scales, interpret


@dataclass(frozen=True)
class CompareRow:
    rank: int
    name: str
    class_score: float
    overall_score: float


@dataclass(frozen=True)
class CompareReport:
    rows: tuple[CompareRow, ...]
    best: str | None

    def render_text(self) -> str:
        """Ranking table with a leading Best line."""
        name_width = max(16, max(len(row.name) for row in self.rows) + 4)
        lines = [f"Best : {self.best if self.best is not None else 'None'}", ""]
        lines.append(
            "Rank".ljust(6) + "Name".ljust(name_width) + "Class-Score".ljust(18) + "Overall-Score"
        )
        for row in self.rows:
            lines.append(
                str(row.rank).ljust(6)
                + row.name.ljust(name_width)
                + f"{row.class_score:.5f}".ljust(18)
                + f"{row.overall_score:.5f}"
            )
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "best": self.best,
            "rows": [
                {
                    "rank": row.rank,
                    "name": row.name,
                    "class_score": row.class_score,
                    "overall_score": row.overall_score,
                }
                for row in self.rows
            ],
        }


def _check_weights(weights: Mapping[str, float], what: str) -> dict[str, float]:
    out = {}
    for key, value in weights.items():
        value = float(value)
        if value < 0:
            raise InvalidWeightError(f"negative {what} weight {value} for {key!r}")
        out[str(key)] = value
    if out and not any(v > 0 for v in out.values()):
        raise InvalidWeightError(f"{what} weights must include at least one positive entry")
    return out


def _resolve_weights(
    weights: Mapping[str, float] | None, keys: tuple[str, ...], what: str
) -> dict[str, float]:
    """Absent map -> uniform; partial map -> missing keys weigh 0."""
    if weights is None:
        return {key: 1.0 for key in keys}
    checked = _check_weights(weights, what)
    unknown = set(checked) - set(keys)
    if unknown:
        raise UnknownLabelError(f"unknown {what} keys in weight map: {sorted(unknown)}")
    return {key: checked.get(key, 0.0) for key in keys}


def _weighted_mean(cells: list[tuple[float, float | None]], what: str) -> float:
    """Weighted mean over defined cells, weights renormalized to the survivors."""
    mass = 0.0
    acc = 0.0
    for weight, value in cells:
        if value is None or weight == 0.0:
            continue
        mass += weight
        acc += weight * value
    if mass == 0.0:
        raise AllBenchmarksUndefinedError(
            f"every weighted {what} benchmark is undefined for this matrix"
        )
    return acc / mass


def _split_scales(
    scales: Mapping[str, BenchmarkScale] | None,
) -> tuple[dict[str, BenchmarkScale], dict[str, BenchmarkScale]]:
    registry = default_scales() if scales is None else dict(scales)
    overall = {sid: s for sid, s in registry.items() if s.is_overall}
    per_class = {sid: s for sid, s in registry.items() if not s.is_overall}
    return overall, per_class


def overall_score(
    cm: ConfusionMatrix,
    benchmark_weights: Mapping[str, float] | None = None,
    scales: Mapping[str, BenchmarkScale] | None = None,
) -> float:
    """Weighted mean of the normalized overall-benchmark ranks."""
    overall_scales, _ = _split_scales(scales)
    ids = tuple(overall_scales)
    weights = _resolve_weights(benchmark_weights, ids, "overall benchmark")
    cells = []
    for sid in ids:
        scale = overall_scales[sid]
        result = interpret(scale, overall_metric(cm, scale.metric))
        cells.append((weights[sid], result.normalized))
    return _weighted_mean(cells, "overall")


def class_score(
    cm: ConfusionMatrix,
    class_weights: Mapping[str, float] | None = None,
    benchmark_weights: Mapping[str, float] | None = None,
    scales: Mapping[str, BenchmarkScale] | None = None,
) -> float:
    """Weighted mean of the normalized class-benchmark ranks over all classes."""
    _, class_scales = _split_scales(scales)
    ids = tuple(class_scales)
    bench_w = _resolve_weights(benchmark_weights, ids, "class benchmark")
    class_w = _resolve_weights(class_weights, cm.labels, "class")
    cells = []
    for sid in ids:
        scale = class_scales[sid]
        for label in cm.labels:
            result = interpret(scale, class_metric(cm, scale.metric, label))
            cells.append((bench_w[sid] * class_w[label], result.normalized))
    return _weighted_mean(cells, "class")


def compare(
    models: Mapping[str, ConfusionMatrix],
    class_weights: Mapping[str, float] | None = None,
    class_benchmark_weights: Mapping[str, float] | None = None,
    overall_benchmark_weights: Mapping[str, float] | None = None,
    by_class: bool = False,
    scales: Mapping[str, BenchmarkScale] | None = None,
) -> CompareReport:
    """Score, rank, and pick the best of two or more models.

    The best model is the unique maximizer of the class score when
    ``by_class`` is set; otherwise it must uniquely attain both score
    maxima simultaneously, and is absent when no model does.
    """
    if len(models) < 2:
        raise NotEnoughModelsError(f"need at least 2 models, got {len(models)}")
    named = {str(name): cm for name, cm in models.items()}
    label_sets = {cm.labels for cm in named.values()}
    if len(label_sets) != 1:
        raise LabelMismatchError(
            "all matrices must share one ordered label set, got "
            + " vs ".join(str(list(labels)) for labels in sorted(label_sets))
        )
    scored = {
        name: (
            class_score(cm, class_weights, class_benchmark_weights, scales),
            overall_score(cm, overall_benchmark_weights, scales),
        )
        for name, cm in named.items()
    }
    ordering = sorted(
        scored.items(), key=lambda item: (-item[1][0], -item[1][1], item[0])
    )
    rows = tuple(
        CompareRow(rank=i + 1, name=name, class_score=cs, overall_score=os)
        for i, (name, (cs, os)) in enumerate(ordering)
    )
    max_class = max(cs for cs, _ in scored.values())
    max_overall = max(os for _, os in scored.values())
    if by_class:
        winners = [name for name, (cs, _) in scored.items() if cs == max_class]
    else:
        winners = [
            name
            for name, (cs, os) in scored.items()
            if cs == max_class and os == max_overall
        ]
    best = winners[0] if len(winners) == 1 else None
    return CompareReport(rows=rows, best=best)
