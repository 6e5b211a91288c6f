"""Evaluation report assembly and rendering.

A report document is a plain dict with deterministic key order:
matrix echo, per-class statistics, overall statistics, and benchmark
interpretations. Undefined values are None (JSON null); text and CSV
renderings print 5 decimal places.
"""

from __future__ import annotations

import csv
import io
from typing import Mapping

from .matrix import ConfusionMatrix
from .metrics import ClassMetricId, class_metric
from .overall import OverallMetricId, overall_metric
from .scales import BenchmarkScale, default_scales, interpret


def _fmt(value: float | None) -> str:
    return "None" if value is None else f"{value:.5f}"


def build_report(
    cm: ConfusionMatrix, scales: Mapping[str, BenchmarkScale] | None = None
) -> dict:
    """Full statistics document for one matrix."""
    registry = default_scales() if scales is None else dict(scales)
    class_stat = {
        metric.value: {label: class_metric(cm, metric, label) for label in cm.labels}
        for metric in ClassMetricId
    }
    overall_stat = {metric.value: overall_metric(cm, metric) for metric in OverallMetricId}
    bench_overall = {}
    bench_class = {}
    for sid, scale in registry.items():
        if scale.is_overall:
            result = interpret(scale, overall_metric(cm, scale.metric))
            bench_overall[sid] = {"level": result.level_name, "normalized": result.normalized}
        else:
            bench_class[sid] = {}
            for label in cm.labels:
                result = interpret(scale, class_metric(cm, scale.metric, label))
                bench_class[sid][label] = {
                    "level": result.level_name,
                    "normalized": result.normalized,
                }
    return {
        "matrix": cm.to_dict(),
        "class_stat": class_stat,
        "overall_stat": overall_stat,
        "benchmarks": {"overall": bench_overall, "class": bench_class},
    }


def render_report_text(cm: ConfusionMatrix, report: dict) -> str:
    """Human-readable report: matrix table plus aligned statistic blocks."""
    lines = [cm.render_text(), ""]
    lines.append("Overall statistics")
    for name, value in report["overall_stat"].items():
        lines.append(f"  {name:<20}{_fmt(value)}")
    lines.append("")
    lines.append("Class statistics")
    col_width = max(9, max(len(label) for label in cm.labels) + 2)
    header = "  " + "metric".ljust(12) + "".join(label.rjust(col_width) for label in cm.labels)
    lines.append(header)
    for name, per_class in report["class_stat"].items():
        row = "  " + name.ljust(12)
        row += "".join(_fmt(per_class[label]).rjust(col_width) for label in cm.labels)
        lines.append(row)
    lines.append("")
    lines.append("Benchmarks (overall)")
    for sid, result in report["benchmarks"]["overall"].items():
        level = result["level"] if result["level"] is not None else "None"
        lines.append(f"  {sid:<20}{level:<20}{_fmt(result['normalized'])}")
    lines.append("")
    lines.append("Benchmarks (class)")
    for sid, per_class in report["benchmarks"]["class"].items():
        lines.append(f"  {sid}")
        for label, result in per_class.items():
            level = result["level"] if result["level"] is not None else "None"
            lines.append(f"    {label:<18}{level:<14}{_fmt(result['normalized'])}")
    return "\n".join(lines)


def render_report_csv(cm: ConfusionMatrix, report: dict) -> str:
    """Flat CSV: section,name,class,value,level. Undefined values are empty."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["section", "name", "class", "value", "level"])

    def cell(value: float | None) -> str:
        return "" if value is None else repr(value)

    for i, actual in enumerate(cm.labels):
        for j, predicted in enumerate(cm.labels):
            writer.writerow(["matrix", actual, predicted, cm.counts[i][j], ""])
    for name, per_class in report["class_stat"].items():
        for label, value in per_class.items():
            writer.writerow(["class_stat", name, label, cell(value), ""])
    for name, value in report["overall_stat"].items():
        writer.writerow(["overall_stat", name, "", cell(value), ""])
    for sid, result in report["benchmarks"]["overall"].items():
        writer.writerow(
            ["benchmark_overall", sid, "", cell(result["normalized"]), result["level"] or ""]
        )
    for sid, per_class in report["benchmarks"]["class"].items():
        for label, result in per_class.items():
            writer.writerow(
                ["benchmark_class", sid, label, cell(result["normalized"]), result["level"] or ""]
            )
    return buf.getvalue()
