"""Command-line front end: evaluate one matrix, compare several, or emit
curve point files.

Exit codes: 0 on success, 2 on any usage or input problem. Diagnostics
and warnings go to stderr; only report data is written to stdout.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .compare import compare
from .curves import PR, ROC, ScoreMatrix, curve
from .errors import CmStatsError, DegenerateCurveError, InvalidLabelError
from .matrix import ConfusionMatrix
from .report import build_report, render_report_csv, render_report_text
from .scales import default_scales, load_scales


class _CliError(Exception):
    """Input problem that should abort with exit code 2."""


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}") from exc


def _read_json(path: str) -> object:
    text = _read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _CliError(f"{path} is not valid JSON: {exc}") from exc


def _read_vector(path: str) -> list[str]:
    """One label per line; tolerant of a trailing newline, not of blank lines."""
    lines = _read_text(path).split("\n")
    while lines and lines[-1] == "":
        lines.pop()
    labels = [line.rstrip("\r") for line in lines]
    if any(label == "" for label in labels):
        raise InvalidLabelError(f"{path} contains an empty line")
    return labels


def _read_matrix(path: str) -> ConfusionMatrix:
    return ConfusionMatrix.from_dict(_read_json(path))


def _read_scales(path: str | None):
    return default_scales() if path is None else load_scales(path)


def _read_weights(path: str) -> dict[str, float]:
    doc = _read_json(path)
    if not isinstance(doc, dict):
        raise _CliError(f"{path} must be a JSON object mapping labels to weights")
    return {str(k): v for k, v in doc.items()}


def cmd_eval(args: argparse.Namespace) -> int:
    vectors_given = args.actual is not None or args.pred is not None
    if vectors_given and args.matrix is not None:
        raise _CliError("give either --actual/--pred or --matrix, not both")
    if vectors_given:
        if args.actual is None or args.pred is None:
            raise _CliError("--actual and --pred must be given together")
        cm = ConfusionMatrix.from_vectors(_read_vector(args.actual), _read_vector(args.pred))
    elif args.matrix is not None:
        cm = _read_matrix(args.matrix)
    else:
        raise _CliError("an input is required: --actual/--pred or --matrix")
    report = build_report(cm, _read_scales(args.scales))
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    elif args.format == "csv":
        sys.stdout.write(render_report_csv(cm, report))
    else:
        sys.stdout.write(render_report_text(cm, report) + "\n")
    return 0


def _parse_model_arg(arg: str) -> tuple[str, str]:
    if "=" in arg:
        name, _, path = arg.partition("=")
        if not name or not path:
            raise _CliError(f"bad model argument {arg!r}; use NAME=PATH")
        return name, path
    return Path(arg).stem, arg


def cmd_compare(args: argparse.Namespace) -> int:
    models = {}
    for arg in args.matrices:
        name, path = _parse_model_arg(arg)
        if name in models:
            raise _CliError(f"duplicate model name {name!r}")
        models[name] = _read_matrix(path)
    weights = _read_weights(args.weights) if args.weights else None
    report = compare(
        models,
        class_weights=weights,
        by_class=args.by_class,
        scales=_read_scales(args.scales),
    )
    if args.format == "json":
        sys.stdout.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(report.render_text() + "\n")
    return 0


def _safe_filename(label: str) -> str:
    return re.sub(r"[^A-Za-z0-9._-]", "_", label)


def cmd_curve(args: argparse.Namespace) -> int:
    sm = ScoreMatrix.from_csv(_read_text(args.scores).splitlines())
    kind = ROC if args.kind == "roc" else PR
    if args.cls is not None:
        if args.cls not in sm.labels:
            raise _CliError(f"class {args.cls!r} is not in the scores header")
        wanted = [args.cls]
    else:
        wanted = list(sm.labels)
    thresholds = None
    if args.thresholds:
        raw = _read_vector(args.thresholds)
        try:
            thresholds = [float(t) for t in raw]
        except ValueError as exc:
            raise _CliError(f"bad threshold value: {exc}") from exc
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    summary: dict = {"kind": args.kind, "classes": {}}
    for label in wanted:
        try:
            result = curve(sm, label, kind, thresholds)
        except DegenerateCurveError as exc:
            print(f"warning: skipping class {label!r}: {exc}", file=sys.stderr)
            summary["classes"][label] = {"auc": None, "file": None}
            continue
        filename = f"{args.kind}_{_safe_filename(label)}.csv"
        lines = ["threshold,x,y"]
        for threshold, x, y in result.samples:
            t_field = "" if threshold is None else repr(threshold)
            lines.append(f"{t_field},{x!r},{y!r}")
        (out_dir / filename).write_text("\n".join(lines) + "\n", encoding="utf-8")
        summary["classes"][label] = {"auc": result.auc, "file": filename}
    summary_path = out_dir / f"{args.kind}_summary.json"
    summary_path.write_text(json.dumps(summary, indent=2) + "\n", encoding="utf-8")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cmstats",
        description="Confusion-matrix statistics, benchmark interpretation, "
        "and weighted model comparison.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="full statistics report for one matrix")
    p_eval.add_argument("--actual", help="file with one actual label per line")
    p_eval.add_argument("--pred", help="file with one predicted label per line")
    p_eval.add_argument("--matrix", help='JSON matrix document {"labels":..., "matrix":...}')
    p_eval.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_eval.add_argument("--scales", help="JSON scale-table override file")
    p_eval.set_defaults(func=cmd_eval)

    p_cmp = sub.add_parser("compare", help="rank two or more matrices")
    p_cmp.add_argument(
        "matrices",
        nargs="+",
        metavar="MATRIX",
        help="matrix files, optionally as NAME=PATH (default name: file stem)",
    )
    p_cmp.add_argument("--weights", help="JSON map of class label to non-negative weight")
    p_cmp.add_argument(
        "--by-class",
        action="store_true",
        help="pick the best model by class score alone",
    )
    p_cmp.add_argument("--format", choices=["text", "json"], default="text")
    p_cmp.add_argument("--scales", help="JSON scale-table override file")
    p_cmp.set_defaults(func=cmd_compare)

    p_curve = sub.add_parser("curve", help="emit ROC/PR point files and an AUC summary")
    p_curve.add_argument("--scores", required=True, help='CSV with header "actual,<label1>,..."')
    p_curve.add_argument("--kind", choices=["roc", "pr"], required=True)
    p_curve.add_argument(
        "--class", dest="cls", help="restrict to one class (default: every class)"
    )
    p_curve.add_argument("--thresholds", help="file with one threshold per line")
    p_curve.add_argument("--out-dir", required=True, help="directory for point files")
    p_curve.set_defaults(func=cmd_curve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (_CliError, CmStatsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
