"""End-to-end CLI behavior: formats, round-trips, exit codes, determinism."""

import csv
import json
import subprocess
import sys
from pathlib import Path

import pytest

ACT_LINES = "COVID\nHealthy\nFlu\nFlu\nCOVID\n"
PRED_LINES = "Flu\nHealthy\nCOVID\nFlu\nHealthy\n"

SCORES_CSV = "actual,p,q\np,0.9,0.1\nq,0.4,0.6\np,0.6,0.4\nq,0.1,0.9\n"


def run_cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "cmstats", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


@pytest.fixture
def workdir(tmp_path):
    (tmp_path / "act.txt").write_text(ACT_LINES)
    (tmp_path / "pred.txt").write_text(PRED_LINES)
    (tmp_path / "scores.csv").write_text(SCORES_CSV)
    (tmp_path / "diag.json").write_text(
        json.dumps({"labels": ["a", "b"], "matrix": [[3, 0], [0, 3]]})
    )
    (tmp_path / "good.json").write_text(
        json.dumps({"labels": ["a", "b"], "matrix": [[4, 1], [1, 4]]})
    )
    return tmp_path


class TestEval:
    def test_vectors_text_report(self, workdir):
        result = run_cli("eval", "--actual", str(workdir / "act.txt"), "--pred", str(workdir / "pred.txt"))
        assert result.returncode == 0
        assert "OVERALL_ACC" in result.stdout
        assert "0.40000" in result.stdout

    def test_matrix_json_report(self, workdir):
        result = run_cli("eval", "--matrix", str(workdir / "diag.json"), "--format", "json")
        assert result.returncode == 0
        doc = json.loads(result.stdout)
        assert doc["overall_stat"]["OVERALL_ACC"] == 1.0
        for token in ("TPR", "TNR", "PPV", "F1", "ACC"):
            assert all(v == 1.0 for v in doc["class_stat"][token].values())
        # Undefined serializes as null (PLR of a perfect classifier).
        assert doc["class_stat"]["PLR"]["a"] is None

    def test_json_has_every_metric_exactly_once(self, workdir):
        result = run_cli("eval", "--matrix", str(workdir / "diag.json"), "--format", "json")
        doc = json.loads(result.stdout)
        assert sorted(doc["class_stat"]) == sorted(
            "ACC TPR TNR PPV NPV FPR FNR F1 MCC AUC PLR NLR DP YULE_Q".split()
        )
        assert sorted(doc["overall_stat"]) == sorted(
            "OVERALL_ACC KAPPA CHI2 CRAMER_V PEARSON_C OVERALL_MCC LAMBDA_A LAMBDA_B "
            "KRIPPENDORFF_ALPHA".split()
        )
        assert len(doc["benchmarks"]["overall"]) == 7
        assert len(doc["benchmarks"]["class"]) == 6

    def test_csv_format(self, workdir):
        result = run_cli("eval", "--matrix", str(workdir / "diag.json"), "--format", "csv")
        assert result.returncode == 0
        rows = list(csv.reader(result.stdout.splitlines()))
        assert rows[0] == ["section", "name", "class", "value", "level"]
        sections = {row[0] for row in rows[1:]}
        assert sections == {"matrix", "class_stat", "overall_stat", "benchmark_overall", "benchmark_class"}

    def test_length_mismatch_exits_2(self, workdir):
        (workdir / "pred_long.txt").write_text(PRED_LINES + "Flu\n")
        result = run_cli("eval", "--actual", str(workdir / "act.txt"), "--pred", str(workdir / "pred_long.txt"))
        assert result.returncode == 2
        assert result.stderr.strip()
        assert "5" in result.stderr and "6" in result.stderr

    def test_both_input_modes_rejected(self, workdir):
        result = run_cli(
            "eval",
            "--actual", str(workdir / "act.txt"),
            "--pred", str(workdir / "pred.txt"),
            "--matrix", str(workdir / "diag.json"),
        )
        assert result.returncode == 2

    def test_missing_file_exits_2(self, workdir):
        result = run_cli("eval", "--matrix", str(workdir / "nope.json"))
        assert result.returncode == 2
        assert result.stderr.strip()

    def test_malformed_json_exits_2(self, workdir):
        (workdir / "broken.json").write_text("{not json")
        result = run_cli("eval", "--matrix", str(workdir / "broken.json"))
        assert result.returncode == 2
        assert result.stderr.strip()

    def test_scales_override_changes_benchmarks(self, workdir):
        table = [
            {
                "id": "KAPPA",
                "metric": "KAPPA",
                "levels": [
                    {"name": "Low", "lower": None, "upper": 0.99, "rank": 0},
                    {"name": "High", "lower": 0.99, "upper": None, "rank": 1},
                ],
            }
        ]
        (workdir / "scales.json").write_text(json.dumps(table))
        result = run_cli(
            "eval", "--matrix", str(workdir / "diag.json"),
            "--format", "json", "--scales", str(workdir / "scales.json"),
        )
        doc = json.loads(result.stdout)
        assert doc["benchmarks"]["overall"]["KAPPA"]["level"] == "High"


class TestCompare:
    def test_basic_ranking(self, workdir):
        result = run_cli("compare", str(workdir / "diag.json"), str(workdir / "good.json"))
        assert result.returncode == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "Best : diag"
        assert lines[2].startswith("Rank")
        assert lines[3].split()[1] == "diag"

    def test_named_inputs(self, workdir):
        result = run_cli(
            "compare",
            f"Classifier 1={workdir / 'good.json'}",
            f"Classifier 2={workdir / 'diag.json'}",
        )
        assert result.stdout.splitlines()[0] == "Best : Classifier 2"

    def test_identical_matrices_report_no_best(self, workdir):
        result = run_cli(
            "compare", f"m1={workdir / 'diag.json'}", f"m2={workdir / 'diag.json'}"
        )
        assert result.returncode == 0
        assert result.stdout.splitlines()[0] == "Best : None"

    def test_one_input_exits_2(self, workdir):
        result = run_cli("compare", str(workdir / "diag.json"))
        assert result.returncode == 2

    def test_label_mismatch_exits_2(self, workdir):
        (workdir / "other.json").write_text(
            json.dumps({"labels": ["x", "y"], "matrix": [[2, 0], [0, 2]]})
        )
        result = run_cli("compare", str(workdir / "diag.json"), str(workdir / "other.json"))
        assert result.returncode == 2
        assert result.stderr.strip()

    def test_all_zero_weights_exit_2(self, workdir):
        (workdir / "w.json").write_text(json.dumps({"a": 0.0, "b": 0.0}))
        result = run_cli(
            "compare",
            str(workdir / "diag.json"),
            str(workdir / "good.json"),
            "--weights", str(workdir / "w.json"),
        )
        assert result.returncode == 2
        assert "weight" in result.stderr.lower()

    def test_json_format(self, workdir):
        result = run_cli(
            "compare", str(workdir / "diag.json"), str(workdir / "good.json"),
            "--format", "json",
        )
        doc = json.loads(result.stdout)
        assert doc["best"] == "diag"
        assert doc["rows"][0]["rank"] == 1


class TestCurve:
    def test_roc_points_and_summary(self, workdir):
        out = workdir / "out"
        result = run_cli(
            "curve", "--scores", str(workdir / "scores.csv"),
            "--kind", "roc", "--out-dir", str(out),
        )
        assert result.returncode == 0
        summary = json.loads((out / "roc_summary.json").read_text())
        assert summary["classes"]["p"]["auc"] == 1.0
        point_rows = (out / "roc_p.csv").read_text().splitlines()
        assert point_rows[0] == "threshold,x,y"
        # The enumeration-oracle sweep, row for row (sentinel first).
        parsed = [row.split(",") for row in point_rows[1:]]
        assert [(r[1], r[2]) for r in parsed] == [
            ("0.0", "0.0"), ("0.0", "0.5"), ("0.0", "1.0"), ("0.5", "1.0"), ("1.0", "1.0")
        ]

    def test_single_class_restriction(self, workdir):
        out = workdir / "out_single"
        result = run_cli(
            "curve", "--scores", str(workdir / "scores.csv"),
            "--kind", "pr", "--class", "q", "--out-dir", str(out),
        )
        assert result.returncode == 0
        assert (out / "pr_q.csv").exists()
        assert not (out / "pr_p.csv").exists()

    def test_degenerate_class_warns_but_exits_0(self, workdir):
        (workdir / "degen.csv").write_text(
            "actual,p,q\np,0.9,0.1\np,0.8,0.2\nq,0.3,0.7\n"
        )
        out = workdir / "out_degen"
        result = run_cli(
            "curve", "--scores", str(workdir / "degen.csv"),
            "--kind", "roc", "--out-dir", str(out),
        )
        # Both classes are non-degenerate here; now make one degenerate.
        (workdir / "degen2.csv").write_text("actual,p,q\np,0.9,0.1\np,0.8,0.2\n")
        out2 = workdir / "out_degen2"
        result = run_cli(
            "curve", "--scores", str(workdir / "degen2.csv"),
            "--kind", "roc", "--out-dir", str(out2),
        )
        assert result.returncode == 0
        assert "warning" in result.stderr.lower()
        summary = json.loads((out2 / "roc_summary.json").read_text())
        assert summary["classes"]["p"]["auc"] is None
        assert summary["classes"]["q"]["auc"] is None

    def test_malformed_scores_exit_2(self, workdir):
        (workdir / "bad.csv").write_text("actual,p,q\np,0.9\n")
        result = run_cli(
            "curve", "--scores", str(workdir / "bad.csv"),
            "--kind", "roc", "--out-dir", str(workdir / "o"),
        )
        assert result.returncode == 2
        assert result.stderr.strip()

    def test_user_thresholds_file(self, workdir):
        (workdir / "t.txt").write_text("0.5\n")
        out = workdir / "out_t"
        result = run_cli(
            "curve", "--scores", str(workdir / "scores.csv"),
            "--kind", "roc", "--class", "p",
            "--thresholds", str(workdir / "t.txt"),
            "--out-dir", str(out),
        )
        assert result.returncode == 0
        rows = (out / "roc_p.csv").read_text().splitlines()
        # One operating point (0, 1) at t=0.5 plus the two synthetic anchors.
        assert rows == ["threshold,x,y", ",0.0,0.0", "0.5,0.0,1.0", ",1.0,1.0"]


class TestRoundTripAndDeterminism:
    def test_eval_json_feeds_compare(self, workdir):
        evaluated = run_cli("eval", "--matrix", str(workdir / "good.json"), "--format", "json")
        (workdir / "echoed.json").write_text(evaluated.stdout)
        result = run_cli(
            "compare", f"echoed={workdir / 'echoed.json'}", f"diag={workdir / 'diag.json'}"
        )
        assert result.returncode == 0
        assert result.stdout.splitlines()[0] == "Best : diag"

    def test_repeated_runs_are_byte_identical(self, workdir):
        for args in (
            ("eval", "--actual", str(workdir / "act.txt"), "--pred", str(workdir / "pred.txt")),
            ("eval", "--matrix", str(workdir / "good.json"), "--format", "json"),
            ("eval", "--matrix", str(workdir / "good.json"), "--format", "csv"),
            ("compare", str(workdir / "diag.json"), str(workdir / "good.json")),
        ):
            first = run_cli(*args)
            second = run_cli(*args)
            assert first.stdout == second.stdout
            assert first.returncode == second.returncode == 0

    def test_curve_output_files_are_byte_identical(self, workdir):
        out1, out2 = workdir / "c1", workdir / "c2"
        for out in (out1, out2):
            run_cli(
                "curve", "--scores", str(workdir / "scores.csv"),
                "--kind", "roc", "--out-dir", str(out),
            )
        for name in ("roc_p.csv", "roc_q.csv", "roc_summary.json"):
            assert (out1 / name).read_bytes() == (out2 / name).read_bytes()
