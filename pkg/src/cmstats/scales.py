"""Ordinal benchmark scales: map a statistic to a named level and a
normalized rank in [0, 1].

The default cutpoints follow the usual interpretation tables for each
statistic and can be replaced wholesale from a JSON scale-table file, so
none of them is hard-wired into scoring.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import InvalidScaleError, OutOfRangeError
from .metrics import ClassMetricId, MetricValue
from .overall import OverallMetricId

INF = math.inf


@dataclass(frozen=True)
class ScaleLevel:
    """One interpretation band: rank is the level's score, 0 = worst."""

    name: str
    lower: float
    upper: float
    rank: int
    lower_inc: bool = True
    upper_inc: bool = False

    def contains(self, value: float) -> bool:
        if self.lower_inc:
            if value < self.lower:
                return False
        elif value <= self.lower:
            return False
        if self.upper_inc:
            if value > self.upper:
                return False
        elif value >= self.upper:
            return False
        return True


@dataclass(frozen=True)
class BenchmarkScale:
    """Ordered levels partitioning a metric's reachable range."""

    id: str
    metric: OverallMetricId | ClassMetricId
    levels: tuple[ScaleLevel, ...]
    max_rank: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        ranks = sorted(level.rank for level in self.levels)
        if ranks != list(range(len(self.levels))) or len(self.levels) < 2:
            raise InvalidScaleError(
                f"scale {self.id!r} needs contiguous ranks 0..L-1 with L >= 2, got {ranks}"
            )
        object.__setattr__(self, "max_rank", len(self.levels) - 1)

    @property
    def is_overall(self) -> bool:
        return isinstance(self.metric, OverallMetricId)

    @property
    def quality_ascending(self) -> bool:
        """True when larger metric values mean better ranks (false for NLR-style scales)."""
        by_value = sorted(self.levels, key=lambda level: (level.lower, level.upper))
        return by_value[-1].rank >= by_value[0].rank


@dataclass(frozen=True)
class BenchmarkResult:
    scale_id: str
    level_name: str | None
    normalized: float | None


def interpret(scale: BenchmarkScale, value: MetricValue) -> BenchmarkResult:
    """Look up the level containing the value; undefined input stays undefined."""
    if value is None:
        return BenchmarkResult(scale.id, None, None)
    for level in scale.levels:
        if level.contains(value):
            return BenchmarkResult(scale.id, level.name, level.rank / scale.max_rank)
    raise OutOfRangeError(
        f"value {value!r} is outside every level of scale {scale.id!r}"
    )


def _ascending(
    scale_id: str,
    metric: OverallMetricId | ClassMetricId,
    bands: Iterable[tuple[str, float, float]],
) -> BenchmarkScale:
    """Build a quality-ascending scale: half-open [lower, upper) bands in
    ascending value order, the last band closed at its upper bound."""
    bands = list(bands)
    levels = tuple(
        ScaleLevel(name, lower, upper, rank, upper_inc=(rank == len(bands) - 1))
        for rank, (name, lower, upper) in enumerate(bands)
    )
    return BenchmarkScale(scale_id, metric, levels)


def _descending(
    scale_id: str,
    metric: OverallMetricId | ClassMetricId,
    bands: Iterable[tuple[str, float, float]],
) -> BenchmarkScale:
    """Build a lower-is-better scale: (lower, upper] bands, the best band
    (smallest values) closed at its lower bound."""
    bands = list(bands)
    levels = tuple(
        ScaleLevel(
            name,
            lower,
            upper,
            rank,
            lower_inc=(rank == len(bands) - 1),
            upper_inc=True,
        )
        for rank, (name, lower, upper) in enumerate(bands)
    )
    return BenchmarkScale(scale_id, metric, levels)


_MCC_BANDS = [
    ("Negligible", -1.0, 0.3),
    ("Weak", 0.3, 0.5),
    ("Moderate", 0.5, 0.7),
    ("Strong", 0.7, 0.9),
    ("Very Strong", 0.9, 1.0),
]

_LAMBDA_BANDS = [
    ("Negligible", 0.0, 0.2),
    ("Weak", 0.2, 0.4),
    ("Moderate", 0.4, 0.6),
    ("Strong", 0.6, 0.8),
    ("Very Strong", 0.8, 1.0),
]


def default_scales() -> dict[str, BenchmarkScale]:
    """The 7 overall and 6 class scales, keyed by scale id.

    The DP bottom band extends below 0 because the statistic is negative
    for worse-than-chance classifiers; interpret() must stay total over
    reachable values.
    """
    scales = [
        _ascending(
            "KAPPA",
            OverallMetricId.KAPPA,
            [
                ("Poor", -INF, 0.0),
                ("Slight", 0.0, 0.2),
                ("Fair", 0.2, 0.4),
                ("Moderate", 0.4, 0.6),
                ("Substantial", 0.6, 0.8),
                ("Almost Perfect", 0.8, 1.0),
            ],
        ),
        _ascending(
            "CRAMER_V",
            OverallMetricId.CRAMER_V,
            [
                ("Negligible", 0.0, 0.1),
                ("Weak", 0.1, 0.2),
                ("Moderate", 0.2, 0.4),
                ("Relatively Strong", 0.4, 0.6),
                ("Strong", 0.6, 0.8),
                ("Very Strong", 0.8, 1.0),
            ],
        ),
        _ascending("OVERALL_MCC", OverallMetricId.OVERALL_MCC, _MCC_BANDS),
        _ascending("LAMBDA_A", OverallMetricId.LAMBDA_A, _LAMBDA_BANDS),
        _ascending("LAMBDA_B", OverallMetricId.LAMBDA_B, _LAMBDA_BANDS),
        _ascending(
            "KRIPPENDORFF_ALPHA",
            OverallMetricId.KRIPPENDORFF_ALPHA,
            [
                ("Low", -INF, 0.667),
                ("Tentative", 0.667, 0.8),
                ("High", 0.8, 1.0),
            ],
        ),
        _ascending(
            "PEARSON_C",
            OverallMetricId.PEARSON_C,
            [
                ("Not Appreciable", 0.0, 0.1),
                ("Weak", 0.1, 0.2),
                ("Medium", 0.2, 0.3),
                ("Strong", 0.3, 1.0),
            ],
        ),
        _ascending(
            "PLR",
            ClassMetricId.PLR,
            [
                ("Negligible", 0.0, 1.0),
                ("Poor", 1.0, 5.0),
                ("Fair", 5.0, 10.0),
                ("Good", 10.0, INF),
            ],
        ),
        _descending(
            "NLR",
            ClassMetricId.NLR,
            [
                ("Negligible", 0.5, INF),
                ("Poor", 0.2, 0.5),
                ("Fair", 0.1, 0.2),
                ("Good", 0.0, 0.1),
            ],
        ),
        _ascending(
            "DP",
            ClassMetricId.DP,
            [
                ("Poor", -INF, 1.0),
                ("Limited", 1.0, 2.0),
                ("Fair", 2.0, 3.0),
                ("Good", 3.0, INF),
            ],
        ),
        _ascending(
            "AUC",
            ClassMetricId.AUC,
            [
                ("Poor", 0.0, 0.6),
                ("Fair", 0.6, 0.7),
                ("Good", 0.7, 0.8),
                ("Very Good", 0.8, 0.9),
                ("Excellent", 0.9, 1.0),
            ],
        ),
        _ascending("MCC", ClassMetricId.MCC, _MCC_BANDS),
        _ascending(
            "YULE_Q",
            ClassMetricId.YULE_Q,
            [
                ("Negligible", -1.0, 0.25),
                ("Weak", 0.25, 0.5),
                ("Moderate", 0.5, 0.75),
                ("Strong", 0.75, 1.0),
            ],
        ),
    ]
    return {scale.id: scale for scale in scales}


def _parse_bound(raw: object, default: float) -> float:
    if raw is None:
        return default
    if isinstance(raw, str):
        token = raw.strip().lower()
        if token in ("inf", "+inf", "infinity"):
            return INF
        if token == "-inf" or token == "-infinity":
            return -INF
        raise InvalidScaleError(f"bad scale bound {raw!r}")
    if isinstance(raw, (int, float)) and not isinstance(raw, bool):
        return float(raw)
    raise InvalidScaleError(f"bad scale bound {raw!r}")


def _parse_metric(token: str) -> OverallMetricId | ClassMetricId:
    try:
        return OverallMetricId(token)
    except ValueError:
        pass
    try:
        return ClassMetricId(token)
    except ValueError:
        raise InvalidScaleError(f"unknown metric token {token!r}") from None


def load_scales(path: str, base: Mapping[str, BenchmarkScale] | None = None) -> dict[str, BenchmarkScale]:
    """Read a scale-table override file and merge it over the defaults.

    Format: a JSON list of {"id", "metric", "levels": [{"name", "lower",
    "upper", "rank"}]}. Bounds may be numbers, "inf"/"-inf", or null
    (null lower = -inf, null upper = +inf). Levels are sorted ascending
    by lower bound and treated as [lower, upper) with the last level
    closed, mirroring the built-in convention.
    """
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list):
        raise InvalidScaleError("scale table must be a JSON list")
    registry = dict(default_scales() if base is None else base)
    for entry in raw:
        if not isinstance(entry, Mapping):
            raise InvalidScaleError("each scale entry must be a JSON object")
        try:
            scale_id = str(entry["id"])
            metric = _parse_metric(str(entry["metric"]))
            raw_levels = entry["levels"]
        except KeyError as exc:
            raise InvalidScaleError(f"scale entry missing field {exc}") from None
        parsed = []
        for lv in raw_levels:
            parsed.append(
                (
                    str(lv["name"]),
                    _parse_bound(lv.get("lower"), -INF),
                    _parse_bound(lv.get("upper"), INF),
                    int(lv["rank"]),
                )
            )
        parsed.sort(key=lambda item: (item[1], item[2]))
        levels = tuple(
            ScaleLevel(name, lower, upper, rank, upper_inc=(i == len(parsed) - 1))
            for i, (name, lower, upper, rank) in enumerate(parsed)
        )
        registry[scale_id] = BenchmarkScale(scale_id, metric, levels)
    return registry
