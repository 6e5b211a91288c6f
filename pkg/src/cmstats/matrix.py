"""Labeled confusion matrices and one-vs-rest count reduction.

A ConfusionMatrix is an immutable square table of non-negative integer
counts, rows indexed by actual class and columns by predicted class.
Labels are opaque text; numeric class ids are stored as their decimal
strings so e.g. 3 and "3" address the same class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    EmptyInputError,
    InvalidLabelError,
    NegativeCountError,
    ShapeError,
    UnknownLabelError,
    VectorLengthError,
)


def _as_label(value: object) -> str:
    label = value if isinstance(value, str) else str(value)
    if not label:
        raise InvalidLabelError("labels must be non-empty text")
    return label


def _normalize_labels(labels: Iterable[object]) -> tuple[str, ...]:
    out = tuple(_as_label(x) for x in labels)
    if len(set(out)) != len(out):
        raise InvalidLabelError(f"labels must be pairwise distinct, got {list(out)}")
    return out


def _as_count(value: object) -> int:
    # JSON may deliver integral floats; anything fractional is malformed.
    if isinstance(value, bool):
        raise ShapeError(f"counts must be integers, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, float) and value.is_integer():
        return int(value)
    raise ShapeError(f"counts must be integers, got {value!r}")


@dataclass(frozen=True)
class ClassCounts:
    """One-vs-rest tp/fp/fn/tn for a single class; always sums to the matrix total."""

    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class ConfusionMatrix:
    """Immutable k-class confusion matrix (k >= 2) with precomputed marginals."""

    labels: tuple[str, ...]
    counts: tuple[tuple[int, ...], ...]
    n: int = field(init=False, compare=False, repr=False)
    row_sums: tuple[int, ...] = field(init=False, compare=False, repr=False)
    col_sums: tuple[int, ...] = field(init=False, compare=False, repr=False)
    _index: dict[str, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        labels = _normalize_labels(self.labels)
        k = len(labels)
        if k < 2:
            raise ShapeError(f"a confusion matrix needs at least 2 classes, got {k}")
        rows = tuple(tuple(_as_count(c) for c in row) for row in self.counts)
        if len(rows) != k or any(len(row) != k for row in rows):
            raise ShapeError(
                f"count grid must be {k}x{k} to match {k} labels, "
                f"got rows of lengths {[len(r) for r in rows]}"
            )
        if any(c < 0 for row in rows for c in row):
            raise NegativeCountError("counts must be non-negative")
        total = sum(c for row in rows for c in row)
        if total == 0:
            raise EmptyInputError("count grid sums to zero")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "counts", rows)
        object.__setattr__(self, "n", total)
        object.__setattr__(self, "row_sums", tuple(sum(row) for row in rows))
        object.__setattr__(
            self, "col_sums", tuple(sum(row[j] for row in rows) for j in range(k))
        )
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(labels)})

    @classmethod
    def from_vectors(
        cls,
        actual: Sequence[object],
        predicted: Sequence[object],
        label_order: Sequence[object] | None = None,
    ) -> "ConfusionMatrix":
        """Count (actual, predicted) pairs into a matrix.

        Labels default to the sorted union of observed labels; pass
        ``label_order`` to fix the ordering or to include classes that do
        not occur in the data.
        """
        if len(actual) != len(predicted):
            raise VectorLengthError(
                f"actual has {len(actual)} entries, predicted has {len(predicted)}"
            )
        if not actual:
            raise EmptyInputError("label vectors are empty")
        act = [_as_label(a) for a in actual]
        pred = [_as_label(p) for p in predicted]
        observed = set(act) | set(pred)
        if label_order is not None:
            labels = _normalize_labels(label_order)
            missing = observed - set(labels)
            if missing:
                raise UnknownLabelError(
                    f"label order is missing observed labels: {sorted(missing)}"
                )
        else:
            labels = tuple(sorted(observed))
        index = {lab: i for i, lab in enumerate(labels)}
        grid = [[0] * len(labels) for _ in labels]
        for a, p in zip(act, pred):
            grid[index[a]][index[p]] += 1
        return cls(labels, tuple(tuple(row) for row in grid))

    @property
    def k(self) -> int:
        return len(self.labels)

    def index_of(self, label: object) -> int:
        key = _as_label(label)
        try:
            return self._index[key]
        except KeyError:
            raise UnknownLabelError(
                f"unknown class {key!r}; known classes: {list(self.labels)}"
            ) from None

    def count(self, actual: object, predicted: object) -> int:
        """Cell lookup by labels: number of samples of class `actual` predicted as `predicted`."""
        return self.counts[self.index_of(actual)][self.index_of(predicted)]

    def class_counts(self, label: object) -> ClassCounts:
        """One-vs-rest reduction for one class."""
        c = self.index_of(label)
        tp = self.counts[c][c]
        fn = self.row_sums[c] - tp
        fp = self.col_sums[c] - tp
        tn = self.n - tp - fn - fp
        return ClassCounts(tp=tp, fp=fp, fn=fn, tn=tn)

    def trace(self) -> int:
        return sum(self.counts[i][i] for i in range(self.k))

    def render_text(self) -> str:
        """Aligned count table, actual classes as rows and predicted as columns."""
        corner = "actual \\ predicted"
        widths = [max(len(corner), max(len(lab) for lab in self.labels))]
        for j, lab in enumerate(self.labels):
            widths.append(max(len(lab), max(len(str(row[j])) for row in self.counts)))
        lines = [
            "  ".join(
                [corner.ljust(widths[0])]
                + [lab.rjust(widths[j + 1]) for j, lab in enumerate(self.labels)]
            )
        ]
        for i, lab in enumerate(self.labels):
            lines.append(
                "  ".join(
                    [lab.ljust(widths[0])]
                    + [
                        str(self.counts[i][j]).rjust(widths[j + 1])
                        for j in range(self.k)
                    ]
                )
            )
        return "\n".join(lines)

    def to_dict(self) -> dict:
        """JSON-ready matrix document: {"labels": [...], "matrix": [[...], ...]}."""
        return {"labels": list(self.labels), "matrix": [list(row) for row in self.counts]}

    @classmethod
    def from_dict(cls, doc: Mapping) -> "ConfusionMatrix":
        """Parse the matrix document produced by to_dict().

        Also accepts an eval report whose "matrix" field holds such a
        document, so emitted reports can be fed straight back in.
        """
        if not isinstance(doc, Mapping):
            raise ShapeError("matrix document must be a JSON object")
        inner = doc.get("matrix")
        if isinstance(inner, Mapping):
            return cls.from_dict(inner)
        labels = doc.get("labels")
        if labels is None or inner is None:
            raise ShapeError('matrix document needs "labels" and "matrix" fields')
        if not isinstance(inner, Sequence) or any(
            not isinstance(row, Sequence) or isinstance(row, str) for row in inner
        ):
            raise ShapeError('"matrix" must be a grid of counts')
        return cls(tuple(_as_label(x) for x in labels), tuple(tuple(row) for row in inner))
