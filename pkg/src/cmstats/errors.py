"""Exception hierarchy for cmstats.

Every error raised by the library derives from CmStatsError so callers
(and the CLI) can catch input problems with a single except clause.
"""


class CmStatsError(ValueError):
    """Base class for all cmstats input and usage errors."""


class VectorLengthError(CmStatsError):
    """Actual and predicted label vectors have different lengths."""


class EmptyInputError(CmStatsError):
    """Input vectors are empty, or a count grid sums to zero."""


class UnknownLabelError(CmStatsError):
    """A label is not part of the matrix (or missing from a label order)."""


class InvalidLabelError(CmStatsError):
    """A label is empty or duplicated."""


class ShapeError(CmStatsError):
    """A count grid is malformed: not square, non-integer entries, or fewer than two classes."""


class NegativeCountError(CmStatsError):
    """A count grid contains a negative entry."""


class UnsupportedMicroMetricError(CmStatsError):
    """Micro averaging was requested for a metric it is not defined for."""


class OutOfRangeError(CmStatsError):
    """A defined value falls outside every level of a benchmark scale."""


class InvalidScaleError(CmStatsError):
    """A benchmark scale definition is malformed."""


class AllBenchmarksUndefinedError(CmStatsError):
    """Every benchmark contributing to a composite score is undefined."""


class InvalidWeightError(CmStatsError):
    """A weight map contains a negative weight or no positive weight."""


class NotEnoughModelsError(CmStatsError):
    """A comparison needs at least two models."""


class LabelMismatchError(CmStatsError):
    """Matrices under comparison do not share the same ordered label set."""


class DegenerateCurveError(CmStatsError):
    """A curve cannot be built because TPR or FPR is undefined at every threshold."""


class UnsortedPointsError(CmStatsError):
    """Trapezoidal integration received points not sorted by ascending x."""


class InvalidScoreError(CmStatsError):
    """A score matrix entry is not a finite number in [0, 1]."""
