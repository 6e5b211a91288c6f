"""Shared synthetic fixtures for compare and acceptance tests."""

from cmstats import ConfusionMatrix

SEVEN_LABELS = tuple(str(i) for i in range(1, 8))

# Class "4" (index 3) is the riparian-critical class of the weight table.
RIPARIAN_WEIGHTS = {"1": 0.1, "2": 0.0, "3": 0.0, "4": 0.9, "5": 0.2, "6": 0.1, "7": 0.0}
FLAMMABILITY_WEIGHTS = {"1": 0.4, "2": 0.9, "3": 0.6, "4": 0.1, "5": 0.3, "6": 0.7, "7": 0.5}


def _seven_class_grid(diag_normal, diag_special, err_normal, err_special):
    """Diagonal-dominant 7x7 grid; class index 3 is the special one, and
    each class's errors are spread evenly over the other six columns."""
    k = 7
    grid = []
    for i in range(k):
        row = []
        for j in range(k):
            if i == j:
                row.append(diag_special if i == 3 else diag_normal)
            elif i == 3:
                row.append(err_special)
            else:
                row.append(err_normal)
        grid.append(tuple(row))
    return tuple(grid)


def model_x() -> ConfusionMatrix:
    """Wins six classes: near-perfect except class "4" (64/100 with 36 misses)."""
    return ConfusionMatrix(SEVEN_LABELS, _seven_class_grid(94, 64, 1, 6))


def model_y() -> ConfusionMatrix:
    """Wins class "4" (99/100) at the cost of every other class (88/100)."""
    return ConfusionMatrix(SEVEN_LABELS, _seven_class_grid(88, 99, 2, 1))
