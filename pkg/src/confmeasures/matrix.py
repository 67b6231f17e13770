"""Confusion matrices as joint proportions.

A confusion matrix here is a k x k grid of proportions of the whole dataset:
rows are estimated classes, columns are true classes, and all cells sum to 1.
Column sums are therefore the true class proportions. All downstream measures
are computed from this representation; raw count grids enter through
``from_counts``.
"""

from __future__ import annotations

import dataclasses

import numpy as np

from .errors import DegenerateWeights, EmptyMatrix, InvalidInput

SUM_TOLERANCE = 1e-9


def _as_square_float_array(cells, name: str) -> np.ndarray:
    arr = np.asarray(cells, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InvalidInput(
            f"{name} must be a square 2-D grid, got shape {arr.shape}",
            parameter=name, value=arr.shape,
        )
    if arr.shape[0] < 2:
        raise InvalidInput(
            f"{name} needs at least 2 classes, got {arr.shape[0]}",
            parameter=name, value=arr.shape[0],
        )
    if not np.isfinite(arr).all():
        raise InvalidInput(f"{name} contains non-finite cells", parameter=name,
                           value=arr[~np.isfinite(arr)][0])
    return arr


@dataclasses.dataclass(frozen=True, eq=False)
class ConfusionMatrix:
    """Immutable k x k joint-proportion matrix (rows estimated, columns true)."""

    cells: np.ndarray

    def __post_init__(self):
        arr = _as_square_float_array(self.cells, "cells")
        if (arr < 0).any():
            i, j = np.argwhere(arr < 0)[0]
            raise InvalidInput(
                f"cell ({i + 1}, {j + 1}) is negative",
                parameter=f"cells[{i + 1},{j + 1}]", value=arr[i, j],
            )
        total = float(arr.sum())
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise InvalidInput(
                f"cells must sum to 1 within {SUM_TOLERANCE}, got {total!r}",
                parameter="cells", value=total,
            )
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "cells", arr)

    @classmethod
    def from_cells(cls, cells, normalize: bool = False) -> "ConfusionMatrix":
        """Build from a proportion grid; ``normalize`` rescales to unit sum."""
        arr = _as_square_float_array(cells, "cells")
        if normalize:
            total = float(arr.sum())
            if total <= 0:
                raise InvalidInput("cannot normalize a grid with non-positive total",
                                   parameter="cells", value=total)
            arr = arr / total
        return cls(arr)

    @property
    def k(self) -> int:
        return self.cells.shape[0]

    def row_sums(self) -> np.ndarray:
        """Estimated-class marginals p_i+."""
        return self.cells.sum(axis=1)

    def col_sums(self) -> np.ndarray:
        """True-class proportions p_+j."""
        return self.cells.sum(axis=0)


@dataclasses.dataclass(frozen=True)
class BinaryCounts:
    """One-vs-rest decomposition of a single class, as dataset proportions."""

    tp: float
    fp: float
    fn: float
    tn: float

    def __post_init__(self):
        for name in ("tp", "fp", "fn", "tn"):
            v = getattr(self, name)
            if v < 0:
                raise InvalidInput(f"{name} must be non-negative", parameter=name,
                                   value=v)
        total = self.tp + self.fp + self.fn + self.tn
        if abs(total - 1.0) > 1e-9:
            raise InvalidInput("binary counts must sum to 1", parameter="total",
                               value=total)


@dataclasses.dataclass(frozen=True, eq=False)
class WeightMatrix:
    """Non-negative cell weights; at least one weight must be positive."""

    weights: np.ndarray

    def __post_init__(self):
        arr = _as_square_float_array(self.weights, "weights")
        if (arr < 0).any():
            i, j = np.argwhere(arr < 0)[0]
            raise InvalidInput(f"weight ({i + 1}, {j + 1}) is negative",
                               parameter=f"weights[{i + 1},{j + 1}]", value=arr[i, j])
        if not (arr > 0).any():
            raise DegenerateWeights("all weights are zero", parameter="weights",
                                    value=0.0)
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "weights", arr)

    @property
    def k(self) -> int:
        return self.weights.shape[0]


def from_counts(counts) -> ConfusionMatrix:
    """Convert a raw count grid into a joint-proportion matrix.

    Counts must be non-negative whole numbers with a positive total.
    """
    arr = _as_square_float_array(counts, "counts")
    if (arr < 0).any():
        i, j = np.argwhere(arr < 0)[0]
        raise InvalidInput(f"count ({i + 1}, {j + 1}) is negative",
                           parameter=f"counts[{i + 1},{j + 1}]", value=arr[i, j])
    rounded = np.rint(arr)
    if np.abs(arr - rounded).max() > 1e-9:
        i, j = np.argwhere(np.abs(arr - rounded) > 1e-9)[0]
        raise InvalidInput(f"count ({i + 1}, {j + 1}) is not a whole number",
                           parameter=f"counts[{i + 1},{j + 1}]", value=arr[i, j])
    total = float(rounded.sum())
    if total == 0:
        raise EmptyMatrix("count grid has zero total instances",
                          parameter="counts", value=0)
    return ConfusionMatrix(rounded / total)


def marginals(m: ConfusionMatrix) -> tuple[np.ndarray, np.ndarray]:
    """(row sums, column sums) of the joint-proportion matrix."""
    return m.row_sums(), m.col_sums()


def _check_class_index(m: ConfusionMatrix, i: int) -> int:
    if not isinstance(i, (int, np.integer)) or isinstance(i, bool):
        raise InvalidInput("class index must be an integer",
                           parameter="class_index", value=i)
    if not 1 <= i <= m.k:
        raise InvalidInput(f"class index must be in 1..{m.k}",
                           parameter="class_index", value=i)
    return int(i) - 1


def class_counts(m: ConfusionMatrix, i: int) -> BinaryCounts:
    """One-vs-rest proportions for class ``i`` (1-based).

    tp = p_ii, fn = column sum minus tp, fp = row sum minus tp, tn = the rest.
    Tiny negative residues from float summation are clamped to 0.
    """
    ix = _check_class_index(m, i)
    tp = float(m.cells[ix, ix])
    fn = float(m.col_sums()[ix] - tp)
    fp = float(m.row_sums()[ix] - tp)
    tn = 1.0 - tp - fp - fn

    def _clamp(v: float) -> float:
        return 0.0 if -1e-12 < v < 0.0 else v

    return BinaryCounts(tp=_clamp(tp), fp=_clamp(fp), fn=_clamp(fn), tn=_clamp(tn))


def binarize(m: ConfusionMatrix, i: int) -> ConfusionMatrix:
    """Collapse to the 2x2 one-vs-rest matrix [[tp, fp], [fn, tn]] for class ``i``."""
    c = class_counts(m, i)
    return ConfusionMatrix(np.array([[c.tp, c.fp], [c.fn, c.tn]]))


def apply_weights(m: ConfusionMatrix, w: WeightMatrix) -> ConfusionMatrix:
    """Reweight cells and renormalize so the result is again a proportion matrix."""
    if w.k != m.k:
        raise InvalidInput(
            f"weight grid is {w.k}x{w.k} but matrix is {m.k}x{m.k}",
            parameter="weights", value=w.k,
        )
    weighted = m.cells * w.weights
    total = float(weighted.sum())
    if total <= 0:
        raise DegenerateWeights(
            "weights remove all mass from the matrix", parameter="weights",
            value=total,
        )
    return ConfusionMatrix(weighted / total)
