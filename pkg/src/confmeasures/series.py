"""Parametric families of confusion matrices with controlled error rates.

Class proportions interpolate linearly between a balanced split and a halving
sequence, steered by an imbalance parameter p in [0, 1]:

    pi_i = (1 - p) / k + p * 2^(k-i) / (2^k - 1)

A controlled matrix places a retention rate c_j of each true class on the
diagonal and spreads the remainder uniformly over the other estimated classes,
so column j is (c_j * pi_j on the diagonal, (1 - c_j) / (k - 1) * pi_j off it).

Two one-parameter series are derived from a grid of retention values c:
ALL_CLASSES erodes every class at rate c; FIRST_CLASS_ONLY erodes only class 1
and keeps the rest perfect.
"""

from __future__ import annotations

import dataclasses
import enum

import numpy as np

from .errors import InvalidInput
from .matrix import ConfusionMatrix


@dataclasses.dataclass(frozen=True, eq=False)
class ProportionVector:
    """Positive true-class proportions summing to 1."""

    pi: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.pi, dtype=float)
        if arr.ndim != 1 or arr.size < 2:
            raise InvalidInput("proportions must be a 1-D vector of length >= 2",
                               parameter="pi", value=arr.shape)
        if (arr <= 0).any():
            bad = int(np.flatnonzero(arr <= 0)[0])
            raise InvalidInput(f"proportion {bad + 1} is not positive",
                               parameter=f"pi[{bad + 1}]", value=arr[bad])
        total = float(arr.sum())
        if abs(total - 1.0) > 1e-12:
            raise InvalidInput("proportions must sum to 1 within 1e-12",
                               parameter="pi", value=total)
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "pi", arr)

    @property
    def k(self) -> int:
        return self.pi.size


class SeriesMode(enum.Enum):
    ALL_CLASSES = "all"
    FIRST_CLASS_ONLY = "first"


@dataclasses.dataclass(frozen=True)
class SeriesSpec:
    """Configuration of one matrix series."""

    k: int
    p: float
    grid: tuple[float, ...]
    mode: SeriesMode
    c_lo: float = 0.0

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 2:
            raise InvalidInput("k must be an integer >= 2", parameter="k",
                               value=self.k)
        if not 0.0 <= self.p <= 1.0:
            raise InvalidInput("p must be in [0, 1]", parameter="p", value=self.p)
        if not 0.0 <= self.c_lo <= 1.0:
            raise InvalidInput("c_lo must be in [0, 1]", parameter="c_lo",
                               value=self.c_lo)
        grid = tuple(float(c) for c in self.grid)
        if not grid:
            raise InvalidInput("grid must not be empty", parameter="grid",
                               value=grid)
        for prev, cur in zip(grid, grid[1:]):
            if cur <= prev:
                raise InvalidInput("grid must be strictly increasing",
                                   parameter="grid", value=(prev, cur))
        if grid[0] < self.c_lo or grid[-1] > 1.0:
            raise InvalidInput(
                f"grid values must lie in [{self.c_lo}, 1]", parameter="grid",
                value=(grid[0], grid[-1]),
            )
        object.__setattr__(self, "grid", grid)


def uniform_grid(step: float = 0.01, c_lo: float = 0.0) -> tuple[float, ...]:
    """Evenly spaced retention grid over [c_lo, 1], endpoints included."""
    if not 0 < step <= 1:
        raise InvalidInput("step must be in (0, 1]", parameter="step", value=step)
    if not 0.0 <= c_lo < 1.0:
        raise InvalidInput("c_lo must be in [0, 1)", parameter="c_lo", value=c_lo)
    n = int(round((1.0 - c_lo) / step))
    if n < 1:
        n = 1
    return tuple(float(v) for v in np.linspace(c_lo, 1.0, n + 1))


def class_proportions(k: int, p: float) -> ProportionVector:
    """Interpolated proportions: balanced at p = 0, halving sequence at p = 1."""
    if not isinstance(k, int) or k < 2:
        raise InvalidInput("k must be an integer >= 2", parameter="k", value=k)
    if not 0.0 <= p <= 1.0:
        raise InvalidInput("p must be in [0, 1]", parameter="p", value=p)
    i = np.arange(1, k + 1)
    pi = (1.0 - p) / k + p * 2.0 ** (k - i) / (2.0 ** k - 1.0)
    return ProportionVector(pi)


def controlled_matrix(pi, c) -> ConfusionMatrix:
    """Matrix with per-class diagonal retention ``c`` and uniform error spread."""
    if not isinstance(pi, ProportionVector):
        pi = ProportionVector(np.asarray(pi, dtype=float))
    c = np.asarray(c, dtype=float)
    if c.shape != (pi.k,):
        raise InvalidInput(
            f"need one retention rate per class, got shape {c.shape} for k={pi.k}",
            parameter="c", value=c.shape,
        )
    if (c < 0).any() or (c > 1).any():
        bad = int(np.flatnonzero((c < 0) | (c > 1))[0])
        raise InvalidInput(f"retention rate {bad + 1} is outside [0, 1]",
                           parameter=f"c[{bad + 1}]", value=c[bad])
    k = pi.k
    cells = np.empty((k, k))
    for j in range(k):
        cells[:, j] = (1.0 - c[j]) / (k - 1) * pi.pi[j]
        cells[j, j] = c[j] * pi.pi[j]
    return ConfusionMatrix(cells)


def make_series(spec: SeriesSpec) -> list[ConfusionMatrix]:
    """One controlled matrix per grid value, in ``spec.mode``."""
    pi = class_proportions(spec.k, spec.p)
    out = []
    for c in spec.grid:
        out.append(series_matrix(pi, c, spec.mode))
    return out


def series_matrix(pi: ProportionVector, c: float, mode: SeriesMode,
                  ) -> ConfusionMatrix:
    """A single series member at retention ``c``."""
    rates = np.ones(pi.k)
    if mode == SeriesMode.ALL_CLASSES:
        rates[:] = c
    elif mode == SeriesMode.FIRST_CLASS_ONLY:
        rates[0] = c
    else:
        raise InvalidInput("unknown series mode", parameter="mode", value=mode)
    return controlled_matrix(pi, rates)
