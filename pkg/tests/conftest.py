"""Shared fixtures: case-study matrices and matrix-generation helpers."""

from __future__ import annotations

import sys

import numpy as np
import pytest

from confmeasures import ConfusionMatrix


def pytest_terminal_summary(terminalreporter):
    # Repeat the acceptance verdict lines after the run, where stdout
    # capture cannot swallow them.
    mod = sys.modules.get("test_acceptance")
    verdicts = getattr(mod, "VERDICTS", None)
    if verdicts:
        terminalreporter.section("acceptance criteria")
        for line in verdicts:
            terminalreporter.line(line)

# 3-class case study: a classifier that is strong on classes 1 and 3 and weak
# on class 2. Built from the count grid [[30,12,2],[2,19,1],[1,3,30]].
FIRST_CLASSIFIER_CELLS = [
    [0.30, 0.12, 0.02],
    [0.02, 0.19, 0.01],
    [0.01, 0.03, 0.30],
]
FIRST_CLASSIFIER_COUNTS = [[30, 12, 2], [2, 19, 1], [1, 3, 30]]

# Competing classifier over the same classes: perfect on classes 1 and 3,
# splits class 2 evenly across all estimated classes.
SECOND_CLASSIFIER_CELLS = [
    [0.33, 0.11, 0.00],
    [0.00, 0.12, 0.00],
    [0.00, 0.11, 0.33],
]

# Perfect classification of a near-balanced dataset.
PERFECT_CELLS = [
    [0.33, 0.00, 0.00],
    [0.00, 0.34, 0.00],
    [0.00, 0.00, 0.33],
]

# Everything misclassified one class over (cyclic shift); 2-decimal print of
# the exact-thirds permutation, plus the exact version.
CYCLIC_SHIFT_CELLS = [
    [0.00, 0.00, 0.33],
    [0.33, 0.00, 0.00],
    [0.00, 0.34, 0.00],
]
CYCLIC_SHIFT_EXACT_CELLS = [
    [0.0, 0.0, 1 / 3],
    [1 / 3, 0.0, 0.0],
    [0.0, 1 / 3, 0.0],
]

# Everything misclassified, errors spread unevenly.
SPREAD_ERRORS_CELLS = [
    [0.00, 0.10, 0.10],
    [0.30, 0.00, 0.10],
    [0.20, 0.20, 0.00],
]


@pytest.fixture
def first_classifier() -> ConfusionMatrix:
    return ConfusionMatrix(np.array(FIRST_CLASSIFIER_CELLS))


@pytest.fixture
def second_classifier() -> ConfusionMatrix:
    return ConfusionMatrix(np.array(SECOND_CLASSIFIER_CELLS))


@pytest.fixture
def perfect() -> ConfusionMatrix:
    return ConfusionMatrix(np.array(PERFECT_CELLS))


@pytest.fixture
def cyclic_shift() -> ConfusionMatrix:
    return ConfusionMatrix(np.array(CYCLIC_SHIFT_CELLS))


@pytest.fixture
def cyclic_shift_exact() -> ConfusionMatrix:
    return ConfusionMatrix(np.array(CYCLIC_SHIFT_EXACT_CELLS))


@pytest.fixture
def spread_errors() -> ConfusionMatrix:
    return ConfusionMatrix(np.array(SPREAD_ERRORS_CELLS))


def random_matrix(rng: np.random.Generator, k: int = 3,
                  positive: bool = False) -> ConfusionMatrix:
    """Random valid joint-proportion matrix; ``positive`` keeps cells > 0."""
    cells = rng.random((k, k))
    if positive:
        cells = cells + 0.01
    return ConfusionMatrix(cells / cells.sum())


def random_matrix_with_columns(rng: np.random.Generator,
                               col_sums: np.ndarray) -> ConfusionMatrix:
    """Random valid matrix with the given true-class proportions."""
    k = col_sums.size
    cells = np.empty((k, k))
    for j in range(k):
        w = rng.random(k) + 0.01
        cells[:, j] = col_sums[j] * w / w.sum()
    return ConfusionMatrix(cells / cells.sum())
