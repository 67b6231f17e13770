"""Accuracy measures for classifier comparison on confusion matrices.

The package computes a catalog of class-specific and multiclass accuracy
measures from joint-proportion confusion matrices, generates matrix series
with controlled error rates and class imbalance, derives the discrimination
lines separating two such classifiers under each measure, and detects groups
of measures that rank classifiers identically.
"""

__version__ = "0.1.0"

from .discrimination import (
    ConcordanceResult,
    DiscriminationLine,
    EquivalencePartition,
    LineRow,
    Preference,
    consistency,
    discrimination_line,
    equivalence_classes,
    preference,
    series_pairs,
)
from .errors import (
    ConfmeasuresError,
    DegenerateChance,
    DegenerateWeights,
    EmptyMatrix,
    InsufficientData,
    InvalidInput,
    NoConvergence,
    NotComparable,
    PerfectClassification,
    TooFewClasses,
)
from .gt import (
    GtIndexResult,
    QuasiIndependenceFit,
    fit_quasi_independence,
    gt_index,
)
from .matrix import (
    BinaryCounts,
    ConfusionMatrix,
    WeightMatrix,
    apply_weights,
    binarize,
    class_counts,
    from_counts,
    marginals,
)
from .measures import (
    AgreementDecomposition,
    MeasureKind,
    MeasureReport,
    MeasureValue,
    agreement,
    chance_expectation,
    class_measure,
    evaluate,
    overall_measure,
    parse_kind,
    report,
    round_half_up,
    value_range,
)
from .series import (
    ProportionVector,
    SeriesMode,
    SeriesSpec,
    class_proportions,
    controlled_matrix,
    make_series,
    series_matrix,
    uniform_grid,
)

__all__ = [
    "AgreementDecomposition", "BinaryCounts", "ConcordanceResult",
    "ConfmeasuresError", "ConfusionMatrix", "DegenerateChance",
    "DegenerateWeights", "DiscriminationLine", "EmptyMatrix",
    "EquivalencePartition", "GtIndexResult", "InsufficientData",
    "InvalidInput", "LineRow", "MeasureKind", "MeasureReport", "MeasureValue",
    "NoConvergence", "NotComparable", "PerfectClassification", "Preference",
    "ProportionVector", "QuasiIndependenceFit", "SeriesMode", "SeriesSpec",
    "TooFewClasses", "WeightMatrix", "agreement", "apply_weights", "binarize",
    "chance_expectation", "class_counts", "class_measure", "class_proportions",
    "consistency", "controlled_matrix", "discrimination_line",
    "equivalence_classes", "evaluate", "fit_quasi_independence", "from_counts",
    "gt_index", "make_series", "marginals", "overall_measure", "parse_kind",
    "preference", "report", "round_half_up", "series_matrix", "series_pairs",
    "uniform_grid", "value_range",
]
