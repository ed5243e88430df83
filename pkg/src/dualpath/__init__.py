"""Read/write path algebra for simultaneous translation.

Paths, their transposition into the reverse translation direction through
shared segment pairs, the L2 duality regularizer, and the latency/quality
metric suite (AL, AP, DAL, sufficiency, necessity, coverage IoU).
"""

from .errors import (
    DimensionError,
    DualPathError,
    MetricUndefinedError,
    MonotonicityError,
    ParseError,
    PathError,
    ZeroDistanceError,
)
from .loss import DualLossReport, dual_regularizer, omega, omega_gradient
from .metrics import (
    MetricReport,
    average_lagging,
    average_proportion,
    differentiable_average_lagging,
    evaluate_path,
    iou_duality,
    necessity,
    sufficiency,
)
from .paths import (
    READ,
    WRITE,
    ActionSequence,
    GSequence,
    ValidationReport,
    actions_to_g,
    coverage_matrix,
    g_to_actions,
    validate_path,
)
from .policies import (
    PolicySpec,
    oracle_path_from_alignment,
    synthetic_alpha,
    wait_k_path,
)
from .transpose import (
    SegmentPair,
    SegmentPairSequence,
    TransposedPath,
    merge_gamma,
    segment,
    transpose_gsequence,
    transpose_path,
    transpose_segments,
    write_positions,
)

__version__ = "0.1.0"

__all__ = [
    "ActionSequence",
    "DimensionError",
    "DualLossReport",
    "DualPathError",
    "GSequence",
    "MetricReport",
    "MetricUndefinedError",
    "MonotonicityError",
    "ParseError",
    "PathError",
    "PolicySpec",
    "READ",
    "SegmentPair",
    "SegmentPairSequence",
    "TransposedPath",
    "ValidationReport",
    "WRITE",
    "ZeroDistanceError",
    "actions_to_g",
    "average_lagging",
    "average_proportion",
    "coverage_matrix",
    "differentiable_average_lagging",
    "dual_regularizer",
    "evaluate_path",
    "g_to_actions",
    "iou_duality",
    "merge_gamma",
    "necessity",
    "omega",
    "omega_gradient",
    "oracle_path_from_alignment",
    "segment",
    "sufficiency",
    "synthetic_alpha",
    "transpose_gsequence",
    "transpose_path",
    "transpose_segments",
    "validate_path",
    "wait_k_path",
    "write_positions",
]
