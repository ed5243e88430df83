"""Duality regularizer: L2 gap between each direction's writing probability
matrix and the transposed write events of the other direction."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, ZeroDistanceError
from .transpose import transpose_path


def _pair(alpha, gamma) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(alpha, dtype=float)
    b = np.asarray(gamma, dtype=float)
    if a.ndim != 2 or a.shape != b.shape:
        raise DimensionError(f"shape mismatch: {a.shape} vs {b.shape}")
    return a, b


def omega(alpha, gamma) -> float:
    """Frobenius (entrywise L2) distance between two equally shaped matrices."""
    a, b = _pair(alpha, gamma)
    return float(np.linalg.norm(a - b))


def omega_gradient(alpha, gamma) -> np.ndarray:
    """Derivative of :func:`omega` with respect to alpha: (alpha - gamma) / distance.

    Undefined at zero distance; raises ZeroDistanceError there instead of
    returning a zero matrix.
    """
    a, b = _pair(alpha, gamma)
    dist = float(np.linalg.norm(a - b))
    if dist == 0.0:
        raise ZeroDistanceError("gradient undefined: matrices are identical")
    return (a - b) / dist


@dataclass(frozen=True)
class DualLossReport:
    omega_f: float
    omega_b: float
    lambda_dual: float

    @property
    def total_reg(self) -> float:
        return self.lambda_dual * (self.omega_f + self.omega_b)


def dual_regularizer(alpha_f, alpha_b, lambda_dual: float = 1.0) -> DualLossReport:
    """Both duality terms for a pair of writing probability matrices.

    ``alpha_f`` is I x J (forward) and ``alpha_b`` is J x I (backward). Each
    is compared against the transposed path of the other direction, which a
    perfectly dual pair reproduces exactly.
    """
    if lambda_dual < 0:
        raise ValueError(f"lambda_dual must be >= 0, got {lambda_dual}")
    af = np.asarray(alpha_f, dtype=float)
    ab = np.asarray(alpha_b, dtype=float)
    if af.ndim != 2 or ab.ndim != 2 or ab.shape != (af.shape[1], af.shape[0]):
        raise DimensionError(
            f"backward matrix must have shape {(af.shape[1], af.shape[0])} "
            f"for a {af.shape} forward matrix, got {ab.shape}"
        )
    gamma_b = transpose_path(ab).gamma
    gamma_f = transpose_path(af).gamma
    return DualLossReport(
        omega_f=omega(af, gamma_b),
        omega_b=omega(ab, gamma_f),
        lambda_dual=float(lambda_dual),
    )
