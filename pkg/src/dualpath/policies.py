"""Deterministic path generators used as baselines and test fixtures."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError
from .metrics import OraclePositions
from .paths import GSequence

POLICY_KINDS = ("wait_k", "oracle_alignment", "replay")


@dataclass(frozen=True)
class PolicySpec:
    kind: str
    k: int | None = None

    def __post_init__(self):
        if self.kind not in POLICY_KINDS:
            raise ValueError(f"unknown policy {self.kind!r}, expected one of {POLICY_KINDS}")
        if self.kind == "wait_k":
            if self.k is None or self.k < 1:
                raise ValueError(f"wait_k requires k >= 1, got {self.k}")
        elif self.k is not None:
            raise ValueError(f"policy {self.kind!r} takes no k")


def wait_k_path(k: int, tgt_len: int, src_len: int) -> GSequence:
    """Read k source words, then alternate one write and one read, clipped
    at the source end: g_i = min(k + i - 1, J)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if tgt_len < 1 or src_len < 1:
        raise ValueError(f"lengths must be >= 1, got I={tgt_len}, J={src_len}")
    return GSequence(tuple(min(k + i, src_len) for i in range(tgt_len)))


def oracle_path_from_alignment(oracle: OraclePositions, src_len: int) -> GSequence:
    """Write each target word as soon as its aligned source word is read.

    The running maximum of the aligned positions keeps the path monotone;
    unaligned words inherit the previous value, defaulting to 1 at the start
    (something must be read before the first write).
    """
    values = []
    current = 1
    for a_i in oracle:
        if a_i is not None:
            if not 1 <= a_i <= src_len:
                raise DimensionError(
                    f"aligned source position {a_i} out of range 1..{src_len}"
                )
            current = max(current, a_i)
        values.append(current)
    return GSequence(tuple(values))


def synthetic_alpha(
    g: GSequence | list[int] | tuple[int, ...], src_len: int, sharpness: float
) -> np.ndarray:
    """Writing probability matrix whose row argmaxes reproduce ``g``.

    Row i puts ``sharpness`` at column g_i and spreads the rest uniformly.
    The argmax is unambiguous only for sharpness > 1/J, so the boundary is
    rejected; a single-column matrix gets all mass regardless.
    """
    g = GSequence.coerce(g)
    if g.final > src_len:
        raise DimensionError(
            f"final read count {g.final} exceeds source length {src_len}"
        )
    if not 0.0 < sharpness <= 1.0:
        raise ValueError(f"sharpness must lie in (0, 1], got {sharpness}")
    if src_len == 1:
        return np.ones((len(g), 1))
    if sharpness <= 1.0 / src_len:
        raise ValueError(
            f"sharpness {sharpness} <= 1/{src_len} leaves the row argmax ambiguous"
        )
    alpha = np.full((len(g), src_len), (1.0 - sharpness) / (src_len - 1))
    alpha[np.arange(len(g)), np.asarray(g.values) - 1] = sharpness
    return alpha
