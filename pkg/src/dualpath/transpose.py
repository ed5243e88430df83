"""Mapping a read/write path onto the reverse translation direction.

The pipeline has three steps. First the write position of every target word
is taken as the argmax of its row in the writing probability matrix and the
sentence pair is split into segment pairs: each maximal run of target words
writing at the same source position pairs with the source span it consumed.
Second, the two sides of every pair are exchanged, because the reverse
direction shares the same segment pairs. Third, the exchanged pairs are
merged back into a path: within each pair, write events sit in the last
column of its sub-matrix, which yields a 0/1 matrix with exactly one 1 per
row and the reverse direction's g-sequence.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import DimensionError, PathError
from .paths import GSequence


@dataclass(frozen=True)
class SegmentPair:
    """One (source span, target span) unit; bounds are 1-based inclusive."""

    src_begin: int
    src_end: int
    tgt_begin: int
    tgt_end: int

    def __post_init__(self):
        if self.src_begin < 1 or self.tgt_begin < 1:
            raise PathError(f"segment bounds must be >= 1, got {self}")
        if self.src_end < self.src_begin or self.tgt_end < self.tgt_begin:
            raise PathError(f"empty segment span in {self}")


@dataclass(frozen=True)
class SegmentPairSequence:
    """Ordered segment pairs partitioning both sides of a sentence pair.

    Source spans cover 1..source_len contiguously and target spans cover
    1..target_len contiguously; both checked on construction.
    """

    pairs: tuple[SegmentPair, ...]

    def __post_init__(self):
        if not self.pairs:
            raise PathError("segment pair sequence must be non-empty")
        first = self.pairs[0]
        if first.src_begin != 1 or first.tgt_begin != 1:
            raise PathError("segment spans must start at position 1")
        for prev, cur in zip(self.pairs, self.pairs[1:]):
            if cur.src_begin != prev.src_end + 1:
                raise PathError(
                    f"source spans not contiguous: {prev.src_end} then {cur.src_begin}"
                )
            if cur.tgt_begin != prev.tgt_end + 1:
                raise PathError(
                    f"target spans not contiguous: {prev.tgt_end} then {cur.tgt_begin}"
                )

    @property
    def source_len(self) -> int:
        return self.pairs[-1].src_end

    @property
    def target_len(self) -> int:
        return self.pairs[-1].tgt_end

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


class TransposedPath(NamedTuple):
    gamma: np.ndarray
    g_back: GSequence
    monotonized: bool


def _as_alpha(alpha) -> np.ndarray:
    a = np.asarray(alpha, dtype=float)
    if a.ndim != 2 or a.size == 0:
        raise DimensionError(
            f"writing probability matrix must be 2-D and non-empty, got shape {a.shape}"
        )
    if not np.isfinite(a).all():
        raise PathError("writing probability matrix has non-finite entries")
    if (a < 0).any():
        raise PathError("writing probability matrix has negative entries")
    positive = (a > 0).any(axis=1)
    if not positive.all():
        row = int(np.argmin(positive)) + 1
        raise PathError(f"row {row} of writing probability matrix has no positive entry")
    return a


def write_positions(alpha) -> tuple[list[int], bool]:
    """Source position of the largest score in each row, made monotone.

    Ties break to the leftmost column. A running maximum repairs rows whose
    raw argmax decreases; the returned flag says whether any row changed.
    """
    a = _as_alpha(alpha)
    raw = np.argmax(a, axis=1) + 1
    d = np.maximum.accumulate(raw)
    monotonized = bool((d != raw).any())
    return [int(x) for x in d], monotonized


def segment(d: Sequence[int], src_len: int) -> SegmentPairSequence:
    """Split write positions into segment pairs.

    Each maximal run of equal positions is one target segment; its source
    segment starts right after the previous run's position (position 1 for
    the first run) and ends at the run's own position. The final pair is
    extended to src_len so unread trailing source words belong to it.
    """
    values = [operator.index(v) for v in d]
    if not values:
        raise PathError("write-position sequence must be non-empty")
    if src_len < 1:
        raise DimensionError(f"source length must be >= 1, got {src_len}")
    for v in values:
        if v < 1 or v > src_len:
            raise PathError(f"write position {v} out of range 1..{src_len}")
    for prev, cur in zip(values, values[1:]):
        if cur < prev:
            raise PathError(f"write positions not monotone: {prev} followed by {cur}")

    pairs = []
    n = len(values)
    i = 0
    prev_value = 0
    while i < n:
        j = i
        while j + 1 < n and values[j + 1] == values[i]:
            j += 1
        src_end = values[i]
        if j == n - 1 and src_end < src_len:
            src_end = src_len
        pairs.append(
            SegmentPair(
                src_begin=prev_value + 1, src_end=src_end,
                tgt_begin=i + 1, tgt_end=j + 1,
            )
        )
        prev_value = src_end
        i = j + 1
    return SegmentPairSequence(tuple(pairs))


def transpose_segments(s: SegmentPairSequence) -> SegmentPairSequence:
    """Exchange the source and target span of every pair, keeping order."""
    return SegmentPairSequence(
        tuple(
            SegmentPair(
                src_begin=p.tgt_begin, src_end=p.tgt_end,
                tgt_begin=p.src_begin, tgt_end=p.src_end,
            )
            for p in s.pairs
        )
    )


def merge_gamma(t: SegmentPairSequence) -> tuple[np.ndarray, GSequence]:
    """Merge exchanged segment pairs into the reverse direction's path.

    ``t`` must already be transposed, so its target spans index the original
    source words (rows) and its source spans the original target words
    (columns). Within each pair only the last column holds write events, so
    rows tgt_begin..tgt_end get a single 1 at column src_end. Returns the
    0/1 matrix and the reverse g-sequence it encodes.
    """
    gamma = np.zeros((t.target_len, t.source_len), dtype=float)
    g = []
    for p in t.pairs:
        gamma[p.tgt_begin - 1 : p.tgt_end, p.src_end - 1] = 1.0
        g.extend([p.src_end] * (p.tgt_end - p.tgt_begin + 1))
    return gamma, GSequence(tuple(g))


def transpose_path(alpha) -> TransposedPath:
    """Full pipeline: write positions, segment, exchange, merge."""
    a = _as_alpha(alpha)
    d, monotonized = write_positions(a)
    gamma, g_back = merge_gamma(transpose_segments(segment(d, a.shape[1])))
    return TransposedPath(gamma, g_back, monotonized)


def transpose_gsequence(g: GSequence | Iterable[int], src_len: int) -> TransposedPath:
    """Transposed path of an explicit g-sequence.

    Equivalent to running :func:`transpose_path` on a matrix whose row
    argmaxes are exactly ``g``; the positions are already monotone so the
    flag is always False.
    """
    g = GSequence.coerce(g)
    gamma, g_back = merge_gamma(transpose_segments(segment(g.values, src_len)))
    return TransposedPath(gamma, g_back, False)
