"""Latency metrics over read/write paths, alignment-based sufficiency and
necessity, and the coverage IoU duality score.

Oracle positions are given per target word as a 1-based source position or
None for unaligned words; unaligned words never enter a denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DimensionError, MetricUndefinedError
from .paths import GSequence
from .transpose import transpose_gsequence

OraclePositions = Sequence[Optional[int]]


def _check_lengths(g: GSequence, src_len: int, tgt_len: int) -> None:
    if src_len < 1 or tgt_len < 1:
        raise DimensionError(f"lengths must be >= 1, got J={src_len}, I={tgt_len}")
    if len(g) != tgt_len:
        raise DimensionError(f"g has {len(g)} entries but target length is {tgt_len}")
    if g.final > src_len:
        raise DimensionError(f"final read count {g.final} exceeds source length {src_len}")


def _cutoff(g: GSequence, src_len: int) -> int:
    """First step at which the whole source has been read; target length if never."""
    for i, v in enumerate(g):
        if v == src_len:
            return i + 1
    return len(g)


def average_lagging(g: GSequence | Iterable[int], src_len: int, tgt_len: int) -> float:
    """Mean number of source words the path lags behind the ideal diagonal,
    averaged over the steps before the source is fully read."""
    g = GSequence.coerce(g)
    _check_lengths(g, src_len, tgt_len)
    rate = tgt_len / src_len
    tau = _cutoff(g, src_len)
    return sum(g[i] - i / rate for i in range(tau)) / tau


def average_proportion(g: GSequence | Iterable[int], src_len: int, tgt_len: int) -> float:
    """Proportion of the source-by-target area lying above the path: sum(g) / (I*J)."""
    g = GSequence.coerce(g)
    _check_lengths(g, src_len, tgt_len)
    return sum(g.values) / (src_len * tgt_len)


def differentiable_average_lagging(
    g: GSequence | Iterable[int], src_len: int, tgt_len: int
) -> float:
    """Average lagging over a delay-adjusted path that may not retreat below
    one source word per J/I target steps; averaged over all target words."""
    g = GSequence.coerce(g)
    _check_lengths(g, src_len, tgt_len)
    step = src_len / tgt_len
    adjusted: list[float] = []
    for i, v in enumerate(g):
        adjusted.append(float(v) if i == 0 else max(float(v), adjusted[-1] + step))
    return sum(adjusted[i] - i * step for i in range(tgt_len)) / tgt_len


def _aligned_pairs(g: GSequence, oracle: OraclePositions) -> list[tuple[int, int]]:
    if len(oracle) != len(g):
        raise DimensionError(
            f"oracle positions cover {len(oracle)} target words but path covers {len(g)}"
        )
    pairs = []
    for a_i, g_i in zip(oracle, g):
        if a_i is None:
            continue
        if a_i < 1:
            raise DimensionError(f"aligned source position must be >= 1, got {a_i}")
        pairs.append((a_i, g_i))
    return pairs


def sufficiency(g: GSequence | Iterable[int], oracle: OraclePositions) -> float:
    """Fraction of aligned target words whose aligned source word is read in
    time (a_i <= g_i)."""
    g = GSequence.coerce(g)
    aligned = _aligned_pairs(g, oracle)
    if not aligned:
        raise MetricUndefinedError("no aligned target words")
    return sum(1 for a_i, g_i in aligned if a_i <= g_i) / len(aligned)


def necessity(g: GSequence | Iterable[int], oracle: OraclePositions) -> float:
    """Mean a_i / g_i over target words written at or after their aligned
    source word; 1.0 means every write happens exactly at the alignment."""
    g = GSequence.coerce(g)
    qualifying = [(a_i, g_i) for a_i, g_i in _aligned_pairs(g, oracle) if a_i <= g_i]
    if not qualifying:
        raise MetricUndefinedError("no target word is written at or after its alignment")
    return sum(a_i / g_i for a_i, g_i in qualifying) / len(qualifying)


def iou_duality(
    g_fwd: GSequence | Iterable[int], g_bwd: GSequence | Iterable[int]
) -> float:
    """Coverage IoU between the forward path and the transposed reverse path.

    Both paths are prefix-coverage areas of the same I x J grid once the
    reverse path is transposed into forward orientation, so the IoU reduces
    to sum(min(g_i, tg_i)) / sum(max(g_i, tg_i)). Equals 1 exactly when the
    two directions share their segment pairs.
    """
    gf = GSequence.coerce(g_fwd)
    gb = GSequence.coerce(g_bwd)
    tgt_len, src_len = len(gf), len(gb)
    if gf.final > src_len:
        raise DimensionError(
            f"forward path reads {gf.final} source words but reverse path has {src_len} targets"
        )
    if gb.final > tgt_len:
        raise DimensionError(
            f"reverse path reads {gb.final} words but forward path has {tgt_len} targets"
        )
    tg = transpose_gsequence(gb, src_len=tgt_len).g_back
    intersection = sum(min(a, b) for a, b in zip(gf, tg))
    union = sum(max(a, b) for a, b in zip(gf, tg))
    return intersection / union


@dataclass(frozen=True)
class MetricReport:
    """Per-sentence metrics plus the counts behind every denominator.

    a_suf / a_nec are None when no alignment was supplied or their
    denominator is empty (aligned_count / qualifying_count say which).
    """

    al: float
    ap: float
    dal: float
    a_suf: float | None
    a_nec: float | None
    tau: int
    aligned_count: int
    qualifying_count: int
    src_len: int
    tgt_len: int


def evaluate_path(
    g: GSequence | Iterable[int],
    src_len: int,
    oracle: OraclePositions | None = None,
) -> MetricReport:
    """All metrics for one sentence; alignment metrics only where defined."""
    g = GSequence.coerce(g)
    tgt_len = len(g)
    a_suf = a_nec = None
    aligned_count = qualifying_count = 0
    if oracle is not None:
        aligned = _aligned_pairs(g, oracle)
        aligned_count = len(aligned)
        qualifying_count = sum(1 for a_i, g_i in aligned if a_i <= g_i)
        if aligned_count:
            a_suf = qualifying_count / aligned_count
        if qualifying_count:
            a_nec = necessity(g, oracle)
    return MetricReport(
        al=average_lagging(g, src_len, tgt_len),
        ap=average_proportion(g, src_len, tgt_len),
        dal=differentiable_average_lagging(g, src_len, tgt_len),
        a_suf=a_suf,
        a_nec=a_nec,
        tau=_cutoff(g, src_len),
        aligned_count=aligned_count,
        qualifying_count=qualifying_count,
        src_len=src_len,
        tgt_len=tgt_len,
    )
