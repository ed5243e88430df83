"""Canonical read/write path representations and conversions.

A read/write path over a sentence pair with J source and I target words can
be stored three ways, all interconvertible:

* a g-sequence: for each target word, the number of source words read when
  that word is written (monotone non-decreasing, values >= 1);
* an action string over ``R`` (read one source word) and ``W`` (write one
  target word), e.g. ``"RRWWWRWWRRW"``;
* an I x J binary coverage matrix whose row i has ones in columns 1..g_i.

Positions and counts are 1-based throughout; converting 0-based file formats
happens at the I/O boundary.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import PathError

READ = "R"
WRITE = "W"


@dataclass(frozen=True)
class GSequence:
    """Monotone sequence of read counts, one entry per target word.

    Invariants (enforced on construction): non-empty, every value >= 1,
    values non-decreasing. The source length is not part of the sequence;
    operations that need it take it as an argument and check the final
    value against it.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(operator.index(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise PathError("g-sequence must have at least one entry")
        if values[0] < 1:
            raise PathError(f"g values must be >= 1, got {values[0]}")
        for prev, cur in zip(values, values[1:]):
            if cur < prev:
                raise PathError(f"g-sequence not monotone: {prev} followed by {cur}")

    @classmethod
    def coerce(cls, g: "GSequence | Iterable[int]") -> "GSequence":
        return g if isinstance(g, cls) else cls(tuple(g))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    @property
    def target_len(self) -> int:
        return len(self.values)

    @property
    def final(self) -> int:
        return self.values[-1]


@dataclass(frozen=True)
class ActionSequence:
    """A READ/WRITE trace together with the lengths it claims to cover.

    Instances are deliberately not validated on construction so that
    malformed traces can be held and diagnosed; see :func:`validate_path`.
    """

    actions: str
    source_len: int
    target_len: int

    @classmethod
    def from_string(cls, actions: str) -> "ActionSequence":
        """Build with declared lengths inferred from the action counts."""
        return cls(actions, source_len=actions.count(READ), target_len=actions.count(WRITE))

    def __len__(self) -> int:
        return len(self.actions)


@dataclass(frozen=True)
class ValidationReport:
    """Every invariant a trace violates; empty means valid."""

    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate_path(a: ActionSequence) -> ValidationReport:
    """Diagnose an action trace against all path invariants without raising."""
    violations: list[str] = []
    bad = sorted({c for c in a.actions if c not in (READ, WRITE)})
    if bad:
        violations.append(
            "invalid action characters: " + ", ".join(repr(c) for c in bad)
        )
        return ValidationReport(tuple(violations))

    reads = a.actions.count(READ)
    writes = a.actions.count(WRITE)
    if reads != a.source_len:
        violations.append(
            f"READ count {reads} does not match declared source length {a.source_len}"
        )
    if writes != a.target_len:
        violations.append(
            f"WRITE count {writes} does not match declared target length {a.target_len}"
        )
    if reads == 0:
        violations.append("path reads no source words")
    if writes == 0:
        violations.append("path writes no target words")

    first_write = a.actions.find(WRITE)
    if first_write == 0:
        violations.append("WRITE before any READ at position 1")
    return ValidationReport(tuple(violations))


def actions_to_g(a: ActionSequence) -> GSequence:
    """Read counts preceding each WRITE. Raises PathError for invalid traces."""
    report = validate_path(a)
    if not report.ok:
        raise PathError("; ".join(report.violations))
    g = []
    reads = 0
    for c in a.actions:
        if c == READ:
            reads += 1
        else:
            g.append(reads)
    return GSequence(tuple(g))


def g_to_actions(g: GSequence | Iterable[int], src_len: int) -> ActionSequence:
    """Inverse of :func:`actions_to_g`.

    Emits the READs needed to reach each g value followed by a WRITE, then
    trailing READs so the path always consumes the whole source and ends at
    (target_len, src_len).
    """
    g = GSequence.coerce(g)
    if src_len < g.final:
        raise PathError(
            f"source length {src_len} smaller than final read count {g.final}"
        )
    parts = []
    reads = 0
    for v in g:
        parts.append(READ * (v - reads))
        parts.append(WRITE)
        reads = v
    parts.append(READ * (src_len - reads))
    return ActionSequence("".join(parts), source_len=src_len, target_len=len(g))


def coverage_matrix(g: GSequence | Iterable[int], src_len: int) -> np.ndarray:
    """I x J 0/1 matrix with row i covering columns 1..g_i (area below the path)."""
    g = GSequence.coerce(g)
    if src_len < g.final:
        raise PathError(
            f"source length {src_len} smaller than final read count {g.final}"
        )
    cols = np.arange(1, src_len + 1)
    return (cols <= np.asarray(g.values)[:, None]).astype(np.int8)
