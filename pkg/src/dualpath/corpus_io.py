"""File formats: corpora, alignments, path files, matrix files and reports.

All formats are line-oriented UTF-8 with LF line endings.

* corpus: one sentence pair per line, source and target separated by a tab,
  tokens separated by whitespace.
* alignments: one line per sentence of whitespace-separated ``s-t`` integer
  pairs (source-target, 0-based by default); an empty line means the
  sentence has no alignment links.
* paths: one record per line, either an action string over R/W or a JSON
  object like ``{"g": [3, 4, 5], "J": 6}``. A file must not mix the two.
  The action-string form is the canonical one used by writers.
* matrices: one JSON object per line with fields rows, cols and data
  (row-major list of rows). NaN and infinities are rejected.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import DimensionError, ParseError
from .metrics import MetricReport
from .paths import ActionSequence, GSequence, actions_to_g, g_to_actions

_ALIGN_TOKEN = re.compile(r"^(-?\d+)-(-?\d+)$")

REPORT_METRIC_KEYS = (
    "al", "ap", "dal", "a_suf", "a_nec", "iou", "omega_f", "omega_b", "total_reg",
)


@dataclass(frozen=True)
class AlignmentMap:
    """Aligned source positions per target word (1-based), plus the derived
    oracle positions: the furthest aligned source word, or None."""

    target_to_sources: tuple[frozenset[int], ...]
    src_len: int

    @property
    def tgt_len(self) -> int:
        return len(self.target_to_sources)

    @property
    def oracle_positions(self) -> tuple[int | None, ...]:
        return tuple(max(s) if s else None for s in self.target_to_sources)


def parse_pharaoh(line: str, tgt_len: int, src_len: int, base: int = 0) -> AlignmentMap:
    """Parse one alignment line of ``s-t`` pairs into an AlignmentMap.

    ``base`` declares the indexing of the file (0 by convention); positions
    are converted to 1-based internally.
    """
    if base not in (0, 1):
        raise ValueError(f"base must be 0 or 1, got {base}")
    if tgt_len < 1 or src_len < 1:
        raise DimensionError(f"lengths must be >= 1, got I={tgt_len}, J={src_len}")
    sets: list[set[int]] = [set() for _ in range(tgt_len)]
    for token in line.split():
        m = _ALIGN_TOKEN.match(token)
        if not m:
            raise ParseError(f"malformed alignment token {token!r}")
        s, t = int(m.group(1)), int(m.group(2))
        if s < 0 or t < 0:
            raise ParseError(f"negative index in alignment token {token!r}")
        if base == 1 and (s == 0 or t == 0):
            raise ParseError(f"index below base 1 in alignment token {token!r}")
        if base == 0:
            s, t = s + 1, t + 1
        if s > src_len:
            raise ParseError(
                f"source index {token.split('-')[0]} out of range for {src_len} source words"
            )
        if t > tgt_len:
            raise ParseError(
                f"target index {token.split('-')[1]} out of range for {tgt_len} target words"
            )
        sets[t - 1].add(s)
    return AlignmentMap(tuple(frozenset(s) for s in sets), src_len)


def read_alignment_file(
    path: str | Path, dims: Sequence[tuple[int, int]], base: int = 0
) -> list[AlignmentMap]:
    """One AlignmentMap per line; ``dims`` gives (tgt_len, src_len) per record."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if len(lines) != len(dims):
        raise DimensionError(
            f"{path}: {len(lines)} alignment records but {len(dims)} sentences"
        )
    maps = []
    for no, (line, (tgt_len, src_len)) in enumerate(zip(lines, dims), start=1):
        try:
            maps.append(parse_pharaoh(line, tgt_len, src_len, base=base))
        except ParseError as e:
            raise ParseError(str(e), line_no=no) from e
    return maps


class PathRecord(NamedTuple):
    g: GSequence
    src_len: int


def _path_record_from_actions(line: str, no: int) -> PathRecord:
    try:
        a = ActionSequence.from_string(line)
        return PathRecord(actions_to_g(a), a.source_len)
    except ValueError as e:
        raise ParseError(str(e), line_no=no) from e


def _path_record_from_json(line: str, no: int) -> PathRecord:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}", line_no=no) from e
    if not isinstance(obj, dict) or "g" not in obj or "J" not in obj:
        raise ParseError('path record needs fields "g" and "J"', line_no=no)
    if not isinstance(obj["J"], int) or isinstance(obj["J"], bool):
        raise ParseError('field "J" must be an integer', line_no=no)
    if not isinstance(obj["g"], list):
        raise ParseError('field "g" must be a list', line_no=no)
    try:
        g = GSequence(tuple(obj["g"]))
    except (ValueError, TypeError) as e:
        raise ParseError(str(e), line_no=no) from e
    if g.final > obj["J"]:
        raise ParseError(
            f'final read count {g.final} exceeds source length {obj["J"]}', line_no=no
        )
    return PathRecord(g, obj["J"])


def read_path_file(path: str | Path) -> list[PathRecord]:
    """Read a path file; every record becomes (g-sequence, source length)."""
    records = []
    fmt = None
    for no, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip():
            raise ParseError("blank line in path file", line_no=no)
        line_fmt = "g" if line.lstrip().startswith("{") else "actions"
        if fmt is None:
            fmt = line_fmt
        elif line_fmt != fmt:
            raise ParseError(
                f"mixed path formats: file started with {fmt!r} records", line_no=no
            )
        if line_fmt == "g":
            records.append(_path_record_from_json(line, no))
        else:
            records.append(_path_record_from_actions(line, no))
    return records


def write_path_file(
    path: str | Path,
    records: Iterable[PathRecord | tuple[GSequence, int]],
    fmt: str = "actions",
) -> None:
    """Write path records, one per line. ``fmt`` is "actions" (canonical) or "g"."""
    if fmt not in ("actions", "g"):
        raise ValueError(f'fmt must be "actions" or "g", got {fmt!r}')
    lines = []
    for g, src_len in records:
        if fmt == "actions":
            lines.append(g_to_actions(g, src_len).actions)
        else:
            lines.append(json.dumps({"g": list(GSequence.coerce(g).values), "J": src_len}))
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")


def _reject_non_finite(value: str):
    raise ValueError(f"non-finite value {value} not allowed")


def read_matrix_file(path: str | Path) -> list[np.ndarray]:
    """Read a matrix file into a list of 2-D float arrays."""
    matrices = []
    for no, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip():
            raise ParseError("blank line in matrix file", line_no=no)
        try:
            obj = json.loads(line, parse_constant=_reject_non_finite)
        except (json.JSONDecodeError, ValueError) as e:
            raise ParseError(f"invalid JSON: {e}", line_no=no) from e
        if not isinstance(obj, dict) or not {"rows", "cols", "data"} <= obj.keys():
            raise ParseError('matrix record needs fields "rows", "cols" and "data"', line_no=no)
        rows, cols, data = obj["rows"], obj["cols"], obj["data"]
        if not isinstance(rows, int) or not isinstance(cols, int) or rows < 1 or cols < 1:
            raise ParseError('"rows" and "cols" must be positive integers', line_no=no)
        if not isinstance(data, list) or len(data) != rows:
            raise ParseError(f'"data" must hold {rows} rows', line_no=no)
        for r, row in enumerate(data, start=1):
            if not isinstance(row, list) or len(row) != cols:
                got = len(row) if isinstance(row, list) else "a non-list"
                raise ParseError(f"row {r} has {got} entries, expected {cols}", line_no=no)
            for v in row:
                if isinstance(v, bool) or not isinstance(v, (int, float)):
                    raise ParseError(f"row {r} holds non-numeric entry {v!r}", line_no=no)
        matrix = np.asarray(data, dtype=float)
        if not np.isfinite(matrix).all():
            raise ParseError("matrix holds non-finite values", line_no=no)
        matrices.append(matrix)
    return matrices


def write_matrix_file(path: str | Path, matrices: Iterable[np.ndarray]) -> None:
    lines = []
    for m in matrices:
        m = np.asarray(m, dtype=float)
        if m.ndim != 2:
            raise DimensionError(f"matrices must be 2-D, got shape {m.shape}")
        if not np.isfinite(m).all():
            raise ValueError("refusing to write non-finite matrix values")
        obj = {
            "rows": int(m.shape[0]),
            "cols": int(m.shape[1]),
            "data": [[float(v) for v in row] for row in m],
        }
        lines.append(json.dumps(obj, allow_nan=False))
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")


def detect_file_kind(path: str | Path) -> str:
    """Classify a record file as "paths", "matrices" or "empty" from its first line."""
    for no, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip():
            continue
        if line.lstrip().startswith("{"):
            try:
                obj = json.loads(line, parse_constant=_reject_non_finite)
            except (json.JSONDecodeError, ValueError) as e:
                raise ParseError(f"invalid JSON: {e}", line_no=no) from e
            if isinstance(obj, dict) and "data" in obj:
                return "matrices"
            if isinstance(obj, dict) and "g" in obj:
                return "paths"
            raise ParseError("JSON record is neither a path nor a matrix", line_no=no)
        return "paths"
    return "empty"


@dataclass
class SentencePairRecord:
    """One corpus sentence pair with whatever per-sentence data is attached."""

    id: int
    src_tokens: tuple[str, ...]
    tgt_tokens: tuple[str, ...]
    alignment: AlignmentMap | None = None
    paths: dict[str, PathRecord] = field(default_factory=dict)
    matrices: dict[str, np.ndarray] = field(default_factory=dict)

    @property
    def src_len(self) -> int:
        return len(self.src_tokens)

    @property
    def tgt_len(self) -> int:
        return len(self.tgt_tokens)

    def attach_path(self, name: str, record: PathRecord) -> None:
        if record.src_len != self.src_len or len(record.g) != self.tgt_len:
            raise DimensionError(
                f"record {self.id}: path is {len(record.g)}x{record.src_len} "
                f"but sentence is {self.tgt_len}x{self.src_len}"
            )
        self.paths[name] = record

    def attach_matrix(self, name: str, matrix: np.ndarray) -> None:
        if matrix.shape != (self.tgt_len, self.src_len):
            raise DimensionError(
                f"record {self.id}: matrix shape {matrix.shape} does not match "
                f"sentence dimensions ({self.tgt_len}, {self.src_len})"
            )
        self.matrices[name] = matrix

    def attach_alignment(self, alignment: AlignmentMap) -> None:
        if alignment.tgt_len != self.tgt_len or alignment.src_len != self.src_len:
            raise DimensionError(
                f"record {self.id}: alignment covers {alignment.tgt_len}x{alignment.src_len} "
                f"but sentence is {self.tgt_len}x{self.src_len}"
            )
        self.alignment = alignment


def read_corpus(path: str | Path) -> list[SentencePairRecord]:
    """Tab-separated sentence pairs, one per line, ids numbered from 1."""
    records = []
    for no, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        fields = line.split("\t")
        if len(fields) != 2:
            raise ParseError(
                f"expected source<TAB>target, got {len(fields)} fields", line_no=no
            )
        src_tokens = tuple(fields[0].split())
        tgt_tokens = tuple(fields[1].split())
        if not src_tokens or not tgt_tokens:
            raise ParseError("empty source or target side", line_no=no)
        records.append(SentencePairRecord(no, src_tokens, tgt_tokens))
    return records


def metric_record(
    sentence_id: int,
    report: MetricReport | None = None,
    iou: float | None = None,
    omega_f: float | None = None,
    omega_b: float | None = None,
    total_reg: float | None = None,
) -> dict:
    """Flatten per-sentence metrics into a JSON-ready dict with stable key order."""
    rec: dict = {"id": sentence_id}
    if report is not None:
        rec["al"] = report.al
        rec["ap"] = report.ap
        rec["dal"] = report.dal
        if report.a_suf is not None:
            rec["a_suf"] = report.a_suf
        if report.a_nec is not None:
            rec["a_nec"] = report.a_nec
    for key, value in (
        ("iou", iou), ("omega_f", omega_f), ("omega_b", omega_b), ("total_reg", total_reg),
    ):
        if value is not None:
            rec[key] = value
    if report is not None:
        rec["tau"] = report.tau
        rec["aligned_count"] = report.aligned_count
        rec["qualifying_count"] = report.qualifying_count
        rec["src_len"] = report.src_len
        rec["tgt_len"] = report.tgt_len
    return rec


def build_report(sentences: list[dict], skipped: int = 0) -> dict:
    """Assemble the corpus report: per-sentence records plus arithmetic means.

    The aggregate section is omitted for an empty corpus. Each mean is over
    the sentences where the metric is present.
    """
    report: dict = {"count": len(sentences)}
    if skipped:
        report["skipped"] = skipped
    report["sentences"] = sentences
    if sentences:
        aggregate = {}
        for key in REPORT_METRIC_KEYS:
            values = [s[key] for s in sentences if key in s]
            if values:
                aggregate[key] = sum(values) / len(values)
        if aggregate:
            report["aggregate"] = aggregate
    return report


def report_to_json(sentences: list[dict], skipped: int = 0) -> str:
    return json.dumps(build_report(sentences, skipped), indent=2, allow_nan=False) + "\n"


def write_report(path: str | Path, sentences: list[dict], skipped: int = 0) -> None:
    Path(path).write_text(report_to_json(sentences, skipped), encoding="utf-8")


def report_to_tsv(report: dict) -> str:
    """Plot-ready table: one row per sentence, a final mean row, tab separated."""
    sentences = report.get("sentences", [])
    columns = [k for k in REPORT_METRIC_KEYS if any(k in s for s in sentences)]
    lines = ["\t".join(["id", *columns])]
    for s in sentences:
        lines.append("\t".join([str(s["id"])] + [_cell(s.get(k)) for k in columns]))
    aggregate = report.get("aggregate")
    if aggregate:
        lines.append("\t".join(["mean"] + [_cell(aggregate.get(k)) for k in columns]))
    return "".join(line + "\n" for line in lines)


def _cell(value) -> str:
    return "" if value is None else repr(value)
