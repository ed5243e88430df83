"""Command-line interface for batch path analysis.

Subcommands: transpose, metrics, compare, simulate, report. Exit codes are
0 for success, 1 for input or parse errors and 2 for dimension or record
consistency errors; warnings go to stderr and never change a 0 exit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus_io import (
    PathRecord,
    detect_file_kind,
    metric_record,
    read_alignment_file,
    read_corpus,
    read_matrix_file,
    read_path_file,
    report_to_json,
    report_to_tsv,
    write_matrix_file,
    write_path_file,
)
from .errors import DimensionError, DualPathError, MonotonicityError
from .loss import dual_regularizer
from .metrics import evaluate_path, iou_duality
from .paths import GSequence
from .policies import PolicySpec, oracle_path_from_alignment, wait_k_path
from .transpose import transpose_gsequence, transpose_path, write_positions


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _read_records(path: str, strict_monotonic: bool = False):
    """Path or matrix file -> list of (PathRecord, alpha-or-None).

    Matrix records derive their path from the row argmaxes and keep the
    matrix so callers can also compute duality losses.
    """
    kind = detect_file_kind(path)
    if kind == "empty":
        return []
    if kind == "paths":
        return [(rec, None) for rec in read_path_file(path)]
    records = []
    for i, alpha in enumerate(read_matrix_file(path), start=1):
        d, monotonized = write_positions(alpha)
        if monotonized:
            if strict_monotonic:
                raise MonotonicityError(
                    f"record {i}: write positions are not monotone"
                )
            _warn(f"record {i}: write positions repaired by running maximum")
        records.append((PathRecord(GSequence(tuple(d)), alpha.shape[1]), alpha))
    return records


def cmd_transpose(args) -> int:
    kind = detect_file_kind(args.input)
    gammas = []
    backward = []
    if kind == "matrices":
        for i, alpha in enumerate(read_matrix_file(args.input), start=1):
            result = transpose_path(alpha)
            if result.monotonized:
                if args.strict_monotonic:
                    raise MonotonicityError(
                        f"record {i}: write positions are not monotone"
                    )
                _warn(f"record {i}: write positions repaired by running maximum")
            gammas.append(result.gamma)
            backward.append(PathRecord(result.g_back, alpha.shape[0]))
    elif kind == "paths":
        for rec in read_path_file(args.input):
            result = transpose_gsequence(rec.g, rec.src_len)
            gammas.append(result.gamma)
            backward.append(PathRecord(result.g_back, len(rec.g)))
    write_path_file(args.output + ".paths", backward)
    write_matrix_file(args.output + ".gamma.jsonl", gammas)
    return 0


def cmd_metrics(args) -> int:
    paths = read_path_file(args.input)
    if args.corpus:
        corpus = read_corpus(args.corpus)
        if len(corpus) != len(paths):
            raise DimensionError(
                f"{len(paths)} path records but {len(corpus)} corpus sentences"
            )
        for sentence, rec in zip(corpus, paths):
            sentence.attach_path("input", rec)
    oracles = [None] * len(paths)
    if args.alignments:
        dims = [(len(rec.g), rec.src_len) for rec in paths]
        maps = read_alignment_file(args.alignments, dims, base=args.base)
        oracles = [m.oracle_positions for m in maps]
    sentences = [
        metric_record(i, evaluate_path(rec.g, rec.src_len, oracle))
        for i, (rec, oracle) in enumerate(zip(paths, oracles), start=1)
    ]
    _emit(report_to_json(sentences), args.output)
    return 0


def cmd_compare(args) -> int:
    fwd = _read_records(args.input, args.strict_monotonic)
    bwd = _read_records(args.backward, args.strict_monotonic)
    if len(fwd) != len(bwd):
        raise DimensionError(
            f"{len(fwd)} forward records but {len(bwd)} backward records"
        )
    sentences = []
    skipped = 0
    for i, ((rec_f, alpha_f), (rec_b, alpha_b)) in enumerate(zip(fwd, bwd), start=1):
        try:
            g_f, src_f = rec_f
            g_b, src_b = rec_b
            if src_f != len(g_b) or src_b != len(g_f):
                raise DimensionError(
                    f"forward path is {len(g_f)}x{src_f} but backward path is {len(g_b)}x{src_b}"
                )
            iou = iou_duality(g_f, g_b)
            if alpha_f is not None and alpha_b is not None:
                losses = dual_regularizer(alpha_f, alpha_b, args.lambda_dual)
                sentences.append(
                    metric_record(
                        i,
                        iou=iou,
                        omega_f=losses.omega_f,
                        omega_b=losses.omega_b,
                        total_reg=losses.total_reg,
                    )
                )
            else:
                sentences.append(metric_record(i, iou=iou))
        except DimensionError as e:
            _warn(f"record {i} skipped: {e}")
            skipped += 1
    _emit(report_to_json(sentences, skipped=skipped), args.output)
    return 0


def cmd_simulate(args) -> int:
    spec = PolicySpec(args.policy, args.k if args.policy == "wait_k" else None)
    corpus = read_corpus(args.input)
    if args.alignments:
        dims = [(s.tgt_len, s.src_len) for s in corpus]
        for sentence, amap in zip(
            corpus, read_alignment_file(args.alignments, dims, base=args.base)
        ):
            sentence.attach_alignment(amap)

    if spec.kind == "oracle_alignment" and not args.alignments:
        raise ValueError("policy oracle_alignment requires --alignments")
    if spec.kind == "replay":
        if not args.paths:
            raise ValueError("policy replay requires --paths")
        replayed = read_path_file(args.paths)
        if len(replayed) != len(corpus):
            raise DimensionError(
                f"{len(replayed)} replay records but {len(corpus)} corpus sentences"
            )
        for sentence, rec in zip(corpus, replayed):
            sentence.attach_path("replay", rec)

    records = []
    for sentence in corpus:
        if spec.kind == "wait_k":
            g = wait_k_path(spec.k, sentence.tgt_len, sentence.src_len)
        elif spec.kind == "oracle_alignment":
            g = oracle_path_from_alignment(
                sentence.alignment.oracle_positions, sentence.src_len
            )
        else:
            g = sentence.paths["replay"].g
        records.append(PathRecord(g, sentence.src_len))

    write_path_file(args.output + ".paths", records)
    sentences = [
        metric_record(
            s.id,
            evaluate_path(
                rec.g,
                rec.src_len,
                s.alignment.oracle_positions if s.alignment else None,
            ),
        )
        for s, rec in zip(corpus, records)
    ]
    Path(args.output + ".report.json").write_text(
        report_to_json(sentences), encoding="utf-8"
    )
    return 0


def cmd_report(args) -> int:
    report = json.loads(Path(args.input).read_text(encoding="utf-8"))
    _emit(report_to_tsv(report), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualpath",
        description="Read/write path analysis: transposition, duality and latency metrics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("transpose", help="transpose paths or writing matrices")
    t.add_argument("--input", required=True, help="path file or matrix file")
    t.add_argument(
        "--output", required=True,
        help="base name; writes <base>.paths and <base>.gamma.jsonl",
    )
    t.add_argument(
        "--strict-monotonic", action="store_true",
        help="fail instead of repairing non-monotone write positions",
    )
    t.set_defaults(func=cmd_transpose)

    m = sub.add_parser("metrics", help="latency and alignment metrics for a path file")
    m.add_argument("--input", required=True, help="path file")
    m.add_argument("--alignments", help="pharaoh alignment file, one line per record")
    m.add_argument("--corpus", help="optional corpus file for dimension checks")
    m.add_argument("--output", help="report JSON (stdout when omitted)")
    m.add_argument("--base", type=int, choices=(0, 1), default=0,
                   help="indexing base of the alignment file")
    m.set_defaults(func=cmd_metrics)

    c = sub.add_parser("compare", help="duality of forward and backward records")
    c.add_argument("--input", required=True, help="forward path or matrix file")
    c.add_argument("--backward", required=True, help="backward path or matrix file")
    c.add_argument("--output", help="report JSON (stdout when omitted)")
    c.add_argument("--lambda-dual", type=float, default=1.0, dest="lambda_dual")
    c.add_argument("--strict-monotonic", action="store_true")
    c.set_defaults(func=cmd_compare)

    s = sub.add_parser("simulate", help="generate policy paths over a corpus")
    s.add_argument("--input", required=True, help="corpus file (source<TAB>target)")
    s.add_argument("--policy", required=True, choices=("wait_k", "oracle_alignment", "replay"))
    s.add_argument("--k", type=int, help="lag for wait_k")
    s.add_argument("--alignments", help="pharaoh alignment file")
    s.add_argument("--paths", help="existing path file for the replay policy")
    s.add_argument(
        "--output", required=True,
        help="base name; writes <base>.paths and <base>.report.json",
    )
    s.add_argument("--base", type=int, choices=(0, 1), default=0)
    s.set_defaults(func=cmd_simulate)

    r = sub.add_parser("report", help="flatten a report JSON into a TSV table")
    r.add_argument("--input", required=True, help="report JSON file")
    r.add_argument("--output", help="TSV file (stdout when omitted)")
    r.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MonotonicityError, DimensionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (DualPathError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
