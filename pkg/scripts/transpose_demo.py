#!/usr/bin/env python3
"""Walk a writing probability matrix through every transposition stage.

Prints the write positions, the segment pairs, their exchanged form, the
resulting 0/1 write-event matrix and the reverse-direction path. By default
it runs the 6x5 one-hot example with write positions 2,2,2,3,3,5.
"""

import argparse

import numpy as np

from dualpath import (
    g_to_actions,
    merge_gamma,
    segment,
    transpose_segments,
    write_positions,
)
from dualpath.corpus_io import read_matrix_file


def default_alpha():
    positions = [2, 2, 2, 3, 3, 5]
    alpha = np.zeros((6, 5))
    alpha[np.arange(6), np.array(positions) - 1] = 1.0
    return alpha


def show_pairs(label, pairs, src_axis="x", tgt_axis="y"):
    rendered = " | ".join(
        f"<{src_axis}{p.src_begin}..{src_axis}{p.src_end}, "
        f"{tgt_axis}{p.tgt_begin}..{tgt_axis}{p.tgt_end}>"
        for p in pairs
    )
    print(f"{label}: {rendered}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--input", help="matrix file; first record is used")
    args = parser.parse_args()

    alpha = read_matrix_file(args.input)[0] if args.input else default_alpha()
    print("alpha:")
    print(alpha)

    d, monotonized = write_positions(alpha)
    print(f"write positions: {d} (monotonized: {monotonized})")
    print(f"forward path: {g_to_actions(d, alpha.shape[1]).actions}")

    pairs = segment(d, alpha.shape[1])
    show_pairs("segment pairs", pairs)

    # after the exchange the "source" side holds the original target words
    exchanged = transpose_segments(pairs)
    show_pairs("exchanged pairs", exchanged, src_axis="y", tgt_axis="x")

    gamma, g_back = merge_gamma(exchanged)
    print("gamma:")
    print(gamma)
    print(f"reverse g-sequence: {list(g_back.values)}")
    print(f"reverse path: {g_to_actions(g_back, alpha.shape[0]).actions}")


if __name__ == "__main__":
    main()
