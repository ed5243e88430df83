#!/usr/bin/env python3
"""Sweep wait-k over a grid of sentence lengths and print latency metrics.

Emits a plot-ready TSV (k, src_len, tgt_len, al, ap, dal) to stdout. On
equal lengths AL and DAL both sit exactly at k, which makes this a quick
sanity check; unequal lengths show how the metrics drift apart.
"""

import argparse

from dualpath import (
    average_lagging,
    average_proportion,
    differentiable_average_lagging,
    wait_k_path,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ks", type=int, nargs="+", default=[1, 3, 5, 7, 9])
    parser.add_argument("--src-lens", type=int, nargs="+", default=[10, 20, 50])
    parser.add_argument(
        "--ratio", type=float, default=1.0,
        help="target length as a multiple of source length",
    )
    args = parser.parse_args()

    print("k\tsrc_len\ttgt_len\tal\tap\tdal")
    for k in args.ks:
        for src_len in args.src_lens:
            tgt_len = max(1, round(src_len * args.ratio))
            g = wait_k_path(k, tgt_len, src_len)
            al = average_lagging(g, src_len, tgt_len)
            ap = average_proportion(g, src_len, tgt_len)
            dal = differentiable_average_lagging(g, src_len, tgt_len)
            print(f"{k}\t{src_len}\t{tgt_len}\t{al:.6f}\t{ap:.6f}\t{dal:.6f}")


if __name__ == "__main__":
    main()
