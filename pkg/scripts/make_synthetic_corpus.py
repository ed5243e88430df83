#!/usr/bin/env python3
"""Generate a synthetic corpus with monotone-ish alignments for CLI runs.

Writes <prefix>.tsv (tab-separated token pairs) and <prefix>.align (pharaoh,
0-based). Alignments follow the diagonal with a small seeded jitter, so the
oracle_alignment policy produces non-trivial paths.
"""

import argparse
import random


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--prefix", default="synthetic")
    parser.add_argument("--sentences", type=int, default=100)
    parser.add_argument("--min-len", type=int, default=5)
    parser.add_argument("--max-len", type=int, default=25)
    parser.add_argument("--jitter", type=int, default=2)
    parser.add_argument("--seed", type=int, default=13)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    corpus_lines = []
    align_lines = []
    for _ in range(args.sentences):
        n = rng.randint(args.min_len, args.max_len)
        src = " ".join(f"s{i}" for i in range(n))
        tgt = " ".join(f"t{i}" for i in range(n))
        corpus_lines.append(f"{src}\t{tgt}")
        links = []
        for t in range(n):
            s = min(n - 1, max(0, t + rng.randint(-args.jitter, args.jitter)))
            links.append(f"{s}-{t}")
        align_lines.append(" ".join(links))

    with open(f"{args.prefix}.tsv", "w", encoding="utf-8") as f:
        f.write("".join(line + "\n" for line in corpus_lines))
    with open(f"{args.prefix}.align", "w", encoding="utf-8") as f:
        f.write("".join(line + "\n" for line in align_lines))
    print(f"wrote {args.prefix}.tsv and {args.prefix}.align ({args.sentences} sentences)")


if __name__ == "__main__":
    main()
