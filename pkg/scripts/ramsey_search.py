#!/usr/bin/env python3
"""Local search for K4-free graphs with small independence number over a range of orders and seeds."""

import argparse
import time

from graphdiv.formats import encode_graph6
from graphdiv.ramsey import search_k4_free


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[16, 17, 18])
    ap.add_argument("--alpha", type=int, default=3)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--budget", type=int, default=20000)
    args = ap.parse_args()

    print("n\tseed\tviolations\tsteps\tseconds\tgraph6")
    for n in args.n:
        for seed in range(1, args.seeds + 1):
            t = time.perf_counter()
            r = search_k4_free(n, args.alpha, args.budget, seed)
            print(f"{n}\t{seed}\t{r.violations}\t{r.steps}\t{time.perf_counter() - t:.2f}\t{encode_graph6(r.graph)}")


if __name__ == "__main__":
    main()
