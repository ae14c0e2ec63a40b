#!/usr/bin/env python3
"""Write division, divisibility and Ramsey sweep records as JSONL into a directory."""

import argparse
import json
import time
from dataclasses import asdict

from graphdiv.sweep import AcceptanceConfig, coloring_ok, division_ok, write_acceptance_artifacts


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--quiet", action="store_true")
    args = ap.parse_args()

    cfg = AcceptanceConfig(samples=args.samples, seed=args.seed)
    start = time.perf_counter()
    res = write_acceptance_artifacts(args.outdir, cfg)
    if args.quiet:
        return
    div = res["division"]
    print(json.dumps(asdict(cfg)))
    print(f"division: {sum(map(division_ok, div))}/{len(div)} ok, colouring: {sum(map(coloring_ok, div))}/{len(div)} ok")
    dv = res["divisibility"]
    print(f"perfectly divisible: {sum(r['divisible'] for r in dv)}/{len(dv)}")
    for r in res["ramsey"]:
        if r["case"] == "search":
            print(f"search n={r['n']} seed={r['seed']}: violations={r['violations']} after {r['steps']} steps")
    print(f"{time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
