#!/usr/bin/env python3
"""Smallest t where c*t^3/ln(t)^4 - 1 exceeds 3(t-1)^2, for several values of c."""

import argparse

from graphdiv.ramsey import required_t_scan


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--c", nargs="+", default=["1/100", "1/10", "1", "10", "100"])
    ap.add_argument("--t-max", type=int, default=10**6)
    args = ap.parse_args()

    print("c\tfirst_t\tlast_unsatisfied_t")
    for c in args.c:
        rows = required_t_scan(c, args.t_max)
        sat = [r.t for r in rows if r.satisfied]
        unsat = [r.t for r in rows if not r.satisfied]
        print(f"{c}\t{sat[0] if sat else '-'}\t{unsat[-1] if unsat else '-'}")


if __name__ == "__main__":
    main()
