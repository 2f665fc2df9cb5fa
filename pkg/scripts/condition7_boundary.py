#!/usr/bin/env python3
"""Smallest q >= 2 from which the layering condition holds for every larger q (up to a cap),
next to the region quoted for each case of the derivative argument."""

import argparse

from hylag.constructions import FamilyChoice, condition7
from hylag.nonjump.claims import case_region_start


def first_stable_q(f, ell, cap):
    last_fail = 1
    for q in range(2, cap + 1):
        if not condition7(f, ell, q):
            last_fail = q
    return last_fail + 1


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cap", type=int, default=3000)
    args = ap.parse_args()
    print(f"{'family':<11} {'l':>2} {'holds from q':>11} {'quoted region':>14}")
    for f in FamilyChoice:
        for ell in ([5] if f.is_special else range(2, 7)):
            print(f"{f.value:<11} {ell:>2} {first_stable_q(f, ell, args.cap):>11} {case_region_start(f, ell):>14}")


if __name__ == "__main__":
    main()
