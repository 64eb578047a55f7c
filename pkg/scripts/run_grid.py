#!/usr/bin/env python3
"""Verify the whole default parameter grid and print a one-line summary per code.

Usage:
    python scripts/run_grid.py [--threads N] [--strict]
"""

import argparse
import sys

from cwecodes import codebuild, gfield, oracle
from cwecodes.cli import GRID


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--strict", action="store_true", help="recorded errata fail the run")
    args = parser.parse_args()

    all_ok = True
    for p, m, alpha in GRID:
        ctx = gfield.get_field(p, 2 * m)
        for a in range(p):
            for variant in ("plain", "bar"):
                spec = codebuild.CodeSpec(p, m, alpha, a, variant)
                rep = oracle.verify(spec, ctx, threads=args.threads)
                ok = rep.ok(strict=args.strict)
                all_ok = all_ok and ok
                status = "ok" if ok else "MISMATCH"
                extra = f" errata={len(rep.errata)}" if rep.errata else ""
                print(
                    f"p={p} m={m} alpha={alpha} a={a} {variant:5s} "
                    f"[{rep.n}, {rep.k}, {rep.min_distance}] case={rep.case} "
                    f"wd={rep.wd_match} cwe={rep.cwe_match} {status}{extra}"
                )
    print("all ok" if all_ok else "FAILURES PRESENT")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
