#!/usr/bin/env python3
"""Sweep every theorem over a desk-scale grid and print a summary table.

Usage:
    python scripts/run_verification.py [--n-max 30] [--r 2,3,4,5] [--j-max 3]

Exits nonzero if any instance fails, printing each failure.  This is the
quick-look driver; the full acceptance grid lives in tests/test_acceptance.py.
"""

from __future__ import annotations

import argparse
import sys
import time

from beckpart.identities import THEOREM_IDS, verify


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=30)
    ap.add_argument("--r", default="2,3,4,5")
    ap.add_argument("--j-max", type=int, default=3)
    args = ap.parse_args()
    r_values = [int(x) for x in args.r.split(",")]

    total_bad = 0
    print(f"{'theorem':<22}{'instances':>10}{'failures':>10}{'seconds':>9}")
    for theorem in THEOREM_IDS:
        t0 = time.time()
        records = verify(theorem, range(args.n_max + 1), r_values,
                         args.j_max, "all")
        bad = [rec for rec in records if not rec.ok]
        total_bad += len(bad)
        print(f"{theorem:<22}{len(records):>10}{len(bad):>10}"
              f"{time.time() - t0:>9.2f}")
        for rec in bad:
            print(f"  FAIL n={rec.n} r={rec.r} j={rec.j} t={rec.t}: "
                  f"lhs={rec.lhs} rhs={rec.rhs} {rec.note}", file=sys.stderr)
    print("all instances passed" if total_bad == 0
          else f"{total_bad} failures")
    return 1 if total_bad else 0


if __name__ == "__main__":
    sys.exit(main())
