#!/usr/bin/env python3
"""Run the full claim suite and print a human-readable summary table.

Machine-readable output (JSONL per claim) is available from `ratiolab verify`;
this script is the quick console view.
"""

import argparse
import sys
import time

from ratiolab import DEFAULT_SEED, run_claims
from ratiolab.theorems import CLAIM_GROUPS


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suite", default="all", choices=CLAIM_GROUPS)
    ap.add_argument("--samples", type=int, default=100000)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = ap.parse_args()

    t0 = time.time()
    reports = run_claims(args.suite, samples=args.samples, seed=args.seed)
    dt = time.time() - t0

    width = max(len(r.claim_id) for r in reports)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] {r.claim_id:<{width}}  margin={r.margin:+.3e}  {r.note}")
        if r.witness is not None and not r.passed:
            w = r.witness
            print(f"       witness: w={w.w}, sigma1={w.sigma1}, sigma2={w.sigma2}, path={w.path}")
    failed = sum(1 for r in reports if not r.passed)
    print(f"\n{len(reports) - failed}/{len(reports)} claims passed in {dt:.1f}s "
          f"(samples={args.samples}, seed={args.seed})")
    return 0 if failed == 0 else 3


if __name__ == "__main__":
    sys.exit(main())
