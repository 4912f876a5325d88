"""Run the full verification suite on every bundled algebra and summarise."""

import argparse
import time

from newtmod.bundled import BUNDLED, bundled_algebra
from newtmod.enumerate import build_pool, verify_theorem_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--verbose", action="store_true", help="print every record")
    args = ap.parse_args()
    for name, bound in sorted(BUNDLED.items()):
        t0 = time.perf_counter()
        pool = build_pool(bundled_algebra(name), bound, args.workers)
        report = verify_theorem_suite(pool)
        dt = time.perf_counter() - t0
        print(
            f"{name:12s} bound={list(bound)} indec={len(pool.indecomposables)} "
            f"pairs={len(pool.tilting_pairs)} status={report.status} ({dt:.2f}s)"
        )
        if args.verbose:
            for r in report.records:
                print(f"    {r.check:16s} {r.status:8s} {len(r.witnesses)} witnesses")


if __name__ == "__main__":
    main()
