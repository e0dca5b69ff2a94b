"""Compare how the M_J cofactor groups under the two component readings.

For each n, scans all type-D quotients and reports divisibility plus the
number of signature classes on which M_J is not constant.
"""

import argparse

from oddlen.closed_forms import MJ_READINGS
from oddlen.harness import mj_dependence_failures, mj_symmetry_failures, scan_all_subsets
from oddlen.perm import GroupLabel


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()
    for reading in MJ_READINGS:
        for n in range(3, args.max_n + 1):
            rows = scan_all_subsets(n, GroupLabel.D, args.workers, reading)
            nd = sum(r.divisible is False for r in rows)
            dep = mj_dependence_failures(rows)
            sym = mj_symmetry_failures(rows)
            print(f"{reading:8s} n={n} sets={len(rows)} not_divisible={nd} "
                  f"dependence_failures={len(dep)} symmetry_failures={len(sym)}")
            for sig, groups in dep[:3]:
                print(f"    signature {sig}: " + " | ".join(str(g[:3]) for g in groups))


if __name__ == "__main__":
    main()
