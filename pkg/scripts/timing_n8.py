"""Wall-clock cost of the n=8 sweeps from cold caches."""

import argparse
import time

from oddlen import kernel
from oddlen.closed_forms import ClaimId, Status, verify_range
from oddlen.harness import scan_all_subsets
from oddlen.perm import GroupLabel


def timed(label, fn):
    t0 = time.perf_counter()
    out = fn()
    print(f"{label:40s} {time.perf_counter() - t0:8.2f} s")
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--n", type=int, default=8)
    args = ap.parse_args()
    n, w = args.n, args.workers
    for g in (GroupLabel.A, GroupLabel.D, GroupLabel.BminusD, GroupLabel.B):
        timed(f"histogram {g.value}_{n} (workers={w})", lambda: kernel.dense_histogram(n, g, w))
    reps = timed("conjectured products n=5..8",
                 lambda: sum((verify_range(c, range(5, n + 1), w) for c in
                              (ClaimId.conj_0i, ClaimId.conj_01i, ClaimId.conj_0i_square,
                               ClaimId.conj_01i_square)), []))
    print(f"    {sum(r.status is Status.verified for r in reps)}/{len(reps)} verified")
    rows = timed(f"all-subsets scan D_{n}", lambda: scan_all_subsets(n, GroupLabel.D, w, "swap01"))
    print(f"    {sum(r.status == 'verified' for r in rows)}/{len(rows)} rows verified (swap01 reading)")


if __name__ == "__main__":
    main()
