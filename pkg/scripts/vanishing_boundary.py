"""List every (I, a, value) where the position-a slice of a type-D quotient fails to vanish.

Scans all I and all a in [2 + [0 in I], n-1] with [a-2, a+1] disjoint from I.
"""

import argparse

from oddlen.closed_forms import vanishing_applicable
from oddlen.genfun import restricted_gf
from oddlen.indexset import all_subsets
from oddlen.perm import GroupLabel


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    args = ap.parse_args()
    for n in range(3, args.max_n + 1):
        checked = failed = 0
        by_a = {}
        for I in all_subsets(n):
            for a in range(n):
                if not vanishing_applicable(I, a):
                    continue
                for v in (n, -n):
                    checked += 1
                    g = restricted_gf(n, GroupLabel.D, I, a, v)
                    if g:
                        failed += 1
                        by_a.setdefault((a, 0 in I), []).append((I.members, v, str(g)))
        print(f"n={n}: {failed}/{checked} slices nonzero")
        for (a, has0), cases in sorted(by_a.items()):
            print(f"    a={a} 0_in_I={has0}: {len(cases)} cases, e.g. I={cases[0][0]} value={cases[0][1]} gf={cases[0][2]}")


if __name__ == "__main__":
    main()
