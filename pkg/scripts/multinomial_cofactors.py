"""Print type-A and type-B division cofactors next to two q-multinomial guesses.

Guess "m": [m; ceil(|I_k|/2) ...]_{x^2}. Guess "half-n": same parts with top floor(n/2).
"""

import argparse

from oddlen.closed_forms import ClaimId, verify_range
from oddlen.indexset import IndexSet, components
from oddlen.poly import q_multinomial


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    args = ap.parse_args()
    for claim in (ClaimId.thmA_quotient, ClaimId.thmB_quotient):
        agree_m = agree_half = total = 0
        for r in verify_range(claim, range(1, args.max_n + 1), 1):
            cof = r.extra.get("cofactor")
            if cof is None:
                continue
            total += 1
            agree_m += "warning" not in r.extra
            I = IndexSet.of(r.n, r.params["set"])
            parts = [(b - a + 2) // 2 for a, b in components(I) if not (claim is ClaimId.thmB_quotient and a == 0)]
            top = r.n // 2
            if sum(parts) <= top and cof == q_multinomial(top, parts, 2):
                agree_half += 1
        print(f"{claim.value}: {total} sets; top=m matches {agree_m}; top=floor(n/2) matches {agree_half}")


if __name__ == "__main__":
    main()
