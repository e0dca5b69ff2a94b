"""Index-set parameters, quotient membership, group enumeration and descent histograms."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

import numpy as np

from . import kernel
from .indexset import IndexSet, all_subsets, components
from .perm import (
    GroupLabel,
    MembershipError,
    SignedPermutation,
    ascends_at,
    check_member,
    generator_indices,
)
from .poly import BiPoly

__all__ = [
    "IndexSet",
    "all_subsets",
    "components",
    "Flavor",
    "QuotientParams",
    "quotient_params",
    "is_in_quotient",
    "check_index_set",
    "enumerate_group",
    "descent_histogram",
]


class Flavor(enum.Enum):
    A = "A"
    B = "B"
    CONJ_D = "ConjectureD"


def _half_up(size: int) -> int:
    return (size + 1) // 2


@dataclass(frozen=True)
class QuotientParams:
    components: tuple[tuple[int, int], ...]
    j0: tuple[int, int] | None
    m: int
    a: int | None
    delta0: int

    @property
    def other_sizes(self) -> tuple[int, ...]:
        """Sizes of the components other than the one containing 0, in order."""
        return tuple(b - a + 1 for a, b in self.components if (a, b) != self.j0)

    @property
    def j0_size(self) -> int:
        return 0 if self.j0 is None else self.j0[1] - self.j0[0] + 1

    @property
    def signature(self) -> tuple[int, tuple[int, ...]]:
        return self.j0_size, self.other_sizes


def quotient_params(J: IndexSet, flavor: Flavor) -> QuotientParams:
    comps = tuple(components(J))
    j0 = comps[0] if comps and comps[0][0] == 0 else None
    delta0 = 1 if 0 in J else 0
    a = None
    if flavor is Flavor.A:
        if 0 in J:
            raise ValueError("type A index sets must not contain 0")
        m = sum(_half_up(b - lo + 1) for lo, b in comps)
    elif flavor is Flavor.B:
        m = sum(_half_up(b - lo + 1) for lo, b in comps if (lo, b) != j0)
        # a = n when J is everything: the numerator product is then empty
        a = next((i for i in range(J.n) if i not in J), J.n)
    else:
        m = sum(_half_up(b - lo + 1) for lo, b in comps)
    return QuotientParams(comps, j0, m, a, delta0)


def check_index_set(I: IndexSet, n: int, g: GroupLabel) -> None:
    if I.n != n:
        raise ValueError(f"index set rank {I.n} does not match n={n}")
    if g is GroupLabel.A and 0 in I:
        raise MembershipError("type A quotients take I inside [1, n-1]")


def is_in_quotient(s: SignedPermutation, I: IndexSet, g: GroupLabel) -> bool:
    check_member(s, g)
    check_index_set(I, s.n, g)
    gens = set(generator_indices(s.n, g))
    return all(ascends_at(s, i, g) for i in I if i in gens)


def enumerate_group(n: int, g: GroupLabel) -> Iterator[SignedPermutation]:
    """Each element once: |window| permutations lexicographically, then sign patterns."""
    if n < 1:
        raise ValueError("rank must be positive")
    if g is GroupLabel.A:
        pats = [0]
    else:
        pats = range(1 << n)
        if g is GroupLabel.D:
            pats = [p for p in pats if bin(p).count("1") % 2 == 0]
        elif g is GroupLabel.BminusD:
            pats = [p for p in pats if bin(p).count("1") % 2 == 1]
    for perm in permutations(range(1, n + 1)):
        for p in pats:
            yield SignedPermutation(tuple(-v if p >> i & 1 else v for i, v in enumerate(perm)))


def counts_to_bipoly(counts: np.ndarray) -> BiPoly:
    ls, Ls = np.nonzero(counts)
    return BiPoly({(int(a), int(b)): int(counts[a, b]) for a, b in zip(ls, Ls)})


def descent_histogram(n: int, g: GroupLabel, workers: int | None = None) -> dict[int, BiPoly]:
    """Descent bitmask -> sum of y^length x^oddlength over elements with that descent set.

    Empty buckets are omitted.
    """
    h = kernel.dense_histogram(n, g, workers)
    out = {}
    for mask in range(h.shape[0]):
        if h[mask].any():
            out[mask] = counts_to_bipoly(h[mask])
    return out
