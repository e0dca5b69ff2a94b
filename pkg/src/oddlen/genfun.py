"""Signed and length-graded generating functions over quotients.

Unrestricted queries read the descent histogram (one sweep answers every
quotient). Position-restricted queries filter the full element table. The
``*_bruteforce`` functions enumerate element by element with the reference
statistics of :mod:`oddlen.perm` and serve as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernel
from .indexset import IndexSet
from .perm import GroupLabel, length, odd_length
from .poly import BiPoly, IntPoly
from .quotients import check_index_set, counts_to_bipoly, enumerate_group, is_in_quotient


def _as_set(n: int, I) -> IndexSet:
    if isinstance(I, IndexSet):
        return I
    return IndexSet.of(n, I)


def signed_from_counts(counts: np.ndarray) -> IntPoly:
    signs = np.where(np.arange(counts.shape[0]) % 2, -1, 1)
    coeffs = (counts * signs[:, None]).sum(0)
    return IntPoly([int(c) for c in coeffs])


def graded_gf(n: int, group: GroupLabel, I=(), workers: int | None = None) -> BiPoly:
    I = _as_set(n, I)
    check_index_set(I, n, group)
    return counts_to_bipoly(kernel.quotient_counts(n, group, I.mask, workers))


def signed_gf(n: int, group: GroupLabel, I=(), workers: int | None = None) -> IntPoly:
    I = _as_set(n, I)
    check_index_set(I, n, group)
    return signed_from_counts(kernel.quotient_counts(n, group, I.mask, workers))


def restricted_gf(n: int, group: GroupLabel, I, position: int, value: int) -> IntPoly:
    """Signed gf over {sigma in the quotient : sigma(position) = value}."""
    I = _as_set(n, I)
    check_index_set(I, n, group)
    if abs(value) != n:
        raise ValueError(f"restriction value must be +-{n}, got {value}")
    if not 1 <= position <= n:
        raise ValueError(f"position {position} outside [1, {n}]")
    W, ell, odd, mask = kernel.group_table(n, group)
    sel = (W[:, position - 1] == value) & ((mask & I.mask) == 0)
    sign = np.where(ell[sel] % 2, -1, 1)
    if not sel.any():
        return IntPoly.zero()
    coeffs = np.zeros(int(odd[sel].max()) + 1, dtype=np.int64)
    np.add.at(coeffs, odd[sel], sign)
    return IntPoly([int(c) for c in coeffs])


@dataclass(frozen=True)
class GfQuery:
    n: int
    group: GroupLabel
    I: IndexSet
    restriction: tuple[int, int] | None = None  # (position, value)
    graded: bool = False

    def __post_init__(self):
        if self.restriction is not None:
            p, v = self.restriction
            if abs(v) != self.n or not 1 <= p <= self.n:
                raise ValueError(f"bad restriction {self.restriction} for n={self.n}")
            if self.graded:
                raise ValueError("restricted queries are signed only")

    def evaluate(self, workers: int | None = None) -> IntPoly | BiPoly:
        if self.restriction is not None:
            return restricted_gf(self.n, self.group, self.I, *self.restriction)
        if self.graded:
            return graded_gf(self.n, self.group, self.I, workers)
        return signed_gf(self.n, self.group, self.I, workers)


def graded_gf_bruteforce(n: int, group: GroupLabel, I=()) -> BiPoly:
    I = _as_set(n, I)
    c: dict[tuple[int, int], int] = {}
    for s in enumerate_group(n, group):
        if is_in_quotient(s, I, group):
            k = (length(s, group), odd_length(s, group))
            c[k] = c.get(k, 0) + 1
    return BiPoly(c)


def signed_gf_bruteforce(n: int, group: GroupLabel, I=(), restriction=None) -> IntPoly:
    I = _as_set(n, I)
    c: dict[int, int] = {}
    for s in enumerate_group(n, group):
        if restriction is not None and s(restriction[0]) != restriction[1]:
            continue
        if is_in_quotient(s, I, group):
            L = odd_length(s, group)
            c[L] = c.get(L, 0) + (-1) ** length(s, group)
    return IntPoly(c)
