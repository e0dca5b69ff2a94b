"""Signed permutations in window notation and their length statistics.

This is the reference (pure Python, one element at a time) implementation.
The vectorized kernel in :mod:`oddlen.kernel` computes the same quantities in
bulk and is cross-checked against this module in the test suite.

Conventions: ``(s * t)(i) = s(t(i))``. Right multiplication by ``s_i``
(i >= 1) swaps window positions i and i+1; by ``s_0`` (type B) negates
position 1; by ``s_0^D`` negates and swaps positions 1 and 2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .indexset import IndexSet


class GroupLabel(enum.Enum):
    A = "A"
    B = "B"
    D = "D"
    BminusD = "BD"

    @classmethod
    def parse(cls, text: str) -> GroupLabel:
        t = text.strip().upper()
        aliases = {"A": cls.A, "B": cls.B, "D": cls.D, "BD": cls.BminusD, "B-D": cls.BminusD,
                   "BMINUSD": cls.BminusD}
        if t not in aliases:
            raise ValueError(f"unknown group {text!r} (expected A, B, D or BD)")
        return aliases[t]

    def order(self, n: int) -> int:
        from math import factorial

        f = factorial(n)
        if self is GroupLabel.A:
            return f
        if self is GroupLabel.B:
            return 2**n * f
        return 2 ** (n - 1) * f


class MembershipError(ValueError):
    pass


@dataclass(frozen=True)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        w = self.window
        n = len(w)
        if n < 1:
            raise ValueError("empty window")
        if any(v == 0 for v in w):
            raise ValueError(f"zero entry in window {list(w)}")
        if any(abs(v) > n for v in w):
            raise ValueError(f"absolute value outside [1, {n}] in window {list(w)}")
        if len({abs(v) for v in w}) != n:
            raise ValueError(f"repeated absolute value in window {list(w)}")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        """Value at i in [-n, n], with sigma(0) = 0 and sigma(-i) = -sigma(i)."""
        if i == 0:
            return 0
        if i > 0:
            return self.window[i - 1]
        return -self.window[-i - 1]

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return compose(self, other)

    @property
    def neg_count(self) -> int:
        return sum(1 for v in self.window if v < 0)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.window)) + "]"


def make_perm(window: Iterable[int]) -> SignedPermutation:
    return SignedPermutation(tuple(int(v) for v in window))


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)))


def compose(s: SignedPermutation, t: SignedPermutation) -> SignedPermutation:
    if s.n != t.n:
        raise ValueError(f"rank mismatch: {s.n} vs {t.n}")
    return SignedPermutation(tuple(s(v) for v in t.window))


def inverse(s: SignedPermutation) -> SignedPermutation:
    out = [0] * s.n
    for i, v in enumerate(s.window, start=1):
        if v > 0:
            out[v - 1] = i
        else:
            out[-v - 1] = -i
    return SignedPermutation(tuple(out))


def in_group(s: SignedPermutation, g: GroupLabel) -> bool:
    neg = s.neg_count
    if g is GroupLabel.A:
        return neg == 0
    if g is GroupLabel.B:
        return True
    if g is GroupLabel.D:
        return neg % 2 == 0
    return neg % 2 == 1


def check_member(s: SignedPermutation, g: GroupLabel) -> None:
    if not in_group(s, g):
        raise MembershipError(f"{s} is not an element of type {g.value}")


@dataclass(frozen=True)
class StatBundle:
    inv: int
    neg: int
    nsp: int
    oinv: int
    oneg: int
    onsp: int


def stat_bundle(s: SignedPermutation) -> StatBundle:
    w = s.window
    n = len(w)
    inv = nsp = oinv = onsp = 0
    for i in range(n):
        for j in range(i + 1, n):
            odd = (i - j) % 2 == 1
            if w[i] > w[j]:
                inv += 1
                oinv += odd
            if w[i] + w[j] < 0:
                nsp += 1
                onsp += odd
    neg = sum(1 for v in w if v < 0)
    # 1-based odd positions are 0-based even indices
    oneg = sum(1 for i in range(0, n, 2) if w[i] < 0)
    return StatBundle(inv, neg, nsp, oinv, oneg, onsp)


def length(s: SignedPermutation, g: GroupLabel) -> int:
    check_member(s, g)
    st = stat_bundle(s)
    if g is GroupLabel.A:
        return st.inv
    if g is GroupLabel.B:
        return st.inv + st.neg + st.nsp
    return st.inv + st.nsp


def odd_length(s: SignedPermutation, g: GroupLabel) -> int:
    check_member(s, g)
    st = stat_bundle(s)
    if g is GroupLabel.A:
        return st.oinv
    if g is GroupLabel.B:
        return st.oinv + st.oneg + st.onsp
    return st.oinv + st.onsp


def odd_length_B_halfcount(s: SignedPermutation) -> int:
    """Type-B odd length counted directly on [-n, n] (independent of stat_bundle)."""
    n = s.n
    count = 0
    for i in range(-n, n + 1):
        for j in range(i + 1, n + 1):
            if (i - j) % 2 and s(i) > s(j):
                count += 1
    return count // 2


def inversions_full(s: SignedPermutation, include_zero: bool = False) -> int:
    """Inversions of the sequence sigma(-n), ..., sigma(n), optionally skipping index 0."""
    n = s.n
    idx = [i for i in range(-n, n + 1) if include_zero or i]
    vals = [s(i) for i in idx]
    return sum(1 for a in range(len(vals)) for b in range(a + 1, len(vals)) if vals[a] > vals[b])


def length_B_halfcount(s: SignedPermutation) -> int:
    """Type-B length as (inversions on [-n, n] without 0, plus neg) / 2."""
    return (inversions_full(s) + s.neg_count) // 2


def generator(n: int, i: int, g: GroupLabel) -> SignedPermutation:
    """The Coxeter generator s_i of the group (s_0 depends on B vs D)."""
    w = list(range(1, n + 1))
    if i >= 1:
        if i >= n:
            raise ValueError(f"no generator s_{i} in rank {n}")
        w[i - 1], w[i] = w[i], w[i - 1]
    elif i == 0:
        if g is GroupLabel.A:
            raise ValueError("type A has no generator s_0")
        if g is GroupLabel.B:
            w[0] = -1
        else:
            if n < 2:
                raise ValueError("s_0^D needs rank >= 2")
            w[0], w[1] = -2, -1
    else:
        raise ValueError(f"bad generator index {i}")
    return SignedPermutation(tuple(w))


def generator_indices(n: int, g: GroupLabel) -> range:
    if g is GroupLabel.A:
        return range(1, n)
    if g in (GroupLabel.D, GroupLabel.BminusD) and n < 2:
        return range(0)
    return range(0, n)


def value_at_zero(s: SignedPermutation, g: GroupLabel) -> int | None:
    """sigma(0) under the type convention; None when index 0 is not a generator."""
    if g is GroupLabel.A:
        return None
    if g is GroupLabel.B:
        return 0
    if s.n < 2:
        return None
    return -s.window[1]


def ascends_at(s: SignedPermutation, i: int, g: GroupLabel) -> bool:
    """sigma(i) < sigma(i+1) with the type-specific sigma(0)."""
    if i == 0:
        z = value_at_zero(s, g)
        return True if z is None else z < s.window[0]
    return s.window[i - 1] < s.window[i]


def descent_set(s: SignedPermutation, g: GroupLabel) -> IndexSet:
    check_member(s, g)
    return IndexSet.of(s.n, (i for i in generator_indices(s.n, g) if not ascends_at(s, i, g)))


def right_mult_generator(s: SignedPermutation, i: int, g: GroupLabel) -> SignedPermutation:
    w = list(s.window)
    if i >= 1:
        w[i - 1], w[i] = w[i], w[i - 1]
    elif g is GroupLabel.B:
        w[0] = -w[0]
    else:
        w[0], w[1] = -w[1], -w[0]
    return SignedPermutation(tuple(w))


def parabolic_factorize(
    s: SignedPermutation, J: IndexSet | Sequence[int], g: GroupLabel
) -> tuple[SignedPermutation, SignedPermutation]:
    """Split s = s^J * s_J with s^J free of descents in J.

    Greedily strips descents in J from the right; each step lowers the length
    by one so the loop terminates after length(s_J) steps.
    """
    check_member(s, g)
    members = set(J)
    allowed = set(generator_indices(s.n, g))
    if not members <= allowed:
        raise MembershipError(f"index set {sorted(members)} not inside the generators of type {g.value}")
    top, bottom = s, identity(s.n)
    while True:
        d = [i for i in sorted(members) if not ascends_at(top, i, g)]
        if not d:
            return top, bottom
        i = d[0]
        top = right_mult_generator(top, i, g)
        bottom = compose(generator(s.n, i, g), bottom)
