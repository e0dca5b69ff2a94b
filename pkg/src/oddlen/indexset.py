"""Subsets of [0, n-1] stored as bitmasks (bit i <-> index i)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class IndexSet:
    n: int
    mask: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"rank must be positive, got {self.n}")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#b} has members outside [0, {self.n - 1}]")

    @classmethod
    def of(cls, n: int, members: Iterable[int] = ()) -> IndexSet:
        mask = 0
        for i in members:
            i = int(i)
            if not 0 <= i < n:
                raise ValueError(f"index {i} outside [0, {n - 1}]")
            mask |= 1 << i
        return cls(n, mask)

    @classmethod
    def parse(cls, n: int, text: str) -> IndexSet:
        """Comma-separated integers; the empty string is the empty set."""
        text = text.strip()
        if not text:
            return cls(n, 0)
        try:
            items = [int(t) for t in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed index set {text!r}") from None
        return cls.of(n, items)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.mask >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.n and bool(self.mask >> i & 1)

    def __or__(self, other: IndexSet) -> IndexSet:
        return IndexSet(self.n, self.mask | self._mask_of(other))

    def __and__(self, other: IndexSet) -> IndexSet:
        return IndexSet(self.n, self.mask & self._mask_of(other))

    def __sub__(self, other: IndexSet) -> IndexSet:
        return IndexSet(self.n, self.mask & ~self._mask_of(other))

    def _mask_of(self, other: IndexSet) -> int:
        if other.n != self.n:
            raise ValueError(f"rank mismatch {self.n} != {other.n}")
        return other.mask

    def with_(self, *items: int) -> IndexSet:
        return self | IndexSet.of(self.n, items)

    def without(self, *items: int) -> IndexSet:
        return self - IndexSet.of(self.n, items)

    def isdisjoint(self, other: IndexSet) -> bool:
        return not self.mask & self._mask_of(other)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"

    def cli_form(self) -> str:
        return ",".join(map(str, self.members))


def all_subsets(n: int, lo: int = 0, hi: int | None = None) -> Iterator[IndexSet]:
    """Every subset of [lo, hi] (default [0, n-1]) in ascending bitmask order."""
    hi = n - 1 if hi is None else hi
    idx = list(range(lo, hi + 1))
    for bits in range(1 << len(idx)):
        yield IndexSet.of(n, (idx[k] for k in range(len(idx)) if bits >> k & 1))


def components(J: IndexSet) -> list[tuple[int, int]]:
    """Maximal intervals [a, b] of J, ascending."""
    out: list[tuple[int, int]] = []
    for i in J.members:
        if out and out[-1][1] == i - 1:
            out[-1] = (out[-1][0], i)
        else:
            out.append((i, i))
    return out
