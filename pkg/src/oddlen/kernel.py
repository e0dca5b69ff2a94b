"""Bulk statistics over whole groups with numpy.

Elements are rows of an int8 window matrix. Enumeration order: absolute-value
permutations in lexicographic order (outer), then sign patterns in increasing
binary order with bit i set meaning window position i+1 is negative (inner).

The histogram sweep is split into tasks by the signed value in window
position 1. Tasks are independent and their results are integer arrays merged
by addition, so the merged histogram does not depend on how many workers ran
or in which order they finished.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import permutations

import numpy as np

from .perm import GroupLabel

WORKERS_ENV = "ODDLEN_WORKERS"


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        w = int(env)
        if w < 1:
            raise ValueError(f"{WORKERS_ENV} must be >= 1, got {w}")
        return w
    return os.cpu_count() or 1


@lru_cache(maxsize=16)
def abs_perms(n: int) -> np.ndarray:
    arr = np.array(list(permutations(range(1, n + 1))), dtype=np.int8)
    arr.setflags(write=False)
    return arr


def sign_patterns(n: int, g: GroupLabel) -> np.ndarray:
    """(k, n) array of +-1 in increasing binary order, filtered by group parity."""
    if g is GroupLabel.A:
        return np.ones((1, n), dtype=np.int8)
    bits = np.arange(1 << n, dtype=np.int64)
    neg = (bits[:, None] >> np.arange(n)) & 1
    if g is GroupLabel.D:
        neg = neg[neg.sum(1) % 2 == 0]
    elif g is GroupLabel.BminusD:
        neg = neg[neg.sum(1) % 2 == 1]
    return (1 - 2 * neg).astype(np.int8)


def build_windows(perms: np.ndarray, signs: np.ndarray) -> np.ndarray:
    """Every perm times every sign pattern, perms outer."""
    m, n = perms.shape
    k = signs.shape[0]
    return (perms[:, None, :] * signs[None, :, :]).reshape(m * k, n)


def max_length(n: int, g: GroupLabel) -> int:
    if g is GroupLabel.A:
        return n * (n - 1) // 2
    if g is GroupLabel.B:
        return n * n
    return n * (n - 1)


def window_stats(W: np.ndarray, g: GroupLabel) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(length, odd length, descent bitmask) for each row of W."""
    m, n = W.shape
    ell = np.zeros(m, dtype=np.int16)
    odd = np.zeros(m, dtype=np.int16)
    signed = g is not GroupLabel.A
    for i in range(n):
        wi = W[:, i]
        for j in range(i + 1, n):
            wj = W[:, j]
            gt = wi > wj
            ell += gt
            if (j - i) % 2:
                odd += gt
            if signed:
                ns = (wi.astype(np.int16) + wj) < 0
                ell += ns
                if (j - i) % 2:
                    odd += ns
    if g is GroupLabel.B:
        ell += (W < 0).sum(1, dtype=np.int16)
        odd += (W[:, ::2] < 0).sum(1, dtype=np.int16)

    mask = np.zeros(m, dtype=np.int32)
    for i in range(1, n):
        mask |= (W[:, i - 1] > W[:, i]).astype(np.int32) << i
    if g is GroupLabel.B:
        mask |= (W[:, 0] < 0).astype(np.int32)
    elif g in (GroupLabel.D, GroupLabel.BminusD) and n >= 2:
        mask |= (-W[:, 1].astype(np.int16) > W[:, 0]).astype(np.int32)
    return ell, odd, mask


@lru_cache(maxsize=8)
def group_table(n: int, g: GroupLabel) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """(windows, length, odd length, descent mask) for the whole group, in enumeration order."""
    W = build_windows(abs_perms(n), sign_patterns(n, g))
    ell, odd, mask = window_stats(W, g)
    for a in (W, ell, odd, mask):
        a.setflags(write=False)
    return W, ell, odd, mask


def first_position_tasks(n: int, g: GroupLabel) -> list[int]:
    """Signed values that window position 1 can take, ascending."""
    if g is GroupLabel.A:
        return list(range(1, n + 1))
    return [v for v in range(-n, n + 1) if v]


def _hist_shape(n: int, g: GroupLabel) -> tuple[int, int, int]:
    lm = max_length(n, g)
    return (1 << n, lm + 1, lm + 1)


def histogram_task(n: int, g: GroupLabel, first: int) -> np.ndarray:
    """Dense counts[descent mask, length, odd length] over elements with sigma(1) = first."""
    perms = abs_perms(n)
    block = perms.shape[0] // n
    v = abs(first)
    P = perms[(v - 1) * block : v * block]
    S = sign_patterns(n, g)
    S = S[S[:, 0] == (1 if first > 0 else -1)]
    shape = _hist_shape(n, g)
    if S.shape[0] == 0:
        return np.zeros(shape, dtype=np.int64)
    W = build_windows(P, S)
    ell, odd, mask = window_stats(W, g)
    key = (mask.astype(np.int64) * shape[1] + ell) * shape[2] + odd
    counts = np.bincount(key, minlength=shape[0] * shape[1] * shape[2])
    return counts.astype(np.int64).reshape(shape)


def _task(args):
    return histogram_task(*args)


def dense_histogram(n: int, g: GroupLabel, workers: int | None = None) -> np.ndarray:
    workers = default_workers() if workers is None else workers
    if workers < 1:
        raise ValueError("worker count must be >= 1")
    return _dense_histogram(n, g, workers)


@lru_cache(maxsize=16)
def _dense_histogram(n: int, g: GroupLabel, workers: int) -> np.ndarray:
    tasks = [(n, g, v) for v in first_position_tasks(n, g)]
    total = np.zeros(_hist_shape(n, g), dtype=np.int64)
    if workers == 1 or len(tasks) == 1:
        parts = map(_task, tasks)
        for part in parts:
            total += part
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as ex:
            # map preserves task order; the sum is order independent anyway
            for part in ex.map(_task, tasks):
                total += part
    total.setflags(write=False)
    return total


def subset_sums(h: np.ndarray, n: int) -> np.ndarray:
    """out[C] = sum of h[D] over D subset of C (zeta transform on axis 0)."""
    out = h.copy()
    for b in range(n):
        bit = 1 << b
        idx = np.arange(1 << n)
        hi = idx[(idx & bit) != 0]
        out[hi] += out[hi ^ bit]
    return out


@lru_cache(maxsize=16)
def _quotient_table(n: int, g: GroupLabel, workers: int) -> np.ndarray:
    t = subset_sums(dense_histogram(n, g, workers), n)
    t.setflags(write=False)
    return t


def quotient_counts(n: int, g: GroupLabel, I_mask: int, workers: int | None = None) -> np.ndarray:
    """counts[length, odd length] over elements with no descent in I."""
    workers = default_workers() if workers is None else workers
    full = (1 << n) - 1
    return _quotient_table(n, g, workers)[full & ~I_mask]
