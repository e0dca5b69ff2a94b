import numpy as np
import pytest

from oddlen import kernel
from oddlen.perm import GroupLabel, descent_set, length, odd_length
from oddlen.quotients import enumerate_group

GROUPS = list(GroupLabel)


@pytest.mark.parametrize("g", GROUPS)
@pytest.mark.parametrize("n", range(1, 6))
def test_table_matches_reference_per_element(n, g):
    W, ell, odd, mask = kernel.group_table(n, g)
    ref = list(enumerate_group(n, g))
    assert len(ref) == W.shape[0] == g.order(n)
    for row, s in enumerate(ref):
        assert tuple(int(v) for v in W[row]) == s.window
        assert ell[row] == length(s, g)
        assert odd[row] == odd_length(s, g)
        assert mask[row] == descent_set(s, g).mask


@pytest.mark.parametrize("g", GROUPS)
def test_task_split_covers_group(g):
    n = 4
    total = sum(kernel.histogram_task(n, g, v).sum() for v in kernel.first_position_tasks(n, g))
    assert total == g.order(n)


@pytest.mark.parametrize("g", [GroupLabel.B, GroupLabel.D])
def test_histogram_independent_of_worker_count(g):
    h1 = kernel.dense_histogram(5, g, 1)
    h2 = kernel.dense_histogram(5, g, 2)
    assert np.array_equal(h1, h2)


def test_subset_sums_against_direct_sum():
    rng = np.random.default_rng(7)
    n = 4
    h = rng.integers(0, 5, size=(1 << n, 3, 2))
    z = kernel.subset_sums(h, n)
    for C in range(1 << n):
        direct = sum(h[D] for D in range(1 << n) if D & ~C == 0)
        assert np.array_equal(z[C], direct)


def test_max_length_is_attained():
    for g in GROUPS:
        for n in range(2, 6):
            _, ell, _, _ = kernel.group_table(n, g)
            if g is GroupLabel.BminusD:
                assert ell.max() <= kernel.max_length(n, g)
            else:
                assert ell.max() == kernel.max_length(n, g)


def test_workers_env(monkeypatch):
    monkeypatch.setenv(kernel.WORKERS_ENV, "3")
    assert kernel.default_workers() == 3
