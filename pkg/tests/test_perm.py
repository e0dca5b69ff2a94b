from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oddlen.indexset import IndexSet, all_subsets
from oddlen.perm import (
    GroupLabel,
    MembershipError,
    compose,
    descent_set,
    generator,
    generator_indices,
    identity,
    in_group,
    inverse,
    length,
    length_B_halfcount,
    make_perm,
    odd_length,
    odd_length_B_halfcount,
    parabolic_factorize,
    right_mult_generator,
    stat_bundle,
)
from oddlen.quotients import enumerate_group

A, B, D, BD = GroupLabel.A, GroupLabel.B, GroupLabel.D, GroupLabel.BminusD
TAU = make_perm([-2, 4, 3, -1])
SIGMA = make_perm([2, -1, 5, -4, 3])


@st.composite
def signed_perms(draw, n=None):
    n = draw(st.integers(1, 6)) if n is None else n
    p = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return make_perm(-v if s else v for v, s in zip(p, signs))


def naive_counts(w):
    """Counts straight from the set-builder definitions (oracle for stat_bundle)."""
    n = len(w)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i < j]
    val = lambda i: w[i - 1]  # noqa: E731
    return dict(
        inv=len({(i, j) for i, j in pairs if val(i) > val(j)}),
        neg=len({i for i in range(1, n + 1) if val(i) < 0}),
        nsp=len({(i, j) for i, j in pairs if val(i) + val(j) < 0}),
        oinv=len({(i, j) for i, j in pairs if val(i) > val(j) and (i - j) % 2}),
        oneg=len({i for i in range(1, n + 1) if val(i) < 0 and i % 2}),
        onsp=len({(i, j) for i, j in pairs if val(i) + val(j) < 0 and (i - j) % 2}),
    )


# ---------------------------------------------------------------- construction

def test_make_perm_valid():
    assert TAU.n == 4
    assert TAU(-1) == 2 and TAU(0) == 0 and TAU(2) == 4
    assert make_perm([1, 2, 3]) == identity(3)


@pytest.mark.parametrize("bad", [[2, 2, -1], [0, 1], [1, 3], [], [1, -1]])
def test_make_perm_rejects(bad):
    with pytest.raises(ValueError):
        make_perm(bad)


def test_compose_examples():
    # sigma(tau(1)) = sigma(-1) = -2, sigma(tau(2)) = sigma(2) = 1
    assert compose(make_perm([2, 1]), make_perm([-1, 2])) == make_perm([-2, 1])
    assert compose(SIGMA, identity(5)) == SIGMA
    assert compose(make_perm([-1, 2]), make_perm([-1, 2])) == identity(2)
    with pytest.raises(ValueError):
        compose(identity(2), identity(3))


def test_inverse_examples():
    assert inverse(make_perm([2, 3, 1])) == make_perm([3, 1, 2])
    assert inverse(identity(4)) == identity(4)
    assert inverse(make_perm([-2, 1])) == make_perm([2, -1])


@given(signed_perms(n=5), signed_perms(n=5), signed_perms(n=5))
def test_group_axioms(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(a, inverse(a)) == identity(5) == compose(inverse(a), a)


@given(signed_perms())
def test_right_mult_matches_compose(s):
    for g in (B, D):
        for i in generator_indices(s.n, g):
            assert right_mult_generator(s, i, g) == compose(s, generator(s.n, i, g))


# ---------------------------------------------------------------- statistics

def test_stat_bundle_tau():
    st_ = stat_bundle(TAU)
    assert naive_counts(TAU.window) == st_.__dict__
    assert (st_.inv, st_.neg, st_.nsp, st_.oinv, st_.oneg, st_.onsp) == (3, 2, 1, 2, 1, 1)


def test_stat_bundle_sigma():
    st_ = stat_bundle(SIGMA)
    assert naive_counts(SIGMA.window) == st_.__dict__
    assert (st_.inv, st_.nsp, st_.oinv, st_.onsp) == (5, 3, 3, 2)


def test_stat_bundle_identity():
    assert set(stat_bundle(identity(6)).__dict__.values()) == {0}


@given(signed_perms())
def test_stat_bundle_matches_definitions(s):
    assert stat_bundle(s).__dict__ == naive_counts(s.window)


def test_lengths():
    assert length(TAU, B) == 6
    assert length(SIGMA, D) == 8
    for g in (A, B, D):
        assert length(identity(4), g) == 0
        assert odd_length(identity(4), g) == 0


def test_odd_lengths():
    assert odd_length(TAU, B) == 4
    assert odd_length(SIGMA, D) == 5


def test_membership_violations():
    with pytest.raises(MembershipError):
        length(TAU, A)
    with pytest.raises(MembershipError):
        odd_length(make_perm([-1, 2, 3]), D)
    with pytest.raises(MembershipError):
        descent_set(make_perm([1, 2]), BD)


def test_halfcount_examples():
    assert odd_length_B_halfcount(TAU) == 4
    assert odd_length_B_halfcount(identity(5)) == 0
    # oinv + oneg + onsp = 1 + 1 + 1; six parity-mixed inverted pairs on [-2, 2]
    assert odd_length_B_halfcount(make_perm([-1, -2])) == 3


def test_halfcount_tau_pairs():
    # the eight parity-mixed inverted pairs of tau on [-4, 4]
    n = 4
    pairs = {(i, j) for i in range(-n, n + 1) for j in range(-n, n + 1)
             if i < j and TAU(i) > TAU(j) and (i - j) % 2}
    assert pairs == {(-4, -3), (-4, 1), (-3, -2), (-1, 0), (-1, 4), (0, 1), (2, 3), (3, 4)}


@pytest.mark.parametrize("n", range(1, 7))
def test_halfcount_equivalences_exhaustive(n):
    for s in enumerate_group(n, B):
        st_ = stat_bundle(s)
        assert odd_length_B_halfcount(s) == st_.oinv + st_.oneg + st_.onsp
        assert length_B_halfcount(s) == st_.inv + st_.neg + st_.nsp


@pytest.mark.parametrize("n", range(1, 7))
def test_type_d_odd_length_is_b_minus_oneg(n):
    for s in enumerate_group(n, D):
        assert odd_length(s, D) == odd_length(s, B) - stat_bundle(s).oneg


def test_a_statistics_agree_with_b_and_d_on_sn():
    for s in enumerate_group(5, A):
        assert odd_length(s, A) == odd_length(s, B) == odd_length(s, D)
        assert length(s, A) == length(s, B) == length(s, D)


# ---------------------------------------------------------------- descents

def test_descent_examples():
    assert descent_set(SIGMA, D) == IndexSet.of(5, [1, 3])
    assert descent_set(identity(5), D) == IndexSet(5)
    assert descent_set(make_perm([-1, 2, 3]), B) == IndexSet.of(3, [0])


@pytest.mark.parametrize("g", [A, B, D])
@pytest.mark.parametrize("n", range(1, 6))
def test_descent_iff_length_drops(g, n):
    for s in enumerate_group(n, g):
        D_ = descent_set(s, g)
        for i in generator_indices(n, g):
            dropped = length(right_mult_generator(s, i, g), g) < length(s, g)
            assert (i in D_) == dropped


# ---------------------------------------------------------------- prepend / append

@pytest.mark.parametrize("n", range(2, 7))
def test_prepend_append_increments(n):
    m = n // 2
    for s in enumerate_group(n - 1, B):
        L, ell = odd_length(s, B) - stat_bundle(s).oneg, stat_bundle(s).inv + stat_bundle(s).nsp
        for w, dL, dl in (
            ([n, *s.window], m, n - 1),
            ([-n, *s.window], m, n - 1),
            ([*s.window, -n], 2 * m, 2 * (n - 1)),
        ):
            t = make_perm(w)
            g = D if in_group(t, D) else BD
            assert odd_length(t, g) == L + dL
            assert length(t, g) == ell + dl


# ---------------------------------------------------------------- parabolic

def subgroup(n, J, g):
    gens = [generator(n, j, g) for j in J]
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                u = compose(w, s)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return seen


def test_parabolic_examples():
    top, bot = parabolic_factorize(make_perm([3, 2, 1]), [1], A)
    assert (top, bot) == (make_perm([2, 3, 1]), generator(3, 1, A))
    assert (length(make_perm([3, 2, 1]), A), length(top, A), length(bot, A)) == (3, 2, 1)
    for g in (A, B, D):
        assert parabolic_factorize(identity(4), [1, 2], g) == (identity(4), identity(4))
    top, bot = parabolic_factorize(make_perm([-2, -1]), [0], B)
    assert (top, bot) == (make_perm([2, -1]), generator(2, 0, B))
    assert (length(make_perm([-2, -1]), B), length(top, B), length(bot, B)) == (3, 2, 1)


def test_parabolic_rejects_bad_index_set():
    with pytest.raises(MembershipError):
        parabolic_factorize(identity(3), [0], A)


@pytest.mark.parametrize("g", [A, B, D])
@pytest.mark.parametrize("n", range(2, 5))
def test_parabolic_factorization_exhaustive(g, n):
    lo = 1 if g is A else 0
    for J in all_subsets(n, lo):
        WJ = subgroup(n, J, g)
        for w in enumerate_group(n, g):
            top, bot = parabolic_factorize(w, J, g)
            assert compose(top, bot) == w
            assert bot in WJ
            assert descent_set(top, g).isdisjoint(J)
            assert length(w, g) == length(top, g) + length(bot, g)


@pytest.mark.parametrize("g", [A, B, D])
@pytest.mark.parametrize("n", range(2, 6))
def test_quotient_times_subgroup_is_group_order(g, n):
    lo = 1 if g is A else 0
    descents = [descent_set(w, g).mask for w in enumerate_group(n, g)]
    assert len(descents) == g.order(n)
    for J in all_subsets(n, lo):
        q = sum(1 for d in descents if not d & J.mask)
        assert q * len(subgroup(n, J, g)) == g.order(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_full_window_inversions_with_zero(n):
    # counting with index 0 adds pairs (0, j) and (-j, 0) for each negative entry,
    # so the plain half count overshoots the length by neg / 2
    from oddlen.perm import inversions_full

    for s in enumerate_group(n, B):
        st_ = stat_bundle(s)
        assert inversions_full(s, include_zero=True) == 2 * st_.inv + 2 * st_.nsp + 3 * st_.neg
        assert inversions_full(s) == 2 * st_.inv + 2 * st_.nsp + st_.neg
