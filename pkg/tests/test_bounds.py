"""Closed-form bounds, the exact rational certificate, and the Monte Carlo
cross-checks. Expected values were computed independently ahead of time and
are frozen here; all certificate decisions are exact rational arithmetic."""

from fractions import Fraction
from math import comb, sqrt

import pytest
from hypothesis import given, settings, strategies as st

from harmcolor import (
    BoundInputs,
    bad_edge_prob_bound,
    bad_edge_prob_exact,
    lcl_condition,
    lcl_min_colors,
    lower_bound_colors,
    monte_carlo_event_probs,
    pattern_prob_bound,
    remark_bound,
    tau_grid_search,
    theorem_bound,
    theorem_ceil_colors,
)


# ------------------------------------------------------------- input guards

def test_input_validation():
    for bad in [dict(k=1, delta=1, m=1), dict(k=2, delta=0, m=1),
                dict(k=2, delta=1, m=0), dict(k=2, delta=1, m=1, eps=-0.1)]:
        with pytest.raises(ValueError):
            BoundInputs(**bad)
    with pytest.raises(ValueError):
        lcl_condition(2, 1, 1, t=0)
    with pytest.raises(ValueError):
        lcl_condition(2, 1, 1, t=10, tau=Fraction(1, 2))
    with pytest.raises(ValueError):
        lcl_min_colors(2, 1, 1, tau=Fraction(1))  # needs tau > 1


# ------------------------------------------------------------ closed forms

def test_theorem_bound_frozen_values():
    assert theorem_bound(2, 1, 8, 0.0) == 8.0  # exact: 2 * sqrt(16)
    assert theorem_bound(3, 1, 18, 0.0) == 9.0  # exact: 1.5 * cbrt(216)
    assert theorem_bound(3, 2, 18, 0.0) == pytest.approx(
        11.33928944905386, rel=1e-12)
    assert theorem_bound(2, 3, 1000, 0.1) == pytest.approx(
        170.4112672331263, rel=1e-12)


def test_remark_bound_frozen_values():
    assert remark_bound(2, 1, 8) == 11.0  # 8 + 1 + 1 + 1, empty sum for k=2
    assert remark_bound(3, 1, 36) == pytest.approx(19.33928944905386, rel=1e-12)


def test_remark_dominates_theorem():
    for k in (2, 3, 4):
        for delta in (1, 2, 5):
            for m in (1, 10, 1000):
                assert remark_bound(k, delta, m) > theorem_bound(k, delta, m)


def test_theorem_ceil_is_the_ceiling():
    for k, delta, m, eps in [(2, 1, 8, 0.0), (3, 2, 18, 0.0), (2, 2, 10**6, 0.1),
                             (4, 3, 10**6, 0.1), (2, 3, 1000, 0.1)]:
        t = theorem_ceil_colors(k, delta, m, eps)
        v = theorem_bound(k, delta, m, eps)
        assert t - 1 < v <= t


def test_theorem_bound_monotone():
    for m1, m2 in [(10, 20), (100, 101)]:
        assert theorem_bound(3, 2, m1) < theorem_bound(3, 2, m2)
    assert theorem_bound(3, 1, 100) < theorem_bound(3, 2, 100)
    assert theorem_bound(3, 2, 100, 0.0) < theorem_bound(3, 2, 100, 0.2)


def test_lower_bound_frozen_values():
    assert lower_bound_colors(3, 1) == 3
    assert lower_bound_colors(2, 3) == 3
    assert lower_bound_colors(2, 7) == 5
    assert lower_bound_colors(2, 8) == 5
    assert lower_bound_colors(2, 10) == 5


@given(st.integers(2, 5), st.integers(1, 5000))
@settings(max_examples=80)
def test_lower_bound_is_tight(k, m):
    r = lower_bound_colors(k, m)
    assert r >= k and comb(r, k) >= m
    if r > k:
        assert comb(r - 1, k) < m


# ---------------------------------------------------------- event bounds

def test_bad_edge_prob_exact_frozen():
    assert bad_edge_prob_exact(2, 2) == Fraction(1, 2)
    assert bad_edge_prob_exact(3, 3) == Fraction(7, 9)
    assert bad_edge_prob_exact(3, 2) == Fraction(1)  # t < k forces a repeat
    assert bad_edge_prob_exact(3, 10) == Fraction(7, 25)


def test_bad_edge_prob_dominance_chain():
    # exact <= k(k-1)/(2t) <= k^2/t on the whole grid
    for k in range(2, 9):
        for t in range(1, 101):
            exact = bad_edge_prob_exact(k, t)
            mid = Fraction(k * (k - 1), 2 * t)
            assert exact <= mid <= bad_edge_prob_bound(k, t)


def test_pattern_prob_bound():
    assert pattern_prob_bound(1, 141) == Fraction(1, 141)
    assert pattern_prob_bound(2, 141) == Fraction(2, 19881)
    assert pattern_prob_bound(3, 141) == Fraction(6, 141**3)


# ------------------------------------------------------------- certificate

def test_lcl_condition_frozen_fractions():
    res = lcl_condition(2, 1, 1, t=30)
    assert res.holds is True and res.slack == Fraction(73, 225)
    res = lcl_condition(2, 1, 1, t=10)
    assert res.holds is False and res.slack == Fraction(-27, 25)


def test_lcl_condition_slack_is_monotone_in_t():
    previous = None
    for t in range(5, 200, 7):
        slack = lcl_condition(3, 2, 50, t).slack
        if previous is not None:
            assert slack > previous
        previous = slack


LCL_MIN_FROZEN = {
    (2, 1, 1): 21,
    (2, 2, 15): 53,
    (2, 3, 100): 107,
    (3, 1, 15): 66,
    (3, 2, 15): 141,
    (3, 3, 15): 224,
    (4, 2, 50): 326,
}


@pytest.mark.parametrize("key, expected", sorted(LCL_MIN_FROZEN.items()))
def test_lcl_min_colors_frozen(key, expected):
    k, delta, m = key
    t = lcl_min_colors(k, delta, m)
    assert t == expected
    assert lcl_condition(k, delta, m, t).holds
    assert not lcl_condition(k, delta, m, t - 1).holds


@given(st.integers(2, 4), st.integers(1, 4), st.integers(1, 500))
@settings(max_examples=40, deadline=None)
def test_lcl_min_is_minimal(k, delta, m):
    t = lcl_min_colors(k, delta, m)
    assert lcl_condition(k, delta, m, t).holds
    if t > 1:
        assert not lcl_condition(k, delta, m, t - 1).holds


def test_tau_grid_search_beats_the_default():
    tau, t = tau_grid_search(3, 2, 15, denominator=32)
    assert (tau, t) == (Fraction(49, 32), 140)
    assert lcl_min_colors(3, 2, 15) == 141  # default tau = 3/2 needs one more


# ----------------------------------------- certificate at the theorem scale

GRID_AT_MILLION = {
    # (k, delta) -> (t at eps=0.1, holds, slack as float)
    (2, 1): (3112, True, 0.16751475340501318),
    (2, 2): (4400, True, 0.16264462809917354),
    (2, 3): (5389, True, 0.1580040040189632),
    (3, 1): (378, True, 0.03866648070162809),
    (3, 2): (476, False, -0.022292888979615573),
    (3, 3): (545, False, -0.0800480259515424),
    (4, 1): (136, False, -0.2736913507817432),
    (4, 2): (161, False, -0.5659433717915414),
    (4, 3): (178, False, -0.8376100247524955),
}


@pytest.mark.parametrize("cell, expected", sorted(GRID_AT_MILLION.items()))
def test_certificate_at_theorem_palette_m_one_million(cell, expected):
    # The asymptotic palette only certifies once m is large enough; at m = 1e6
    # the k=2 column and (3,1) already work, the rest genuinely do not yet.
    k, delta = cell
    want_t, want_holds, want_slack = expected
    t = theorem_ceil_colors(k, delta, 10**6, 0.1)
    assert t == want_t
    res = lcl_condition(k, delta, 10**6, t)
    assert res.holds is want_holds
    assert float(res.slack) == pytest.approx(want_slack, rel=1e-9)


FIRST_CERTIFYING_M = {
    # eps = 0.1 throughout; the step where the theorem palette starts to certify
    (3, 2): 1_611_535,
    (3, 3): 4_403_521,
    (4, 1): 175_874_238,
    (4, 2): 1_618_111_919,
    (4, 3): 6_266_809_289,
}


@pytest.mark.parametrize("cell, m_star", sorted(FIRST_CERTIFYING_M.items()))
def test_first_certifying_m_boundaries(cell, m_star):
    k, delta = cell
    for m, want in [(m_star - 1, False), (m_star, True)]:
        t = theorem_ceil_colors(k, delta, m, 0.1)
        assert lcl_condition(k, delta, m, t).holds is want


DECADE_FIRST_HOLD = {
    # (k, delta, eps) -> first m in 10^1..10^8 where the theorem palette certifies
    (2, 1, 0.1): 10**4,
    (2, 2, 0.1): 10**4,
    (3, 1, 0.1): 10**6,
    (3, 2, 0.5): 10**5,
    (4, 1, 0.5): 10**7,
    (4, 2, 1.0): 10**7,
}


@pytest.mark.parametrize("key, first_m", sorted(DECADE_FIRST_HOLD.items()))
def test_decade_grid_first_hold(key, first_m):
    k, delta, eps = key
    held = [m for m in (10**p for p in range(1, 9))
            if lcl_condition(k, delta, m, theorem_ceil_colors(k, delta, m, eps)).holds]
    assert held and held[0] == first_m
    # once it certifies it stays certified on the rest of the decade grid
    assert held == [m for m in (10**p for p in range(1, 9)) if m >= first_m]


# ------------------------------------------------------------- Monte Carlo

MC_ROWS = [
    # k, i, t
    (2, 1, 2),
    (3, 2, 3),
    (3, 2, 10),
    (4, 3, 8),
    (2, 1, 5),
]


@pytest.mark.parametrize("k, i, t", MC_ROWS)
def test_monte_carlo_matches_exact_within_4_sigma(k, i, t):
    trials = 100_000
    bad_est, pattern_est = monte_carlo_event_probs(k, i, t, trials, seed=20_240 + k)
    p = float(bad_edge_prob_exact(k, t))
    tol_bad = 4.0 * sqrt(p * (1.0 - p) / trials) or 1e-12
    assert abs(bad_est - p) <= tol_bad
    # given the first i-set is rainbow, the collision probability is exactly i!/t^i
    q = float(pattern_prob_bound(i, t))
    rainbow = 1.0
    for j in range(i):
        rainbow *= (t - j) / t
    n_eff = trials * rainbow
    tol_pattern = 4.0 * sqrt(q * (1.0 - q) / n_eff)
    assert abs(pattern_est - q) <= tol_pattern


def test_monte_carlo_degenerate_palette():
    bad_est, pattern_est = monte_carlo_event_probs(3, 2, 1, 500, seed=1)
    assert bad_est == 1.0  # one color cannot make a 3-edge rainbow
    assert pattern_est == 0.0  # the rainbow condition never occurs


def test_monte_carlo_is_seeded():
    a = monte_carlo_event_probs(3, 2, 5, 2000, seed=9)
    assert a == monte_carlo_event_probs(3, 2, 5, 2000, seed=9)
    assert a != monte_carlo_event_probs(3, 2, 5, 2000, seed=10)


# ---------------------------------------------- documented formula defects

def test_asymptotic_palette_does_not_certify_k4_at_one_million():
    # worked "holds" example elsewhere notwithstanding, the exact certificate
    # fails by a wide margin at this scale; see the m* table above
    t = theorem_ceil_colors(4, 2, 10**6, 0.1)
    res = lcl_condition(4, 2, 10**6, t)
    assert res.holds is False
    assert float(res.slack) == pytest.approx(-0.5659433717915414, rel=1e-9)
