"""Scalar bound catalogue: frozen examples, oracle agreement, properties."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meanbounds.scalar import (
    BoundPair,
    ScalarPair,
    all_bounds,
    cascade,
    eval_refined_lower,
    eval_refined_upper,
    exponents,
    geo_mean,
    heinz_mean,
    heinz_refined,
    kantorovich,
    refined_lower,
    refined_upper,
    scalar_baselines,
    squared_bounds,
    young_means,
)

import oracle

positive = st.floats(min_value=1e-6, max_value=1e6, allow_nan=False)
weights = st.floats(min_value=1e-6, max_value=1.0 - 1e-6, allow_nan=False)


# ---------------------------------------------------------------------------
# kantorovich
# ---------------------------------------------------------------------------

def test_kantorovich_examples():
    assert kantorovich(1.0) == 1.0
    assert kantorovich(2.0) == 1.125
    assert kantorovich(0.5) == 1.125


@pytest.mark.parametrize("bad", [0.0, -1.0, float("inf"), float("nan")])
def test_kantorovich_domain(bad):
    with pytest.raises(ValueError):
        kantorovich(bad)


@given(positive)
def test_kantorovich_at_least_one_and_symmetric(t):
    k = kantorovich(t)
    assert k >= 1.0
    assert math.isclose(k, kantorovich(1.0 / t), rel_tol=1e-12)


def test_kantorovich_monotone_on_sorted_grid():
    rng = np.random.default_rng(5)
    t = np.sort(np.exp(rng.uniform(0.0, np.log(1e6), 500)))
    k = kantorovich(t)
    assert np.all(np.diff(k) >= 0.0)


# ---------------------------------------------------------------------------
# exponents
# ---------------------------------------------------------------------------

def test_exponent_examples():
    w = exponents(0.5)
    assert (w.r, w.big_r, w.r1, w.rhat1) == (0.5, 0.5, 0.0, 0.0)
    w = exponents(0.25)
    assert (w.r, w.big_r, w.r1, w.rhat1) == (0.25, 0.75, 0.5, 0.0)
    w = exponents(0.1)
    assert np.allclose((w.r, w.big_r, w.r1, w.rhat1), (0.1, 0.9, 0.2, 0.4), rtol=1e-15)


@pytest.mark.parametrize("bad", [0.0, 1.0, -0.2, 1.4, float("nan")])
def test_exponents_domain(bad):
    with pytest.raises(ValueError):
        exponents(bad)


@given(weights)
def test_cascade_invariants(v):
    r, big_r, r1, rhat1 = cascade(v)
    assert math.isclose(r + big_r, 1.0, rel_tol=1e-15)
    assert 0.0 <= r1 <= 0.5
    assert 0.0 <= rhat1 <= 0.5


def test_cascade_vanishes_exactly_at_quarter_points():
    for v in (0.25, 0.5, 0.75):
        assert exponents(v).rhat1 == 0.0
    for v in (0.1, 0.2, 0.3, 0.4, 0.6, 0.9):
        assert exponents(v).rhat1 > 0.0


# ---------------------------------------------------------------------------
# means
# ---------------------------------------------------------------------------

def test_young_means_examples():
    m = young_means(ScalarPair(3, 3), 0.3)
    for value in (m.arith, m.geo, m.heinz):
        assert math.isclose(value, 3.0, rel_tol=1e-15)
    m = young_means(ScalarPair(1, 16), 0.5)
    assert (m.arith, m.geo, m.heinz) == (8.5, 4.0, 4.0)
    m = young_means(ScalarPair(1, 4), 2.0)  # reverse regime
    assert m.arith == 7.0
    assert math.isclose(m.geo, 16.0, rel_tol=1e-14)
    assert m.arith <= m.geo


@given(positive, positive, weights)
def test_mean_ordering(a, b, v):
    m = young_means(ScalarPair(a, b), v)
    scale = max(m.arith, 1.0)
    assert m.arith - m.geo >= -1e-12 * scale
    # Heinz interpolates between sqrt(ab) and the midpoint
    assert m.heinz - math.sqrt(a) * math.sqrt(b) >= -1e-12 * scale
    assert 0.5 * (a + b) - m.heinz >= -1e-12 * scale


@given(positive, positive, weights)
def test_heinz_symmetric_in_v(a, b, v):
    p = ScalarPair(a, b)
    h1 = young_means(p, v).heinz
    h2 = young_means(p, 1.0 - v).heinz
    assert math.isclose(h1, h2, rel_tol=1e-12)


def test_pair_validation():
    with pytest.raises(ValueError):
        ScalarPair(0.0, 1.0)
    with pytest.raises(ValueError):
        ScalarPair(1.0, float("inf"))
    assert ScalarPair(2.0, 3.0).h == 1.5


# ---------------------------------------------------------------------------
# frozen examples (oracle-confirmed values)
# ---------------------------------------------------------------------------

def test_baselines_trivial_equality():
    for name, bs in scalar_baselines(ScalarPair(2, 2), 0.3).items():
        assert abs(bs.slack) < 1e-14, name


def test_baseline_threeterm_example():
    bs = scalar_baselines(ScalarPair(1, 16), 0.1)["threeterm_lower"]
    assert bs.lhs == 2.5
    assert oracle.agrees(bs.rhs, oracle.threeterm_lower_rhs(1, 16, "0.1"))
    assert math.isclose(bs.rhs, 2.4195079107, rel_tol=1e-9)


def test_baseline_gap_example():
    bs = scalar_baselines(ScalarPair(1, 16), 0.25)["gap_lower"]
    assert bs.lhs == 4.75
    assert math.isclose(bs.slack, 0.5, rel_tol=1e-13)


def test_refined_lower_examples():
    assert refined_lower(ScalarPair(5, 5), 0.3).slack == pytest.approx(0.0, abs=1e-14)

    bs = refined_lower(ScalarPair(1, 16), 0.25)
    assert bs.rhs == pytest.approx(4.75, abs=1e-13)
    assert bs.terms == {"weighted_gap": 2.25, "quarter_refinement": 0.5,
                        "kantorovich_geometric": 2.0}

    bs = refined_lower(ScalarPair(1, 16), 0.1)
    assert oracle.agrees(bs.rhs, oracle.refined_lower_rhs(1, 16, "0.1"))
    assert math.isclose(bs.rhs, 2.4831618672, rel_tol=1e-9)
    assert bs.slack > 0

    bs = refined_lower(ScalarPair(1, 16), 0.75)
    assert bs.branch == "high"
    assert bs.rhs == pytest.approx(12.25, abs=1e-12)
    assert bs.lhs == 12.25


def test_refined_upper_examples():
    assert refined_upper(ScalarPair(7, 7), 0.4).slack == pytest.approx(0.0, abs=1e-14)

    bs = refined_upper(ScalarPair(1, 16), 0.5)
    assert bs.rhs == pytest.approx(8.5, abs=1e-12)
    assert bs.lhs == 8.5

    bs = refined_upper(ScalarPair(1, 16), 0.1)
    assert oracle.agrees(bs.rhs, oracle.refined_upper_rhs(1, 16, "0.1"))
    assert math.isclose(bs.rhs, 8.5587833484, rel_tol=1e-9)


def test_heinz_refined_examples():
    bp = heinz_refined(ScalarPair(4, 4), 0.3)
    assert bp.lower.lhs == bp.lower.rhs == 4.0
    assert bp.upper.rhs == pytest.approx(4.0, abs=1e-14)

    bp = heinz_refined(ScalarPair(1, 16), 0.25)
    assert bp.lower.lhs == 8.5
    assert bp.lower.rhs == pytest.approx(8.5, abs=1e-12)   # equality case
    assert bp.upper.rhs == pytest.approx(10.5, abs=1e-12)
    assert oracle.agrees(bp.lower.rhs, oracle.heinz_lower_rhs(1, 16, "0.25"))


def test_squared_examples():
    bp = squared_bounds(ScalarPair(3, 3), 0.2)
    assert bp.lower.lhs == pytest.approx(9.0, rel=1e-15)
    assert bp.lower.rhs == pytest.approx(9.0, rel=1e-15)

    bp = squared_bounds(ScalarPair(1, 16), 0.25)
    assert bp.lower.lhs == 22.5625
    assert bp.lower.terms["weighted_diff_sq"] == pytest.approx(14.0625, abs=1e-12)
    assert bp.lower.terms["half_refinement"] == pytest.approx(4.5, abs=1e-12)
    assert bp.lower.terms["kantorovich_geometric_sq"] == pytest.approx(4.0, abs=1e-12)
    assert bp.lower.slack == pytest.approx(0.0, abs=1e-11)

    bp = squared_bounds(ScalarPair(1, 16), 0.1)
    lhs, rhs = oracle.squared_lower(1, 16, "0.1")
    assert bp.lower.lhs == pytest.approx(float(lhs), rel=1e-14)
    assert oracle.agrees(bp.lower.rhs, rhs)
    assert math.isclose(bp.lower.rhs, 6.1313830187, rel_tol=1e-9)


# ---------------------------------------------------------------------------
# oracle agreement on random instances
# ---------------------------------------------------------------------------

def test_all_bounds_agree_with_multiprecision_oracle():
    rng = np.random.default_rng(42)
    for _ in range(40):
        a = float(np.exp(rng.uniform(np.log(1e-6), np.log(1e6))))
        b = float(np.exp(rng.uniform(np.log(1e-6), np.log(1e6))))
        v = float(rng.uniform(0.01, 0.99))
        bounds = all_bounds(ScalarPair(a, b), v)
        for name, fn in oracle.RHS_ORACLES.items():
            assert oracle.agrees(bounds[name].rhs, fn(a, b, v), rel=1e-12), (name, a, b, v)
        lhs, rhs = oracle.squared_lower(a, b, v)
        assert oracle.agrees(bounds["squared_lower"].rhs, rhs, rel=1e-12)
        lhs, rhs = oracle.squared_upper(a, b, v)
        assert oracle.agrees(bounds["squared_upper"].rhs, rhs, rel=1e-12)


# ---------------------------------------------------------------------------
# structural properties
# ---------------------------------------------------------------------------

@given(positive, positive, weights)
@settings(max_examples=200)
def test_every_bound_holds(a, b, v):
    for name, bs in all_bounds(ScalarPair(a, b), v).items():
        assert bs.holds(), (name, a, b, v, bs.rel_slack)


def test_terms_sum_to_rhs():
    bounds = all_bounds(ScalarPair(0.3, 700.0), 0.37)
    for bs in bounds.values():
        total = 0.0
        for t in bs.terms.values():
            total += t
        assert total == bs.rhs


def test_branch_continuity_at_half():
    # both branch forms agree exactly at v = 1/2
    a, b = 0.7, 1234.5
    for kernel in (eval_refined_lower, eval_refined_upper):
        lhs_lo, terms_lo = kernel(a, b, 0.5, low_mask=np.asarray(True))
        lhs_hi, terms_hi = kernel(a, b, 0.5, low_mask=np.asarray(False))
        assert float(lhs_lo) == float(lhs_hi)
        for key in terms_lo:
            assert float(terms_lo[key]) == float(terms_hi[key]), key


@given(positive, positive, weights, st.integers(min_value=-12, max_value=12))
@settings(max_examples=100)
def test_scale_invariance(a, b, v, k):
    lam = 2.0 ** k
    base = all_bounds(ScalarPair(a, b), v)
    scaled = all_bounds(ScalarPair(lam * a, lam * b), v)
    for name in base:
        factor = lam * lam if name.startswith("squared") else lam
        assert math.isclose(scaled[name].slack, factor * base[name].slack,
                            rel_tol=1e-11, abs_tol=1e-11 * factor * base[name].scale), name


def test_equality_cases():
    rng = np.random.default_rng(9)
    for _ in range(50):
        a = float(np.exp(rng.uniform(np.log(1e-4), np.log(1e4))))
        b = float(np.exp(rng.uniform(np.log(1e-4), np.log(1e4))))
        p = ScalarPair(a, b)
        # 0.25 and 0.5 are the stated branch-I equality points; 0.75 is the
        # branch-II analogue, verified numerically
        for v in (0.25, 0.5, 0.75):
            assert abs(refined_lower(p, v).rel_slack) <= 1e-12, (a, b, v)
        assert abs(refined_upper(p, 0.5).rel_slack) <= 1e-12


def test_strict_slack_away_from_equality_points():
    rng = np.random.default_rng(10)
    for _ in range(50):
        a = float(np.exp(rng.uniform(np.log(1e-3), np.log(1e3))))
        b = a * float(np.exp(rng.uniform(np.log(2.0), np.log(50.0))))
        p = ScalarPair(a, b)
        for v in (0.1, 0.35, 0.65, 0.9):
            assert refined_lower(p, v).rel_slack > 1e-12
        for v in (0.1, 0.35, 0.65, 0.9):
            assert refined_upper(p, v).rel_slack > 1e-12


def test_dominance_over_threeterm_baselines():
    rng = np.random.default_rng(11)
    for _ in range(200):
        a = float(np.exp(rng.uniform(np.log(1e-6), np.log(1e6))))
        b = float(np.exp(rng.uniform(np.log(1e-6), np.log(1e6))))
        v = float(rng.uniform(0.001, 0.999))
        bounds = all_bounds(ScalarPair(a, b), v)
        assert bounds["refined_lower"].rhs >= bounds["threeterm_lower"].rhs
        assert bounds["refined_upper"].rhs <= bounds["threeterm_upper"].rhs
    # at v = 1/2 the margins vanish exactly
    bounds = all_bounds(ScalarPair(0.37, 91.0), 0.5)
    assert bounds["refined_lower"].rhs == bounds["threeterm_lower"].rhs
    assert bounds["refined_upper"].rhs == bounds["threeterm_upper"].rhs
    # anchored improvement value (oracle-confirmed)
    bounds = all_bounds(ScalarPair(1, 16), 0.1)
    margin = bounds["refined_lower"].rhs - bounds["threeterm_lower"].rhs
    expected = oracle.refined_lower_rhs(1, 16, "0.1") - oracle.threeterm_lower_rhs(1, 16, "0.1")
    assert oracle.agrees(margin, expected, rel=1e-12)
    assert math.isclose(margin, 0.0636540, rel_tol=1e-5)


def test_geo_mean_matches_exp_log_form():
    a, b, v = 1e6, 1e-6, 0.37
    assert math.isclose(float(geo_mean(a, b, v)),
                        math.exp((1 - v) * math.log(a) + v * math.log(b)),
                        rel_tol=1e-15)
    assert math.isclose(float(heinz_mean(2.0, 8.0, 0.5)), 4.0, rel_tol=1e-14)


def test_bound_pair_types():
    bp = squared_bounds(ScalarPair(1, 2), 0.3)
    assert isinstance(bp, BoundPair)
    assert bp.lower.kind == "lower" and bp.upper.kind == "upper"
