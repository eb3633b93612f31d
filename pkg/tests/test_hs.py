"""Hilbert-Schmidt norm bounds: norms, pairwise constants, chains, reductions."""

import math

import numpy as np
import pytest

from meanbounds.errors import ShapeError
from meanbounds.hs import (
    HS_CHAIN_LABELS,
    hs_chain,
    hs_gap_bounds,
    hs_norm,
    hs_refined_lower,
    hs_refined_upper,
    kappa_max,
    kappa_min,
    make_hs_instance,
)
from meanbounds.scalar import ScalarPair, squared_bounds
from meanbounds.spd import SpdMatrix


def diag(*values):
    return SpdMatrix(np.diag(np.array(values, dtype=float)))


def random_spd(rng, n, lo=0.05, hi=20.0):
    lam = np.exp(rng.uniform(np.log(lo), np.log(hi), n))
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    q = q * np.where(np.diag(r) < 0, -1.0, 1.0)
    return SpdMatrix(q @ np.diag(lam) @ q.T)


def random_orthogonal(rng, n):
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.where(np.diag(r) < 0, -1.0, 1.0)


# ---------------------------------------------------------------------------
# norm and pairwise constants
# ---------------------------------------------------------------------------

def test_hs_norm_examples():
    assert hs_norm(np.zeros((3, 3))) == 0.0
    assert hs_norm(np.eye(2)) == math.sqrt(2.0)
    assert hs_norm(np.diag([3.0, 4.0])) == 5.0
    assert hs_norm(np.ones((2, 5))) == math.sqrt(10.0)   # rectangular is fine


def test_hs_norm_orthogonal_invariance():
    rng = np.random.default_rng(0)
    m = rng.standard_normal((4, 4))
    u, v = random_orthogonal(rng, 4), random_orthogonal(rng, 4)
    assert math.isclose(hs_norm(u @ m @ v), hs_norm(m), rel_tol=1e-12)


def test_kappa_min_examples():
    d = diag(1, 4)
    assert kappa_min(d, d) == 1.0                       # spectra intersect
    assert kappa_min(diag(4), diag(1)) == 1.125         # K(2)
    assert kappa_min(diag(4, 9), diag(1, 1)) == 1.125   # min{K(2), K(3)}
    assert kappa_max(diag(4, 9), diag(1, 1)) == pytest.approx(4.0 / 3.0)   # K(3)
    assert kappa_max(d, d) >= kappa_min(d, d)


def test_kappa_min_dimension_mismatch():
    with pytest.raises(ShapeError):
        kappa_min(diag(1, 2), diag(1, 2, 3))


def test_instance_validation():
    with pytest.raises(ShapeError):
        make_hs_instance(diag(1, 2), diag(3, 4), np.ones((3, 3)), 0.3)
    with pytest.raises(ValueError):
        make_hs_instance(diag(1, 2), diag(3, 4), np.ones((2, 2)), 0.0)


# ---------------------------------------------------------------------------
# refined bounds
# ---------------------------------------------------------------------------

def test_zero_x_gives_zero_slack():
    inst = make_hs_instance(diag(1, 2), diag(3, 4), np.zeros((2, 2)), 0.3)
    for report in (hs_refined_lower(inst), hs_refined_upper(inst)):
        assert report.slack == 0.0 and report.holds
    chain = hs_chain(inst)
    assert chain.all_hold
    assert all(value == 0.0 for value in chain.term_values)


def test_scalar_equality_reduction_lower():
    # 1x1 case (a, b, x, v) = (1, 16, 1, 1/4): 22.5625 - 14.0625 = 4.5 + 1*4
    inst = make_hs_instance(diag(1), diag(16), np.ones((1, 1)), 0.25)
    report = hs_refined_lower(inst)
    assert report.lhs_sq == pytest.approx(8.5, abs=1e-12)
    assert report.rhs_terms["quarter_refinement"] == pytest.approx(4.5, abs=1e-12)
    assert report.rhs_terms["kantorovich_cross"] == pytest.approx(4.0, abs=1e-12)
    assert report.slack == pytest.approx(0.0, abs=1e-11)
    assert report.holds


def test_scalar_equality_reduction_upper():
    # v = 1/2: lhs^2 - (1-v)^2 (a-b)^2 = 72.25 - 56.25 = 16 = kappa^0 * 16 - 0
    inst = make_hs_instance(diag(1), diag(16), np.ones((1, 1)), 0.5)
    report = hs_refined_upper(inst)
    assert report.lhs_sq == pytest.approx(16.0, abs=1e-10)
    assert report.rhs_sq == pytest.approx(16.0, abs=1e-10)
    assert report.slack == pytest.approx(0.0, abs=1e-10)


def test_diagonal_hadamard_reduction():
    # diagonal A, B: the slack equals the entrywise sum of scalar squared-bound
    # slacks evaluated with the shared least constant
    a_diag, b_diag = (1.0, 4.0), (9.0, 16.0)
    a, b = diag(*a_diag), diag(*b_diag)
    x = np.ones((2, 2))
    v = 0.1
    inst = make_hs_instance(a, b, x, v)
    report = hs_refined_lower(inst)
    assert report.holds
    kap = kappa_min(a, b)
    assert kap == pytest.approx(25.0 / 24.0)   # K(sqrt(4/9)) = K(1.5)
    total = 0.0
    for lam in a_diag:
        for nu in b_diag:
            r1 = min(2 * min(v, 1 - v), 1 - 2 * min(v, 1 - v))
            rhat1 = min(2 * r1, 1 - 2 * r1)
            lhs = ((1 - v) * lam + v * nu) ** 2 - v ** 2 * (lam - nu) ** 2
            rhs = (r1 * (math.sqrt(lam * nu) - lam) ** 2
                   + kap ** rhat1 * (lam ** (1 - v) * nu ** v) ** 2)
            total += lhs - rhs
    assert math.isclose(report.slack, total, rel_tol=1e-10)


def test_refined_upper_random_instance():
    rng = np.random.default_rng(1)
    a, b = diag(1, 4), diag(9, 16)
    x = np.array([[1.0, 2.0], [3.0, 4.0]])
    report = hs_refined_upper(make_hs_instance(a, b, x, 0.3))
    assert report.holds
    report = hs_refined_upper(make_hs_instance(a, b, x, 0.7))
    assert report.holds and report.branch == "high"


def test_gap_bounds():
    inst = make_hs_instance(diag(1, 4), diag(9, 16), np.ones((2, 2)), 0.3)
    gaps = hs_gap_bounds(inst)
    assert gaps["lower"].holds and gaps["upper"].holds


# ---------------------------------------------------------------------------
# chain
# ---------------------------------------------------------------------------

def test_chain_scalar_consistency():
    a, b, x, v = 2.0, 32.0, 1.0, 0.2
    chain = hs_chain(make_hs_instance(diag(a), diag(b), np.array([[x]]), v))
    assert chain.labels == HS_CHAIN_LABELS
    assert chain.all_hold
    # terms 4->5 and 5->6 reproduce the scalar squared-bound slacks with the
    # 1x1 kappa in place of K(sqrt(h))
    bp = squared_bounds(ScalarPair(a, b), v)
    # kappa_min(1x1) = K(sqrt(a/b)) = K(sqrt(h)) up to symmetry
    assert math.isclose(chain.term_values[5] - chain.term_values[4],
                        bp.lower.slack, rel_tol=1e-10, abs_tol=1e-10)
    assert math.isclose(chain.term_values[6] - chain.term_values[5],
                        bp.upper.slack, rel_tol=1e-10, abs_tol=1e-10)


def test_chain_random_instances_both_branches():
    rng = np.random.default_rng(2)
    for _ in range(25):
        n = int(rng.integers(1, 5))
        a, b = random_spd(rng, n), random_spd(rng, n)
        x = rng.standard_normal((n, n))
        v = float(rng.uniform(0.02, 0.98))
        chain = hs_chain(make_hs_instance(a, b, x, v))
        assert chain.all_hold, (n, v, chain.worst_min_eig)


def test_unitary_invariance_of_reports():
    rng = np.random.default_rng(3)
    for _ in range(10):
        n = 4
        a, b = random_spd(rng, n), random_spd(rng, n)
        x = rng.standard_normal((n, n))
        v = float(rng.uniform(0.05, 0.95))
        q, r = random_orthogonal(rng, n), random_orthogonal(rng, n)
        base = hs_refined_lower(make_hs_instance(a, b, x, v))
        rot = hs_refined_lower(make_hs_instance(
            SpdMatrix(q @ a.entries @ q.T), SpdMatrix(r @ b.entries @ r.T),
            q @ x @ r.T, v))
        for key in base.rhs_terms:
            scale = max(1.0, abs(base.rhs_terms[key]))
            assert abs(base.rhs_terms[key] - rot.rhs_terms[key]) <= 1e-10 * scale
        assert abs(base.lhs_sq - rot.lhs_sq) <= 1e-10 * max(1.0, base.lhs_sq)
        assert abs(base.slack - rot.slack) <= 1e-10 * max(1.0, abs(base.lhs_sq), abs(base.rhs_sq))


def test_n1_reduction_matches_scalar_squared_bounds():
    rng = np.random.default_rng(4)
    for _ in range(50):
        a = float(np.exp(rng.uniform(np.log(1e-3), np.log(1e3))))
        b = float(np.exp(rng.uniform(np.log(1e-3), np.log(1e3))))
        x = float(rng.standard_normal())
        v = float(rng.uniform(0.01, 0.99))
        inst = make_hs_instance(diag(a), diag(b), np.array([[x]]), v)
        lower, upper = hs_refined_lower(inst), hs_refined_upper(inst)
        bp = squared_bounds(ScalarPair(a, b), v)
        xx = x * x
        scale = max(1.0, abs(lower.lhs_sq), abs(lower.rhs_sq))
        assert abs(lower.slack - xx * bp.lower.slack) <= 1e-12 * scale
        scale = max(1.0, abs(upper.lhs_sq), abs(upper.rhs_sq))
        assert abs(upper.slack - xx * bp.upper.slack) <= 1e-12 * scale


def test_kappa_override_hook():
    inst = make_hs_instance(diag(1, 4), diag(9, 16), np.ones((2, 2)), 0.1)
    honest = hs_refined_lower(inst)
    inflated = hs_refined_lower(inst, kappa=kappa_max(inst.A, inst.B))
    assert inflated.rhs_sq > honest.rhs_sq
