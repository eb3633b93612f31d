"""Hilbert-Schmidt (Frobenius) norm inequalities.

For positive definite A, B and an arbitrary real X of matching dimension,
bounds the squared norm of the weighted mean (1-v)AX + vXB against the
cross term A^(1-v) X B^v, refined by the least Kantorovich constant over
all eigenvalue pairs,

    kappa = min_{i,j} K(sqrt(lambda_i / nu_j)),

together with quarter-power refinement norms and the nine-term comparison
chain linking the plain difference bounds to the refined ones.  No sandwich
condition is required here: the two spectra may overlap freely.

Norm squares are accumulated with exact (Shewchuk) summation via math.fsum,
since the chain compares nearby O(n^2)-term sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .operators import ChainReport
from .scalar import Weight, exponents
from .spd import LoewnerVerdict, SpdMatrix

__all__ = [
    "DEFAULT_HS_TOL",
    "HS_CHAIN_LABELS",
    "HsInstance",
    "HsBoundReport",
    "hs_norm",
    "kappa_min",
    "kappa_max",
    "make_hs_instance",
    "hs_refined_lower",
    "hs_refined_upper",
    "hs_gap_bounds",
    "hs_chain",
]

#: Default relative tolerance against the squared-norm scale.
DEFAULT_HS_TOL = 1e-10

HS_CHAIN_LABELS = (
    "zero",
    "cross_term",
    "baseline_lower",
    "kantorovich_lower",
    "refined_lower",
    "weighted_mean",
    "refined_upper",
    "kantorovich_upper",
    "baseline_upper",
)


@dataclass(frozen=True)
class HsInstance:
    A: SpdMatrix
    B: SpdMatrix
    X: np.ndarray
    weight: Weight


@dataclass(frozen=True)
class HsBoundReport:
    """One evaluated squared-norm inequality.

    ``lhs_terms`` sum to the bounded side, ``rhs_terms`` to the bounding
    side; slack >= 0 iff the inequality holds, checked against
    tol * max(1, |lhs|, |rhs|).
    """

    name: str
    branch: str
    lhs_sq: float
    lhs_terms: dict[str, float]
    rhs_terms: dict[str, float]
    rhs_sq: float
    slack: float
    tol_used: float
    holds: bool


def hs_norm(m) -> float:
    """Frobenius norm: sqrt of the exactly-summed squared entries."""
    flat = np.asarray(m, dtype=float).ravel()
    return math.sqrt(math.fsum(x * x for x in flat))


def _hs_norm_sq(m) -> float:
    flat = np.asarray(m, dtype=float).ravel()
    return math.fsum(x * x for x in flat)


def _pairwise_kantorovich(a: SpdMatrix, b: SpdMatrix) -> np.ndarray:
    if a.dim != b.dim:
        raise ShapeError(f"dimension mismatch: {a.dim} vs {b.dim}")
    t = np.sqrt(np.outer(a.eigenvalues, 1.0 / b.eigenvalues))
    return (t + 1.0) ** 2 / (4.0 * t)


def kappa_min(a: SpdMatrix, b: SpdMatrix) -> float:
    """Least Kantorovich constant over all n^2 eigenvalue-pair ratios.

    Equals 1 exactly when the two spectra intersect.
    """
    return float(_pairwise_kantorovich(a, b).min())


def kappa_max(a: SpdMatrix, b: SpdMatrix) -> float:
    """Largest pairwise Kantorovich constant (mutation hook, not a valid weight)."""
    return float(_pairwise_kantorovich(a, b).max())


def make_hs_instance(a: SpdMatrix, b: SpdMatrix, x, v: float) -> HsInstance:
    x = np.asarray(x, dtype=float)
    if x.shape != (a.dim, a.dim) or a.dim != b.dim:
        raise ShapeError(
            f"X must be {a.dim}x{a.dim} matching A and B, got {x.shape} with "
            f"dims {a.dim}, {b.dim}")
    return HsInstance(A=a, B=b, X=x, weight=exponents(v))


@dataclass(frozen=True)
class _Norms:
    mean_sq: float       # ||(1-v)AX + vXB||^2
    diff_sq: float       # ||AX - XB||^2
    quarter_a_sq: float  # ||A^(1/2) X B^(1/2) - AX||^2
    quarter_b_sq: float  # ||A^(1/2) X B^(1/2) - XB||^2
    cross_sq: float      # ||A^(1-v) X B^v||^2


def _norms(inst: HsInstance) -> _Norms:
    v = inst.weight.v
    a, b, x = inst.A.entries, inst.B.entries, inst.X
    ax = a @ x
    xb = x @ b
    half = inst.A.power_entries(0.5) @ x @ inst.B.power_entries(0.5)
    cross = inst.A.power_entries(1.0 - v) @ x @ inst.B.power_entries(v)
    return _Norms(
        mean_sq=_hs_norm_sq((1.0 - v) * ax + v * xb),
        diff_sq=_hs_norm_sq(ax - xb),
        quarter_a_sq=_hs_norm_sq(half - ax),
        quarter_b_sq=_hs_norm_sq(half - xb),
        cross_sq=_hs_norm_sq(cross),
    )


def _report(name, branch, lhs_terms, rhs_terms, kind, tol_rel) -> HsBoundReport:
    lhs = math.fsum(lhs_terms.values())
    rhs = math.fsum(rhs_terms.values())
    slack = lhs - rhs if kind == "lower" else rhs - lhs
    tol_used = tol_rel * max(1.0, abs(lhs), abs(rhs))
    return HsBoundReport(name=name, branch=branch, lhs_sq=lhs,
                         lhs_terms=lhs_terms, rhs_terms=rhs_terms, rhs_sq=rhs,
                         slack=slack, tol_used=tol_used, holds=slack >= -tol_used)


def hs_refined_lower(inst: HsInstance, *, kappa: float | None = None,
                     tol_rel: float = DEFAULT_HS_TOL) -> HsBoundReport:
    """Refined lower bound on the weighted-mean norm (form by branch of v).

    ``kappa`` defaults to :func:`kappa_min`; passing another value evaluates
    the same shape with that weight (used by the mutation harness).
    """
    w, n = inst.weight, _norms(inst)
    k = kappa_min(inst.A, inst.B) if kappa is None else float(kappa)
    if w.low_branch:
        lhs = {"mean_sq": n.mean_sq, "weighted_diff_sq": -(w.v ** 2) * n.diff_sq}
        rhs = {"quarter_refinement": w.r1 * n.quarter_a_sq,
               "kantorovich_cross": k ** w.rhat1 * n.cross_sq}
    else:
        lhs = {"mean_sq": n.mean_sq, "weighted_diff_sq": -((1.0 - w.v) ** 2) * n.diff_sq}
        rhs = {"quarter_refinement": w.r1 * n.quarter_b_sq,
               "kantorovich_cross": k ** w.rhat1 * n.cross_sq}
    return _report("hs_lower", "low" if w.low_branch else "high", lhs, rhs,
                   "lower", tol_rel)


def hs_refined_upper(inst: HsInstance, *, kappa: float | None = None,
                     tol_rel: float = DEFAULT_HS_TOL) -> HsBoundReport:
    """Refined upper bound on the weighted-mean norm (form by branch of v)."""
    w, n = inst.weight, _norms(inst)
    k = kappa_min(inst.A, inst.B) if kappa is None else float(kappa)
    if w.low_branch:
        lhs = {"mean_sq": n.mean_sq, "weighted_diff_sq": -((1.0 - w.v) ** 2) * n.diff_sq}
        rhs = {"kantorovich_cross": k ** -w.rhat1 * n.cross_sq,
               "quarter_refinement": -w.r1 * n.quarter_b_sq}
    else:
        lhs = {"mean_sq": n.mean_sq, "weighted_diff_sq": -(w.v ** 2) * n.diff_sq}
        rhs = {"kantorovich_cross": k ** -w.rhat1 * n.cross_sq,
               "quarter_refinement": -w.r1 * n.quarter_a_sq}
    return _report("hs_upper", "low" if w.low_branch else "high", lhs, rhs,
                   "upper", tol_rel)


def hs_gap_bounds(inst: HsInstance, tol_rel: float = DEFAULT_HS_TOL
                  ) -> dict[str, HsBoundReport]:
    """Baseline two-sided difference bounds r^2/R^2 * ||AX - XB||^2."""
    w, n = inst.weight, _norms(inst)
    branch = "low" if w.low_branch else "high"
    lower = _report("hs_gap_lower", branch,
                    {"mean_sq": n.mean_sq},
                    {"weighted_diff_sq": w.r ** 2 * n.diff_sq, "cross_sq": n.cross_sq},
                    "lower", tol_rel)
    upper = _report("hs_gap_upper", branch,
                    {"mean_sq": n.mean_sq},
                    {"weighted_diff_sq": w.big_r ** 2 * n.diff_sq, "cross_sq": n.cross_sq},
                    "upper", tol_rel)
    return {"lower": lower, "upper": upper}


def _chain_values(w: Weight, n: _Norms, k: float) -> list[float]:
    k_pow = k ** w.rhat1
    k_inv = k ** -w.rhat1
    lo_coeff = w.v ** 2 if w.low_branch else (1.0 - w.v) ** 2
    hi_coeff = (1.0 - w.v) ** 2 if w.low_branch else w.v ** 2
    quarter_lo = n.quarter_a_sq if w.low_branch else n.quarter_b_sq
    quarter_hi = n.quarter_b_sq if w.low_branch else n.quarter_a_sq
    d = n.diff_sq
    return [
        0.0,
        n.cross_sq,
        lo_coeff * d + n.cross_sq,
        lo_coeff * d + k_pow * n.cross_sq,
        lo_coeff * d + w.r1 * quarter_lo + k_pow * n.cross_sq,
        n.mean_sq,
        hi_coeff * d - w.r1 * quarter_hi + k_inv * n.cross_sq,
        hi_coeff * d + k_inv * n.cross_sq,
        hi_coeff * d + n.cross_sq,
    ]


def hs_chain(inst: HsInstance, *, kappa: float | None = None,
             tol_rel: float = DEFAULT_HS_TOL) -> ChainReport:
    """Check every consecutive <= of the nine-term squared-norm chain.

    The outermost links are the baseline difference bounds (the branch makes
    r^2 equal the lower coefficient), and the kantorovich/refined adjacency
    certifies dominance over them.
    """
    w, n = inst.weight, _norms(inst)
    k = kappa_min(inst.A, inst.B) if kappa is None else float(kappa)
    values = _chain_values(w, n, k)
    verdicts = []
    for i in range(len(values) - 1):
        margin = values[i + 1] - values[i]
        tol_used = tol_rel * max(1.0, abs(values[i]), abs(values[i + 1]))
        verdicts.append(LoewnerVerdict(holds=margin >= -tol_used,
                                       min_eig=margin, tol_used=tol_used))
    return ChainReport(labels=HS_CHAIN_LABELS, verdicts=tuple(verdicts),
                       all_hold=all(v.holds for v in verdicts),
                       worst_min_eig=min(v.min_eig for v in verdicts),
                       term_values=tuple(values))
