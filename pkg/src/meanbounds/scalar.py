"""Scalar Young/Heinz mean bounds refined with the Kantorovich constant.

For positive reals a, b with ratio h = b/a and a weight v in (0, 1), the
module evaluates the full bound catalogue around the weighted arithmetic
mean (1-v)a + vb:

================  ==============================================================
gap bounds        difference refinement r/R * (sqrt(a)-sqrt(b))^2 of the
                  arithmetic-geometric gap
ratio bounds      Kantorovich weighting K(sqrt(h))^{+-r1} of the geometric mean
three-term        gap bound plus a quarter-power refinement term
refined           three-term form with the stronger K(h^(1/4))^{+-rhat1} weight
heinz             the midpoint (a+b)/2 against the Heinz mean H_v(a, b)
squared           second-power versions of the refined bounds
================  ==============================================================

with the exponent cascade r = min{v, 1-v}, R = max{v, 1-v},
r1 = min{2r, 1-2r}, rhat1 = min{2*r1, 1-2*r1}.

Lower/upper bounds with a branch switch use form I for v <= 1/2 and form II
for v > 1/2; both forms agree exactly at v = 1/2.

Every ``eval_*`` kernel accepts floats or numpy arrays (broadcasting over
instances) and returns ``(lhs, terms)`` where ``terms`` is an ordered dict
summing to the bounding side.  The dataclass wrappers are the scalar front
door and report slack with the sign convention slack >= 0 iff the bound
holds.  All functions are pure; there is no shared mutable state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

__all__ = [
    "DEFAULT_TOL",
    "Weight",
    "ScalarPair",
    "ScalarBoundSet",
    "Means",
    "BoundPair",
    "kantorovich",
    "exponents",
    "cascade",
    "geo_mean",
    "heinz_mean",
    "young_means",
    "scalar_baselines",
    "refined_lower",
    "refined_upper",
    "heinz_refined",
    "squared_bounds",
    "all_bounds",
    "slack_scale",
]

#: Relative tolerance for scalar slack comparisons, against max(|lhs|, |rhs|, 1).
DEFAULT_TOL = 1e-12


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Weight:
    """A weight v in (0, 1) with its derived exponent cascade."""

    v: float
    r: float
    big_r: float
    r1: float
    rhat1: float

    @property
    def low_branch(self) -> bool:
        """True when v <= 1/2 (form I of every branched bound)."""
        return self.v <= 0.5


@dataclass(frozen=True)
class ScalarPair:
    """A pair of positive reals with the cached ratio h = b/a."""

    a: float
    b: float
    h: float = field(init=False)

    def __post_init__(self):
        for name in ("a", "b"):
            x = getattr(self, name)
            if not (isinstance(x, (int, float)) and math.isfinite(x) and x > 0):
                raise ValueError(f"ScalarPair.{name} must be a finite positive real, got {x!r}")
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        object.__setattr__(self, "h", self.b / self.a)


@dataclass(frozen=True)
class ScalarBoundSet:
    """One evaluated inequality instance.

    ``terms`` sum to ``rhs`` in insertion order; ``slack`` >= 0 exactly when
    the inequality holds (lhs - rhs for lower bounds, rhs - lhs for upper).
    """

    name: str
    kind: str           # "lower" | "upper"
    branch: str         # "low" | "high" | "both"
    lhs: float
    terms: dict[str, float]
    rhs: float
    slack: float

    @property
    def scale(self) -> float:
        return max(abs(self.lhs), abs(self.rhs), 1.0)

    @property
    def rel_slack(self) -> float:
        return self.slack / self.scale

    def holds(self, tol: float = DEFAULT_TOL) -> bool:
        return self.slack >= -tol * self.scale


@dataclass(frozen=True)
class Means:
    arith: float
    geo: float
    heinz: float


@dataclass(frozen=True)
class BoundPair:
    lower: ScalarBoundSet
    upper: ScalarBoundSet


# ---------------------------------------------------------------------------
# Elementary quantities (array-aware)
# ---------------------------------------------------------------------------

def kantorovich(t):
    """Kantorovich constant (t+1)^2/(4t); >= 1 and symmetric under t <-> 1/t."""
    arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise ValueError(f"kantorovich requires finite t > 0, got {t!r}")
    out = (arr + 1.0) ** 2 / (4.0 * arr)
    return float(out) if arr.ndim == 0 else out


def cascade(v):
    """Exponent cascade (r, R, r1, rhat1) for any v; array-aware, no validation."""
    v = np.asarray(v, dtype=float)
    r = np.minimum(v, 1.0 - v)
    big_r = np.maximum(v, 1.0 - v)
    r1 = np.minimum(2.0 * r, 1.0 - 2.0 * r)
    rhat1 = np.minimum(2.0 * r1, 1.0 - 2.0 * r1)
    return r, big_r, r1, rhat1


def exponents(v: float) -> Weight:
    """Validated Weight for v in the open interval (0, 1).

    The endpoints are rejected: there the weighted mean inequality is the
    trivial equality case and callers (the CLI) report it as such.
    """
    if not (isinstance(v, (int, float)) and 0.0 < v < 1.0):
        raise ValueError(f"weight v must lie in the open interval (0, 1), got {v!r}")
    r, big_r, r1, rhat1 = cascade(float(v))
    return Weight(v=float(v), r=float(r), big_r=float(big_r), r1=float(r1), rhat1=float(rhat1))


def geo_mean(a, b, v):
    """Weighted geometric mean a^(1-v) b^v via exp/log for overflow safety."""
    return np.exp((1.0 - np.asarray(v, dtype=float)) * np.log(a) + np.asarray(v, dtype=float) * np.log(b))


def heinz_mean(a, b, v):
    """Heinz mean H_v(a, b) = (a^v b^(1-v) + a^(1-v) b^v) / 2."""
    return 0.5 * (geo_mean(a, b, v) + geo_mean(b, a, v))


def slack_scale(lhs, rhs):
    """Comparison scale max(|lhs|, |rhs|, 1) for relative slack."""
    return np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))


def _sum_terms(terms: dict) -> float | np.ndarray:
    # left fold in insertion order; the order is part of the contract
    # (dominance margins rely on shared prefixes, see eval_refined_*)
    return reduce(lambda s, t: s + t, terms.values())


def _low_mask(v, low_mask):
    return np.asarray(v, dtype=float) <= 0.5 if low_mask is None else np.asarray(low_mask)


# ---------------------------------------------------------------------------
# Bound kernels.  Each returns (lhs, terms) with terms in canonical order:
# gap term, refinement term, geometric/Heinz term.  Lower and upper variants
# of the same family share term expressions so that dominance margins reduce
# to a difference in the final term only.
# ---------------------------------------------------------------------------

def eval_gap_lower(a, b, v):
    """arith >= geo + r * (sqrt(a) - sqrt(b))^2."""
    r, _, _, _ = cascade(v)
    gap = (np.sqrt(a) - np.sqrt(b)) ** 2
    lhs = (1.0 - v) * a + v * b
    return lhs, {"weighted_gap": r * gap, "geometric": geo_mean(a, b, v)}


def eval_gap_upper(a, b, v):
    """arith <= geo + R * (sqrt(a) - sqrt(b))^2."""
    _, big_r, _, _ = cascade(v)
    gap = (np.sqrt(a) - np.sqrt(b)) ** 2
    lhs = (1.0 - v) * a + v * b
    return lhs, {"weighted_gap": big_r * gap, "geometric": geo_mean(a, b, v)}


def eval_ratio_lower(a, b, v):
    """arith >= r * (sqrt(a) - sqrt(b))^2 + K(sqrt(h))^r1 * geo."""
    r, _, r1, _ = cascade(v)
    gap = (np.sqrt(a) - np.sqrt(b)) ** 2
    k = _kant_raw(np.sqrt(np.asarray(b, dtype=float) / a))
    lhs = (1.0 - v) * a + v * b
    return lhs, {"weighted_gap": r * gap, "kantorovich_geometric": k ** r1 * geo_mean(a, b, v)}


def eval_ratio_upper(a, b, v):
    """arith <= R * (sqrt(a) - sqrt(b))^2 + K(sqrt(h))^(-r1) * geo."""
    _, big_r, r1, _ = cascade(v)
    gap = (np.sqrt(a) - np.sqrt(b)) ** 2
    k = _kant_raw(np.sqrt(np.asarray(b, dtype=float) / a))
    lhs = (1.0 - v) * a + v * b
    return lhs, {"weighted_gap": big_r * gap, "kantorovich_geometric": k ** -r1 * geo_mean(a, b, v)}


def _kant_raw(t):
    return (t + 1.0) ** 2 / (4.0 * t)


def _lower_pieces(a, b, v, low_mask=None, swap_quarter=False):
    """Gap and quarter-power terms shared by the three-term and refined lower bounds."""
    _, _, r1, _ = cascade(v)
    low = _low_mask(v, low_mask)
    sa, sb = np.sqrt(a), np.sqrt(b)
    q = np.sqrt(np.sqrt(np.asarray(a, dtype=float) * b))
    gap_term = np.where(low, v, 1.0 - np.asarray(v, dtype=float)) * (sa - sb) ** 2
    pick_a = np.logical_xor(low, swap_quarter)
    quarter_term = r1 * np.where(pick_a, (q - sa) ** 2, (q - sb) ** 2)
    return gap_term, quarter_term


def _upper_pieces(a, b, v, low_mask=None, swap_quarter=False):
    """Gap and quarter-power terms shared by the three-term and refined upper bounds."""
    _, _, r1, _ = cascade(v)
    low = _low_mask(v, low_mask)
    sa, sb = np.sqrt(a), np.sqrt(b)
    q = np.sqrt(np.sqrt(np.asarray(a, dtype=float) * b))
    gap_term = np.where(low, 1.0 - np.asarray(v, dtype=float), v) * (sa - sb) ** 2
    pick_b = np.logical_xor(low, swap_quarter)
    quarter_term = r1 * np.where(pick_b, (q - sb) ** 2, (q - sa) ** 2)
    return gap_term, quarter_term


def eval_threeterm_lower(a, b, v, *, low_mask=None):
    """arith >= c*(sqrt(a)-sqrt(b))^2 + r1*(quarter)^2 + geo with c = v or 1-v by branch."""
    gap_term, quarter_term = _lower_pieces(a, b, v, low_mask)
    lhs = (1.0 - v) * a + v * b
    return lhs, {"weighted_gap": gap_term, "quarter_refinement": quarter_term,
                 "geometric": geo_mean(a, b, v)}


def eval_threeterm_upper(a, b, v, *, low_mask=None):
    """arith <= c*(sqrt(a)-sqrt(b))^2 - r1*(quarter)^2 + geo."""
    gap_term, quarter_term = _upper_pieces(a, b, v, low_mask)
    lhs = (1.0 - v) * a + v * b
    return lhs, {"weighted_gap": gap_term, "quarter_refinement": -quarter_term,
                 "geometric": geo_mean(a, b, v)}


def eval_refined_lower(a, b, v, *, low_mask=None, rhat1_scale=1.0,
                       drop_refinement=False, swap_quarter=False):
    """Three-term lower bound with the geometric mean weighted by K(h^(1/4))^rhat1.

    The keyword knobs exist for the mutation harness; defaults evaluate the
    bound as stated.
    """
    _, _, _, rhat1 = cascade(v)
    gap_term, quarter_term = _lower_pieces(a, b, v, low_mask, swap_quarter)
    k = _kant_raw(np.sqrt(np.sqrt(np.asarray(b, dtype=float) / a)))
    kgeo = k ** (rhat1_scale * rhat1) * geo_mean(a, b, v)
    lhs = (1.0 - v) * a + v * b
    terms = {"weighted_gap": gap_term}
    if not drop_refinement:
        terms["quarter_refinement"] = quarter_term
    terms["kantorovich_geometric"] = kgeo
    return lhs, terms


def eval_refined_upper(a, b, v, *, low_mask=None, rhat1_scale=1.0,
                       drop_refinement=False, swap_quarter=False, flip_sign=False):
    """Three-term upper bound with the geometric mean weighted by K(h^(1/4))^(-rhat1)."""
    _, _, _, rhat1 = cascade(v)
    gap_term, quarter_term = _upper_pieces(a, b, v, low_mask, swap_quarter)
    k = _kant_raw(np.sqrt(np.sqrt(np.asarray(b, dtype=float) / a)))
    kgeo = k ** (-rhat1_scale * rhat1) * geo_mean(a, b, v)
    lhs = (1.0 - v) * a + v * b
    terms = {"weighted_gap": gap_term}
    if not drop_refinement:
        terms["quarter_refinement"] = quarter_term if flip_sign else -quarter_term
    terms["kantorovich_geometric"] = kgeo
    return lhs, terms


def eval_heinz_lower(a, b, v):
    """(a+b)/2 >= r*gap + (r1/2)*(both quarters) + K(h^(1/4))^rhat1 * H_v."""
    r, _, r1, rhat1 = cascade(v)
    sa, sb = np.sqrt(a), np.sqrt(b)
    q = np.sqrt(np.sqrt(np.asarray(a, dtype=float) * b))
    k = _kant_raw(np.sqrt(np.sqrt(np.asarray(b, dtype=float) / a)))
    lhs = 0.5 * (np.asarray(a, dtype=float) + b)
    return lhs, {
        "weighted_gap": r * (sa - sb) ** 2,
        "quarter_refinement": 0.5 * r1 * ((q - sa) ** 2 + (q - sb) ** 2),
        "kantorovich_heinz": k ** rhat1 * heinz_mean(a, b, v),
    }


def eval_heinz_upper(a, b, v):
    """(a+b)/2 <= R*gap - (r1/2)*(both quarters) + K(h^(1/4))^(-rhat1) * H_v."""
    _, big_r, r1, rhat1 = cascade(v)
    sa, sb = np.sqrt(a), np.sqrt(b)
    q = np.sqrt(np.sqrt(np.asarray(a, dtype=float) * b))
    k = _kant_raw(np.sqrt(np.sqrt(np.asarray(b, dtype=float) / a)))
    lhs = 0.5 * (np.asarray(a, dtype=float) + b)
    return lhs, {
        "weighted_gap": big_r * (sa - sb) ** 2,
        "quarter_refinement": -0.5 * r1 * ((q - sa) ** 2 + (q - sb) ** 2),
        "kantorovich_heinz": k ** -rhat1 * heinz_mean(a, b, v),
    }


def eval_squared_lower(a, b, v, *, low_mask=None):
    """arith^2 >= c^2*(a-b)^2 + r1*(sqrt(ab) - a|b)^2 + K(sqrt(h))^rhat1 * geo^2."""
    _, _, r1, rhat1 = cascade(v)
    low = _low_mask(v, low_mask)
    g = np.sqrt(np.asarray(a, dtype=float) * b)
    k = _kant_raw(np.sqrt(np.asarray(b, dtype=float) / a))
    lhs = ((1.0 - v) * a + v * b) ** 2
    coeff = np.where(low, v, 1.0 - np.asarray(v, dtype=float)) ** 2
    half = r1 * np.where(low, (g - a) ** 2, (g - b) ** 2)
    return lhs, {
        "weighted_diff_sq": coeff * (np.asarray(a, dtype=float) - b) ** 2,
        "half_refinement": half,
        "kantorovich_geometric_sq": k ** rhat1 * geo_mean(a, b, v) ** 2,
    }


def eval_squared_upper(a, b, v, *, low_mask=None):
    """arith^2 <= c^2*(a-b)^2 - r1*(sqrt(ab) - b|a)^2 + K(sqrt(h))^(-rhat1) * geo^2."""
    _, _, r1, rhat1 = cascade(v)
    low = _low_mask(v, low_mask)
    g = np.sqrt(np.asarray(a, dtype=float) * b)
    k = _kant_raw(np.sqrt(np.asarray(b, dtype=float) / a))
    lhs = ((1.0 - v) * a + v * b) ** 2
    coeff = np.where(low, 1.0 - np.asarray(v, dtype=float), v) ** 2
    half = r1 * np.where(low, (g - b) ** 2, (g - a) ** 2)
    return lhs, {
        "weighted_diff_sq": coeff * (np.asarray(a, dtype=float) - b) ** 2,
        "half_refinement": -half,
        "kantorovich_geometric_sq": k ** -rhat1 * geo_mean(a, b, v) ** 2,
    }


# ---------------------------------------------------------------------------
# Scalar front door
# ---------------------------------------------------------------------------

_LOWER_KERNELS = {
    "gap_lower": eval_gap_lower,
    "ratio_lower": eval_ratio_lower,
    "threeterm_lower": eval_threeterm_lower,
    "refined_lower": eval_refined_lower,
    "heinz_lower": eval_heinz_lower,
    "squared_lower": eval_squared_lower,
}
_UPPER_KERNELS = {
    "gap_upper": eval_gap_upper,
    "ratio_upper": eval_ratio_upper,
    "threeterm_upper": eval_threeterm_upper,
    "refined_upper": eval_refined_upper,
    "heinz_upper": eval_heinz_upper,
    "squared_upper": eval_squared_upper,
}
_UNBRANCHED = {"gap_lower", "gap_upper", "ratio_lower", "ratio_upper",
               "heinz_lower", "heinz_upper"}


def _bound_set(name: str, pair: ScalarPair, v: float) -> ScalarBoundSet:
    kind = "lower" if name in _LOWER_KERNELS else "upper"
    kernel = _LOWER_KERNELS.get(name) or _UPPER_KERNELS[name]
    lhs, terms = kernel(pair.a, pair.b, v)
    lhs = float(lhs)
    terms = {k: float(t) for k, t in terms.items()}
    rhs = float(_sum_terms(terms))
    slack = lhs - rhs if kind == "lower" else rhs - lhs
    branch = "both" if name in _UNBRANCHED else ("low" if v <= 0.5 else "high")
    return ScalarBoundSet(name=name, kind=kind, branch=branch,
                          lhs=lhs, terms=terms, rhs=rhs, slack=slack)


def young_means(pair: ScalarPair, v: float) -> Means:
    """Weighted arithmetic, geometric and Heinz means.

    v may be any real; outside [0, 1] the arithmetic/geometric ordering
    reverses (arith <= geo).
    """
    v = float(v)
    return Means(
        arith=(1.0 - v) * pair.a + v * pair.b,
        geo=float(geo_mean(pair.a, pair.b, v)),
        heinz=float(heinz_mean(pair.a, pair.b, v)),
    )


def scalar_baselines(pair: ScalarPair, v: float) -> dict[str, ScalarBoundSet]:
    """The six baseline bound sets (gap, ratio, three-term; lower and upper)."""
    _check_weight(v)
    return {name: _bound_set(name, pair, v)
            for name in ("gap_lower", "gap_upper", "ratio_lower", "ratio_upper",
                         "threeterm_lower", "threeterm_upper")}


def refined_lower(pair: ScalarPair, v: float) -> ScalarBoundSet:
    """Kantorovich-refined lower bound on the weighted arithmetic mean."""
    _check_weight(v)
    return _bound_set("refined_lower", pair, v)


def refined_upper(pair: ScalarPair, v: float) -> ScalarBoundSet:
    """Kantorovich-refined upper bound on the weighted arithmetic mean."""
    _check_weight(v)
    return _bound_set("refined_upper", pair, v)


def heinz_refined(pair: ScalarPair, v: float) -> BoundPair:
    """Refined two-sided bounds of the midpoint (a+b)/2 via the Heinz mean."""
    _check_weight(v)
    return BoundPair(lower=_bound_set("heinz_lower", pair, v),
                     upper=_bound_set("heinz_upper", pair, v))


def squared_bounds(pair: ScalarPair, v: float) -> BoundPair:
    """Second-power refined bounds on the squared weighted arithmetic mean."""
    _check_weight(v)
    return BoundPair(lower=_bound_set("squared_lower", pair, v),
                     upper=_bound_set("squared_upper", pair, v))


def all_bounds(pair: ScalarPair, v: float) -> dict[str, ScalarBoundSet]:
    """Every bound set in the catalogue, baselines first."""
    _check_weight(v)
    out = scalar_baselines(pair, v)
    for name in ("refined_lower", "refined_upper", "heinz_lower", "heinz_upper",
                 "squared_lower", "squared_upper"):
        out[name] = _bound_set(name, pair, v)
    return out


def _check_weight(v: float) -> None:
    if not (0.0 < v < 1.0):
        raise ValueError(f"weight v must lie in the open interval (0, 1), got {v!r}")
