"""Loewner-order inequalities between weighted operator means.

Certifies, over finite SPD matrices under a spectral sandwich hypothesis
0 < m' I <= A <= m I < M I <= B <= M' I (or with the roles of A and B
swapped), the refined two-sided bounds on the weighted arithmetic mean
A nabla_v B in terms of A #_v B weighted by K(h^(1/4))^(+-rhat1) with
h = M/m, the Heinz-mean versions, and the full nine-term comparison chain

    0 <= A#_vB <= ... <= A nabla_v B <= ... <= mean-gap upper bound

whose adjacent links include the plain three-term bounds, so chain
verification doubles as a dominance check of the Kantorovich-weighted
forms over them.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

from .errors import SandwichError
from .scalar import Weight, exponents, kantorovich
from .spd import (
    LoewnerVerdict,
    Orientation,
    SpdMatrix,
    SpectralSandwich,
    _conjugation_base,
    _loewner_raw,
    sandwich_bounds,
    symmetrize,
)

__all__ = [
    "DEFAULT_OP_TOL",
    "CHAIN_LABELS",
    "OperatorBoundInstance",
    "OperatorBound",
    "ChainReport",
    "OperatorEvaluation",
    "PairCache",
    "prepare_pair",
    "make_instance",
    "op_refined_lower",
    "op_refined_upper",
    "op_heinz_bounds",
    "op_chain",
    "evaluate_all",
]

#: Default relative Loewner tolerance for the chain suite.
DEFAULT_OP_TOL = 1e-8

CHAIN_LABELS = (
    "zero",
    "geometric_mean",
    "mean_gap_lower",
    "three_term_lower",
    "kantorovich_lower",
    "arithmetic_mean",
    "kantorovich_upper",
    "three_term_upper",
    "mean_gap_upper",
)


@dataclass(frozen=True)
class OperatorBoundInstance:
    """One (A, B, v) inequality instance with its sandwich constants.

    ``kappa`` is the Kantorovich constant K(h^(1/4)) evaluated at the
    tightest inner spectral gap h = M/m (the strongest certified weight).
    """

    A: SpdMatrix
    B: SpdMatrix
    weight: Weight
    sandwich: SpectralSandwich
    kappa: float


@dataclass(frozen=True)
class OperatorBound:
    lhs: np.ndarray
    rhs: np.ndarray
    verdict: LoewnerVerdict


@dataclass(frozen=True)
class ChainReport:
    """Per-link Loewner verdicts for an ordered chain of terms.

    ``term_values`` summarizes each term: the value itself for scalar
    chains, the trace for matrix chains.
    """

    labels: tuple[str, ...]
    verdicts: tuple[LoewnerVerdict, ...]
    all_hold: bool
    worst_min_eig: float
    term_values: tuple[float, ...] = ()


@dataclass(frozen=True)
class OperatorEvaluation:
    chain: ChainReport
    heinz_lower: OperatorBound
    heinz_upper: OperatorBound


@dataclass(frozen=True)
class PairCache:
    """Spectral data of X = A^(-1/2) B A^(-1/2), reusable across weights."""

    root: np.ndarray
    lam: np.ndarray
    vec: np.ndarray


def prepare_pair(a: SpdMatrix, b: SpdMatrix) -> PairCache:
    root, lam, vec = _conjugation_base(a, b)
    return PairCache(root=root, lam=lam, vec=vec)


def make_instance(a: SpdMatrix, b: SpdMatrix, v: float, *,
                  margin: float = 0.0,
                  constants: tuple[float, float, float, float] | None = None,
                  ) -> OperatorBoundInstance:
    """Build an instance, deriving sandwich constants from the spectra.

    ``constants`` optionally supplies user-chosen (m', m, M, M'); they are
    validated for containment (possibly loose) against the two spectra, with
    the orientation inferred.  The bounds stay certified under any valid,
    even non-tight, constants.
    """
    if constants is None:
        sandwich = sandwich_bounds(a, b, margin)
    else:
        sandwich = _sandwich_from_constants(a, b, constants)
    kappa = kantorovich(sandwich.h ** 0.25)
    return OperatorBoundInstance(A=a, B=b, weight=exponents(v),
                                 sandwich=sandwich, kappa=kappa)


def _sandwich_from_constants(a, b, constants) -> SpectralSandwich:
    m_prime, m, big_m, big_m_prime = (float(x) for x in constants)
    slop = 1.0 + 1e-12

    def fits(lo: SpdMatrix, hi: SpdMatrix) -> bool:
        return (lo.min_eig * slop >= m_prime and lo.max_eig <= m * slop
                and hi.min_eig * slop >= big_m and hi.max_eig <= big_m_prime * slop)

    if fits(a, b):
        orient = Orientation.A_BELOW_B
    elif fits(b, a):
        orient = Orientation.B_BELOW_A
    else:
        raise SandwichError(
            f"supplied constants ({m_prime:g}, {m:g}, {big_m:g}, {big_m_prime:g}) "
            "do not contain the two spectra in either orientation",
            (min(a.min_eig, b.min_eig), max(a.max_eig, b.max_eig)))
    return SpectralSandwich(m_prime=m_prime, m=m, M=big_m, M_prime=big_m_prime,
                            h=big_m / m, h_prime=big_m_prime / m_prime,
                            orientation=orient)


# ---------------------------------------------------------------------------
# Term materialization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Terms:
    nabla_v: np.ndarray
    nabla: np.ndarray
    gap: np.ndarray           # A nabla B - A # B
    sharp_v: np.ndarray
    sharp_1mv: np.ndarray
    sharp_quarter: np.ndarray
    sharp_half: np.ndarray
    sharp_3quarter: np.ndarray


def _materialize(inst: OperatorBoundInstance, cache: PairCache | None) -> _Terms:
    if cache is None:
        cache = prepare_pair(inst.A, inst.B)
    v = inst.weight.v
    sharps = {}
    for t in (v, 1.0 - v, 0.25, 0.5, 0.75):
        xv = symmetrize((cache.vec * cache.lam ** t) @ cache.vec.T)
        sharps[t] = symmetrize(cache.root @ xv @ cache.root)
    a, b = inst.A.entries, inst.B.entries
    nabla = 0.5 * (a + b)
    return _Terms(
        nabla_v=(1.0 - v) * a + v * b,
        nabla=nabla,
        gap=nabla - sharps[0.5],
        sharp_v=sharps[v],
        sharp_1mv=sharps[1.0 - v],
        sharp_quarter=sharps[0.25],
        sharp_half=sharps[0.5],
        sharp_3quarter=sharps[0.75],
    )


def _refinement_terms(inst: OperatorBoundInstance, t: _Terms):
    """The branch-dependent quarter-power refinements D (added) and D' (subtracted)."""
    low_form = t.sharp_half - 2.0 * t.sharp_quarter + inst.A.entries
    high_form = t.sharp_half - 2.0 * t.sharp_3quarter + inst.B.entries
    if inst.weight.low_branch:
        return low_form, high_form
    return high_form, low_form


def _lower_rhs(inst, t: _Terms):
    w = inst.weight
    d_add, _ = _refinement_terms(inst, t)
    coeff = 2.0 * (w.v if w.low_branch else 1.0 - w.v)
    return coeff * t.gap + w.r1 * d_add + inst.kappa ** w.rhat1 * t.sharp_v


def _upper_rhs(inst, t: _Terms):
    w = inst.weight
    _, d_sub = _refinement_terms(inst, t)
    coeff = 2.0 * (1.0 - w.v if w.low_branch else w.v)
    return coeff * t.gap - w.r1 * d_sub + inst.kappa ** -w.rhat1 * t.sharp_v


# ---------------------------------------------------------------------------
# Public evaluators
# ---------------------------------------------------------------------------

def op_refined_lower(inst: OperatorBoundInstance, tol_rel: float = DEFAULT_OP_TOL,
                     *, cache: PairCache | None = None) -> OperatorBound:
    """Kantorovich-refined lower bound: rhs <= A nabla_v B in the Loewner order."""
    t = _materialize(inst, cache)
    rhs = _lower_rhs(inst, t)
    return OperatorBound(lhs=t.nabla_v, rhs=rhs,
                         verdict=_loewner_raw(rhs, t.nabla_v, tol_rel))


def op_refined_upper(inst: OperatorBoundInstance, tol_rel: float = DEFAULT_OP_TOL,
                     *, cache: PairCache | None = None) -> OperatorBound:
    """Kantorovich-refined upper bound: A nabla_v B <= rhs in the Loewner order."""
    t = _materialize(inst, cache)
    rhs = _upper_rhs(inst, t)
    return OperatorBound(lhs=t.nabla_v, rhs=rhs,
                         verdict=_loewner_raw(t.nabla_v, rhs, tol_rel))


def _heinz_bounds(inst, t: _Terms, tol_rel):
    w = inst.weight
    heinz_v = 0.5 * (t.sharp_v + t.sharp_1mv)
    heinz_quarter = 0.5 * (t.sharp_quarter + t.sharp_3quarter)
    refinement = t.nabla + t.sharp_half - 2.0 * heinz_quarter
    lower_rhs = 2.0 * w.r * t.gap + w.r1 * refinement + inst.kappa ** w.rhat1 * heinz_v
    upper_rhs = (2.0 * w.big_r * t.gap - w.r1 * refinement
                 + inst.kappa ** -w.rhat1 * heinz_v)
    lower = OperatorBound(lhs=t.nabla, rhs=lower_rhs,
                          verdict=_loewner_raw(lower_rhs, t.nabla, tol_rel))
    upper = OperatorBound(lhs=t.nabla, rhs=upper_rhs,
                          verdict=_loewner_raw(t.nabla, upper_rhs, tol_rel))
    return lower, upper


def op_heinz_bounds(inst: OperatorBoundInstance, tol_rel: float = DEFAULT_OP_TOL,
                    *, cache: PairCache | None = None) -> dict[str, OperatorBound]:
    """Two-sided Heinz-mean bounds of A nabla B (midpoint form)."""
    lower, upper = _heinz_bounds(inst, _materialize(inst, cache), tol_rel)
    return {"lower": lower, "upper": upper}


def _chain_terms(inst, t: _Terms) -> list[np.ndarray]:
    w = inst.weight
    d_add, d_sub = _refinement_terms(inst, t)
    c_lo = 2.0 * (w.v if w.low_branch else 1.0 - w.v)
    c_hi = 2.0 * (1.0 - w.v if w.low_branch else w.v)
    k = inst.kappa ** w.rhat1
    k_inv = inst.kappa ** -w.rhat1
    return [
        np.zeros_like(t.nabla_v),
        t.sharp_v,
        c_lo * t.gap + t.sharp_v,
        c_lo * t.gap + w.r1 * d_add + t.sharp_v,
        c_lo * t.gap + w.r1 * d_add + k * t.sharp_v,
        t.nabla_v,
        c_hi * t.gap - w.r1 * d_sub + k_inv * t.sharp_v,
        c_hi * t.gap - w.r1 * d_sub + t.sharp_v,
        c_hi * t.gap + t.sharp_v,
    ]


def _chain_report(terms: list[np.ndarray], tol_rel: float) -> ChainReport:
    diffs = np.stack([terms[i + 1] - terms[i] for i in range(len(terms) - 1)])
    min_eigs = np.linalg.eigvalsh(symmetrize_stack(diffs))[:, 0]
    norms = [float(np.linalg.norm(m)) for m in terms]
    verdicts = []
    for i, me in enumerate(min_eigs):
        tol_used = tol_rel * max(1.0, norms[i], norms[i + 1])
        verdicts.append(LoewnerVerdict(holds=float(me) >= -tol_used,
                                       min_eig=float(me), tol_used=tol_used))
    return ChainReport(labels=CHAIN_LABELS, verdicts=tuple(verdicts),
                       all_hold=all(v.holds for v in verdicts),
                       worst_min_eig=float(min(min_eigs)),
                       term_values=tuple(float(np.trace(m)) for m in terms))


def symmetrize_stack(stack: np.ndarray) -> np.ndarray:
    return 0.5 * (stack + np.swapaxes(stack, -1, -2))


def op_chain(inst: OperatorBoundInstance, tol_rel: float = DEFAULT_OP_TOL,
             *, cache: PairCache | None = None) -> ChainReport:
    """Verify every consecutive Loewner step of the nine-term chain.

    Links three-to-four and six-to-seven compare the Kantorovich-weighted
    bounds with the plain three-term ones, so a passing chain certifies
    dominance as well.
    """
    return _chain_report(_chain_terms(inst, _materialize(inst, cache)), tol_rel)


def evaluate_all(inst: OperatorBoundInstance, tol_rel: float = DEFAULT_OP_TOL,
                 *, cache: PairCache | None = None) -> OperatorEvaluation:
    """Chain plus Heinz bounds, sharing one term materialization."""
    t = _materialize(inst, cache)
    heinz_lower, heinz_upper = _heinz_bounds(inst, t, tol_rel)
    return OperatorEvaluation(chain=_chain_report(_chain_terms(inst, t), tol_rel),
                              heinz_lower=heinz_lower, heinz_upper=heinz_upper)


def with_kappa(inst: OperatorBoundInstance, kappa: float) -> OperatorBoundInstance:
    """Copy of the instance with a replaced Kantorovich weight (mutation hook)."""
    return dataclasses.replace(inst, kappa=float(kappa))
