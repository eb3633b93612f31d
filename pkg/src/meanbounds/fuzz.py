"""Randomized certification harness for all three inequality families.

``fuzz_run`` draws instances (log-uniform scalars, random-rotation SPD
matrices, sandwiched pairs), evaluates every bound of the configured family
at the fixed special weights {1/4, 1/2, 3/4} plus random weights, counts
violations beyond the configured relative tolerance, tracks the worst slack
with a reproducible (seed, trial) fingerprint, and records exact per-bound
slack quantiles (all slacks are stored; nothing is sketched).

Dominance checks compare the Kantorovich-refined bounds against their
three-term baselines; for the matrix families these are the corresponding
adjacent chain links.

The mutation catalogue is the harness's own acceptance test: each entry
perturbs one ingredient of a refined bound and must produce violations,
proving the verifier can fail.  ``dropped_refinement_term`` and
``flipped_reverse_correction_sign`` loosen the direct inequality rather
than break it, so they are caught by the dominance checks.

Determinism: identical FuzzConfig values produce bit-identical FuzzReports.
Matrix trials derive per-trial generators via SeedSequence(seed,
spawn_key=(trial,)), so trial order or parallel scheduling cannot change
results; the scalar family draws its batches vectorized from one seeded
stream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import hs as hs_mod
from . import operators as op
from . import scalar as sc
from .spd import SpdMatrix, sandwich_bounds

__all__ = [
    "FAMILIES",
    "QUANTILES",
    "DOMINANCE_TOL",
    "MUTATIONS",
    "Mutation",
    "FuzzConfig",
    "FuzzReport",
    "TightnessReport",
    "default_config",
    "gen_spd",
    "gen_sandwich_pair",
    "fuzz_run",
    "tightness_report",
]

FAMILIES = ("scalar", "operator", "hs")
QUANTILES = (0.0, 0.01, 0.05, 0.25, 0.5, 0.75, 0.95, 0.99, 1.0)

#: Absolute floor for dominance margins; shared-prefix summation makes the
#: unmutated margins >= 0 exactly on the scalar family.
DOMINANCE_TOL = 1e-14

_FAMILY_TOL = {"scalar": sc.DEFAULT_TOL, "operator": op.DEFAULT_OP_TOL,
               "hs": hs_mod.DEFAULT_HS_TOL}
#: Scalar inputs span 12 decades (benign conditioning for the identities);
#: matrix spectra are kept to 6 decades.
_FAMILY_SPECTRUM = {"scalar": (1e-6, 1e6), "operator": (1e-3, 1e3), "hs": (1e-3, 1e3)}


class Mutation(NamedTuple):
    name: str
    family: str
    description: str


MUTATIONS: dict[str, Mutation] = {m.name: m for m in (
    Mutation("wrong_branch", "scalar",
             "evaluate the v>1/2 form where v<=1/2 applies and vice versa"),
    Mutation("strengthened_kantorovich_exponent", "scalar",
             "double the rhat1 exponent on the Kantorovich weight"),
    Mutation("dropped_refinement_term", "scalar",
             "omit the quarter-power refinement term from the refined bounds"),
    Mutation("swapped_quarter_points", "scalar",
             "swap the sqrt(a)- and sqrt(b)-anchored quarter squares"),
    Mutation("flipped_reverse_correction_sign", "scalar",
             "add instead of subtract the correction in the refined upper bound"),
    Mutation("per_entry_ratio", "operator",
             "weight with the outer spectral ratio M'/m' instead of the inner M/m"),
    Mutation("kappa_max_instead_of_min", "hs",
             "use the largest pairwise Kantorovich constant instead of the least"),
)}


@dataclass(frozen=True)
class FuzzConfig:
    """Generator and tolerance settings for one fuzz run.

    ``spectrum_range`` and ``tol_rel`` default per family (see module
    constants); ``v_grid`` weights are always evaluated in addition to
    ``v_random`` uniform draws per trial.
    """

    family: str
    trials: int
    dims: tuple[int, int] = (2, 8)
    spectrum_range: tuple[float, float] | None = None
    sandwich_gap: float = 0.1
    v_grid: tuple[float, ...] = (0.25, 0.5, 0.75)
    v_random: int = 1
    seed: int = 0
    tol_rel: float | None = None
    sample_cap: int = 256
    mutation: str | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.spectrum_range is None:
            object.__setattr__(self, "spectrum_range", _FAMILY_SPECTRUM[self.family])
        lo, hi = self.spectrum_range
        if not (0.0 < lo <= hi and np.isfinite(hi)):
            raise ValueError(f"spectrum_range must satisfy 0 < lo <= hi, got {self.spectrum_range}")
        if self.tol_rel is None:
            object.__setattr__(self, "tol_rel", _FAMILY_TOL[self.family])
        if self.family == "operator" and not self.sandwich_gap > 0.0:
            raise ValueError("operator family requires sandwich_gap > 0")
        if not (1 <= self.dims[0] <= self.dims[1]):
            raise ValueError(f"dims must satisfy 1 <= lo <= hi, got {self.dims}")
        if any(not 0.0 < v < 1.0 for v in self.v_grid):
            raise ValueError("v_grid entries must lie in (0, 1)")
        if self.v_random < 0 or (self.v_random == 0 and not self.v_grid):
            raise ValueError("need at least one weight per trial")
        if self.mutation is not None:
            if self.mutation not in MUTATIONS:
                raise ValueError(f"unknown mutation {self.mutation!r}; "
                                 f"catalogue: {sorted(MUTATIONS)}")
            if MUTATIONS[self.mutation].family != self.family:
                raise ValueError(
                    f"mutation {self.mutation!r} targets family "
                    f"{MUTATIONS[self.mutation].family!r}, not {self.family!r}")


def default_config(family: str, trials: int = 1000, **overrides) -> FuzzConfig:
    return FuzzConfig(family=family, trials=trials, **overrides)


@dataclass(frozen=True)
class FuzzReport:
    """Result of one fuzz run; a pure function of its FuzzConfig."""

    config: FuzzConfig
    trials_run: int
    checks: int
    violations: int
    dominance_violations: int
    worst: dict | None
    tightness: dict[str, dict[str, float]]
    samples: tuple[dict, ...]

    @property
    def passed(self) -> bool:
        return self.violations == 0 and self.dominance_violations == 0


@dataclass(frozen=True)
class TightnessReport:
    """Improvement margins of the refined bounds over their baselines."""

    config: FuzzConfig
    trials_run: int
    improvements: dict[str, dict]   # name -> {count, negative, quantiles..., max_instance}


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def _orthogonal_from_rng(rng, n: int) -> np.ndarray:
    # QR of a Gaussian matrix with the R-diagonal sign fix (Haar measure)
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.where(np.diag(r) < 0.0, -1.0, 1.0)


def _spd_from_rng(rng, n: int, spectrum_range) -> SpdMatrix:
    lo, hi = spectrum_range
    lam = np.exp(rng.uniform(np.log(lo), np.log(hi), n))
    return SpdMatrix.from_spectrum(lam, _orthogonal_from_rng(rng, n))


def gen_spd(n: int, spectrum_range, seed: int) -> SpdMatrix:
    """Random SPD matrix with log-uniform spectrum; deterministic per inputs."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lo, hi = spectrum_range
    if not 0.0 < lo <= hi:
        raise ValueError(f"spectrum_range must satisfy 0 < lo <= hi, got {spectrum_range}")
    return _spd_from_rng(np.random.default_rng(seed), n, spectrum_range)


def _sandwich_from_rng(rng, n, gap, spectrum_range):
    lo, hi = spectrum_range
    split = np.exp(rng.uniform(np.log(lo), np.log(hi / (1.0 + gap))))
    first = _spd_from_rng(rng, n, (lo, split))
    second = _spd_from_rng(rng, n, (split * (1.0 + gap), hi))
    if rng.random() < 0.5:
        return first, second
    return second, first


def gen_sandwich_pair(n: int, gap: float, seed: int,
                      spectrum_range=(1e-3, 1e3)) -> tuple[SpdMatrix, SpdMatrix]:
    """Pair with separated spectra: the inner ratio satisfies h >= 1 + gap.

    Orientation (which operand sits below) is randomized.
    """
    if not gap > 0.0:
        raise ValueError(f"gap must be > 0, got {gap!r}")
    if n < 1:
        raise ValueError("n must be >= 1")
    lo, hi = spectrum_range
    if not (0.0 < lo and hi > lo * (1.0 + gap)):
        raise ValueError(
            f"spectrum_range {spectrum_range} leaves no room for gap {gap!r}")
    return _sandwich_from_rng(np.random.default_rng(seed), n, gap, spectrum_range)


def _random_weights(rng, count: int) -> list[float]:
    return [float(v) for v in np.clip(rng.uniform(0.0, 1.0, count), 1e-12, 1.0 - 1e-12)]


# ---------------------------------------------------------------------------
# Accumulator
# ---------------------------------------------------------------------------

def _row(family, theorem, branch, n, v, h, lhs, rhs, slack, seed, trial) -> dict:
    return {"family": family, "theorem": theorem, "branch": branch, "n": int(n),
            "v": float(v), "h": float(h), "lhs": float(lhs), "rhs": float(rhs),
            "slack": float(slack), "seed": int(seed), "trial": int(trial)}


class _Acc:
    """Mutable run state: counters, slack pools, worst/best fingerprints."""

    def __init__(self, cfg: FuzzConfig):
        self.cfg = cfg
        self.checks = 0
        self.violations = 0
        self.dominance_violations = 0
        self.worst: dict | None = None
        self.pools: dict[str, list[np.ndarray]] = {}
        self.best: dict[str, dict] = {}
        self.samples: list[dict] = []
        self._violation_rows = 0

    # -- vectorized path (scalar family) ------------------------------------

    def add_vector(self, key: str, values: np.ndarray, rowmaker: Callable[[int], dict],
                   *, dominance: bool = False, tol: float | None = None,
                   sample_first: int = 0, pool: bool = True):
        values = np.atleast_1d(np.asarray(values, dtype=float))
        tol = (DOMINANCE_TOL if dominance else self.cfg.tol_rel) if tol is None else tol
        self.checks += values.size
        bad = np.nonzero(values < -tol)[0]
        if dominance:
            self.dominance_violations += bad.size
        else:
            self.violations += bad.size
        if pool:
            self.pools.setdefault(key, []).append(values)
        i = int(np.argmin(values))
        if self.worst is None or values[i] < self.worst["slack"]:
            self.worst = rowmaker(i)
        if dominance:
            j = int(np.argmax(values))
            if key not in self.best or values[j] > self.best[key]["slack"]:
                self.best[key] = rowmaker(j)
        for idx in range(min(sample_first, values.size)):
            self.samples.append(rowmaker(idx))
        for idx in bad[: max(0, self.cfg.sample_cap - self._violation_rows)]:
            self.samples.append(rowmaker(int(idx)))
            self._violation_rows += 1

    # -- per-instance path (matrix families) --------------------------------

    def add_value(self, key: str, value: float, row: dict, *, holds: bool,
                  dominance: bool = False, sample: bool = False, pool: bool = True):
        self.checks += 1
        if not holds:
            if dominance:
                self.dominance_violations += 1
            else:
                self.violations += 1
            if self._violation_rows < self.cfg.sample_cap:
                self.samples.append(row)
                self._violation_rows += 1
        elif sample:
            self.samples.append(row)
        if pool:
            self.pools.setdefault(key, []).append(value)
        if self.worst is None or value < self.worst["slack"]:
            self.worst = row
        if dominance and (key not in self.best or value > self.best[key]["slack"]):
            self.best[key] = row

    # -- reports -------------------------------------------------------------

    def _quantiles(self) -> dict[str, dict[str, float]]:
        out = {}
        for key, chunks in self.pools.items():
            data = np.concatenate([np.atleast_1d(np.asarray(c, dtype=float))
                                   for c in chunks])
            qs = np.quantile(data, QUANTILES)
            entry = {"count": int(data.size)}
            entry.update({f"q{q:.2f}": float(x) for q, x in zip(QUANTILES, qs)})
            out[key] = entry
        return out

    def fuzz_report(self, trials_run: int) -> FuzzReport:
        return FuzzReport(config=self.cfg, trials_run=trials_run, checks=self.checks,
                          violations=self.violations,
                          dominance_violations=self.dominance_violations,
                          worst=self.worst, tightness=self._quantiles(),
                          samples=tuple(self.samples))

    def tightness(self, trials_run: int) -> TightnessReport:
        quant = self._quantiles()
        improvements = {}
        for key, row in self.best.items():
            entry = dict(quant.get(key, {}))
            data = np.concatenate([np.atleast_1d(np.asarray(c, dtype=float))
                                   for c in self.pools[key]])
            entry["negative"] = int(np.count_nonzero(data < -DOMINANCE_TOL))
            entry["max_instance"] = row
            improvements[key] = entry
        return TightnessReport(config=self.cfg, trials_run=trials_run,
                               improvements=improvements)


# ---------------------------------------------------------------------------
# Scalar family
# ---------------------------------------------------------------------------

_SCALAR_LOWER = ("gap_lower", "ratio_lower", "threeterm_lower", "refined_lower",
                 "heinz_lower", "squared_lower")
_SCALAR_UPPER = ("gap_upper", "ratio_upper", "threeterm_upper", "refined_upper",
                 "heinz_upper", "squared_upper")


def _refined_mutation_kwargs(mutation: str | None, v):
    lower: dict = {}
    upper: dict = {}
    if mutation == "wrong_branch":
        wrong = np.asarray(v) > 0.5
        lower["low_mask"] = wrong
        upper["low_mask"] = wrong
    elif mutation == "strengthened_kantorovich_exponent":
        lower["rhat1_scale"] = 2.0
        upper["rhat1_scale"] = 2.0
    elif mutation == "dropped_refinement_term":
        lower["drop_refinement"] = True
        upper["drop_refinement"] = True
    elif mutation == "swapped_quarter_points":
        lower["swap_quarter"] = True
        upper["swap_quarter"] = True
    elif mutation == "flipped_reverse_correction_sign":
        upper["flip_sign"] = True
    return lower, upper


def _scalar_batch(acc: _Acc, a, b, v, trial_idx, sample_first: int):
    cfg = acc.cfg
    h = b / a
    varr = np.broadcast_to(np.asarray(v, dtype=float), a.shape)
    low = varr <= 0.5

    def maker(name, branch_mode, lhs, rhs, rel):
        lhs = np.broadcast_to(np.asarray(lhs, dtype=float), a.shape)
        rhs = np.broadcast_to(np.asarray(rhs, dtype=float), a.shape)

        def make(i: int) -> dict:
            branch = branch_mode if branch_mode == "both" else ("low" if low[i] else "high")
            return _row("scalar", name, branch, 1, varr[i], h[i], lhs[i], rhs[i],
                        float(rel[i]), cfg.seed, trial_idx[i])
        return make

    kw_lower, kw_upper = _refined_mutation_kwargs(cfg.mutation, v)
    evaluated: dict[str, tuple] = {}
    for name in _SCALAR_LOWER + _SCALAR_UPPER:
        kernel = sc._LOWER_KERNELS.get(name) or sc._UPPER_KERNELS[name]
        kw = kw_lower if name == "refined_lower" else kw_upper if name == "refined_upper" else {}
        lhs, terms = kernel(a, b, v, **kw)
        rhs = sc._sum_terms(terms)
        slack = lhs - rhs if name in _SCALAR_LOWER else rhs - lhs
        rel = slack / sc.slack_scale(lhs, rhs)
        evaluated[name] = (lhs, rhs)
        branch_mode = "both" if name in sc._UNBRANCHED else "branched"
        acc.add_vector(name, rel, maker(name, branch_mode, lhs, rhs, rel),
                       sample_first=sample_first)

    # mean ordering sanity: arith >= geo, sqrt(ab) <= heinz <= (a+b)/2
    arith = (1.0 - varr) * a + varr * b
    geo = sc.geo_mean(a, b, varr)
    heinz = sc.heinz_mean(a, b, varr)
    mid = 0.5 * (a + b)
    root = np.sqrt(a * b)
    for name, lhs_arr, rhs_arr in (("young_order", arith, geo),
                                   ("heinz_above_geo", heinz, root),
                                   ("heinz_below_arith", mid, heinz)):
        rel = (lhs_arr - rhs_arr) / sc.slack_scale(lhs_arr, rhs_arr)
        acc.add_vector(name, rel, maker(name, "both", lhs_arr, rhs_arr, rel), pool=False)

    # dominance of the refined bounds over the three-term baselines
    # (absolute margins; >= 0 exactly by shared-prefix summation when unmutated)
    dom_lower = evaluated["refined_lower"][1] - evaluated["threeterm_lower"][1]
    dom_upper = evaluated["threeterm_upper"][1] - evaluated["refined_upper"][1]
    for name, margin, base, refined in (
            ("improvement_lower", dom_lower, "threeterm_lower", "refined_lower"),
            ("improvement_upper", dom_upper, "threeterm_upper", "refined_upper")):
        margin = np.broadcast_to(np.asarray(margin, dtype=float), a.shape)
        acc.add_vector(name, margin,
                       maker(name, "branched", evaluated[base][1], evaluated[refined][1], margin),
                       dominance=True)


def _fuzz_scalar(cfg: FuzzConfig) -> _Acc:
    acc = _Acc(cfg)
    rng = np.random.default_rng(np.random.SeedSequence(cfg.seed))
    lo, hi = cfg.spectrum_range
    a = np.exp(rng.uniform(np.log(lo), np.log(hi), cfg.trials))
    b = np.exp(rng.uniform(np.log(lo), np.log(hi), cfg.trials))
    trial_idx = np.arange(cfg.trials)
    batches: list = [("grid", float(v)) for v in cfg.v_grid]
    for _ in range(cfg.v_random):
        batches.append(("random", np.clip(rng.uniform(0.0, 1.0, cfg.trials),
                                          1e-12, 1.0 - 1e-12)))
    n_checks = len(_SCALAR_LOWER) + len(_SCALAR_UPPER)
    sample_first = max(1, cfg.sample_cap // max(1, n_checks * len(batches)))
    for _, v in batches:
        _scalar_batch(acc, a, b, v, trial_idx, sample_first)
    return acc


# ---------------------------------------------------------------------------
# Operator family
# ---------------------------------------------------------------------------

# chain link index -> dominance role (see operators.CHAIN_LABELS)
_OP_DOMINANCE_LINKS = {3: "improvement_lower", 6: "improvement_upper"}
_HS_DOMINANCE_LINKS = {2: "improvement_lower", 7: "improvement_upper"}


def _fuzz_operator(cfg: FuzzConfig) -> _Acc:
    acc = _Acc(cfg)
    rows_per_trial = (len(op.CHAIN_LABELS) - 1 + 2) * (len(cfg.v_grid) + cfg.v_random)
    sample_trials = max(1, cfg.sample_cap // max(1, rows_per_trial))
    for trial in range(cfg.trials):
        rng = np.random.default_rng(np.random.SeedSequence(cfg.seed, spawn_key=(trial,)))
        n = int(rng.integers(cfg.dims[0], cfg.dims[1] + 1))
        a, b = _sandwich_from_rng(rng, n, cfg.sandwich_gap, cfg.spectrum_range)
        sandwich = sandwich_bounds(a, b)
        kappa = sc.kantorovich(sandwich.h ** 0.25)
        if cfg.mutation == "per_entry_ratio":
            kappa = sc.kantorovich(sandwich.h_prime ** 0.25)
        cache = op.prepare_pair(a, b)
        weights = list(cfg.v_grid) + _random_weights(rng, cfg.v_random)
        sample = trial < sample_trials
        for v in weights:
            inst = op.OperatorBoundInstance(A=a, B=b, weight=sc.exponents(v),
                                            sandwich=sandwich, kappa=kappa)
            ev = op.evaluate_all(inst, cfg.tol_rel, cache=cache)
            for i, verdict in enumerate(ev.chain.verdicts):
                scale = verdict.tol_used / cfg.tol_rel
                rel = verdict.min_eig / scale
                label = f"chain:{ev.chain.labels[i]}->{ev.chain.labels[i + 1]}"
                row = _row("operator", label, "low" if v <= 0.5 else "high", n, v,
                           sandwich.h, ev.chain.term_values[i], ev.chain.term_values[i + 1],
                           rel, cfg.seed, trial)
                dom = _OP_DOMINANCE_LINKS.get(i)
                if dom is not None:
                    acc.add_value(dom, verdict.min_eig, dict(row, theorem=dom),
                                  holds=verdict.holds, dominance=True, pool=True)
                pool_key = {4: "op_lower", 5: "op_upper"}.get(i)
                acc.add_value(pool_key or label, rel, row, holds=verdict.holds,
                              sample=sample, pool=pool_key is not None)
            for name, bound in (("op_heinz_lower", ev.heinz_lower),
                                ("op_heinz_upper", ev.heinz_upper)):
                scale = bound.verdict.tol_used / cfg.tol_rel
                rel = bound.verdict.min_eig / scale
                row = _row("operator", name, "low" if v <= 0.5 else "high", n, v,
                           sandwich.h, float(np.trace(bound.lhs)),
                           float(np.trace(bound.rhs)), rel, cfg.seed, trial)
                acc.add_value(name, rel, row, holds=bound.verdict.holds, sample=sample)
    return acc


# ---------------------------------------------------------------------------
# Hilbert-Schmidt family
# ---------------------------------------------------------------------------

def _fuzz_hs(cfg: FuzzConfig) -> _Acc:
    acc = _Acc(cfg)
    rows_per_trial = (len(hs_mod.HS_CHAIN_LABELS) - 1 + 2) * (len(cfg.v_grid) + cfg.v_random)
    sample_trials = max(1, cfg.sample_cap // max(1, rows_per_trial))
    for trial in range(cfg.trials):
        rng = np.random.default_rng(np.random.SeedSequence(cfg.seed, spawn_key=(trial,)))
        n = int(rng.integers(cfg.dims[0], cfg.dims[1] + 1))
        a = _spd_from_rng(rng, n, cfg.spectrum_range)
        b = _spd_from_rng(rng, n, cfg.spectrum_range)
        x = rng.standard_normal((n, n))
        kappa = (hs_mod.kappa_max(a, b) if cfg.mutation == "kappa_max_instead_of_min"
                 else hs_mod.kappa_min(a, b))
        # spectral-approach ratio at which the least constant is attained
        t_star = float(np.sqrt(np.outer(a.eigenvalues, 1.0 / b.eigenvalues)).flat[
            int(np.argmin(hs_mod._pairwise_kantorovich(a, b)))])
        weights = list(cfg.v_grid) + _random_weights(rng, cfg.v_random)
        sample = trial < sample_trials
        for v in weights:
            inst = hs_mod.make_hs_instance(a, b, x, v)
            branch = "low" if v <= 0.5 else "high"
            for name, report in (("hs_lower", hs_mod.hs_refined_lower(inst, kappa=kappa,
                                                                      tol_rel=cfg.tol_rel)),
                                 ("hs_upper", hs_mod.hs_refined_upper(inst, kappa=kappa,
                                                                      tol_rel=cfg.tol_rel))):
                scale = report.tol_used / cfg.tol_rel
                rel = report.slack / scale
                row = _row("hs", name, branch, n, v, t_star, report.lhs_sq,
                           report.rhs_sq, rel, cfg.seed, trial)
                acc.add_value(name, rel, row, holds=report.holds, sample=sample)
            chain = hs_mod.hs_chain(inst, kappa=kappa, tol_rel=cfg.tol_rel)
            for i, verdict in enumerate(chain.verdicts):
                scale = verdict.tol_used / cfg.tol_rel
                rel = verdict.min_eig / scale
                label = f"chain:{chain.labels[i]}->{chain.labels[i + 1]}"
                row = _row("hs", label, branch, n, v, t_star, chain.term_values[i],
                           chain.term_values[i + 1], rel, cfg.seed, trial)
                dom = _HS_DOMINANCE_LINKS.get(i)
                if dom is not None:
                    acc.add_value(dom, verdict.min_eig, dict(row, theorem=dom),
                                  holds=verdict.holds, dominance=True, pool=True)
                acc.add_value(label, rel, row, holds=verdict.holds,
                              sample=sample, pool=False)
    return acc


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------

_RUNNERS = {"scalar": _fuzz_scalar, "operator": _fuzz_operator, "hs": _fuzz_hs}


def fuzz_run(cfg: FuzzConfig) -> FuzzReport:
    """Run the configured family's full bound suite; see the module docstring."""
    return _RUNNERS[cfg.family](cfg).fuzz_report(cfg.trials)


def tightness_report(cfg: FuzzConfig) -> TightnessReport:
    """Improvement-margin quantiles and maximizing instances for the family."""
    if cfg.mutation is not None:
        raise ValueError("tightness reports are defined for unmutated runs")
    return _RUNNERS[cfg.family](cfg).tightness(cfg.trials)
