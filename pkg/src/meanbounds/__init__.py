"""Certified Young/Heinz mean inequalities with Kantorovich-constant refinements.

Three inequality families over positive inputs:

* ``scalar``   -- two-sided bounds of the weighted arithmetic mean of a pair
  of positive reals, with the full refinement catalogue and equality cases.
* ``operator`` -- the same bounds in the Loewner order over symmetric
  positive definite matrices whose spectra satisfy a sandwich condition.
* ``hs``       -- Frobenius-norm versions for arbitrary X between two
  positive definite matrices, with no spectral separation required.

The :mod:`meanbounds.fuzz` harness certifies every inequality chain by
randomized property testing with deterministic seeds, and the ``meanbounds``
CLI serializes verification, tightness and evaluation reports to JSON/CSV.
"""

from .errors import MatrixFileError, NumericError, SandwichError, ShapeError
from .fuzz import (
    MUTATIONS,
    FuzzConfig,
    FuzzReport,
    TightnessReport,
    fuzz_run,
    gen_sandwich_pair,
    gen_spd,
    tightness_report,
)
from .hs import (
    HsBoundReport,
    HsInstance,
    hs_chain,
    hs_gap_bounds,
    hs_norm,
    hs_refined_lower,
    hs_refined_upper,
    kappa_min,
    make_hs_instance,
)
from .operators import (
    ChainReport,
    OperatorBound,
    OperatorBoundInstance,
    make_instance,
    op_chain,
    op_heinz_bounds,
    op_refined_lower,
    op_refined_upper,
)
from .scalar import (
    BoundPair,
    Means,
    ScalarBoundSet,
    ScalarPair,
    Weight,
    all_bounds,
    exponents,
    heinz_refined,
    kantorovich,
    refined_lower,
    refined_upper,
    scalar_baselines,
    squared_bounds,
    young_means,
)
from .spd import (
    LoewnerVerdict,
    Orientation,
    SpdMatrix,
    SpectralSandwich,
    frac_power,
    loewner_leq,
    sandwich_bounds,
    weighted_means,
)

__version__ = "0.1.0"
