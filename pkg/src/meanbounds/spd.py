"""Dense symmetric positive definite matrix machinery.

Everything is built on one primitive: the cached spectral decomposition
A = U diag(lam) U^T with lam sorted descending.  Fractional powers, weighted
operator means, Loewner-order comparison and spectral sandwich extraction
all reuse it.  Matrices are real symmetric only; products are re-symmetrized
as (M + M^T)/2 to kill roundoff asymmetry.  SpdMatrix values are immutable
after construction (arrays are frozen), so everything here is safe to share
across threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import NumericError, SandwichError, ShapeError

__all__ = [
    "SYMMETRY_TOL",
    "DEFAULT_LOEWNER_TOL",
    "SpdMatrix",
    "Orientation",
    "SpectralSandwich",
    "LoewnerVerdict",
    "OperatorMeans",
    "frac_power",
    "geometric_mean",
    "weighted_means",
    "loewner_leq",
    "sandwich_bounds",
    "symmetrize",
]

#: Relative asymmetry accepted before an input is rejected as non-symmetric.
SYMMETRY_TOL = 1e-12
#: Default relative tolerance for Loewner comparisons (chains of up to ~8
#: mean evaluations, each accurate to ~1e-12 relative).
DEFAULT_LOEWNER_TOL = 1e-9


def symmetrize(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m + m.T)


def _check_symmetric(m: np.ndarray, what: str) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f"{what} must be a square 2-d array, got shape {m.shape}")
    scale = max(1.0, float(np.linalg.norm(m)))
    if float(np.linalg.norm(m - m.T)) > SYMMETRY_TOL * scale:
        raise ShapeError(f"{what} is not symmetric to within {SYMMETRY_TOL:g} relative")
    return m


class SpdMatrix:
    """A real symmetric positive definite matrix with cached spectrum.

    Parameters
    ----------
    entries : (n, n) array_like
        Symmetric to within ``SYMMETRY_TOL`` relative; symmetrized exactly
        before decomposition.  All eigenvalues must be strictly positive.
    """

    __slots__ = ("entries", "eigenvalues", "eigenvectors")

    def __init__(self, entries):
        m = symmetrize(_check_symmetric(entries, "SpdMatrix entries"))
        try:
            lam, vec = np.linalg.eigh(m)
        except np.linalg.LinAlgError as exc:
            raise NumericError(f"eigendecomposition failed: {exc}") from exc
        if lam[0] <= 0.0:
            raise ValueError(
                f"matrix is not positive definite (min eigenvalue {lam[0]:.6g})")
        # descending order, to match the h = max/min conventions below
        self._init_fields(m, lam[::-1].copy(), vec[:, ::-1].copy())

    def _init_fields(self, entries, lam, vec):
        for arr in (entries, lam, vec):
            arr.setflags(write=False)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "eigenvalues", lam)
        object.__setattr__(self, "eigenvectors", vec)

    def __setattr__(self, name, value):
        raise AttributeError("SpdMatrix is immutable")

    @classmethod
    def from_spectrum(cls, eigenvalues, eigenvectors) -> "SpdMatrix":
        """Build from a known decomposition without re-running eigh.

        ``eigenvectors`` must have orthonormal columns matching ``eigenvalues``.
        """
        lam = np.asarray(eigenvalues, dtype=float)
        vec = np.asarray(eigenvectors, dtype=float)
        if np.any(lam <= 0.0):
            raise ValueError("all eigenvalues must be strictly positive")
        order = np.argsort(lam)[::-1]
        lam = lam[order].copy()
        vec = vec[:, order].copy()
        entries = symmetrize(vec @ np.diag(lam) @ vec.T)
        obj = object.__new__(cls)
        obj._init_fields(entries, lam, vec)
        return obj

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def max_eig(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def min_eig(self) -> float:
        return float(self.eigenvalues[-1])

    def power(self, t: float) -> "SpdMatrix":
        """Fractional power U diag(lam^t) U^T; SPD for every real t."""
        return SpdMatrix.from_spectrum(self.eigenvalues ** float(t), self.eigenvectors)

    def power_entries(self, t: float) -> np.ndarray:
        """Like :meth:`power` but returning a plain symmetric array."""
        v = self.eigenvectors
        return symmetrize((v * self.eigenvalues ** float(t)) @ v.T)

    def __repr__(self):
        return f"SpdMatrix(dim={self.dim}, eigenvalues={np.array2string(self.eigenvalues, precision=6)})"


def frac_power(a: SpdMatrix, t: float) -> SpdMatrix:
    """Fractional matrix power of an SPD matrix."""
    return a.power(t)


class Orientation(enum.Enum):
    A_BELOW_B = "A_below_B"
    B_BELOW_A = "B_below_A"


@dataclass(frozen=True)
class SpectralSandwich:
    """Constants 0 < m' <= m < M <= M' separating two spectra.

    ``orientation`` records which operand sits below; h = M/m > 1 measures
    the inner gap and h' = M'/m' the outer one.
    """

    m_prime: float
    m: float
    M: float
    M_prime: float
    h: float
    h_prime: float
    orientation: Orientation

    def __post_init__(self):
        if not (0.0 < self.m_prime <= self.m < self.M <= self.M_prime):
            raise ValueError(
                f"sandwich constants must satisfy 0 < m' <= m < M <= M', got "
                f"({self.m_prime!r}, {self.m!r}, {self.M!r}, {self.M_prime!r})")


@dataclass(frozen=True)
class LoewnerVerdict:
    """Outcome of one Loewner comparison P <= Q."""

    holds: bool
    min_eig: float
    tol_used: float


@dataclass(frozen=True)
class OperatorMeans:
    nabla: SpdMatrix
    sharp: SpdMatrix
    heinz: SpdMatrix


def _conjugation_base(a: SpdMatrix, b: SpdMatrix):
    """Eigendecomposition of X = A^(-1/2) B A^(-1/2), plus A^(1/2).

    The product is formed explicitly and re-symmetrized; at desk scale
    (n <= 256) stability concerns are minor and simplicity wins.
    """
    if a.dim != b.dim:
        raise ShapeError(f"dimension mismatch: {a.dim} vs {b.dim}")
    root = a.power_entries(0.5)
    inv_root = a.power_entries(-0.5)
    x = symmetrize(inv_root @ b.entries @ inv_root)
    try:
        lam, vec = np.linalg.eigh(x)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigendecomposition failed: {exc}") from exc
    if lam[0] <= 0.0:
        raise NumericError("conjugated operand lost positive definiteness")
    return root, lam, vec


def sharp_entries(a: SpdMatrix, b: SpdMatrix, exps) -> list[np.ndarray]:
    """Weighted geometric means A^(1/2) X^v A^(1/2) for several exponents at once.

    One decomposition of X serves every exponent; callers that need the
    whole chain of quarter powers use this to avoid repeated eigh calls.
    """
    root, lam, vec = _conjugation_base(a, b)
    out = []
    for t in exps:
        xv = symmetrize((vec * lam ** float(t)) @ vec.T)
        out.append(symmetrize(root @ xv @ root))
    return out


def geometric_mean(a: SpdMatrix, b: SpdMatrix, v: float) -> SpdMatrix:
    """A #_v B = A^(1/2) (A^(-1/2) B A^(-1/2))^v A^(1/2)."""
    return SpdMatrix(sharp_entries(a, b, [v])[0])


def weighted_means(a: SpdMatrix, b: SpdMatrix, v: float) -> OperatorMeans:
    """Weighted arithmetic, geometric and Heinz operator means for v in [0, 1]."""
    if not 0.0 <= v <= 1.0:
        raise ValueError(f"weighted_means requires v in [0, 1], got {v!r}")
    sharp_v, sharp_1mv = sharp_entries(a, b, [v, 1.0 - v])
    nabla = (1.0 - v) * a.entries + v * b.entries
    return OperatorMeans(
        nabla=SpdMatrix(nabla),
        sharp=SpdMatrix(sharp_v),
        heinz=SpdMatrix(0.5 * (sharp_v + sharp_1mv)),
    )


def _loewner_raw(p: np.ndarray, q: np.ndarray, tol_rel: float) -> LoewnerVerdict:
    scale = max(1.0, float(np.linalg.norm(p)), float(np.linalg.norm(q)))
    tol_used = tol_rel * scale
    try:
        min_eig = float(np.linalg.eigvalsh(symmetrize(q - p))[0])
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigendecomposition failed: {exc}") from exc
    return LoewnerVerdict(holds=min_eig >= -tol_used, min_eig=min_eig, tol_used=tol_used)


def loewner_leq(p, q, tol_rel: float = DEFAULT_LOEWNER_TOL) -> LoewnerVerdict:
    """Check P <= Q in the Loewner order.

    The verdict holds iff the smallest eigenvalue of Q - P stays above
    -tol_rel * max(1, ||P||_F, ||Q||_F).
    """
    p = _check_symmetric(p.entries if isinstance(p, SpdMatrix) else p, "P")
    q = _check_symmetric(q.entries if isinstance(q, SpdMatrix) else q, "Q")
    if p.shape != q.shape:
        raise ShapeError(f"dimension mismatch: {p.shape} vs {q.shape}")
    return _loewner_raw(p, q, tol_rel)


def sandwich_bounds(a: SpdMatrix, b: SpdMatrix, margin: float = 0.0) -> SpectralSandwich:
    """Tightest sandwich constants from the two spectra.

    Orientation A_below_B requires max_eig(A) < min_eig(B) * (1 - margin);
    the swapped case is symmetric.  Overlapping spectra raise a
    :class:`SandwichError` carrying the shared interval.
    """
    if a.dim != b.dim:
        raise ShapeError(f"dimension mismatch: {a.dim} vs {b.dim}")
    if margin < 0.0:
        raise ValueError(f"margin must be >= 0, got {margin!r}")
    if a.max_eig < b.min_eig * (1.0 - margin):
        lo, hi, orient = a, b, Orientation.A_BELOW_B
    elif b.max_eig < a.min_eig * (1.0 - margin):
        lo, hi, orient = b, a, Orientation.B_BELOW_A
    else:
        overlap = (max(a.min_eig, b.min_eig), min(a.max_eig, b.max_eig))
        raise SandwichError(
            f"spectra overlap on [{overlap[0]:.6g}, {overlap[1]:.6g}]; "
            f"no sandwich ordering with margin {margin:g} exists", overlap)
    return SpectralSandwich(
        m_prime=lo.min_eig, m=lo.max_eig, M=hi.min_eig, M_prime=hi.max_eig,
        h=hi.min_eig / lo.max_eig, h_prime=hi.max_eig / lo.min_eig,
        orientation=orient)
