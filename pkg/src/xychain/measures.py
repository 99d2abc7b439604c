"""Entanglement measures: one-tangle, binary entropy, pair concurrence.

Units are ebits throughout (log base 2).  The adjacent-pair density is an
X-state by parity symmetry, for which the Wootters concurrence collapses to

    C2 = 2 * max(|alpha| - p2, |beta| - sqrt(p1*p3), 0),

with at most one of the two arguments positive for a valid density: the
first drives type I entanglement (positive-parity correlator alpha), the
second type II (negative-parity correlator beta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import PairContractions
from .errors import InvariantViolation

_TIE_TOL = 1e-10
_DENSITY_TOL = 1e-10


@dataclass(frozen=True)
class PairDensityX:
    """X-form two-qubit density: diagonal (p1, p2, p2, p3), corners alpha,
    central off-diagonal beta, in the basis (uu, ud, du, dd)."""

    p1: float
    p2: float
    p3: float
    alpha: complex
    beta: float

    def validate(self, tol: float = _DENSITY_TOL) -> None:
        tr = self.p1 + 2.0 * self.p2 + self.p3
        if abs(tr - 1.0) > tol:
            raise InvariantViolation(f"pair density trace {tr} != 1")
        if abs(self.alpha) > math.sqrt(max(self.p1 * self.p3, 0.0)) + tol:
            raise InvariantViolation("|alpha| exceeds sqrt(p1*p3)")
        if abs(self.beta) > self.p2 + tol:
            raise InvariantViolation("|beta| exceeds p2")

    def matrix(self) -> np.ndarray:
        m = np.zeros((4, 4), dtype=complex)
        m[0, 0], m[1, 1], m[2, 2], m[3, 3] = self.p1, self.p2, self.p2, self.p3
        m[0, 3] = np.conj(self.alpha)
        m[3, 0] = self.alpha
        m[1, 2] = m[2, 1] = self.beta
        return m

    @classmethod
    def from_contractions(cls, c: PairContractions) -> "PairDensityX":
        return cls(p1=c.p1, p2=c.p2, p3=c.p3, alpha=c.alpha, beta=c.beta)


@dataclass(frozen=True)
class EntanglementPoint:
    """One sample (t, C1, E1, C2, type, E2) of the evolution."""

    t: float
    C1: float
    E1: float
    C2: float
    c2_type: str  # "I", "II" or "none"
    E2: float


def c1_from_p(p: float) -> float:
    """Global concurrence 2*sqrt(p(1-p)) of the diagonal one-qubit density."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    return 2.0 * math.sqrt(p * (1.0 - p))


def entropy_binary(x: float) -> float:
    """Binary entropy -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"argument must be in [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def c2_x_state(pd: PairDensityX) -> tuple[float, str]:
    """Concurrence and type of an X-state pair density.

    Type I when |alpha| - p2 is the strict positive maximum, type II when
    |beta| - sqrt(p1*p3) is, "none" when C2 = 0.  Both arguments positive
    beyond tolerance is impossible for a valid density and raises.
    """
    arg1 = abs(pd.alpha) - pd.p2
    arg2 = abs(pd.beta) - math.sqrt(max(pd.p1 * pd.p3, 0.0))
    if arg1 > _TIE_TOL and arg2 > _TIE_TOL:
        raise InvariantViolation(
            f"type I ({arg1:.3e}) and type II ({arg2:.3e}) arguments "
            "simultaneously positive: invalid pair density")
    best = max(arg1, arg2, 0.0)
    if best <= 0.0:
        return 0.0, "none"
    kind = "I" if arg1 >= arg2 else "II"
    return 2.0 * best, kind


def eof_from_concurrence(c: float) -> float:
    """Entanglement of formation E2 of a two-qubit state with concurrence c."""
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"concurrence must be in [0, 1], got {c}")
    q_plus = (1.0 + math.sqrt(1.0 - c * c)) / 2.0
    return entropy_binary(q_plus)


def _check_density(rho: np.ndarray, dim: int, tol: float = _DENSITY_TOL) -> None:
    rho = np.asarray(rho)
    if rho.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} matrix, got {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > tol:
        raise ValueError("density matrix trace differs from 1")
    evals = np.linalg.eigvalsh(rho)
    if evals.min() < -tol:
        raise ValueError(f"density matrix not positive semidefinite "
                         f"(min eigenvalue {evals.min():.3e})")


def wootters_concurrence(rho2: np.ndarray) -> float:
    """General two-qubit concurrence via eigenvalues of rho * rho_tilde.

    rho_tilde = (sy x sy) rho* (sy x sy).  Using eigenvalues of the product
    (square-rooted afterwards) avoids explicit matrix square roots; tiny
    negative eigenvalues in [-1e-12, 0) are clamped to 0.
    """
    rho2 = np.asarray(rho2, dtype=complex)
    _check_density(rho2, 4)
    sy = np.array([[0.0, -1j], [1j, 0.0]])
    yy = np.kron(sy, sy)
    rho_tilde = yy @ rho2.conj() @ yy
    evals = np.linalg.eigvals(rho2 @ rho_tilde).real
    evals = np.where((evals < 0.0) & (evals > -1e-12), 0.0, evals)
    if evals.min() < 0.0:
        raise InvariantViolation(
            f"rho*rho_tilde eigenvalue {evals.min():.3e} < 0")
    lam = np.sort(np.sqrt(evals))[::-1]
    return max(lam[0] - lam[1] - lam[2] - lam[3], 0.0)


def one_tangle_from_density(rho1: np.ndarray) -> float:
    """Square root of the one-tangle, C1 = 2*sqrt(det rho1)."""
    rho1 = np.asarray(rho1, dtype=complex)
    _check_density(rho1, 2)
    det = np.linalg.det(rho1).real
    return 2.0 * math.sqrt(max(det, 0.0))


def entanglement_point(c: PairContractions) -> EntanglementPoint:
    """Assemble all entanglement quantities from one contraction sample."""
    c1 = c1_from_p(c.p)
    e1 = entropy_binary(c.p)
    c2, kind = c2_x_state(PairDensityX.from_contractions(c))
    e2 = eof_from_concurrence(min(c2, 1.0))
    return EntanglementPoint(t=c.t, C1=c1, E1=e1, C2=c2, c2_type=kind, E2=e2)


def entanglement_series(series: dict[str, np.ndarray]) -> dict[str, np.ndarray]:
    """Vectorized C1/C2 curves from a contraction series.

    Returns C1, C2, C2_I and C2_II arrays; C2_I/C2_II are the per-type
    concurrences (each zero where the other type dominates).
    """
    p = series["p"]
    c1 = 2.0 * np.sqrt(np.clip(p * (1.0 - p), 0.0, None))
    arg1 = np.abs(series["alpha"]) - series["p2"]
    arg2 = np.abs(series["beta"]) - np.sqrt(
        np.clip(series["p1"] * series["p3"], 0.0, None))
    c2_i = 2.0 * np.clip(arg1, 0.0, None)
    c2_ii = 2.0 * np.clip(arg2, 0.0, None)
    c2 = np.maximum(c2_i, c2_ii)
    return {"C1": c1, "C2": c2, "C2_I": c2_i, "C2_II": c2_ii}
