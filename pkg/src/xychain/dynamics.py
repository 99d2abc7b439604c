"""Closed-form time dependence of the fermionic pair contractions.

All observables of the evolved aligned state reduce to sums over the primed
momentum modes, evaluated in O(n) per time point:

    p(t)     = (2/n) sum' g^2 sin^2(w)/lam^2 * sin^2(lam t)
    beta(t)  = (2/n) sum' g^2 cos(w) sin^2(w)/lam^2 * sin^2(lam t)
    alpha(t) = (2/n) sum' g sin^2(w)/lam * sin(lam t)
               * [ (b - v cos w)/lam * sin(lam t) - i cos(lam t) ]
    p1(t)    = p^2 - beta^2 + |alpha|^2        (Wick factorization)

with p2 = p - p1 and p3 = 1 - 2p + p1.  Degenerate modes (lam = 0, possible
only at g = 0) contribute exactly zero because the g*sin(w) numerator
vanishes with lam.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chain import ChainParams, ModeSpectrum
from .errors import InvariantViolation

#: violations of [0,1] / positivity bounds below this are clamped as roundoff
CLAMP_TOL = 1e-10
#: violations above this abort: they indicate a bug, not bad input
ABORT_TOL = 1e-8


@dataclass(frozen=True)
class PairContractions:
    """Time-dependent averages defining rho_1 and the adjacent-pair rho_2."""

    t: float
    p: float
    beta: float
    alpha: complex
    p1: float
    p2: float
    p3: float


@dataclass(frozen=True)
class TimeGrid:
    """Uniform time grid [0, t_max] with step dt (samples = floor(t_max/dt)+1)."""

    t_max: float
    dt: float

    def __post_init__(self):
        if self.dt <= 0.0:
            raise ValueError(f"dt must be > 0, got {self.dt}")
        if self.t_max < 0.0:
            raise ValueError(f"t_max must be >= 0, got {self.t_max}")

    @property
    def samples(self) -> int:
        return int(math.floor(self.t_max / self.dt + 1e-12)) + 1

    def times(self) -> np.ndarray:
        return np.arange(self.samples) * self.dt


def default_time_grid(spectrum: ModeSpectrum, t_max: float) -> TimeGrid:
    """Grid sampling the fastest oscillation at least ~60 times per period."""
    lam_max = spectrum.lambda_max
    v = abs(spectrum.params.v)
    candidates = []
    if lam_max > 0.0:
        candidates.append(0.05 / lam_max)
    if v > 0.0:
        candidates.append(0.01 / v)
    dt = min(candidates) if candidates else 1.0
    return TimeGrid(t_max=t_max, dt=dt)


def _mode_arrays(spectrum: ModeSpectrum):
    """(omega, lam) arrays of the non-degenerate primed modes."""
    modes = [m for m in spectrum.positive if not m.degenerate]
    omega = np.array([m.omega for m in modes])
    lam = np.array([m.lam for m in modes])
    return omega, lam


def contraction_series(params: ChainParams, spectrum: ModeSpectrum,
                       times: np.ndarray) -> dict[str, np.ndarray]:
    """Vectorized contractions over an array of times.

    Returns arrays p, beta, alpha, p1, p2, p3 aligned with `times`.  Values
    violating positivity bounds by more than ABORT_TOL raise
    InvariantViolation; sub-CLAMP_TOL negatives are clamped to 0.
    """
    times = np.asarray(times, dtype=float)
    if times.size and times.min() < 0.0:
        raise ValueError("times must be >= 0")
    n, b, v, g = params.n, params.b, params.v, params.g
    omega, lam = _mode_arrays(spectrum)
    if omega.size == 0 or g == 0.0:
        zero = np.zeros_like(times)
        return {"p": zero, "beta": zero.copy(),
                "alpha": np.zeros_like(times, dtype=complex),
                "p1": zero.copy(), "p2": zero.copy(), "p3": 1.0 - zero}

    w = omega[:, None]
    lm = lam[:, None]
    s = np.sin(lm * times[None, :])
    c = np.cos(lm * times[None, :])
    sw2 = np.sin(w) ** 2
    d = b - v * np.cos(w)

    p = (2.0 / n) * np.sum(g * g * sw2 / lm**2 * s * s, axis=0)
    beta = (2.0 / n) * np.sum(g * g * np.cos(w) * sw2 / lm**2 * s * s, axis=0)
    alpha = (2.0 / n) * np.sum(
        g * sw2 / lm * s * (d / lm * s - 1j * c), axis=0)
    p1 = p * p - beta * beta + np.abs(alpha) ** 2
    p2 = p - p1
    p3 = 1.0 - 2.0 * p + p1

    if p.size:
        worst = max(0.0, float(p.max()) - 1.0, -float(p.min()),
                    -float(p1.min()), -float(p2.min()), -float(p3.min()),
                    float(np.max(np.abs(alpha)
                                 - np.sqrt(np.clip(p1 * p3, 0.0, None)))),
                    float(np.max(np.abs(beta) - p2)))
        if worst > ABORT_TOL:
            raise InvariantViolation(
                f"pair-contraction positivity broken by {worst:.3e} "
                f"(params={params})")
    p = np.clip(p, 0.0, 1.0)
    p1 = np.clip(p1, 0.0, None)
    p2 = np.clip(p2, 0.0, None)
    p3 = np.clip(p3, 0.0, None)
    return {"p": p, "beta": beta, "alpha": alpha, "p1": p1, "p2": p2, "p3": p3}


def spin_flip_probability(params: ChainParams, spectrum: ModeSpectrum,
                          t: float) -> float:
    """One-qubit spin-flip probability p(t)."""
    if t < 0.0:
        raise ValueError("t must be >= 0")
    n, g = params.n, params.g
    if g == 0.0:
        return 0.0
    omega, lam = _mode_arrays(spectrum)
    p = (2.0 / n) * float(np.sum(
        g * g * np.sin(omega) ** 2 / lam**2 * np.sin(lam * t) ** 2))
    if p > 1.0 + CLAMP_TOL or p < -CLAMP_TOL:
        raise InvariantViolation(f"p(t) = {p} outside [0, 1]")
    return min(max(p, 0.0), 1.0)


def pair_contractions(params: ChainParams, spectrum: ModeSpectrum,
                      t: float) -> PairContractions:
    """All adjacent-pair contractions at a single time."""
    if t < 0.0:
        raise ValueError("t must be >= 0")
    series = contraction_series(params, spectrum, np.array([t]))
    return PairContractions(
        t=t, p=float(series["p"][0]), beta=float(series["beta"][0]),
        alpha=complex(series["alpha"][0]), p1=float(series["p1"][0]),
        p2=float(series["p2"][0]), p3=float(series["p3"][0]))


def envelope_pm(params: ChainParams, spectrum: ModeSpectrum) -> float:
    """Field-dependent upper envelope p_m of p(t) (sin^2 factors set to 1)."""
    n, g = params.n, params.g
    if g == 0.0:
        return 0.0
    omega, lam = _mode_arrays(spectrum)
    return (2.0 / n) * float(np.sum(g * g * np.sin(omega) ** 2 / lam**2))


def evolve_series(params: ChainParams, grid: TimeGrid,
                  spectrum: ModeSpectrum | None = None
                  ) -> list[tuple[float, PairContractions]]:
    """Contractions at every grid time, O(n * samples) total."""
    from .chain import mode_spectrum
    if spectrum is None:
        spectrum = mode_spectrum(params)
    times = grid.times()
    series = contraction_series(params, spectrum, times)
    out = []
    for i, t in enumerate(times):
        out.append((float(t), PairContractions(
            t=float(t), p=float(series["p"][i]), beta=float(series["beta"][i]),
            alpha=complex(series["alpha"][i]), p1=float(series["p1"][i]),
            p2=float(series["p2"][i]), p3=float(series["p3"][i]))))
    return out
