"""Closed-form limits and small-n formulas, used as independent oracles.

Each function implements one exact limit of the chain dynamics:

* n = 2 and n = 3 maximum-entanglement curves in the scaled field
  s = b/g (n = 2) or s = (b - v/2)/g (n = 3),
* small-anisotropy resonance limits at the fields b_k = v*cos(w_k),
* the strictly periodic isotropic zero-field case (g = v, b = 0, n >= 4),
* short-time expansions, large-field asymptotics and the n = 4 dip fields.

A note on two misprints in the source expansions: the short-time C1 series
carries a duplicated /24 in its printed form; composing C1 = 2*sqrt(p(1-p))
with the p(t) series gives the coefficient used here,
C1 ~ sqrt(2) g t [1 - t^2 (v^2 + 4 b^2 + 9 g^2)/24].  Likewise the validity
condition of the large-anisotropy burst reads g >> (b, v).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

#: crossover |s| between the n=3 type II peak flank and the type I plateau
S_C_N3 = math.sqrt(3.0) - 1.5


@dataclass(frozen=True)
class ScaledField:
    """Dimensionless scaled field with the defining convention attached."""

    s: float
    tag: str  # "n2": s = b/g ; "n3": s = (b - v/2)/g

    def __post_init__(self):
        if self.tag not in ("n2", "n3"):
            raise ValueError(f"unknown scaled-field tag {self.tag!r}")
        if not math.isfinite(self.s):
            raise ValueError("scaled field must be finite")


def _primed_omega(n: int, k) -> float:
    two_k = int(2 * Fraction(k))
    if two_k % 2 == 0 or not 1 <= two_k <= 2 * (n // 2) - 1:
        raise ValueError(f"k = {k} is not a primed mode of an n = {n} chain")
    return math.pi * two_k / n


def c1max_n2(s: float) -> float:
    """Maximum global concurrence of the 2-qubit chain at s = b/g."""
    s = abs(s)
    if s <= 1.0:
        return 1.0
    return 2.0 * s / (s * s + 1.0)


def c1max_n3(s: float) -> float:
    """Maximum global concurrence of the 3-qubit chain at s = (b - v/2)/g."""
    s = abs(s)
    if s <= 0.5:
        return 1.0
    return math.sqrt(2.0 * s * s + 0.5) / (s * s + 0.75)


def c2_of_p_n3(p: float) -> tuple[float, str]:
    """Pairwise concurrence along the 3-qubit evolution manifold.

    C2 = |sqrt(p(2-3p)) - p| on p in [0, 2/3]; type I below the critical
    value p = 1/2, type II above, vanishing exactly at p = 1/2.
    """
    if not 0.0 <= p <= 2.0 / 3.0 + 1e-15:
        raise ValueError(f"p must be in [0, 2/3], got {p}")
    p = min(p, 2.0 / 3.0)
    root = math.sqrt(max(p * (2.0 - 3.0 * p), 0.0))
    c2 = abs(root - p)
    if c2 == 0.0 or abs(p - 0.5) < 1e-15:
        return c2, "none"
    return c2, ("I" if p < 0.5 else "II")


def c2max_n3(s: float) -> float:
    """Maximum pairwise concurrence of the 3-qubit chain.

    Sharp type II peak at s = 0 above a strict type I plateau of 1/3 for
    s_c <= |s| <= 3/2, with s_c = sqrt(3) - 3/2.
    """
    s = abs(s)
    denom = s * s + 0.75
    if s <= S_C_N3:
        return (0.5 - s) / denom
    if s <= 1.5:
        return 1.0 / 3.0
    return (s - 0.5) / denom


def resonance_limit_c1(n: int) -> float:
    """Limit of the on-resonance C1 maximum for vanishing anisotropy."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if n <= 4:
        return 1.0
    return 2.0 * math.sqrt((2.0 / n) * (1.0 - 2.0 / n))


def resonance_limit_c2_typeII(n: int, k) -> tuple[float, bool]:
    """Small-anisotropy limit of the type II C2 peak at b_k.

    Returns (height, positive) where `positive` reports whether the
    closed-form expression is positive, i.e. whether
    sin^2(w_k) <= [1 - 2/n + sqrt((1 - 2/n)^2 + 4/n^2)]^(-1).
    """
    w = _primed_omega(n, k)
    sw = math.sin(w)
    raw = (4.0 / n) * (abs(math.cos(w))
                       - sw * math.sqrt(1.0 - 4.0 / n
                                        + 4.0 / n**2 * sw * sw))
    bound = 1.0 / (1.0 - 2.0 / n
                   + math.sqrt((1.0 - 2.0 / n) ** 2 + 4.0 / n**2))
    return max(raw, 0.0), sw * sw <= bound


def resonance_limit_c2_typeI(n: int, k) -> tuple[float, float]:
    """Small-anisotropy limit of the type I C2 maximum at b_k.

    Returns (height, cos_2lt) where cos_2lt is the value of cos(2 lambda_k t)
    at which the maximum is attained.
    """
    w = _primed_omega(n, k)
    sw2 = math.sin(w) ** 2
    a = 1.0 - (2.0 / n) * sw2
    height = (2.0 / n) * (math.sqrt(a * a + sw2) - a)
    cos_2lt = a / math.sqrt(sw2 + a * a)
    return height, cos_2lt


def harmonic_limit_series(n: int, k, g: float, t: float
                          ) -> tuple[float, float, float, float]:
    """Purely harmonic on-resonance evolution for g -> 0.

    Returns (p, beta, |alpha|, t_k) with lambda_k = g*sin(w_k) and first
    maximum time t_k = pi/(2 g sin w_k).
    """
    if g <= 0.0:
        raise ValueError("the harmonic limit requires g > 0")
    w = _primed_omega(n, k)
    lam = g * math.sin(w)
    p = (2.0 / n) * math.sin(lam * t) ** 2
    beta = (2.0 / n) * math.cos(w) * math.sin(lam * t) ** 2
    alpha_abs = (1.0 / n) * abs(math.sin(w) * math.sin(2.0 * lam * t))
    t_k = math.pi / (2.0 * lam)
    return p, beta, alpha_abs, t_k


def isotropic_zero_field(v: float, t: float) -> tuple[float, float, float]:
    """Strictly periodic g = v, b = 0 case, valid for any n >= 4.

    Returns (p, C1, C2) with all quasiparticle energies equal to v.
    """
    if v <= 0.0:
        raise ValueError("v must be > 0")
    s = math.sin(v * t)
    c = math.cos(v * t)
    p = 0.5 * s * s
    c1 = abs(s) * math.sqrt(2.0 - s * s)
    c2 = abs(s) * max(abs(c) - abs(s) / 2.0, 0.0)
    return p, c1, c2


def short_time_series(params, t: float) -> tuple[float, float, float]:
    """n-independent short-time expansions of p(t) and C2(t) (n >= 5).

    Returns (p_approx, c2_approx, validity) where validity = lambda_max * t
    reports how far outside the small-time regime the caller is.
    """
    if params.n < 5:
        raise ValueError("the n-independent expansion requires n >= 5")
    b, v, g = params.b, params.v, params.g
    p = 0.5 * g * g * t * t * (
        1.0 - t * t / 12.0 * (v * v + 4.0 * b * b + 3.0 * g * g))
    c2 = g * t * (1.0 - 0.5 * g * t
                  - t * t / 6.0 * (v * v + b * b + 3.0 * g * g)
                  + g * t**3 / 12.0 * (2.0 * b * b + 3.0 * g * g - v * v))
    from .chain import mode_spectrum
    lam_max = mode_spectrum(params).lambda_max
    return p, c2, lam_max * t


def short_time_c1(params, t: float) -> float:
    """Short-time C1 expansion derived from the p(t) series.

    C1 ~ sqrt(2) g t [1 - t^2 (v^2 + 4 b^2 + 9 g^2)/24]; the 9 g^2
    coefficient replaces the misprinted doubly-divided form.
    """
    if params.n < 5:
        raise ValueError("the n-independent expansion requires n >= 5")
    b, v, g = params.b, params.v, params.g
    return math.sqrt(2.0) * g * t * (
        1.0 - t * t / 24.0 * (v * v + 4.0 * b * b + 9.0 * g * g))


def dip_fields_n4(gamma: float) -> tuple[float, float]:
    """The two |b|/v values where lambda_{1/2}/lambda_{3/2} = 2 for n = 4.

    At these fields the true maximum of p(t) is only (4/5) of the envelope
    p_m.  Requires 0 < gamma < 4/3 (real discriminant).
    """
    if not 0.0 < gamma < 4.0 / 3.0:
        raise ValueError("dip fields exist only for 0 < gamma < 4/3")
    disc = math.sqrt(16.0 - 9.0 * gamma * gamma)
    lo = math.sqrt(2.0) * (5.0 - disc) / 6.0
    hi = math.sqrt(2.0) * (5.0 + disc) / 6.0
    return lo, hi


def asymptotic_large_field(n: int, b: float, g: float
                           ) -> tuple[float, float]:
    """Large-field maxima C1m ~ sqrt(2) g/|b|, C2m ~ g/|b| (n >= 3).

    Valid for |b| much larger than v and g; the caller can judge validity
    through the returned values themselves (both must be << 1).
    """
    if n < 3:
        raise ValueError("the n-independent asymptote requires n >= 3")
    if b == 0.0:
        raise ValueError("the large-field asymptote requires b != 0")
    return math.sqrt(2.0) * g / abs(b), g / abs(b)
