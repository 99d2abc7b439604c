"""Cyclic anisotropic XY chain: parameters, momentum modes and resonance fields.

The chain couples n spin-1/2 sites on a ring through hopping v and
anisotropic pairing g, in a uniform transverse field b.  Within the positive
spin-parity sector the problem maps onto free fermions with half-integer
momentum labels k, angles w_k = 2*pi*k/n and quasiparticle energies

    lambda_k = sqrt((b - v*cos w_k)**2 + g**2 * sin(w_k)**2).

Everything here is a pure function of immutable inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ChainParams:
    """Physical instance: site count n, field b, hopping v, pairing g.

    Construct through :func:`make_params`, which enforces the v >= 0, g >= 0
    convention.  The dataclass itself tolerates v < 0 so that
    :func:`symmetry_partner` can represent the (-b, -v) twin of an odd chain.
    """

    n: int
    b: float
    v: float
    g: float

    @property
    def gamma(self) -> float | None:
        """Anisotropy g/v; undefined (None) when v = 0."""
        if self.v == 0.0:
            return None
        return self.g / abs(self.v)


def make_params(n: int, b: float, v: float, g: float) -> ChainParams:
    """Validate and build a ChainParams instance.

    Requires n >= 2, v >= 0, g >= 0 and finite values; b may have either
    sign.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"site count n must be an integer >= 2, got {n!r}")
    b, v, g = float(b), float(v), float(g)
    for name, x in (("b", b), ("v", v), ("g", g)):
        if not math.isfinite(x):
            raise ValueError(f"parameter {name} must be finite, got {x!r}")
    if v < 0.0:
        raise ValueError(f"hopping v must be >= 0, got {v}")
    if g < 0.0:
        raise ValueError(f"pairing g must be >= 0, got {g}")
    return ChainParams(n=n, b=b, v=v, g=g)


@dataclass(frozen=True)
class Mode:
    """One fermionic momentum mode of the chain.

    k is half-integer; it is stored exactly as the odd integer 2k to keep
    w_k = pi*(2k)/n free of accumulated drift.  u2 and v2 are the squared
    BCS coefficients; uv is the (nonnegative) product u_k v_k, which is what
    actually enters every observable.  When lambda = 0 the coefficients are
    undefined and `degenerate` is set instead of storing NaNs.
    """

    two_k: int
    omega: float
    lam: float
    u2: float | None
    v2: float | None
    uv: float | None
    degenerate: bool = False

    @property
    def k(self) -> Fraction:
        return Fraction(self.two_k, 2)


@dataclass(frozen=True)
class ModeSpectrum:
    """All n modes of a chain plus the primed subset k = 1/2 .. [n/2]-1/2."""

    params: ChainParams
    full: tuple[Mode, ...]
    positive: tuple[Mode, ...]

    @property
    def lambda_max(self) -> float:
        return max(m.lam for m in self.full)


def _make_mode(params: ChainParams, two_k: int) -> Mode:
    n, b, v, g = params.n, params.b, params.v, params.g
    omega = math.pi * two_k / n
    d = b - v * math.cos(omega)
    gs = g * math.sin(omega)
    lam = math.hypot(d, gs)
    if lam == 0.0:
        return Mode(two_k=two_k, omega=omega, lam=0.0,
                    u2=None, v2=None, uv=None, degenerate=True)
    u2 = min(max((lam + d) / (2.0 * lam), 0.0), 1.0)
    v2 = min(max((lam - d) / (2.0 * lam), 0.0), 1.0)
    # computed directly to avoid cancellation of u2 - v2 near resonance
    uv = abs(gs) / (2.0 * lam)
    return Mode(two_k=two_k, omega=omega, lam=lam, u2=u2, v2=v2, uv=uv)


def mode_spectrum(params: ChainParams) -> ModeSpectrum:
    """All n half-integer modes with energies and BCS coefficients.

    Full label range: 2k = -(n-1), -(n-3), ..., n-1 for n even and
    2k = -n+2, ..., n for n odd.  The primed subset 2k = 1, 3, ...,
    2*[n/2]-1 has sin w_k > 0 and carries the whole time dependence.
    """
    n = params.n
    if n % 2 == 0:
        two_ks = range(-(n - 1), n, 2)
    else:
        two_ks = range(-n + 2, n + 1, 2)
    full = tuple(_make_mode(params, tk) for tk in two_ks)
    positive = tuple(m for m in full if 1 <= m.two_k <= 2 * (n // 2) - 1)
    return ModeSpectrum(params=params, full=full, positive=positive)


def resonance_fields(params: ChainParams) -> list[tuple[Fraction, float]]:
    """Fields b_k = v*cos(w_k) where lambda_k is minimal, one per primed mode.

    Sorted by b_k descending, so the rightmost peak comes first.
    """
    n, v = params.n, params.v
    out = []
    for j in range(1, n // 2 + 1):
        two_k = 2 * j - 1
        out.append((Fraction(two_k, 2), v * math.cos(math.pi * two_k / n)))
    out.sort(key=lambda kv: -kv[1])
    return out


def peak_width_estimate(params: ChainParams, k: Fraction | float) -> float:
    """Half-width g*sin(w_k) of the resonance peak at b_k (requires g > 0)."""
    if params.g <= 0.0:
        raise ValueError("peak width is defined only for g > 0")
    two_k = int(2 * Fraction(k))
    if not (1 <= two_k <= 2 * (params.n // 2) - 1) or two_k % 2 == 0:
        raise ValueError(f"k = {k} is not in the primed mode range")
    return params.g * math.sin(math.pi * two_k / params.n)


def symmetry_partner(params: ChainParams) -> ChainParams:
    """Parameter set with provably identical entanglement evolution.

    Even n: (n, -b, v, g).  Odd n: the sign of v cannot be flipped alone, so
    the partner is (n, -b, -v, g); it is returned with v < 0 (bypassing the
    v >= 0 convention) and is intended only for symmetry tests.
    """
    if params.n % 2 == 0:
        return ChainParams(n=params.n, b=-params.b, v=params.v, g=params.g)
    return ChainParams(n=params.n, b=-params.b, v=-params.v, g=params.g)
