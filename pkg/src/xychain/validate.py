"""Randomized cross-validation of the fast fermionic path against the oracle.

Drives the central correctness property of the package: for random chain
instances and times, every fast-path quantity (p, alpha, beta, p1, C1, C2)
must agree with the dense brute-force result to 1e-9, the quasiparticle
spectrum must reproduce the positive-parity levels, the monogamy inequality
must hold, and the field-sign symmetries must be exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .chain import ChainParams, make_params, mode_spectrum, symmetry_partner
from .dynamics import pair_contractions
from .measures import (PairDensityX, c1_from_p, c2_x_state)
from .oracle import (build_hamiltonian, evolve_dense, monogamy_check,
                     oracle_point, spectrum_crosscheck)

TOLERANCE = 1e-9
QUANTITIES = ("p", "beta", "alpha_re", "alpha_im", "p1", "C1", "C2")


@dataclass
class ValidationReport:
    """Per-n maximum deviations plus the auxiliary invariant checks."""

    n: int
    draws: int
    times_per_draw: int
    max_deviation: dict[str, float] = field(default_factory=dict)
    spectrum_ok: bool = True
    spectrum_max_deviation: float = 0.0
    monogamy_ok: bool = True
    monogamy_min_margin: float = math.inf
    symmetry_max_deviation: float = 0.0
    parity_max_deviation: float = 0.0

    @property
    def ok(self) -> bool:
        return (self.spectrum_ok and self.monogamy_ok
                and all(d < TOLERANCE for d in self.max_deviation.values())
                and self.symmetry_max_deviation < 1e-9)


def _fast_point(params: ChainParams, spectrum, t: float) -> dict:
    c = pair_contractions(params, spectrum, t)
    c2, _ = c2_x_state(PairDensityX.from_contractions(c))
    return {"p": c.p, "beta": c.beta, "alpha": c.alpha, "p1": c.p1,
            "C1": c1_from_p(c.p), "C2": c2}


def validate_n(n: int, draws: int = 50, times_per_draw: int = 64,
               v: float = 1.0, seed: int = 0,
               check_symmetry: bool = True) -> ValidationReport:
    """Compare fast path and oracle over random instances of one chain size."""
    rng = np.random.default_rng((seed, n))
    report = ValidationReport(n=n, draws=draws, times_per_draw=times_per_draw)
    dev = {q: 0.0 for q in QUANTITIES}

    for _ in range(draws):
        b = float(rng.uniform(-2.0 * v, 2.0 * v))
        gamma = float(rng.uniform(0.05, 1.5))
        params = make_params(n, b, v, gamma * v)
        spectrum = mode_spectrum(params)
        ham = build_hamiltonian(params)
        times = rng.uniform(0.0, 20.0 / v, size=times_per_draw)
        for t in times:
            fast = _fast_point(params, spectrum, float(t))
            dense = oracle_point(ham, float(t))
            dev["p"] = max(dev["p"], abs(fast["p"] - dense["p"]))
            dev["beta"] = max(dev["beta"], abs(fast["beta"] - dense["beta"]))
            dev["alpha_re"] = max(
                dev["alpha_re"], abs(fast["alpha"].real - dense["alpha"].real))
            dev["alpha_im"] = max(
                dev["alpha_im"], abs(fast["alpha"].imag - dense["alpha"].imag))
            dev["p1"] = max(dev["p1"], abs(fast["p1"] - dense["p1"]))
            dev["C1"] = max(dev["C1"], abs(fast["C1"] - dense["C1"]))
            dev["C2"] = max(dev["C2"], abs(fast["C2"] - dense["C2"]))
            report.parity_max_deviation = max(
                report.parity_max_deviation, abs(dense["parity"] - 1.0))

    report.max_deviation = dev

    spec_devs = []
    for _ in range(min(draws, 20)):
        b = float(rng.uniform(-2.0 * v, 2.0 * v))
        gamma = float(rng.uniform(0.05, 1.5))
        rep = spectrum_crosscheck(make_params(n, b, v, gamma * v))
        spec_devs.append(rep["max_deviation"])
        report.spectrum_ok &= rep["ok"]
    report.spectrum_max_deviation = max(spec_devs)

    params = make_params(n, 0.8 * v, v, 0.5 * v)
    ham = build_hamiltonian(params)
    for t in np.linspace(0.0, 20.0 / v, 9):
        rep = monogamy_check(evolve_dense(ham, float(t)))
        report.monogamy_ok &= rep["ok"]
        report.monogamy_min_margin = min(report.monogamy_min_margin,
                                         rep["margin"])

    if check_symmetry:
        report.symmetry_max_deviation = _symmetry_deviation(n, v, rng)
    return report


def _symmetry_deviation(n: int, v: float, rng) -> float:
    """Max |C1/C2 difference| between a random instance and its partner."""
    b = float(rng.uniform(0.1 * v, 2.0 * v))
    gamma = float(rng.uniform(0.1, 1.2))
    params = make_params(n, b, v, gamma * v)
    partner = symmetry_partner(params)
    ham_a = build_hamiltonian(params)
    ham_b = build_hamiltonian(partner)
    worst = 0.0
    for t in np.linspace(0.0, 15.0 / v, 7):
        pa = oracle_point(ham_a, float(t))
        pb = oracle_point(ham_b, float(t))
        worst = max(worst, abs(pa["C1"] - pb["C1"]), abs(pa["C2"] - pb["C2"]))
    return worst


def validate_many(n_list, draws: int = 50, times_per_draw: int = 64,
                  seed: int = 0) -> list[ValidationReport]:
    return [validate_n(n, draws=draws, times_per_draw=times_per_draw,
                       seed=seed) for n in n_list]
