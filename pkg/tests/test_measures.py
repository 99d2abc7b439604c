import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from xychain.chain import make_params, mode_spectrum
from xychain.dynamics import pair_contractions
from xychain.errors import InvariantViolation
from xychain.measures import (PairDensityX, c1_from_p, c2_x_state,
                              entanglement_point, entropy_binary,
                              eof_from_concurrence, one_tangle_from_density,
                              wootters_concurrence)

unit = st.floats(0.0, 1.0, allow_nan=False)


@st.composite
def x_state(draw):
    """Random valid X-form pair density (trace 1, positive semidefinite)."""
    raw = [draw(st.floats(1e-3, 1.0)) for _ in range(3)]
    total = raw[0] + 2 * raw[1] + raw[2]
    p1, p2, p3 = raw[0] / total, raw[1] / total, raw[2] / total
    a_mag = draw(unit) * math.sqrt(p1 * p3)
    a_phase = draw(st.floats(0.0, 2 * math.pi))
    beta = (2 * draw(unit) - 1) * p2
    return PairDensityX(p1=p1, p2=p2, p3=p3,
                        alpha=a_mag * cmath.exp(1j * a_phase), beta=beta)


class TestC1FromP:
    def test_maximum(self):
        assert c1_from_p(0.5) == 1.0

    def test_pure_endpoints(self):
        assert c1_from_p(0.0) == 0.0
        assert c1_from_p(1.0) == 0.0

    def test_resonance_value_n14(self):
        p = 2.0 / 14.0
        assert c1_from_p(p) == pytest.approx(
            2 * math.sqrt(p * (1 - p)), abs=1e-15)
        assert c1_from_p(p) == pytest.approx(0.70, abs=5e-3)

    def test_domain(self):
        with pytest.raises(ValueError):
            c1_from_p(1.2)


class TestEntropyBinary:
    def test_values(self):
        assert entropy_binary(0.5) == 1.0
        assert entropy_binary(0.0) == 0.0
        assert entropy_binary(1.0) == 0.0
        assert entropy_binary(0.9) == pytest.approx(0.4690, abs=5e-5)

    def test_symmetry(self):
        for x in (0.1, 0.3, 0.42):
            assert entropy_binary(x) == pytest.approx(entropy_binary(1 - x))

    def test_domain(self):
        with pytest.raises(ValueError):
            entropy_binary(-0.01)


class TestC2XState:
    def test_n3_type_one_maximum(self):
        # on the 3-qubit manifold at p = 1/6 the concurrence peaks at 1/3
        p = 1.0 / 6.0
        pd = PairDensityX(p1=p / 2, p2=p / 2, p3=1 - 3 * p / 2,
                          alpha=math.sqrt(p * (2 - 3 * p)) / 2 + 0j,
                          beta=p / 2)
        c2, kind = c2_x_state(pd)
        assert c2 == pytest.approx(1.0 / 3.0, abs=1e-12)
        assert kind == "I"

    def test_n3_w_state_endpoint(self):
        p = 2.0 / 3.0
        pd = PairDensityX(p1=p / 2, p2=p / 2, p3=0.0,
                          alpha=0.0 + 0j, beta=p / 2)
        c2, kind = c2_x_state(pd)
        assert c2 == pytest.approx(2.0 / 3.0, abs=1e-12)
        assert kind == "II"

    def test_aligned_state(self):
        pd = PairDensityX(p1=0, p2=0, p3=1.0, alpha=0j, beta=0.0)
        assert c2_x_state(pd) == (0.0, "none")

    def test_rejects_double_positive(self):
        bad = PairDensityX(p1=0.1, p2=0.35, p3=0.2, alpha=0.4 + 0j, beta=0.3)
        with pytest.raises(InvariantViolation):
            c2_x_state(bad)


class TestEof:
    def test_endpoints(self):
        assert eof_from_concurrence(0.0) == 0.0
        assert eof_from_concurrence(1.0) == 1.0

    def test_mid_value(self):
        # C = 0.6 -> q+ = 0.9
        assert eof_from_concurrence(0.6) == pytest.approx(
            entropy_binary(0.9), abs=1e-15)
        assert eof_from_concurrence(0.6) == pytest.approx(0.4690, abs=5e-5)

    @given(st.floats(1e-6, 1.0 - 1e-6))
    def test_strictly_increasing(self, c):
        eps = 1e-7
        hi = min(c + eps, 1.0)
        assert eof_from_concurrence(hi) > eof_from_concurrence(c - eps)


class TestWoottersConcurrence:
    def test_maximally_mixed(self):
        assert wootters_concurrence(np.eye(4) / 4) == 0.0

    def test_bell_state(self):
        psi = np.zeros(4)
        psi[0] = psi[3] = 1 / math.sqrt(2)
        rho = np.outer(psi, psi)
        assert wootters_concurrence(rho) == pytest.approx(1.0, abs=1e-12)

    def test_rejects_non_density(self):
        with pytest.raises(ValueError):
            wootters_concurrence(np.eye(4))  # trace 4
        bad = np.diag([0.7, 0.5, -0.1, -0.1])
        with pytest.raises(ValueError):
            wootters_concurrence(bad)

    @settings(max_examples=200, deadline=None)
    @given(x_state())
    def test_matches_x_state_shortcut(self, pd):
        # sqrt of near-zero product eigenvalues limits the general route
        # to about 1e-8 when the density sits on the positivity boundary
        c2_fast, _ = c2_x_state(pd)
        c2_general = wootters_concurrence(pd.matrix())
        assert c2_general == pytest.approx(c2_fast, abs=1e-7)


class TestOneTangle:
    def test_endpoints(self):
        assert one_tangle_from_density(np.diag([0.5, 0.5])) == 1.0
        assert one_tangle_from_density(np.diag([1.0, 0.0])) == 0.0

    def test_matches_c1_from_p(self):
        for p in (0.1, 0.37, 0.8):
            rho = np.diag([p, 1 - p])
            assert one_tangle_from_density(rho) == pytest.approx(
                c1_from_p(p), abs=1e-12)

    def test_rejects_non_density(self):
        with pytest.raises(ValueError):
            one_tangle_from_density(np.array([[0.5, 1.0], [0.0, 0.5]]))


class TestEntanglementPoint:
    def _point(self, n, b, g, t):
        params = make_params(n, b, 1.0, g)
        return entanglement_point(
            pair_contractions(params, mode_spectrum(params), t))

    def test_ordering_invariants(self):
        for t in np.linspace(0.0, 25.0, 60):
            pt = self._point(6, 0.4, 0.7, t)
            assert pt.C1 >= pt.C2 - 1e-12
            assert pt.E1 >= pt.E2 - 1e-12
            assert (pt.c2_type == "none") == (pt.C2 == 0.0)

    def test_n3_type_transition_along_manifold(self):
        # type I below p = 1/2, type II above, C2/C1 <= 1/sqrt(2) throughout
        params = make_params(3, 0.5, 1.0, 0.8)
        spec = mode_spectrum(params)
        for t in np.linspace(0.01, 12.0, 300):
            c = pair_contractions(params, spec, t)
            pt = entanglement_point(c)
            if pt.C2 > 1e-9:
                assert pt.c2_type == ("I" if c.p < 0.5 else "II")
            if pt.C1 > 1e-12:
                assert pt.C2 / pt.C1 <= 1 / math.sqrt(2) + 1e-9
