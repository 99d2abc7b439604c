import math
from fractions import Fraction

import numpy as np
import pytest

from xychain.chain import make_params, mode_spectrum
from xychain.dynamics import envelope_pm
from xychain.scan import (ScanConfig, saturation_threshold, scan_field)


class TestScanConfig:
    def test_field_grid(self):
        cfg = ScanConfig(n=4, v=1.0, g=0.2, b_min=-1.0, b_max=1.0, b_steps=5)
        assert np.allclose(cfg.fields(), [-1.0, -0.5, 0.0, 0.5, 1.0])

    def test_window_defaults(self):
        short = ScanConfig(n=6, v=2.0, g=0.2, b_min=0.0, b_max=1.0)
        long = ScanConfig(n=12, v=2.0, g=0.2, b_min=0.0, b_max=1.0)
        assert short.window() == pytest.approx(20.0)
        assert long.window() == pytest.approx(90.0)
        explicit = ScanConfig(n=12, v=2.0, g=0.2, b_min=0.0, b_max=1.0,
                              t_max=7.5)
        assert explicit.window() == 7.5

    def test_time_step_resolves_fastest_mode(self):
        cfg = ScanConfig(n=6, v=1.0, g=0.2, b_min=0.0, b_max=1.0)
        assert cfg.time_step(4.0) == pytest.approx(0.0125)
        assert ScanConfig(n=6, v=1.0, g=0.2, b_min=0.0, b_max=1.0,
                          dt=0.3).time_step(4.0) == 0.3

    @pytest.mark.parametrize("kwargs", [
        dict(b_min=1.0, b_max=0.0), dict(b_steps=1), dict(t_max=-2.0)])
    def test_rejects_bad_config(self, kwargs):
        base = dict(n=4, v=1.0, g=0.2, b_min=0.0, b_max=1.0)
        with pytest.raises(ValueError):
            ScanConfig(**{**base, **kwargs})


class TestScanField:
    def _n5_config(self, **kw):
        return ScanConfig(n=5, v=1.0, g=0.05, b_min=-0.8, b_max=1.2,
                          b_steps=401, t_max=120.0, **kw)

    def test_finds_both_n5_resonances(self, monkeypatch):
        monkeypatch.setenv("XYCHAIN_WORKERS", "1")
        result = scan_field(self._n5_config())
        matched = {p.matched_k: p for p in result.peaks if p.matched_k}
        assert Fraction(1, 2) in matched and Fraction(3, 2) in matched
        golden_hi = (1 + math.sqrt(5)) / 4
        golden_lo = (1 - math.sqrt(5)) / 4
        w1 = matched[Fraction(1, 2)]
        w3 = matched[Fraction(3, 2)]
        assert w1.b_peak == pytest.approx(golden_hi, abs=w1.width_estimate)
        assert w3.b_peak == pytest.approx(golden_lo, abs=w3.width_estimate)
        assert all(0.0 < p.height <= 1.0 for p in result.peaks)

    def test_envelope_dominates_sampled_curve(self, monkeypatch):
        monkeypatch.setenv("XYCHAIN_WORKERS", "1")
        result = scan_field(self._n5_config(), detect=False)
        assert np.all(result.C1m_envelope >= result.C1m_sampled - 1e-9)
        for i in (0, 120, 240):
            params = make_params(5, float(result.b[i]), 1.0, 0.05)
            pm = envelope_pm(params, mode_spectrum(params))
            assert result.p_m[i] == pytest.approx(pm, abs=1e-12)

    def test_parallel_matches_sequential(self, monkeypatch):
        cfg = ScanConfig(n=4, v=1.0, g=0.3, b_min=-1.2, b_max=1.2,
                         b_steps=25, t_max=30.0)
        monkeypatch.setenv("XYCHAIN_WORKERS", "1")
        seq = scan_field(cfg, detect=False)
        monkeypatch.setenv("XYCHAIN_WORKERS", "2")
        par = scan_field(cfg, detect=False)
        assert np.array_equal(seq.C1m_sampled, par.C1m_sampled)
        assert np.array_equal(seq.C2m_I, par.C2m_I)
        assert np.array_equal(seq.C2m_II, par.C2m_II)

    def test_rejects_bad_worker_count(self, monkeypatch):
        monkeypatch.setenv("XYCHAIN_WORKERS", "0")
        with pytest.raises(ValueError):
            scan_field(self._n5_config(), detect=False)

    def test_warns_on_coarse_grid(self, monkeypatch):
        monkeypatch.setenv("XYCHAIN_WORKERS", "1")
        cfg = ScanConfig(n=4, v=1.0, g=0.02, b_min=-1.2, b_max=1.2,
                         b_steps=13, t_max=10.0)
        with pytest.warns(UserWarning, match="grid spacing"):
            scan_field(cfg)

    def test_even_chain_symmetric_in_field(self, monkeypatch):
        monkeypatch.setenv("XYCHAIN_WORKERS", "1")
        cfg = ScanConfig(n=6, v=1.0, g=0.4, b_min=-1.5, b_max=1.5,
                         b_steps=31, t_max=25.0)
        result = scan_field(cfg, detect=False)
        assert np.allclose(result.C1m_sampled, result.C1m_sampled[::-1],
                           atol=1e-9)
        assert np.allclose(result.p_m, result.p_m[::-1], atol=1e-12)


class TestSaturationThreshold:
    def test_rejects_small_n_and_bad_v(self):
        with pytest.raises(ValueError):
            saturation_threshold(4, 1.0, (-1.0, 1.0))
        with pytest.raises(ValueError):
            saturation_threshold(5, 0.0, (-1.0, 1.0))

    def test_n5_threshold(self):
        gc = saturation_threshold(5, 1.0, (-1.1, 1.1), tol=0.01, b_steps=801)
        assert gc == pytest.approx(0.6706, abs=0.02)

    def test_isotropic_always_saturates(self):
        # gamma = 1 yields p_m = 1/2 at b = 0, so the threshold is <= 1
        gc = saturation_threshold(7, 1.0, (-1.1, 1.1), tol=0.02, b_steps=401)
        assert gc <= 1.0
