"""Exact entanglement dynamics of finite cyclic anisotropic XY chains.

Fast O(n) fermionic closed forms for the one-qubit and adjacent-pair
entanglement of an initially aligned state, cross-validated against a dense
brute-force oracle, with analytic small-n / limiting-case references and a
transverse-field resonance scanner.
"""

__version__ = "0.1.0"

from .chain import (ChainParams, Mode, ModeSpectrum, make_params,
                    mode_spectrum, peak_width_estimate, resonance_fields,
                    symmetry_partner)
from .dynamics import (PairContractions, TimeGrid, contraction_series,
                       default_time_grid, envelope_pm, evolve_series,
                       pair_contractions, spin_flip_probability)
from .errors import InvariantViolation, OracleMismatch
from .measures import (EntanglementPoint, PairDensityX, c1_from_p,
                       c2_x_state, entanglement_point, entanglement_series,
                       entropy_binary, eof_from_concurrence,
                       one_tangle_from_density, wootters_concurrence)
from .scan import (Peak, ScanConfig, ScanResult, detect_peaks,
                   saturation_threshold, scan_field)

__all__ = [
    "ChainParams", "Mode", "ModeSpectrum", "make_params", "mode_spectrum",
    "peak_width_estimate", "resonance_fields", "symmetry_partner",
    "PairContractions", "TimeGrid", "contraction_series",
    "default_time_grid", "envelope_pm", "evolve_series", "pair_contractions",
    "spin_flip_probability",
    "InvariantViolation", "OracleMismatch",
    "EntanglementPoint", "PairDensityX", "c1_from_p", "c2_x_state",
    "entanglement_point", "entanglement_series", "entropy_binary",
    "eof_from_concurrence", "one_tangle_from_density",
    "wootters_concurrence",
    "Peak", "ScanConfig", "ScanResult", "detect_peaks",
    "saturation_threshold", "scan_field",
    "__version__",
]
