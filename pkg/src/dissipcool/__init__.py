"""Cooling of a dispersively coupled oscillator through a dissipatively
coupled ancilla, deep in the unresolved-sideband regime.

Two independent calculation layers share one parameter type:

* :mod:`dissipcool.qnoise` — golden-rule spectra and closed-form cooling
  predictions built from the cavity noise spectrum seen by the target.
* :mod:`dissipcool.exact` — the full linear 6x6 input-output model:
  frequency-domain noise coefficients, integrated phonon numbers, and a
  Lyapunov steady-state cross-check.

:mod:`dissipcool.cli` exposes both as the ``dissipcool`` command.
"""

from .exact import (
    CoolingResult,
    DriftSystem,
    NoiseCoefficients,
    ProfilePoint,
    appendix_coefficients,
    build_drift,
    char_poly_coeffs,
    contribution_profile,
    exact_n0,
    lyapunov_n0,
    solve_coefficients,
    stability,
    steady_covariance,
)
from .kernels import BACKEND_ENV, active_backend, have_numba
from .params import SystemParams, ValidationReport, chi_c, chi_osc, validate
from .presets import PRESETS, AxisSpec, Preset, get_preset
from .qnoise import (
    EffectiveOscillator,
    QnoisePrediction,
    SpectrumTrace,
    aux_A,
    aux_N,
    aux_alpha,
    bare_nn_spectrum,
    beta_factor,
    dispersive_gamma_opt,
    dispersive_nopt,
    effective_ancilla,
    force_spectrum,
    full_nn_spectrum,
    interference_spectra,
    qnoise_cooling_prediction,
    quality_ratio_diagnostic,
    self_energy,
    source_decomposition,
    thermal_mix,
    xx1_spectrum,
)
from .quadrature import QuadratureError, QuadratureSpec, integrate_spectral

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "SystemParams",
    "ValidationReport",
    "validate",
    "chi_c",
    "chi_osc",
    "EffectiveOscillator",
    "QnoisePrediction",
    "SpectrumTrace",
    "bare_nn_spectrum",
    "dispersive_nopt",
    "dispersive_gamma_opt",
    "thermal_mix",
    "force_spectrum",
    "self_energy",
    "effective_ancilla",
    "aux_alpha",
    "aux_A",
    "aux_N",
    "beta_factor",
    "xx1_spectrum",
    "interference_spectra",
    "full_nn_spectrum",
    "qnoise_cooling_prediction",
    "source_decomposition",
    "quality_ratio_diagnostic",
    "DriftSystem",
    "NoiseCoefficients",
    "CoolingResult",
    "ProfilePoint",
    "build_drift",
    "stability",
    "appendix_coefficients",
    "solve_coefficients",
    "exact_n0",
    "lyapunov_n0",
    "steady_covariance",
    "contribution_profile",
    "char_poly_coeffs",
    "QuadratureSpec",
    "QuadratureError",
    "integrate_spectral",
    "PRESETS",
    "Preset",
    "AxisSpec",
    "get_preset",
    "BACKEND_ENV",
    "active_backend",
    "have_numba",
]
