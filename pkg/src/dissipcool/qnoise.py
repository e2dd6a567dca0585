"""Quantum-noise (golden rule) treatment of the two-oscillator cooling chain.

The cavity photon-number fluctuation seen by the dispersively coupled
oscillator 0 acts as a force noise whose spectral asymmetry sets cooling
rates and limits.  Without the ancilla the spectrum is a single cavity
Lorentzian, far too wide in the unresolved-sideband regime
(``kappa >> omega0``) to produce any useful asymmetry at ``+-omega0``.  The
dissipatively coupled ancilla (oscillator 1) repairs this: it is itself
cooled by the interference between its two decay paths into the cavity
output, and it imprints a pair of sharp, strongly asymmetric resonances
onto the photon-number spectrum.

This module evaluates that physics perturbatively in ``g0as``:

* ``bare_nn_spectrum`` / ``dispersive_nopt`` / ``dispersive_gamma_opt``:
  the ancilla-free baseline.
* ``force_spectrum`` and ``effective_ancilla``: dissipative cooling of the
  ancilla and its dressed parameters (frequency pulled by the real part of
  a self-energy, linewidth widened by its imaginary part).
* ``full_nn_spectrum`` and friends: the dressed photon-number spectrum,
  assembled from the exact chain susceptibilities (the dressed-Lorentzian
  shortcut ``xx1_spectrum`` is kept separately; it degrades when the
  ancilla frequency is pulled by tens of percent).
* ``qnoise_cooling_prediction``: the resulting golden-rule estimate of the
  steady phonon number of oscillator 0.

Every returned spectrum is weighted by ``g0as**2``, and all functions
accept scalar or ndarray frequencies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .params import SystemParams, chi_c

__all__ = [
    "EffectiveOscillator",
    "SpectrumTrace",
    "QnoisePrediction",
    "TRACE_LABELS",
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
]


TRACE_LABELS = frozenset(
    {"bare_nn", "full_nn", "force", "xx1", "cx", "xc", "source_optical", "source_thermal"}
)


@dataclass(frozen=True)
class EffectiveOscillator:
    """Dressed ancilla parameters: pulled frequency, widened linewidth,
    steady occupation under dissipative cooling."""

    omega1_eff: float
    gamma1_eff: float
    n1_eff: float


@dataclass(frozen=True)
class SpectrumTrace:
    """A sampled spectrum: strictly increasing grid, finite values, a label
    naming which spectrum it is."""

    grid: np.ndarray
    values: np.ndarray
    label: str

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        values = np.asarray(self.values)
        if self.label not in TRACE_LABELS:
            raise ValueError(f"unknown trace label {self.label!r}")
        if grid.ndim != 1 or grid.size != values.shape[0]:
            raise ValueError("grid and values must be 1-d and equally long")
        if grid.size >= 2 and not np.all(np.diff(grid) > 0.0):
            raise ValueError("grid must be strictly increasing")
        if not np.all(np.isfinite(values)):
            raise ValueError("trace contains non-finite values")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)


class QnoisePrediction(NamedTuple):
    n_opt0: float
    gamma_opt0: float
    n0_pred: float


def _maybe_scalar(x, scalar: bool):
    if not scalar:
        return x
    x = np.asarray(x)
    return complex(x[()]) if np.iscomplexobj(x) else float(x[()])


def _omega_array(omega):
    arr = np.asarray(omega, dtype=float)
    return arr, arr.ndim == 0


def bare_nn_spectrum(params: SystemParams, omega):
    """Photon-number fluctuation spectrum of the bare driven cavity.

    A Lorentzian of half-width ``kappa/2`` centered at ``-delta``; the
    ``g0as**2`` weight is included.
    """
    w, scalar = _omega_array(omega)
    val = params.g0as ** 2 * params.kappa / (
        0.25 * params.kappa ** 2 + (w + params.delta) ** 2
    )
    return _maybe_scalar(val, scalar)


def dispersive_nopt(params: SystemParams) -> float:
    """Sideband-cooling limit of the bare cavity, valid for red detuning."""
    if params.delta >= 0.0:
        raise ValueError("dispersive n_opt defined for red detuning")
    return -((params.omega0 + params.delta) ** 2 + 0.25 * params.kappa ** 2) / (
        4.0 * params.omega0 * params.delta
    )


def dispersive_gamma_opt(params: SystemParams) -> float:
    """Optically induced damping of oscillator 0 from the bare spectrum."""
    return float(
        bare_nn_spectrum(params, params.omega0) - bare_nn_spectrum(params, -params.omega0)
    )


def thermal_mix(n_opt: float, gamma_opt: float, n_th: float, gamma: float) -> float:
    """Steady occupation from competing optical and thermal channels."""
    denom = gamma_opt + gamma
    if denom <= 0.0:
        raise ValueError("thermal_mix needs a positive total damping rate")
    return (gamma_opt * n_opt + gamma * n_th) / denom


def force_spectrum(params: SystemParams, omega):
    """Force noise spectrum driving the dissipatively coupled ancilla.

    The two decay paths of the ancilla interfere, producing the
    ``(omega + 2*delta)**2`` numerator: the spectrum has an exact zero at
    ``omega = -2*delta``.  Placing that zero on the ancilla absorption
    sideband (``delta = omega1/2``) turns off heating entirely; that is the
    working point that makes ground-state cooling possible despite
    ``kappa >> omega1``.  Weighted by ``kappa * g1as**2``.
    """
    w, scalar = _omega_array(omega)
    val = params.kappa * params.g1as ** 2 * (w + 2.0 * params.delta) ** 2 / (
        0.25 * params.kappa ** 2 + (w + params.delta) ** 2
    )
    return _maybe_scalar(val, scalar)


def self_energy(params: SystemParams, omega):
    """Self-energy of the ancilla from its coupling to the cavity.

    The real part pulls the ancilla frequency (softening), the imaginary
    part carries the optically induced damping.
    """
    w, scalar = _omega_array(omega)
    g1sq = params.g1as ** 2
    plus = 1j * params.delta + 0.5 * params.kappa
    minus = 1j * params.delta - 0.5 * params.kappa
    val = 1j * g1sq * (
        chi_c(params, w) * plus ** 2 - np.conj(chi_c(params, -w)) * minus ** 2
    )
    return _maybe_scalar(val, scalar)


def effective_ancilla(params: SystemParams) -> EffectiveOscillator:
    """Dressed ancilla parameters evaluated on the ancilla resonance.

    The dressed frequency uses the square-root form
    ``sqrt(omega1**2 + 2*omega1*Re(sigma))``, which stays accurate at the
    strong softening the working points actually have; the linearized form
    ``omega1 + Re(sigma)`` does not.
    """
    sigma = self_energy(params, params.omega1)
    omega_sq = params.omega1 ** 2 + 2.0 * params.omega1 * sigma.real
    if omega_sq <= 0.0:
        raise ValueError("ancilla softened to instability")
    gamma1_eff = params.gamma1 - 2.0 * sigma.imag
    s_plus = force_spectrum(params, params.omega1)
    s_minus = force_spectrum(params, -params.omega1)
    gamma_opt1 = s_plus - s_minus
    if gamma_opt1 <= 0.0 or gamma1_eff <= 0.0:
        raise ValueError("dissipative heating")
    n_opt1 = s_minus / gamma_opt1
    n1_eff = thermal_mix(n_opt1, gamma_opt1, params.nth1, params.gamma1)
    return EffectiveOscillator(
        omega1_eff=float(np.sqrt(omega_sq)),
        gamma1_eff=float(gamma1_eff),
        n1_eff=float(n1_eff),
    )


def aux_alpha(params: SystemParams, omega):
    """Interference amplitude of the two ancilla decay paths; zero at
    ``omega = -2*delta``."""
    w, scalar = _omega_array(omega)
    val = 1.0 - chi_c(params, w) * (1j * params.delta + 0.5 * params.kappa)
    return _maybe_scalar(val, scalar)


def aux_A(params: SystemParams, omega):
    """Cavity-mediated transfer function from ancilla position to photon
    number; satisfies ``A(omega) = conj(A(-omega))``."""
    w, scalar = _omega_array(omega)
    val = chi_c(params, w) * (1j * params.delta + 0.5 * params.kappa) + np.conj(
        chi_c(params, -w)
    ) * (-1j * params.delta + 0.5 * params.kappa)
    return _maybe_scalar(val, scalar)


def aux_N(params: SystemParams, omega):
    """Dressed inverse response of the ancilla (both quadratures), including
    the self-energy; its near-zeros at the dressed frequency make the
    spectral peaks.  Satisfies ``N(omega) = conj(N(-omega))``."""
    w, scalar = _omega_array(omega)
    chi1_inv = 0.5 * params.gamma1 - 1j * (w - params.omega1)
    chi1_inv_conj_m = 0.5 * params.gamma1 - 1j * (w + params.omega1)
    val = chi1_inv * chi1_inv_conj_m + 2.0 * params.omega1 * self_energy(params, w)
    return _maybe_scalar(val, scalar)


def beta_factor(params: SystemParams, eff: EffectiveOscillator | None = None) -> float:
    """Diagnostic ratio ``omega1 / (omega0 + omega1_eff)``; read-only."""
    if eff is None:
        eff = effective_ancilla(params)
    return params.omega1 / (params.omega0 + eff.omega1_eff)


def _xx1_exact(params: SystemParams, w: np.ndarray) -> np.ndarray:
    """Ancilla position spectrum from the exact chain susceptibilities.

    Keeps the full frequency dependence of N; no dressed-Lorentzian
    approximation, so it stays valid at strong softening.
    """
    g1sq = params.g1as ** 2
    alpha_sq = np.abs(aux_alpha(params, w)) ** 2
    half_g1 = 0.5 * params.gamma1
    # Thermal weights: the (nth1 + 1) emission weight rides the +omega1
    # resonance, i.e. multiplies |chi1_inv(-omega)|**2.
    therm = params.gamma1 * (
        (params.nth1 + 1.0) * (half_g1 ** 2 + (w + params.omega1) ** 2)
        + params.nth1 * (half_g1 ** 2 + (w - params.omega1) ** 2)
    )
    num = 4.0 * params.omega1 ** 2 * params.kappa * g1sq * alpha_sq + therm
    return num / np.abs(aux_N(params, w)) ** 2


def xx1_spectrum(eff: EffectiveOscillator, omega):
    """Dressed-Lorentzian ancilla position spectrum.

    The textbook single-oscillator form in the dressed parameters.  Cheap
    and good near the peaks, but off-peak it misses the frequency
    dependence of the self-energy; the full-spectrum assembly below uses
    the exact form instead.
    """
    w, scalar = _omega_array(omega)
    chi_p = 1.0 / (0.5 * eff.gamma1_eff - 1j * (w - eff.omega1_eff))
    chi_m = 1.0 / (0.5 * eff.gamma1_eff - 1j * (-w - eff.omega1_eff))
    val = eff.gamma1_eff * (
        (eff.n1_eff + 1.0) * np.abs(chi_p) ** 2 + eff.n1_eff * np.abs(chi_m) ** 2
    )
    return _maybe_scalar(val, scalar)


def interference_spectra(params: SystemParams, omega):
    """Cross spectra between the cavity filter and the ancilla displacement.

    Returns ``(s_cx, s_xc)``.  They are complex conjugates of each other;
    both are computed independently so the identity stays a testable
    statement rather than a construction artifact.
    """
    w, scalar = _omega_array(omega)
    pref = 2j * params.omega1 * params.g1as * np.sqrt(params.kappa)
    s_xc = pref * np.conj(chi_c(params, w)) * aux_alpha(params, w) / aux_N(params, w)
    s_cx = -pref * chi_c(params, w) * np.conj(aux_alpha(params, w)) / aux_N(params, -w)
    return _maybe_scalar(s_cx, scalar), _maybe_scalar(s_xc, scalar)


def _neumaier_sum(terms: list[np.ndarray]) -> np.ndarray:
    # Compensated elementwise sum; the assembly mixes terms of opposite
    # sign near destructive interference.
    total = np.zeros_like(terms[0])
    comp = np.zeros_like(terms[0])
    for t in terms:
        s = total + t
        big = np.where(np.abs(total) >= np.abs(t), total, t)
        small = np.where(np.abs(total) >= np.abs(t), t, total)
        comp += (big - s) + small
        total = s
    return total + comp


def full_nn_spectrum(params: SystemParams, omega):
    """Photon-number fluctuation spectrum with the ancilla included.

    Three parts: the bare cavity Lorentzian, the ancilla displacement
    spectrum filtered into photon number, and their interference.  The
    interference is what empties the absorption sideband; it is negative
    there at a good working point.
    """
    w, scalar = _omega_array(omega)
    g0sq = params.g0as ** 2
    g1sq = params.g1as ** 2
    a_val = aux_A(params, w)
    bare = np.asarray(bare_nn_spectrum(params, w), dtype=float)
    filtered = g0sq * g1sq * np.abs(a_val) ** 2 * _xx1_exact(params, w)
    _, s_xc = interference_spectra(params, w)
    interf = (
        2.0 * g0sq * params.g1as * np.sqrt(params.kappa) * np.real(a_val * s_xc)
    )
    val = _neumaier_sum([np.asarray(bare), np.asarray(filtered), np.asarray(interf)])
    return _maybe_scalar(val, scalar)


def qnoise_cooling_prediction(params: SystemParams) -> QnoisePrediction:
    """Golden-rule cooling prediction for oscillator 0.

    Evaluates the full spectrum at ``+-omega0`` and converts the asymmetry
    into an optical damping rate and a cooling limit, then mixes with the
    local thermal bath.
    """
    s_plus = float(full_nn_spectrum(params, params.omega0))
    s_minus = float(full_nn_spectrum(params, -params.omega0))
    gamma_opt0 = s_plus - s_minus
    if gamma_opt0 <= 0.0:
        raise ValueError("no net cooling at omega0")
    n_opt0 = s_minus / gamma_opt0
    n0_pred = thermal_mix(n_opt0, gamma_opt0, params.nth0, params.gamma0)
    return QnoisePrediction(n_opt0=n_opt0, gamma_opt0=gamma_opt0, n0_pred=n0_pred)


def source_decomposition(params: SystemParams, omega):
    """Split the full spectrum into its two independent noise sources.

    ``optical`` collects everything fed by the drive noise (the bare term,
    the drive-driven part of the ancilla motion, and their interference,
    which is a perfect square); ``thermal`` is the ancilla-bath part.  The
    two add up to ``full_nn_spectrum`` exactly.
    """
    w, scalar = _omega_array(omega)
    g0sq = params.g0as ** 2
    g1sq = params.g1as ** 2
    n_val = aux_N(params, w)
    a_over_n = aux_A(params, w) / n_val
    optical = params.kappa * g0sq * np.abs(
        chi_c(params, w)
        + 2j * params.omega1 * g1sq * aux_alpha(params, w) * a_over_n
    ) ** 2
    half_g1 = 0.5 * params.gamma1
    thermal = g0sq * g1sq * params.gamma1 * np.abs(a_over_n) ** 2 * (
        (params.nth1 + 1.0) * (half_g1 ** 2 + (w + params.omega1) ** 2)
        + params.nth1 * (half_g1 ** 2 + (w - params.omega1) ** 2)
    )
    return _maybe_scalar(optical, scalar), _maybe_scalar(thermal, scalar)


def quality_ratio_diagnostic(params: SystemParams, omega) -> float:
    """Merit ratio of dissipative-ancilla cooling against the sideband
    parameter; scales with the ancilla quality factor, hence the name."""
    if params.nth1 == 0.0:
        raise ValueError("quality ratio undefined at nth1 = 0")
    w, scalar = _omega_array(omega)
    half_g1 = 0.5 * params.gamma1
    denom = params.nth1 * (
        (half_g1 ** 2 + (w - params.omega1) ** 2)
        + (half_g1 ** 2 + (w + params.omega1) ** 2)
    )
    val = (
        (params.omega1 / params.gamma1)
        / (params.kappa / params.omega1)
        * 16.0
        * params.g1as ** 2
        * (w + 2.0 * params.delta) ** 2
        / denom
    )
    return _maybe_scalar(val, scalar)
