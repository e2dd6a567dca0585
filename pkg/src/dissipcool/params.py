"""System parameters and linear-response building blocks.

The model is a single driven cavity mode coupled to two mechanical
oscillators: oscillator 0 couples dispersively (frequency modulation of the
cavity) and oscillator 1 couples dissipatively (modulation of the cavity
linewidth).  Everything downstream works in the linearized regime, where the
couplings only ever appear as the products ``g0*alpha_s`` and ``g1*alpha_s``
of the single-photon rates with the steady intracavity amplitude.  Those
products are the fields ``g0as`` and ``g1as`` here; no bare ``g`` or
``alpha_s`` is stored anywhere.

Frequencies are quoted in units of the ancilla frequency, so ``omega1``
defaults to 1.0 and every rate (``kappa``, ``gamma0``, ...) is dimensionless.
All returned spectra carry the ``g0as**2`` weight, i.e. they are the
photon-number fluctuation spectra as seen by oscillator 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields

import numpy as np

__all__ = [
    "SystemParams",
    "ValidationReport",
    "validate",
    "chi_c",
    "chi_osc",
    "PARAM_NAMES",
]


@dataclass(frozen=True, kw_only=True)
class SystemParams:
    """Immutable parameter set for one operating point.

    Attributes
    ----------
    omega0 : float
        Frequency of the dispersively coupled (target) oscillator.
    omega1 : float
        Frequency of the dissipatively coupled ancilla; the frequency unit.
    kappa : float
        Cavity amplitude decay rate.  The regime of interest has
        ``kappa >> omega0`` (unresolved sidebands).
    gamma0, gamma1 : float
        Intrinsic mechanical damping rates.
    g0as : float
        Dispersive coupling times steady cavity amplitude (written G0 in
        formulas below).
    g1as : float
        Dissipative coupling times steady cavity amplitude (G1).
    delta : float
        Laser detuning from the cavity resonance.  Positive (blue) detuning
        is the working point for ancilla-assisted cooling.
    nth0, nth1 : float
        Thermal bath occupations of the two oscillators.
    """

    omega0: float
    kappa: float
    gamma0: float
    gamma1: float
    g0as: float
    g1as: float
    delta: float
    nth0: float
    nth1: float
    omega1: float = 1.0


PARAM_NAMES: tuple[str, ...] = tuple(f.name for f in fields(SystemParams))


@dataclass
class ValidationReport:
    """Outcome of :func:`validate`: collected problems plus regime flags.

    ``errors`` lists violations that make the parameter set unusable;
    ``warnings`` lists suspicious but computable inputs.  ``flags`` records
    which physical regime the point sits in (purely informational).
    """

    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    flags: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.errors


def validate(params: SystemParams) -> ValidationReport:
    """Check a parameter set and classify its regime.

    Collects every problem instead of raising on the first one, so a CLI
    run can show the complete list.  Numerical routines assume ``ok`` and
    do not re-check.
    """
    rep = ValidationReport()
    err = rep.errors.append
    warn = rep.warnings.append

    for name in ("omega0", "omega1", "kappa"):
        if not getattr(params, name) > 0.0:
            err(f"{name} must be positive")
    for name in ("gamma0", "gamma1"):
        if not getattr(params, name) > 0.0:
            err(f"{name} must be positive (every oscillator is damped)")
    for name in ("nth0", "nth1"):
        if getattr(params, name) < 0.0:
            err(f"{name} must be nonnegative")
    for name in ("g0as", "g1as"):
        if getattr(params, name) < 0.0:
            err(f"{name} must be nonnegative (signs are absorbed upstream)")
    for name in PARAM_NAMES:
        if not np.isfinite(getattr(params, name)):
            err(f"{name} must be finite")

    if not rep.errors:
        if params.gamma0 > 0.1 * params.omega0 or params.gamma1 > 0.1 * params.omega1:
            warn("low mechanical quality factor; the weak-damping analysis is strained")
        if params.g1as ** 2 > params.omega1:
            warn("g1as**2 exceeds omega1; strong ancilla softening expected")
        rep.flags["unresolved_sideband"] = params.kappa >= 10.0 * params.omega0
        rep.flags["blue_detuned"] = params.delta > 0.0
        rep.flags["coupled"] = params.g0as > 0.0 and params.g1as > 0.0

    return rep


def chi_c(params: SystemParams, omega):
    """Cavity susceptibility ``1 / (kappa/2 - i(omega + delta))``.

    Accepts a scalar or an ndarray of frequencies and broadcasts.
    """
    omega = np.asarray(omega, dtype=float)
    return 1.0 / (0.5 * params.kappa - 1j * (omega + params.delta))


def chi_osc(omega, omega_k, gamma_k):
    """Mechanical susceptibility ``1 / (gamma_k/2 - i(omega - omega_k))``."""
    omega = np.asarray(omega, dtype=float)
    return 1.0 / (0.5 * gamma_k - 1j * (omega - omega_k))
