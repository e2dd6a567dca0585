"""Built-in named parameter sets.

Each preset is a complete, validated working point in the unresolved
sideband regime (cavity linewidth a few hundred to ten thousand times the
mechanical frequency), with the ancilla at the frequency unit and both
baths at occupation 100.  Axis ranges attached to the sweep-oriented
presets are reconstructions chosen to bracket the interesting features;
they are defaults, not measurements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .params import SystemParams

__all__ = ["AxisSpec", "Preset", "PRESETS", "get_preset"]


@dataclass(frozen=True)
class AxisSpec:
    """Linear sweep axis over one ``SystemParams`` field."""

    name: str
    lo: float
    hi: float
    count: int


@dataclass(frozen=True)
class Preset:
    """A named working point plus default grids for the CLI commands."""

    name: str
    description: str
    params: SystemParams
    spectrum_grid: tuple[float, float, int] = (-1.2, 1.2, 2401)
    axis1: AxisSpec | None = None
    axis2: AxisSpec | None = None


_COMMON = dict(gamma0=1e-6, gamma1=1e-6, nth0=100.0, nth1=100.0, omega1=1.0)

PRESETS: dict[str, Preset] = {
    "fig2": Preset(
        name="fig2",
        description=(
            "spectrum demo, kappa=300 unresolved regime, drive detuned to "
            "half the ancilla frequency (delta=0.5)"
        ),
        params=SystemParams(
            omega0=0.7, kappa=300.0, g0as=0.1, g1as=0.3, delta=0.5, **_COMMON
        ),
    ),
    "fig3": Preset(
        name="fig3",
        description=(
            "spectrum demo tuned so the softened ancilla peak sits at the "
            "target frequency (omega0=0.76, delta=omega0/2)"
        ),
        params=SystemParams(
            omega0=0.76, kappa=300.0, g0as=0.1, g1as=0.3, delta=0.38, **_COMMON
        ),
    ),
    "fig4a": Preset(
        name="fig4a",
        description=(
            "deep-cooling working point at kappa/omega0 about 430; the "
            "(delta, g0as) defaults are a reconstruction placed inside the "
            "n0 < 0.05 basin (detuning on the ancilla-resonance ridge, "
            "dispersive coupling at the backaction/thermal balance)"
        ),
        params=SystemParams(
            omega0=0.7, kappa=300.0, g0as=0.0135, g1as=0.336, delta=0.3762, **_COMMON
        ),
        axis1=AxisSpec("delta", 0.30, 0.50, 41),
    ),
    "fig4b": Preset(
        name="fig4b",
        description=(
            "deep-cooling working point at kappa/omega0 = 1e4; the (delta, "
            "g0as) defaults are a reconstruction placed inside the n0 < 1.1 "
            "basin (the resonance ridge is much narrower at this linewidth)"
        ),
        params=SystemParams(
            omega0=0.7, kappa=7000.0, g0as=0.005, g1as=0.336, delta=0.3764, **_COMMON
        ),
        axis1=AxisSpec("delta", 0.30, 0.50, 41),
    ),
    "fig5": Preset(
        name="fig5",
        description=(
            "dispersive-coupling profile base point (sweep g0as to trace "
            "cooling vs coupling); other values as the fig3 point with "
            "delta=0.377"
        ),
        params=SystemParams(
            omega0=0.76, kappa=300.0, g0as=0.1, g1as=0.3, delta=0.377, **_COMMON
        ),
        axis1=AxisSpec("g0as", 0.01, 0.5, 50),
    ),
    "fig6": Preset(
        name="fig6",
        description=(
            "2-D cooling map over dissipative coupling and detuning at "
            "kappa=300, omega0=0.7"
        ),
        params=SystemParams(
            omega0=0.7, kappa=300.0, g0as=0.1, g1as=0.336, delta=0.377, **_COMMON
        ),
        axis1=AxisSpec("g1as", 0.25, 0.45, 41),
        axis2=AxisSpec("delta", 0.30, 0.50, 41),
    ),
}


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(PRESETS))
        raise ValueError(f"unknown preset {name!r} (available: {known})") from None
