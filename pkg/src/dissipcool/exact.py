"""Exact linearized dynamics of the cavity and both oscillators.

Everything here works with the full 6-dimensional linear system over the
operator basis (d, d-dagger, b0, b0-dagger, b1, b1-dagger): drift matrix,
input noise map, stability, the frequency-domain noise coefficients of the
target oscillator, and two independent evaluations of its steady phonon
number,

* ``exact_n0``: frequency integral of the coefficient row against the
  input-noise occupations, and
* ``lyapunov_n0``: direct steady-state covariance from the 36-unknown
  linear system,

which agree to the quadrature tolerance and cross-check each other.

The dissipative coupling makes the ancilla's input noise correlated with
the drive noise (its noise row mixes the drive channel with weight
``g1as*sqrt(kappa)``); the covariance source matrix is assembled from the
noise map so this correlation is kept automatically.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import qnoise
from .kernels import coeff_rows_closed, coeff_rows_solve
from .params import SystemParams
from .quadrature import QuadratureError, QuadratureSpec, integrate_spectral

__all__ = [
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
]

_TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class DriftSystem:
    """Drift matrix, input-noise map, and channel occupations.

    ``m`` and ``noise_map`` act on the basis (d, d+, b0, b0+, b1, b1+);
    input channels are ordered (d_in, d_in+, b0_in, b0_in+, b1_in, b1_in+).
    ``raw_correlators`` holds the (drive, local bath, ancilla bath)
    occupations that parameterize the white-noise correlators.
    """

    m: np.ndarray
    noise_map: np.ndarray
    raw_correlators: tuple[float, float, float]

    def __post_init__(self):
        for name in ("m", "noise_map"):
            arr = np.asarray(getattr(self, name), dtype=np.complex128)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)


@dataclass(frozen=True)
class NoiseCoefficients:
    """Noise-to-target transfer coefficients at fixed real frequency.

    The target annihilation operator in the frequency domain is
    ``a_d*d_in + b_d*d_in+ + a0*b0_in + b0*b0_in+ + a1*b1_in + b1*b1_in+``;
    the ``a_*`` multiply annihilation inputs, the ``b_*`` creation inputs.
    Fields are scalars or arrays matching the requested frequency shape.
    """

    a_d: np.ndarray
    b_d: np.ndarray
    a0: np.ndarray
    b0: np.ndarray
    a1: np.ndarray
    b1: np.ndarray

    @classmethod
    def from_rows(cls, rows: np.ndarray, scalar: bool) -> "NoiseCoefficients":
        cols = [rows[..., k] for k in range(6)]
        if scalar:
            cols = [complex(c[0]) for c in cols]
        return cls(*cols)


@dataclass(frozen=True)
class CoolingResult:
    """Steady phonon number of the target and its per-source split."""

    n0: float
    n0_drive: float
    n0_local: float
    n0_ancilla: float
    stable: bool
    integration_error_estimate: float


@dataclass(frozen=True)
class ProfilePoint:
    """One point of a coupling profile; exactly one of (cooling, error)."""

    g0as: float
    cooling: CoolingResult | None
    qnoise_n0: float | None
    error: str = ""


def build_drift(params: SystemParams) -> DriftSystem:
    """Assemble the linearized drift matrix and input-noise map."""
    g0 = params.g0as
    g1 = params.g1as
    dlt = params.delta
    kap = params.kappa
    half_k = 0.5 * kap
    sqk = np.sqrt(kap)
    sq0 = np.sqrt(params.gamma0)
    sq1 = np.sqrt(params.gamma1)

    m = np.array(
        [
            # d: cavity rotation, dispersive drive by x0, dissipative drive by x1
            [1j * dlt - half_k, 0, 1j * g0, 1j * g0, -g1 * (1j * dlt + half_k), -g1 * (1j * dlt + half_k)],
            [0, -1j * dlt - half_k, -1j * g0, -1j * g0, -g1 * (-1j * dlt + half_k), -g1 * (-1j * dlt + half_k)],
            # b0: driven by the photon-number quadrature d + d+
            [1j * g0, 1j * g0, -1j * params.omega0 - 0.5 * params.gamma0, 0, 0, 0],
            [-1j * g0, -1j * g0, 0, 1j * params.omega0 - 0.5 * params.gamma0, 0, 0],
            # b1: both quadratures of the cavity couple, with kappa-scale weight
            [-1j * g1 * dlt - g1 * half_k, -1j * g1 * dlt + g1 * half_k, 0, 0, -1j * params.omega1 - 0.5 * params.gamma1, 0],
            [1j * g1 * dlt + g1 * half_k, 1j * g1 * dlt - g1 * half_k, 0, 0, 0, 1j * params.omega1 - 0.5 * params.gamma1],
        ],
        dtype=np.complex128,
    )
    noise_map = np.array(
        [
            [-sqk, 0, 0, 0, 0, 0],
            [0, -sqk, 0, 0, 0, 0],
            [0, 0, -sq0, 0, 0, 0],
            [0, 0, 0, -sq0, 0, 0],
            # ancilla noise row mixes its bath with the drive noise
            [-g1 * sqk, g1 * sqk, 0, 0, -sq1, 0],
            [g1 * sqk, -g1 * sqk, 0, 0, 0, -sq1],
        ],
        dtype=np.complex128,
    )
    return DriftSystem(
        m=m, noise_map=noise_map, raw_correlators=(0.0, params.nth0, params.nth1)
    )


def stability(drift: DriftSystem, tol: float = 1e-12) -> tuple[bool, float]:
    """Dynamical stability: every drift eigenvalue strictly damped.

    Returns ``(stable, margin)`` with ``margin = -max Re(eig)``; marginal
    points (``margin <= tol``) count as unstable because every steady-state
    quantity downstream diverges there.
    """
    try:
        eig = np.linalg.eigvals(drift.m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - defensive
        raise RuntimeError(f"eigen-solver failed on drift matrix: {exc}") from exc
    margin = float(-np.max(eig.real))
    return margin > tol, margin


def _params_tuple(params: SystemParams) -> tuple:
    return (
        params.omega0,
        params.omega1,
        params.kappa,
        params.gamma0,
        params.gamma1,
        params.g0as,
        params.g1as,
        params.delta,
    )


def _coefficient_rows(params: SystemParams, omega: np.ndarray, method: str,
                      drift: DriftSystem | None = None) -> np.ndarray:
    if method == "solve":
        if drift is None:
            drift = build_drift(params)
        return coeff_rows_solve(drift.m, drift.noise_map, omega)
    if method == "closed":
        return coeff_rows_closed(_params_tuple(params), omega)
    raise ValueError(f"unknown coefficient method {method!r}")


def appendix_coefficients(params: SystemParams, omega) -> NoiseCoefficients:
    """Noise coefficients from the closed-form rational expressions."""
    w = np.atleast_1d(np.asarray(omega, dtype=float))
    try:
        with np.errstate(invalid="ignore", divide="ignore"):
            rows = _coefficient_rows(params, w, "closed")
    except ZeroDivisionError:
        # the jit kernel raises on exact division by zero where the numpy
        # path would return inf; map both to the same error
        raise ValueError("evaluated at system pole") from None
    if not np.all(np.isfinite(rows)):
        raise ValueError("evaluated at system pole")
    return NoiseCoefficients.from_rows(rows, np.ndim(omega) == 0)


def solve_coefficients(params: SystemParams, omega) -> NoiseCoefficients:
    """Noise coefficients from the direct frequency-domain linear solve."""
    w = np.atleast_1d(np.asarray(omega, dtype=float))
    try:
        with np.errstate(invalid="ignore", divide="ignore"):
            rows = _coefficient_rows(params, w, "solve")
    except (np.linalg.LinAlgError, ZeroDivisionError):
        raise ValueError("evaluated at system pole") from None
    if not np.all(np.isfinite(rows)):
        raise ValueError("evaluated at system pole")
    return NoiseCoefficients.from_rows(rows, np.ndim(omega) == 0)


def _integrand_parts(rows: np.ndarray, nth0: float, nth1: float) -> np.ndarray:
    """Per-channel phonon-number integrand, columns (drive, local, ancilla).

    The creation-input coefficients pair with (occupation + 1), the
    annihilation-input ones with the occupation; the drive is vacuum.
    """
    sq = np.abs(rows) ** 2
    drive = sq[:, 1]
    local = (nth0 + 1.0) * sq[:, 3] + nth0 * sq[:, 2]
    ancilla = (nth1 + 1.0) * sq[:, 5] + nth1 * sq[:, 4]
    return np.stack([drive, local, ancilla], axis=-1)


def _panel_edges(params: SystemParams, eigvals: np.ndarray, window: float) -> np.ndarray:
    """Mandatory panel edges: resonance centers plus width-scaled ladders.

    Eigenvalues sit at ``lambda = -i*omega_pole``: the real-axis resonance
    center is ``-Im(lambda)`` with half-width ``-Re(lambda)``.
    """
    edges = [0.0, -2.0 * params.delta, 2.0 * params.delta]
    for lam in eigvals:
        center = -lam.imag
        width = max(-lam.real, 1e-13)
        edges.append(center)
        off = width
        while off < 1.2 * window:
            edges.append(center - off)
            edges.append(center + off)
            off *= 8.0
    return np.asarray(edges, dtype=float)


def _resolve_window(params: SystemParams, spec: QuadratureSpec) -> float:
    scale = max(params.kappa, 4.0 * max(params.omega0, params.omega1, abs(params.delta)))
    return spec.window * scale


def exact_n0(
    params: SystemParams,
    quad: QuadratureSpec | None = None,
    method: str = "solve",
) -> CoolingResult:
    """Steady phonon number of the target by frequency integration.

    Integrates the squared noise coefficients against the input
    occupations over the real axis (measure ``d omega / 2 pi``).  The
    drive, local-bath and ancilla-bath channels are integrated together on
    shared panels, so their sum equals the total except for float
    rounding.  ``method`` picks the coefficient evaluator: ``"solve"``
    (default) or ``"closed"``.
    """
    quad = quad or QuadratureSpec()
    drift = build_drift(params)
    stable, margin = stability(drift)
    if not stable:
        raise ValueError(f"divergent integral: drift is not stable (margin {margin:.3e})")
    window = _resolve_window(params, quad)
    eigvals = np.linalg.eigvals(drift.m)
    edges = _panel_edges(params, eigvals, window)

    def f(w: np.ndarray) -> np.ndarray:
        rows = _coefficient_rows(params, w, method, drift)
        return _integrand_parts(rows, params.nth0, params.nth1)

    total, err, _ = integrate_spectral(f, edges, quad, window)
    parts = total / _TWO_PI
    return CoolingResult(
        n0=float(parts.sum()),
        n0_drive=float(parts[0]),
        n0_local=float(parts[1]),
        n0_ancilla=float(parts[2]),
        stable=True,
        integration_error_estimate=float(err.sum() / _TWO_PI),
    )


_CHANNEL_SLICES = ((0, 2), (2, 4), (4, 6))


def _channel_sources(drift: DriftSystem) -> list[np.ndarray]:
    """Per-channel covariance source matrices D = L W L^H.

    W holds the white-noise correlators ``<w_i (w_j)+>``: ``diag(occ+1,
    occ)`` per channel pair, vacuum for the drive.  Splitting W by channel
    splits D additively, which is what makes the per-source decomposition
    exact.
    """
    occs = drift.raw_correlators
    out = []
    for (lo, hi), occ in zip(_CHANNEL_SLICES, occs):
        w = np.zeros((6, 6), dtype=np.complex128)
        w[lo, lo] = occ + 1.0
        w[hi - 1, hi - 1] = occ
        out.append(drift.noise_map @ w @ drift.noise_map.conj().T)
    return out


def steady_covariance(params: SystemParams) -> np.ndarray:
    """Full steady-state second-moment matrix ``<v_i v_j+>``."""
    drift = build_drift(params)
    stable, margin = stability(drift)
    if not stable:
        raise ValueError(f"steady covariance undefined: drift not stable (margin {margin:.3e})")
    d_total = sum(_channel_sources(drift))
    eye = np.eye(6, dtype=np.complex128)
    k = np.kron(drift.m, eye) + np.kron(eye, drift.m.conj())
    c = np.linalg.solve(k, -d_total.reshape(36))
    return c.reshape(6, 6)


def lyapunov_n0(params: SystemParams) -> CoolingResult:
    """Steady phonon number from the 36-unknown covariance solve.

    Independent of the frequency integration: no quadrature, no closed
    forms, just ``M C + C M^H + D = 0`` vectorized over row-major stacking
    and solved densely.  Per-channel numbers come from solving with each
    channel's source alone.
    """
    drift = build_drift(params)
    stable, margin = stability(drift)
    if not stable:
        raise ValueError(f"steady covariance undefined: drift not stable (margin {margin:.3e})")
    sources = _channel_sources(drift)
    eye = np.eye(6, dtype=np.complex128)
    k = np.kron(drift.m, eye) + np.kron(eye, drift.m.conj())
    rhs = np.stack([-d.reshape(36) for d in sources], axis=1)
    try:
        sol = np.linalg.solve(k, rhs)
    except np.linalg.LinAlgError as exc:
        raise ValueError(f"steady covariance solve is singular: {exc}") from exc
    # row-major vec: entry (3,3) of C is <b0+ b0>
    parts = [float(sol[3 * 6 + 3, ch].real) for ch in range(3)]
    return CoolingResult(
        n0=float(sum(parts)),
        n0_drive=parts[0],
        n0_local=parts[1],
        n0_ancilla=parts[2],
        stable=True,
        integration_error_estimate=0.0,
    )


def contribution_profile(
    params: SystemParams,
    g0_grid,
    quad: QuadratureSpec | None = None,
) -> list[ProfilePoint]:
    """Cooling results along a dispersive-coupling sweep.

    Per-point failures (instability, non-convergence, no-cooling) are
    recorded in the point's ``error`` and the sweep continues.
    """
    points: list[ProfilePoint] = []
    for g0 in np.asarray(g0_grid, dtype=float):
        local = replace(params, g0as=float(g0))
        qn: float | None
        try:
            qn = qnoise.qnoise_cooling_prediction(local).n0_pred
        except ValueError:
            qn = None
        try:
            cooling = exact_n0(local, quad=quad)
        except (ValueError, QuadratureError) as exc:
            points.append(ProfilePoint(g0as=float(g0), cooling=None, qnoise_n0=qn, error=str(exc)))
            continue
        points.append(ProfilePoint(g0as=float(g0), cooling=cooling, qnoise_n0=qn))
    return points


def char_poly_coeffs(params: SystemParams) -> np.ndarray:
    """Degree-6 polynomial (descending, in real frequency) whose roots are
    the system poles; ``lambda = -i * root`` recovers drift eigenvalues.

    Built from the product form of the coefficient denominator, so root
    agreement with ``eigvals(M)`` checks the closed-form transcription
    globally rather than at sampled frequencies.
    """
    kap, dlt = params.kappa, params.delta
    g0sq, g1sq = params.g0as ** 2, params.g1as ** 2
    om0, om1 = params.omega0, params.omega1

    def lin(const: complex) -> np.ndarray:
        return np.array([-1j, const], dtype=np.complex128)

    cci = lin(0.5 * kap - 1j * dlt)
    ccsi = lin(0.5 * kap + 1j * dlt)
    c0i = lin(0.5 * params.gamma0 + 1j * om0)
    c0si = lin(0.5 * params.gamma0 - 1j * om0)
    c1i = lin(0.5 * params.gamma1 + 1j * om1)
    c1si = lin(0.5 * params.gamma1 - 1j * om1)
    c11 = np.polymul(c1i, c1si)
    # cavity-cleared self-energy: linear in frequency
    sig_poly = np.array(
        [2j * dlt * kap * g1sq, -2.0 * dlt * g1sq * (0.75 * kap ** 2 - dlt ** 2)],
        dtype=np.complex128,
    )
    inner = np.polyadd(np.polymul(np.polymul(cci, ccsi), c11), 2.0 * om1 * sig_poly)
    poly = np.polymul(np.polymul(c0i, c0si), inner)
    poly = np.polyadd(poly, np.atleast_1d(-4.0 * om0 * om1 * kap ** 2 * g0sq * g1sq))
    poly = np.polyadd(poly, 4.0 * dlt * om0 * g0sq * c11)
    return poly
