"""Hot numeric kernels: noise-coefficient rows over frequency batches.

Two independent evaluators of the same six coefficients (the row of the
frequency-domain solution that belongs to the target oscillator's
annihilation operator):

* ``coeff_rows_solve``: direct dense solve of ``(-i w I - M) c = L`` per
  frequency.  Only one row of the inverse is needed, so it solves the
  transposed system for a unit vector and contracts with ``L``.
* ``coeff_rows_closed``: the closed-form rational expressions.

Both exist in a numba ``@njit`` version and a pure-numpy vectorized
version.  Selection: environment variable ``DISSIPCOOL_BACKEND`` set to
``numba``, ``numpy`` or ``auto`` (default; numba when importable).  The
flag is read per call so tests and benchmarks can flip it.

Output column order matches the input-channel order of the noise map:
(drive, drive-dagger, local bath, local-bath-dagger, ancilla bath,
ancilla-bath-dagger).
"""

from __future__ import annotations

import math
import os

import numpy as np

try:
    import numba as nb

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    nb = None
    _HAVE_NUMBA = False

__all__ = [
    "BACKEND_ENV",
    "active_backend",
    "have_numba",
    "coeff_rows_solve",
    "coeff_rows_closed",
]

BACKEND_ENV = "DISSIPCOOL_BACKEND"


def have_numba() -> bool:
    return _HAVE_NUMBA


def active_backend() -> str:
    """Resolve the kernel backend from the environment."""
    mode = os.environ.get(BACKEND_ENV, "auto").strip().lower()
    if mode in ("", "auto"):
        return "numba" if _HAVE_NUMBA else "numpy"
    if mode == "numba":
        if not _HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is unavailable")
        return "numba"
    if mode == "numpy":
        return "numpy"
    raise ValueError(f"{BACKEND_ENV} must be auto, numba or numpy, got {mode!r}")


_E2 = np.zeros(6, dtype=np.complex128)
_E2[2] = 1.0


def _coeff_rows_solve_numpy(m, noise_map, omega):
    n = omega.shape[0]
    eye = np.eye(6, dtype=np.complex128)
    s = (-1j * omega)[:, None, None] * eye - m[None, :, :]
    # Row 2 of S^{-1} L == (solve(S^T, e2))^T L: one RHS instead of six.
    st = np.swapaxes(s, 1, 2)
    rhs = np.broadcast_to(_E2, (n, 6))[..., None]
    y = np.linalg.solve(st, rhs)[..., 0]
    return y @ noise_map


def _coeff_rows_closed_numpy(p, omega):
    om0, om1, kap, g0m, g1m, g0, g1, dlt = p
    w = omega
    cci = 0.5 * kap - 1j * (w + dlt)
    ccsi = 0.5 * kap + 1j * (dlt - w)
    c0i = 0.5 * g0m - 1j * (w - om0)
    c0si = 0.5 * g0m - 1j * (w + om0)
    c1i = 0.5 * g1m - 1j * (w - om1)
    c1si = 0.5 * g1m - 1j * (w + om1)
    g1sq = g1 * g1
    sig = 1j * g1sq * (
        (1j * dlt + 0.5 * kap) ** 2 / cci - (1j * dlt - 0.5 * kap) ** 2 / ccsi
    )
    c11 = c1i * c1si
    nfun = c11 + 2.0 * om1 * sig
    script = (
        cci * ccsi * c0i * c0si * nfun
        - 4.0 * om0 * om1 * kap * kap * g0 * g0 * g1sq
        + 4.0 * dlt * om0 * g0 * g0 * c11
    )
    sqk = math.sqrt(kap)
    sq0 = math.sqrt(g0m)
    sq1 = math.sqrt(g1m)
    dpre = -1j * g0 * sqk * c0si / script
    a_d = dpre * (ccsi * c11 - 2j * om1 * g1sq * (2.0 * dlt * dlt - 1j * dlt * kap + 1j * w * kap))
    b_d = dpre * (cci * c11 + 2j * om1 * g1sq * (2.0 * dlt * dlt + 1j * dlt * kap + 1j * w * kap))
    a_0 = (-sq0 / script) * (
        2j * g0 * g0 * (kap * kap * om1 * g1sq - dlt * c11) + cci * ccsi * c0si * nfun
    )
    b_0 = (2j * sq0 * g0 * g0 / script) * (dlt * c11 - om1 * kap * kap * g1sq)
    bpre = g0 * g1 * c0si * sq1 * (1j * kap * kap + 2.0 * kap * w - 4j * dlt * dlt) / (2.0 * script)
    a_1 = bpre * c1si
    b_1 = bpre * c1i
    return np.stack([a_d, b_d, a_0, b_0, a_1, b_1], axis=-1)


if _HAVE_NUMBA:

    @nb.njit(cache=True)
    def _coeff_rows_solve_numba(m, noise_map, omega):  # pragma: no cover - jitted
        n = omega.shape[0]
        out = np.empty((n, 6), dtype=np.complex128)
        a = np.empty((6, 6), dtype=np.complex128)
        y = np.empty(6, dtype=np.complex128)
        for i in range(n):
            miw = -1j * omega[i]
            for r in range(6):
                for c in range(6):
                    a[r, c] = -m[c, r]
                a[r, r] += miw
            for k in range(6):
                y[k] = 0.0
            y[2] = 1.0
            # partial-pivot elimination; 6x6 so no blocking needed
            for col in range(6):
                p = col
                best = abs(a[col, col])
                for r in range(col + 1, 6):
                    v = abs(a[r, col])
                    if v > best:
                        best = v
                        p = r
                if p != col:
                    for c in range(col, 6):
                        tmp = a[col, c]
                        a[col, c] = a[p, c]
                        a[p, c] = tmp
                    tmp = y[col]
                    y[col] = y[p]
                    y[p] = tmp
                piv = a[col, col]
                for r in range(col + 1, 6):
                    f = a[r, col] / piv
                    if f != 0.0:
                        for c in range(col + 1, 6):
                            a[r, c] -= f * a[col, c]
                        y[r] -= f * y[col]
                    a[r, col] = 0.0
            for col in range(5, -1, -1):
                acc = y[col]
                for c in range(col + 1, 6):
                    acc -= a[col, c] * y[c]
                y[col] = acc / a[col, col]
            for j in range(6):
                acc = 0.0 + 0.0j
                for k in range(6):
                    acc += y[k] * noise_map[k, j]
                out[i, j] = acc
        return out

    @nb.njit(cache=True)
    def _coeff_rows_closed_numba(p, omega):  # pragma: no cover - jitted
        om0, om1, kap, g0m, g1m, g0, g1, dlt = p
        n = omega.shape[0]
        out = np.empty((n, 6), dtype=np.complex128)
        g1sq = g1 * g1
        sqk = math.sqrt(kap)
        sq0 = math.sqrt(g0m)
        sq1 = math.sqrt(g1m)
        plus = (1j * dlt + 0.5 * kap) ** 2
        minus = (1j * dlt - 0.5 * kap) ** 2
        for i in range(n):
            w = omega[i]
            cci = 0.5 * kap - 1j * (w + dlt)
            ccsi = 0.5 * kap + 1j * (dlt - w)
            c0i = 0.5 * g0m - 1j * (w - om0)
            c0si = 0.5 * g0m - 1j * (w + om0)
            c1i = 0.5 * g1m - 1j * (w - om1)
            c1si = 0.5 * g1m - 1j * (w + om1)
            sig = 1j * g1sq * (plus / cci - minus / ccsi)
            c11 = c1i * c1si
            nfun = c11 + 2.0 * om1 * sig
            script = (
                cci * ccsi * c0i * c0si * nfun
                - 4.0 * om0 * om1 * kap * kap * g0 * g0 * g1sq
                + 4.0 * dlt * om0 * g0 * g0 * c11
            )
            dpre = -1j * g0 * sqk * c0si / script
            out[i, 0] = dpre * (
                ccsi * c11 - 2j * om1 * g1sq * (2.0 * dlt * dlt - 1j * dlt * kap + 1j * w * kap)
            )
            out[i, 1] = dpre * (
                cci * c11 + 2j * om1 * g1sq * (2.0 * dlt * dlt + 1j * dlt * kap + 1j * w * kap)
            )
            out[i, 2] = (-sq0 / script) * (
                2j * g0 * g0 * (kap * kap * om1 * g1sq - dlt * c11)
                + cci * ccsi * c0si * nfun
            )
            out[i, 3] = (2j * sq0 * g0 * g0 / script) * (dlt * c11 - om1 * kap * kap * g1sq)
            bpre = (
                g0
                * g1
                * c0si
                * sq1
                * (1j * kap * kap + 2.0 * kap * w - 4j * dlt * dlt)
                / (2.0 * script)
            )
            out[i, 4] = bpre * c1si
            out[i, 5] = bpre * c1i
        return out


def coeff_rows_solve(m: np.ndarray, noise_map: np.ndarray, omega: np.ndarray) -> np.ndarray:
    """Coefficient rows by direct linear solve, shape ``(len(omega), 6)``."""
    omega = np.ascontiguousarray(omega, dtype=np.float64)
    m = np.ascontiguousarray(m, dtype=np.complex128)
    noise_map = np.ascontiguousarray(noise_map, dtype=np.complex128)
    if active_backend() == "numba":
        return _coeff_rows_solve_numba(m, noise_map, omega)
    return _coeff_rows_solve_numpy(m, noise_map, omega)


def coeff_rows_closed(p: tuple, omega: np.ndarray) -> np.ndarray:
    """Coefficient rows from the closed-form expressions.

    ``p`` is ``(omega0, omega1, kappa, gamma0, gamma1, g0as, g1as, delta)``.
    """
    omega = np.ascontiguousarray(omega, dtype=np.float64)
    p = tuple(float(v) for v in p)
    if active_backend() == "numba":
        return _coeff_rows_closed_numba(p, omega)
    return _coeff_rows_closed_numpy(p, omega)
