"""Adaptive spectral quadrature over the whole real frequency axis.

The integrands here are sums of squared moduli of rational functions: a
smooth cavity-scale background plus mechanical resonances up to six orders
of magnitude narrower.  A global adaptive scheme would waste its effort
finding the peaks, so the caller supplies mandatory panel edges (placed at
resonance centers and width-scaled offsets, from the drift-matrix
eigenvalues) and this module only has to refine within panels.

Scheme: 15-point Gauss-Kronrod rule with the embedded 7-point Gauss rule
as error estimate, per panel; panels whose error exceeds their share of
the budget are bisected.  The two semi-infinite tails beyond the resolved
window are folded to (0, 1] with ``omega = window/u`` and integrated by
the same rule (no endpoint evaluations, so the map is safe).

Determinism: panel subdivision depends only on computed values, and the
final accumulation is a compensated (Neumaier) sum over panels in a fixed
sort order, so results are bit-identical for a given backend regardless
of how the work is scheduled.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["QuadratureSpec", "QuadratureError", "integrate_spectral", "neumaier_total"]


@dataclass(frozen=True)
class QuadratureSpec:
    """Quadrature controls.

    rel_tol/abs_tol bound the accumulated error estimate against the
    integral magnitude; ``window`` is the half-width of the explicitly
    resolved frequency window in units of the cavity linewidth; panels
    beyond it are handled by the mapped tail rule.  ``max_panels`` caps
    adaptive growth; exceeding it raises :class:`QuadratureError`.
    """

    rel_tol: float = 1e-8
    abs_tol: float = 0.0
    max_panels: int = 20000
    window: float = 10.0
    tail: bool = True


class QuadratureError(RuntimeError):
    """Raised when the panel budget is exhausted before the tolerance.

    Carries the best available estimate so callers can report how far the
    integration got.
    """

    def __init__(self, message: str, total=None, error=None):
        super().__init__(message)
        self.total = total
        self.error = error


# 15-point Kronrod nodes/weights (positive half) and the embedded 7-point
# Gauss weights.  Classic double-precision constants.
_XGK_HALF = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144838258730,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.000000000000000000000000000000000,
    ]
)
_WGK_HALF = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ]
)
_WG_HALF = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    ]
)

_XGK = np.concatenate([-_XGK_HALF[:-1], _XGK_HALF[::-1]])  # ascending, 15 nodes
_WGK = np.concatenate([_WGK_HALF[:-1], _WGK_HALF[::-1]])
# Gauss nodes sit at every second Kronrod node (odd indices).
_WG = np.concatenate([_WG_HALF[:-1], _WG_HALF[::-1]])

_KIND_CORE, _KIND_TAIL_POS, _KIND_TAIL_NEG = 0, 1, 2


def neumaier_total(rows: np.ndarray) -> np.ndarray:
    """Compensated column sums of ``rows`` in the given row order."""
    total = np.zeros(rows.shape[1])
    comp = np.zeros(rows.shape[1])
    for row in rows:
        s = total + row
        swap = np.abs(total) < np.abs(row)
        big = np.where(swap, row, total)
        small = np.where(swap, total, row)
        comp += (big - s) + small
        total = s
    return total + comp


def _eval_panels(f, window, a, b, kind, m):
    """Gauss-Kronrod estimates for a batch of panels.

    Returns per-panel Kronrod integrals (P, m) and error estimates (P, m).
    """
    npan = a.shape[0]
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    x = mid[:, None] + half[:, None] * _XGK[None, :]
    vals = np.empty((npan, _XGK.size, m))
    for k, transform in (
        (_KIND_CORE, None),
        (_KIND_TAIL_POS, 1.0),
        (_KIND_TAIL_NEG, -1.0),
    ):
        sel = kind == k
        if not np.any(sel):
            continue
        xs = x[sel].reshape(-1)
        if transform is None:
            out = np.asarray(f(xs), dtype=float)
        else:
            out = np.asarray(f(transform * window / xs), dtype=float)
            out = out * (window / xs ** 2)[:, None]
        vals[sel] = out.reshape(-1, _XGK.size, m)
    i15 = np.einsum("pnm,n->pm", vals, _WGK) * half[:, None]
    i7 = np.einsum("pnm,n->pm", vals[:, 1::2, :], _WG) * half[:, None]
    return i15, np.abs(i15 - i7)


def integrate_spectral(f, inner_edges, spec: QuadratureSpec, window: float):
    """Integrate a vector-valued ``f`` over the real line.

    ``f`` maps a 1-d frequency array to an ``(n, m)`` array; the return is
    ``(total (m,), error (m,), evaluations)``.  ``inner_edges`` are
    mandatory panel boundaries; they are clipped to ``[-window, window]``
    and the window boundaries are always included.
    """
    edges = np.asarray(inner_edges, dtype=float)
    edges = edges[(edges > -window) & (edges < window)]
    edges = np.unique(np.concatenate([edges, [-window, window]]))
    a = edges[:-1].copy()
    b = edges[1:].copy()
    kind = np.full(a.shape, _KIND_CORE, dtype=np.int8)
    if spec.tail:
        # omega = +-window/u folds each semi-infinite tail onto u in (0, 1].
        a = np.concatenate([a, [0.0, 0.0]])
        b = np.concatenate([b, [1.0, 1.0]])
        kind = np.concatenate([kind, [_KIND_TAIL_POS, _KIND_TAIL_NEG]])

    probe = np.asarray(f(np.asarray([0.0])), dtype=float)
    m = probe.shape[1]
    i15, err = _eval_panels(f, window, a, b, kind, m)
    evals = a.shape[0] * _XGK.size + 1

    while True:
        total_mag = float(np.sum(np.abs(i15))) or 1.0
        budget = max(spec.abs_tol, spec.rel_tol * total_mag)
        panel_err = err.sum(axis=1)
        if float(panel_err.sum()) <= budget:
            break
        if a.shape[0] >= spec.max_panels:
            order = np.lexsort((a, kind))
            raise QuadratureError(
                "quadrature panel budget exhausted before reaching tolerance",
                total=neumaier_total(i15[order]),
                error=err.sum(axis=0),
            )
        split = panel_err > budget / a.shape[0]
        if not np.any(split):  # rounding stalemate: split the worst panel
            split = panel_err == panel_err.max()
        mid = 0.5 * (a[split] + b[split])
        new_a = np.concatenate([a[~split], a[split], mid])
        new_b = np.concatenate([b[~split], mid, b[split]])
        new_kind = np.concatenate([kind[~split], kind[split], kind[split]])
        keep_i15, keep_err = i15[~split], err[~split]
        fresh_a = np.concatenate([a[split], mid])
        fresh_b = np.concatenate([mid, b[split]])
        fresh_kind = np.concatenate([kind[split], kind[split]])
        fresh_i15, fresh_err = _eval_panels(f, window, fresh_a, fresh_b, fresh_kind, m)
        evals += fresh_a.shape[0] * _XGK.size
        a, b, kind = new_a, new_b, new_kind
        i15 = np.concatenate([keep_i15, fresh_i15])
        err = np.concatenate([keep_err, fresh_err])

    order = np.lexsort((a, kind))
    return neumaier_total(i15[order]), err.sum(axis=0), evals
