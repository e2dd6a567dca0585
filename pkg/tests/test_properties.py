"""Randomized invariants over the admissible parameter space."""

import dataclasses

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from dissipcool.cli import _fmt
from dissipcool.exact import (
    appendix_coefficients,
    build_drift,
    exact_n0,
    solve_coefficients,
    stability,
)
from dissipcool.params import SystemParams, validate
from dissipcool.qnoise import (
    aux_A,
    aux_N,
    bare_nn_spectrum,
    full_nn_spectrum,
    thermal_mix,
)
from dissipcool.quadrature import QuadratureSpec, integrate_spectral

_SETTINGS = dict(max_examples=40, deadline=None)

finite = st.floats(allow_nan=False, allow_infinity=False)
rates = st.floats(min_value=1e-7, max_value=1e-2)
occupations = st.floats(min_value=0.0, max_value=1e4)


def params_strategy(g0_max=0.5, g1_max=0.6):
    # validity is what params.validate accepts; stability is not implied
    return st.builds(
        SystemParams,
        omega0=st.floats(min_value=0.1, max_value=2.0),
        kappa=st.floats(min_value=1.0, max_value=1000.0),
        gamma0=rates,
        gamma1=rates,
        g0as=st.floats(min_value=0.0, max_value=g0_max),
        g1as=st.floats(min_value=0.0, max_value=g1_max),
        delta=st.floats(min_value=-2.0, max_value=2.0),
        nth0=occupations,
        nth1=occupations,
        omega1=st.just(1.0),
    )


@given(
    n_opt=occupations,
    gamma_opt=st.floats(min_value=1e-9, max_value=1e3),
    n_th=occupations,
    gamma=st.floats(min_value=1e-9, max_value=1e3),
)
@settings(**_SETTINGS)
def test_thermal_mix_is_a_weighted_mean(n_opt, gamma_opt, n_th, gamma):
    mixed = thermal_mix(n_opt, gamma_opt, n_th, gamma)
    slack = 1e-12 * (1.0 + max(n_opt, n_th))  # rounding of the weighted mean
    assert min(n_opt, n_th) - slack <= mixed <= max(n_opt, n_th) + slack
    # channel labels are interchangeable
    assert mixed == thermal_mix(n_th, gamma, n_opt, gamma_opt)


@given(params=params_strategy(), omega=st.floats(min_value=0.01, max_value=5.0))
@settings(**_SETTINGS)
def test_response_conjugacy(params, omega):
    w = np.asarray([omega])
    for fn in (aux_A, aux_N):
        pos = fn(params, w)[0]
        neg = fn(params, -w)[0]
        scale = max(abs(pos), abs(neg), 1.0)
        assert abs(pos - np.conj(neg)) / scale < 1e-12


@given(params=params_strategy())
@settings(**_SETTINGS)
def test_full_spectrum_is_real_and_nonnegative(params):
    grid = np.linspace(-3.0, 3.0, 61)
    values = full_nn_spectrum(params, grid)
    assert np.isrealobj(values)
    assert np.all(values >= 0.0)


@given(params=params_strategy(g1_max=0.0))
@settings(**_SETTINGS)
def test_no_ancilla_reduces_to_bare(params):
    grid = np.linspace(-2.0, 2.0, 41)
    assert np.array_equal(full_nn_spectrum(params, grid), bare_nn_spectrum(params, grid))


@given(params=params_strategy(), omega=st.floats(min_value=-4.0, max_value=4.0))
@settings(**_SETTINGS)
def test_coefficient_routes_agree(params, omega):
    closed = appendix_coefficients(params, omega)
    solved = solve_coefficients(params, omega)
    for name in ("a_d", "b_d", "a0", "b0", "a1", "b1"):
        got, want = getattr(closed, name), getattr(solved, name)
        assert abs(got - want) <= 1e-8 * max(abs(got), abs(want), 1.0)


@given(params=params_strategy(g0_max=0.05, g1_max=0.2))
@settings(max_examples=15, deadline=None)
def test_stable_points_have_nonnegative_contributions(params):
    assert validate(params).ok
    stable, _ = stability(build_drift(params))
    if not stable:
        return
    result = exact_n0(params, quad=QuadratureSpec(rel_tol=1e-6))
    for part in (result.n0_drive, result.n0_local, result.n0_ancilla):
        assert part >= 0.0
    assert result.n0 >= 0.0


@given(
    centers=st.lists(st.floats(min_value=-5.0, max_value=5.0), min_size=1, max_size=4),
    log_widths=st.lists(st.floats(min_value=-6.0, max_value=0.0), min_size=1, max_size=4),
)
@settings(**_SETTINGS)
def test_quadrature_sums_of_lorentzians(centers, log_widths):
    n = min(len(centers), len(log_widths))
    centers = np.asarray(centers[:n])
    halfwidths = 10.0 ** np.asarray(log_widths[:n])

    def f(w):
        num = halfwidths[None, :]
        val = num / ((w[:, None] - centers[None, :]) ** 2 + num**2)
        return val.sum(axis=1, keepdims=True)

    edges = []
    for c, h in zip(centers, halfwidths):
        edges.extend([c, c - h, c + h, c - 8 * h, c + 8 * h])
    total, err, _ = integrate_spectral(f, edges, QuadratureSpec(rel_tol=1e-10), 50.0)
    want = n * np.pi  # each normalized Lorentzian integrates to pi
    assert abs(total[0] - want) < 1e-7 * want


@given(value=st.floats(allow_nan=False, allow_infinity=False))
@settings(**_SETTINGS)
def test_csv_float_format_round_trips(value):
    assert float(_fmt(value)) == value


@given(params=params_strategy())
@settings(**_SETTINGS)
def test_instability_never_crashes_stability(params):
    drift = build_drift(params)
    stable, margin = stability(drift)
    assert isinstance(stable, bool)
    assert np.isfinite(margin)
