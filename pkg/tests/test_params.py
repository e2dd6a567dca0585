import dataclasses
import math

import numpy as np
import pytest

from dissipcool import SystemParams, chi_c, chi_osc, validate
from dissipcool.params import PARAM_NAMES


def test_param_names_cover_all_fields():
    assert PARAM_NAMES == (
        "omega0", "kappa", "gamma0", "gamma1", "g0as", "g1as",
        "delta", "nth0", "nth1", "omega1",
    )


def test_params_frozen(fig2):
    with pytest.raises(dataclasses.FrozenInstanceError):
        fig2.kappa = 1.0


def test_validate_accepts_presets(fig2, fig3, fig4a, fig4b, fig5, fig6):
    for p in (fig2, fig3, fig4a, fig4b, fig5, fig6):
        rep = validate(p)
        assert rep.ok, rep.errors
        assert rep.flags["unresolved_sideband"]
        assert rep.flags["blue_detuned"]
        assert rep.flags["coupled"]


def test_validate_collects_every_error(fig2):
    bad = dataclasses.replace(fig2, kappa=-1.0, gamma0=0.0, nth1=-2.0)
    rep = validate(bad)
    assert not rep.ok
    assert len(rep.errors) == 3
    joined = " ".join(rep.errors)
    for name in ("kappa", "gamma0", "nth1"):
        assert name in joined


def test_validate_rejects_nonfinite(fig2):
    rep = validate(dataclasses.replace(fig2, delta=math.nan))
    assert any("finite" in e for e in rep.errors)


def test_validate_warns_on_strong_softening(fig2):
    rep = validate(dataclasses.replace(fig2, g1as=1.5))
    assert rep.ok
    assert any("softening" in w for w in rep.warnings)


def test_validate_warns_on_low_quality(fig2):
    rep = validate(dataclasses.replace(fig2, gamma1=0.5))
    assert rep.ok
    assert any("quality" in w for w in rep.warnings)


def test_chi_c_value_and_shape(fig2):
    w = np.array([-1.0, 0.0, 2.5])
    got = chi_c(fig2, w)
    assert got.shape == (3,)
    want = 1.0 / (0.5 * fig2.kappa - 1j * (0.0 + fig2.delta))
    assert got[1] == pytest.approx(want)


def test_chi_osc_peak_height():
    # on resonance the magnitude is 2/gamma
    val = chi_osc(0.7, 0.7, 1e-3)
    assert abs(val) == pytest.approx(2000.0)
