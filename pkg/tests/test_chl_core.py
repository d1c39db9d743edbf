import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from chulimit import chl_core as chl
from chulimit import constants as const
from chulimit.errors import InputError

pos_ka = st.floats(1e-4, 1e3)
freq = st.floats(1.0, 1e15)


@st.composite
def resonances(draw):
    f = draw(freq)
    frac = draw(st.floats(1e-9, 0.5))
    return chl.ResonanceSpec(f, f * frac)


radii = st.floats(1e-6, 1e5)
etas = st.just(0.0) | st.floats(1e-15, 1.0)


@pytest.mark.parametrize(
    "args, expected",
    [((1, 1, 1, 1, 1), 1.0), ((0, 0, 5, 0, 100), 0.0), ((2, 3, 4, 1, 10), 10.0)],
)
def test_q_stored(args, expected):
    assert chl.q_stored(*args) == pytest.approx(expected)


def test_q_stored_rejects_zero_dissipation():
    with pytest.raises(InputError):
        chl.q_stored(1, 1, 0, 0, 1)
    with pytest.raises(InputError):
        chl.q_stored(-1, 1, 1, 0, 1)


@pytest.mark.parametrize("ka, expected, rel", [(0.4703, 11.74, 1e-3), (0.02538, 6.12e4, 2e-3), (1.0, 2.0, 0.0)])
def test_q_chl(ka, expected, rel):
    assert chl.q_chl(ka) == pytest.approx(expected, rel=rel)


@pytest.mark.parametrize("bad", [0.0, -0.5, float("nan")])
def test_q_chl_rejects_nonpositive(bad):
    with pytest.raises(InputError):
        chl.q_chl(bad)


@pytest.mark.parametrize("f, df, expected", [(76, 4, 19), (24000, 240, 100), (3.0, 2.0, 1.5)])
def test_q_bw(f, df, expected):
    assert chl.q_bw(chl.ResonanceSpec(f, df)) == pytest.approx(expected)


@pytest.mark.parametrize("f, df", [(10.0, 10.0), (10.0, 20.0), (10.0, 0.0), (0.0, 1.0), (10.0, -1.0)])
def test_resonance_rejects_non_narrowband(f, df):
    with pytest.raises(InputError):
        chl.ResonanceSpec(f, df)


def test_resonance_from_band():
    res = chl.ResonanceSpec.from_band(33218.0, 33248.0)
    assert res == chl.ResonanceSpec(33233.0, 30.0)


@pytest.mark.parametrize(
    "f, df, a, expected, rel",
    [
        (76, 8, 15932, 1.55e-4, 5e-3),
        (24000, 240, 935, 1.0, 0.0),
        (35568, 0.084, 0.047, 1.82e-8, 2e-3),
        (33233, 30, 0.0403, 2.4e-11, 1e-2),
    ],
)
def test_efficiency_bound(f, df, a, expected, rel):
    assert chl.efficiency_bound(chl.ResonanceSpec(f, df), a) == pytest.approx(expected, rel=rel)


def test_power_density_limit():
    res = chl.ResonanceSpec(76, 4)
    # direct evaluation 6 pi^2 f^4 / (c^3 df)
    assert chl.power_density_limit(res) == pytest.approx(6 * math.pi**2 * 76**4 / (299792458.0**3 * 4), rel=1e-15)
    assert chl.power_density_limit(res) == pytest.approx(1.83e-17, rel=2e-3)
    assert chl.power_density_limit(chl.ResonanceSpec(76, 8)) == pytest.approx(chl.power_density_limit(res) / 2)
    assert chl.power_density_limit(chl.ResonanceSpec(152, 4)) == pytest.approx(16 * chl.power_density_limit(res))


@pytest.mark.parametrize(
    "eta, a, f, df, expected",
    [(2e-6, 15932, 76, 4, 0.0064), (0.5, 935, 24000, 240, 0.048), (1e-8, 0.047, 35568, 0.084, 0.55)],
)
def test_fom(eta, a, f, df, expected):
    assert chl.fom(eta, a, chl.ResonanceSpec(f, df)) == pytest.approx(expected, rel=0.01)


def test_fom_not_clipped_for_vlf():
    res = chl.ResonanceSpec(24000, 240)
    assert chl.efficiency_bound(res, 935) == 1.0
    # 0.5 over the unclipped deep-subwavelength ratio
    assert chl.fom(0.5, 935, res) == pytest.approx(0.5 / (chl.q_bw(res) / chl.q_chl_deep(chl.electrical_size(24000, 935).ka)))


@pytest.mark.parametrize(
    "geometry, expected, rel",
    [
        (chl.Geometry("crossed_dipoles", length=22530.8), 15932.0, 1e-4),
        (chl.Geometry("rod", length=0.094, diameter=0.016), 0.047, 1e-12),
        (chl.Geometry("sphere", radius=1.0), 1.0, 0.0),
        (chl.Geometry("disk", diameter=0.08, height=0.01), math.sqrt(0.08**2 + 0.01**2) / 2, 1e-12),
    ],
)
def test_enclosing_radius(geometry, expected, rel):
    assert chl.enclosing_radius(geometry) == pytest.approx(expected, rel=rel)


def test_rod_convention_alternative():
    # half-diagonal instead of half-length would move the LN bound to ~1.90e-8
    res = chl.ResonanceSpec(35568, 0.084)
    assert chl.efficiency_bound(res, math.hypot(0.094, 0.016) / 2) == pytest.approx(1.90e-8, rel=5e-3)


def test_geometry_validation():
    with pytest.raises(InputError):
        chl.Geometry("cone", length=1.0)
    with pytest.raises(InputError):
        chl.Geometry("rod", length=1.0)
    with pytest.raises(InputError):
        chl.Geometry("sphere", radius=-1.0)


def test_electrical_size_flag():
    assert chl.electrical_size(76, 15932).electrically_small
    assert not chl.electrical_size(3e8, 1.0).electrically_small


def test_q_chl_monotone_on_log_grid():
    q = [chl.q_chl(x) for x in np.geomspace(1e-3, 1e2, 100)]
    assert all(b < a for a, b in zip(q, q[1:]))


@given(pos_ka, pos_ka)
def test_q_chl_strictly_decreasing(x, y):
    assume(x < y * (1 - 1e-9))
    assert chl.q_chl(x) > chl.q_chl(y)


@given(st.floats(1e-5, 0.01, exclude_max=True))
def test_deep_subwavelength_correction_is_second_order(ka):
    assert abs(chl.q_chl(ka) - 1 / ka**3) / chl.q_chl(ka) < 1.1 * ka**2


@given(pos_ka)
def test_q_chl_exceeds_deep_form(ka):
    assert chl.q_chl(ka) > chl.q_chl_deep(ka)


@given(resonances(), radii)
def test_unclipped_bound_is_q_ratio(res, a):
    ka = chl.electrical_size(res.f, a).ka
    assume(ka > 1e-30)
    assert chl.unclipped_efficiency_bound(res, a) == pytest.approx(chl.q_bw(res) / chl.q_chl(ka), rel=1e-12)
    assert chl.efficiency_bound(res, a) <= 1.0


@given(resonances(), radii, etas)
def test_fom_identity(res, a, eta):
    ka = chl.electrical_size(res.f, a).ka
    assume(ka > 1e-30)
    expected = eta * res.delta_f * chl.q_chl_deep(ka) / res.f
    assert chl.fom(eta, a, res) == pytest.approx(expected, rel=1e-12, abs=0.0)


@given(resonances(), radii)
def test_power_density_volume_identity(res, a):
    ka = chl.electrical_size(res.f, a).ka
    assume(ka > 1e-30)
    lhs = chl.power_density_limit(res) * chl.sphere_volume(a)
    assert lhs == pytest.approx(chl.q_bw(res) / chl.q_chl_deep(ka), rel=1e-12)


@given(resonances(), radii, st.floats(1e-12, 0.5))
def test_fom_linear_in_eta(res, a, eta):
    assert chl.fom(2 * eta, a, res) == pytest.approx(2 * chl.fom(eta, a, res), rel=1e-15)


def test_chl_report_fields():
    res = chl.ResonanceSpec(24000, 240)
    rep = chl.chl_report(res, 935, 0.5)
    assert rep.clipped
    assert rep.q_chl > rep.q_chl_ds
    assert rep.fom == pytest.approx(chl.fom(0.5, 935, res))
    assert chl.chl_report(res, 935).fom is None


def test_report_reads_speed_of_light_at_call_time(monkeypatch):
    before = chl.electrical_size(76, 15932).ka
    monkeypatch.setattr(const, "c", const.c * 2)
    assert chl.electrical_size(76, 15932).ka == pytest.approx(before / 2)
