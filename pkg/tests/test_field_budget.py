import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chulimit import field_budget as fb
from chulimit.constants import UncertainValue
from chulimit.errors import InputError


def pzt_measurement(b=50e-15, sigma=10e-15, distance=4.5):
    return fb.FieldMeasurement(UncertainValue(b, sigma), distance, far_field_onset=1.3)


def test_isotropic_power_pzt():
    p = fb.isotropic_radiated_power(pzt_measurement())
    assert p.value == pytest.approx(75.9e-12, abs=0.05e-12)
    assert p.sigma == pytest.approx(30.4e-12, abs=0.05e-12)


def test_isotropic_power_zero_field():
    p = fb.isotropic_radiated_power(fb.FieldMeasurement(UncertainValue(0.0, 0.0), 1.0))
    assert (p.value, p.sigma) == (0.0, 0.0)


def test_isotropic_power_quadratic_in_b():
    base = fb.isotropic_radiated_power(pzt_measurement(sigma=0.0)).value
    double = fb.isotropic_radiated_power(pzt_measurement(b=100e-15, sigma=0.0)).value
    assert double == pytest.approx(4 * base, rel=1e-15)


@pytest.mark.parametrize(
    "value, gain, expected",
    [(75.9e-12, 1.5, 50.6e-12), (3.0, 1.0, 3.0), (78.9e-12, 1.5, 52.6e-12)],
)
def test_gain_corrected_power(value, gain, expected):
    assert fb.gain_corrected_power(UncertainValue(value), gain).value == pytest.approx(expected, rel=1e-3)


def test_gain_below_one_rejected():
    with pytest.raises(InputError):
        fb.gain_corrected_power(UncertainValue(1.0), 0.5)
    with pytest.raises(InputError):
        fb.FieldMeasurement(UncertainValue(1.0), 1.0, gain=0.9)


@pytest.mark.parametrize(
    "p_rad, p_in, expected, rel",
    [(52.6e-12, 1.2, 4.4e-11, 5e-3), (2.0, 1e6, 2e-6, 0.0), (0.0, 1.0, 0.0, 0.0)],
)
def test_radiation_efficiency(p_rad, p_in, expected, rel):
    assert fb.radiation_efficiency(UncertainValue(p_rad), p_in).value == pytest.approx(expected, rel=rel)


def test_radiation_efficiency_rejects_nonpositive_input():
    with pytest.raises(InputError):
        fb.radiation_efficiency(1.0, 0.0)


def test_pzt_budget():
    budget = fb.radiation_budget(pzt_measurement(), 1.2)
    assert budget.p_rad.value == pytest.approx(budget.p_rad_iso.value / 1.5)
    assert budget.eta.value == pytest.approx(budget.p_rad.value / 1.2)
    assert budget.eta.value == pytest.approx(4.4e-11, rel=0.10)
    assert budget.eta.sigma == pytest.approx(1.7e-11, rel=0.10)


@pytest.mark.parametrize(
    "f, q, s, expected, rel",
    [(35568, 303000, 2, 0.083, 2e-3), (35568, 303000, 1, 0.0, 0.0), (35568, 615000, 2, 0.0409, 1e-3)],
)
def test_vswr_bandwidth(f, q, s, expected, rel):
    assert fb.vswr_bandwidth(f, q, s) == pytest.approx(expected, rel=rel)


def test_vswr_rejects_below_one():
    with pytest.raises(InputError):
        fb.vswr_bandwidth(1.0, 1.0, 0.99)


positive = st.floats(1e-3, 1e3)


@given(st.floats(1e-16, 1e-6), positive, st.floats(0.1, 10), st.floats(0.1, 10))
def test_power_scales_as_b2_r2(b, r, kb, kr):
    p1 = fb.isotropic_radiated_power(fb.FieldMeasurement(UncertainValue(b), r)).value
    p2 = fb.isotropic_radiated_power(fb.FieldMeasurement(UncertainValue(b * kb), r * kr)).value
    assert p2 == pytest.approx(p1 * kb**2 * kr**2, rel=1e-12)


@given(st.floats(1e-16, 1e-6), st.floats(0.0, 1.0), positive)
def test_relative_uncertainty_doubles(b, frac, r):
    m = fb.FieldMeasurement(UncertainValue(b, b * frac), r)
    p = fb.isotropic_radiated_power(m)
    assert p.relative == pytest.approx(2 * m.b_rms.relative, rel=1e-12, abs=1e-300)


@given(st.floats(1e-15, 1e3), st.floats(0, 1e3), st.floats(1.0, 10.0), st.floats(1e-3, 1e7))
def test_gain_and_input_division_commute(value, sigma, gain, p_in):
    p = UncertainValue(value, sigma)
    a = fb.radiation_efficiency(fb.gain_corrected_power(p, gain), p_in)
    b = fb.gain_corrected_power(fb.radiation_efficiency(p, p_in), gain)
    assert a.value == pytest.approx(b.value, rel=1e-14)
    assert a.sigma == pytest.approx(b.sigma, rel=1e-14, abs=1e-300)


@given(st.floats(1.0, 1e6), st.floats(1.0, 1e7), st.floats(1.001, 10.0), st.floats(1e-3, 5.0))
def test_vswr_monotone_and_inverse_in_q(f, q, s, ds):
    assert fb.vswr_bandwidth(f, q, s + ds) > fb.vswr_bandwidth(f, q, s)
    assert fb.vswr_bandwidth(f, 2 * q, s) == pytest.approx(fb.vswr_bandwidth(f, q, s) / 2, rel=1e-14)


def test_far_field_onset_is_metadata_only():
    near = fb.FieldMeasurement(UncertainValue(50e-15, 10e-15), 1.0, far_field_onset=1.3)
    assert math.isfinite(fb.isotropic_radiated_power(near).value)
