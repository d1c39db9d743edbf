import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chulimit import atomic_limits as atomic
from chulimit import constants as const
from chulimit.catalog import builtin_transitions, get_transition
from chulimit.chl_core import q_chl
from chulimit.errors import InputError


def test_uncertainty_bound_hydrogen():
    assert atomic.uncertainty_qbw_bound(2.4661e15, 1.6e-9) == pytest.approx(4.96e7, rel=1e-3)


def test_uncertainty_bound_trivial():
    assert atomic.uncertainty_qbw_bound(1 / (4 * math.pi), 1.0) == pytest.approx(1.0)


@given(st.floats(1.0, 1e16), st.floats(1e-15, 1.0))
def test_uncertainty_bound_linear_in_lifetime(f, dt):
    assert atomic.uncertainty_qbw_bound(f, 2 * dt) == pytest.approx(2 * atomic.uncertainty_qbw_bound(f, dt))


@pytest.mark.parametrize("f, dt", [(0.0, 1.0), (1.0, 0.0), (-1.0, 1.0)])
def test_uncertainty_bound_rejects_nonpositive(f, dt):
    with pytest.raises(InputError):
        atomic.uncertainty_qbw_bound(f, dt)


@pytest.mark.parametrize(
    "label, tau_ns, rel",
    [("Cs D2", 6.38, 0.01), ("Rb87 D1", 6.29, 0.01), ("Cs D1", 8.45, 0.01), ("H 2P-1S", 0.0096, 0.01)],
)
def test_lifetime_bound(label, tau_ns, rel):
    assert atomic.lifetime_bound(get_transition(label)) * 1e9 == pytest.approx(tau_ns, rel=rel)


@pytest.mark.parametrize(
    "label, d_au",
    [("Cs D1", 6.46), ("Cs D2", 6.92), ("Rb87 D1", 6.29), ("Rb87 D2", 6.47), ("H 2P-1S", 9.61)],
)
def test_dipole_bound(label, d_au):
    assert atomic.dipole_bound(get_transition(label)) == pytest.approx(d_au, rel=0.01)


def test_hydrogen_printed_radius_gives_different_bound():
    h = get_transition("H 2P-1S").with_radius(1.73)
    assert atomic.lifetime_bound(h) * 1e9 == pytest.approx(0.305, rel=0.01)
    assert atomic.dipole_bound(h) == pytest.approx(1.71, rel=0.01)


def test_lifetime_bound_construction():
    for t in builtin_transitions():
        rep = atomic.atomic_bounds(t)
        assert rep.lifetime_bound * 4 * math.pi * rep.frequency == pytest.approx(rep.q_chl, rel=1e-15)


def test_dipole_bound_closed_form():
    # independent evaluation in SI, then to atomic units
    t = get_transition("Cs D2")
    f = const.c / t.wavelength
    ka = 2 * math.pi * f / const.c * t.chu_radius * const.a0
    q = 1 / ka**3 + 1 / ka
    d = math.sqrt(3 * const.eps0 * const.h * const.c**3 / (4 * math.pi**2 * f**2 * q))
    assert atomic.dipole_bound(t) == pytest.approx(d / (const.e_charge * const.a0), rel=1e-12)


def test_einstein_a_hydrogen_reference():
    # the reference dipole reproduces the reference lifetime in standard mode
    t = get_transition("H 2P-1S")
    tau = 1.0 / atomic.einstein_a(t.frequency, t.reference_dipole)
    assert tau == pytest.approx(1.6e-9, rel=0.05)


def test_einstein_a_modes():
    f, d = 4.0e14, 3.0
    assert atomic.einstein_a(f, d, "paper_factor2") == pytest.approx(2 * atomic.einstein_a(f, d, "standard"))
    assert atomic.einstein_a(f, 0.0) == 0.0
    with pytest.raises(InputError):
        atomic.einstein_a(f, d, "other")
    with pytest.raises(InputError):
        atomic.einstein_a(-f, d)


@given(st.floats(1e-8, 1e-5), st.floats(0.5, 50.0))
def test_einstein_a_at_dipole_bound(lam, radius):
    t = atomic.AtomicTransition("x", lam, radius)
    lhs = atomic.einstein_a(t.frequency, atomic.dipole_bound(t))
    assert lhs == pytest.approx(4 * math.pi * t.frequency / atomic.transition_q_chl(t), rel=1e-12)


@given(st.floats(1e-8, 1e-5), st.floats(0.5, 50.0), st.floats(1.001, 3.0))
def test_bounds_loosen_with_radius(lam, radius, k):
    small = atomic.AtomicTransition("x", lam, radius)
    big = small.with_radius(radius * k)
    assert atomic.lifetime_bound(big) < atomic.lifetime_bound(small)
    assert atomic.dipole_bound(big) > atomic.dipole_bound(small)


@pytest.mark.parametrize("t", builtin_transitions(), ids=lambda t: t.label)
def test_catalog_transitions_respect_bounds(t):
    assert atomic.lifetime_bound(t) <= t.reference_lifetime
    assert atomic.dipole_bound(t) >= t.reference_dipole


def test_transition_q_chl_matches_core():
    t = get_transition("Rb87 D2")
    ka = 2 * math.pi / t.wavelength * t.chu_radius * const.a0
    assert atomic.transition_q_chl(t) == pytest.approx(q_chl(ka), rel=1e-12)


@pytest.mark.parametrize(
    "kwargs",
    [dict(wavelength=0.0, chu_radius=1.0), dict(wavelength=1e-7, chu_radius=-1.0),
     dict(wavelength=1e-7, chu_radius=1.0, reference_lifetime=0.0)],
)
def test_transition_validation(kwargs):
    with pytest.raises(InputError):
        atomic.AtomicTransition("bad", **kwargs)


def test_report_mode_recorded():
    rep = atomic.atomic_bounds(get_transition("Cs D1"), "paper_factor2")
    assert rep.a_coefficient_mode == "paper_factor2"
    assert rep.a_at_dipole_bound == pytest.approx(2 * 4 * math.pi * rep.frequency / rep.q_chl)
