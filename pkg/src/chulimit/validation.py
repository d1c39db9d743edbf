"""Reproduction checks behind ``chulimit validate``.

Each check compares a live computation with a published or derived
expectation at a fixed tolerance. Checks whose published value is known
not to follow from its stated inputs are reported as expected deviations;
they never count as failures.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable, Optional

import numpy as np

from . import atomic_limits as atomic
from . import chl_core as chl
from . import constants as const
from . import field_budget as fb
from . import published as pub
from . import reports
from .catalog import builtin_transitions, get_emitter
from .radial_atoms import (
    ModelPotentialParams,
    QuantumDefectSeries,
    QuantumState,
    element_data,
    hydrogen_rms_radius,
    mean_radius,
    rms_radius,
    solve_radial,
)

__all__ = ["Check", "run_checks", "summary"]

PASS, FAIL, EXPECTED = "pass", "fail", "expected deviation"

# Seed for the algebraic-identity samples; fixed so output is reproducible.
IDENTITY_SEED = 20240117
IDENTITY_SAMPLES = 200


@dataclass
class Check:
    id: str
    criterion: int
    description: str
    computed: Optional[float]
    expected: Optional[float]
    tolerance: str
    status: str
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def as_dict(self) -> dict:
        return asdict(self)


def _rel(computed: float, expected: float) -> float:
    return abs(computed / expected - 1.0)


def _within(computed: float, expected: pub.Published | float, rtol: float) -> bool:
    """Relative tolerance, widened to the print rounding of ``expected`` if any."""
    if isinstance(expected, pub.Published):
        return abs(computed - expected.value) <= max(rtol * abs(expected.value), expected.rounding)
    return abs(computed - expected) <= rtol * abs(expected)


class _Collector:
    def __init__(self):
        self.checks: list[Check] = []

    def add(self, id, criterion, description, computed, expected, tolerance, ok, detail="", known=False):
        status = EXPECTED if known else (PASS if ok else FAIL)
        self.checks.append(Check(id, criterion, description, computed, expected, tolerance, status, detail))

    def rel(self, id, criterion, description, computed, expected, rtol, detail=""):
        value = expected.value if isinstance(expected, pub.Published) else expected
        ok = _within(computed, expected, rtol)
        dev = _rel(computed, value)
        if not detail:
            detail = f"deviation {dev:.3%}"
            if ok and dev > rtol:
                detail += f" (within print rounding of {expected.rounding:g})"
        self.add(id, criterion, description, computed, value, f"rel {rtol:g}", ok, detail)


def _table1_checks(col: _Collector) -> None:
    elf, vlf = get_emitter("ELF"), get_emitter("VLF")
    a_elf = chl.enclosing_radius(elf.geometry)
    a_vlf = chl.enclosing_radius(vlf.geometry)
    ka_elf = chl.electrical_size(elf.resonance.f, a_elf).ka
    ka_vlf = chl.electrical_size(vlf.resonance.f, a_vlf).ka
    col.rel("T1.q_chl.ELF", 1, "Q_CHL for the ELF facility", chl.q_chl(ka_elf),
            pub.TABLE1["ELF"]["q_chl"].value, 0.02)
    col.rel("T1.q_chl.VLF", 1, "Q_CHL for the VLF facility", chl.q_chl(ka_vlf),
            pub.TABLE1["VLF"]["q_chl"].value, 0.01)
    bound_vlf = chl.efficiency_bound(vlf.resonance, a_vlf)
    col.add("T1.bound.VLF", 1, "VLF efficiency bound is clipped to exactly 1", bound_vlf, 1.0, "exact",
            bound_vlf == 1.0)
    alt = elf.resonance_for("alternate")
    col.rel("T1.bound.ELF.alternate", 1, "ELF efficiency bound with delta_f = 8 Hz",
            chl.efficiency_bound(alt, a_elf), pub.TABLE1["ELF"]["efficiency_bound"].value, 0.05)
    primary = chl.efficiency_bound(elf.resonance, a_elf)
    col.rel("T1.bound.ELF.primary", 1, "ELF efficiency bound with delta_f = 4 Hz (documented 3.1e-4)",
            primary, 3.1e-4, 0.02)
    col.add("T1.bound.ELF.primary_vs_published", 1,
            "ELF bound with delta_f = 4 Hz against the printed 1.5e-4", primary,
            pub.TABLE1["ELF"]["efficiency_bound"].value, "n/a", False,
            pub.KNOWN_DEVIATIONS[(1, "ELF", "efficiency_bound", "primary")], known=True)
    col.rel("T1.a.ELF", 1, "ELF enclosing radius 14/sqrt(2) miles", a_elf, pub.TABLE1["ELF"]["a"], 1e-4)


def _device_checks(col: _Collector) -> None:
    ln, pzt = get_emitter("LN"), get_emitter("PZT")
    col.rel("S3.bound.LN", 2, "LN rod efficiency bound (a = L/2)",
            chl.efficiency_bound(ln.resonance, chl.enclosing_radius(ln.geometry)), pub.LN_EFFICIENCY_BOUND.value, 0.02)
    col.rel("S3.bound.PZT", 2, "PZT disk efficiency bound (half-diagonal radius)",
            chl.efficiency_bound(pzt.resonance, chl.enclosing_radius(pzt.geometry)),
            pub.PZT_EFFICIENCY_BOUND.value, 0.05)


def _table2_checks(col: _Collector) -> None:
    table = reports.table2("primary")
    for name in ("ELF", "VLF", "LN"):
        cell = table.row(name).cell("fom")
        col.rel(f"T2.fom.{name}", 3, f"FOM of {name}", cell.computed, pub.TABLE2[name].value, 0.05)
    row = table.row("PZT")
    fom = row.cell("fom").computed
    flagged = "exceeds CHL efficiency bound" in row.flags
    col.add("T2.fom.PZT", 3, "PZT FOM lies in [1, 2] and is flagged as exceeding the bound", fom, 1.0,
            "band [1, 2]", 1.0 <= fom <= 2.0 and flagged, "; ".join(row.flags))


def _eq7_checks(col: _Collector) -> None:
    pzt = get_emitter("PZT")
    budget = fb.radiation_budget(pzt.field_measurement, pzt.p_in)
    p = budget.p_rad_iso
    col.add("E7.p_iso", 4, "isotropic radiated power rounds to 75.9 pW", p.value, 75.9e-12, "abs 0.05 pW",
            abs(p.value - 75.9e-12) <= 0.05e-12, f"{p.value * 1e12:.4f} pW")
    col.add("E7.p_iso_sigma", 4, "its uncertainty rounds to 30.4 pW", p.sigma, 30.4e-12, "abs 0.05 pW",
            abs(p.sigma - 30.4e-12) <= 0.05e-12, f"{p.sigma * 1e12:.4f} pW")
    lo = pub.PZT_ISOTROPIC_POWER.value - pub.PZT_ISOTROPIC_POWER_SIGMA.value
    hi = pub.PZT_ISOTROPIC_POWER.value + pub.PZT_ISOTROPIC_POWER_SIGMA.value
    col.add("E7.p_iso_band", 4, "isotropic power inside the printed 78.9 +/- 30.4 pW band", p.value,
            pub.PZT_ISOTROPIC_POWER.value, "band", lo <= p.value <= hi)
    col.add("E7.p_iso_vs_published", 4, "isotropic power against the printed 78.9 pW", p.value,
            pub.PZT_ISOTROPIC_POWER.value, "n/a", False,
            pub.KNOWN_DEVIATIONS[("eq7", "PZT", "p_rad_iso", None)], known=True)
    col.rel("E7.eta", 4, "PZT radiation efficiency central value", budget.eta.value, pub.PZT_EFFICIENCY.value, 0.10)
    col.rel("E7.eta_sigma", 4, "PZT radiation efficiency uncertainty", budget.eta.sigma,
            pub.PZT_EFFICIENCY_SIGMA.value, 0.10)


def _table3_checks(col: _Collector) -> None:
    for t in builtin_transitions():
        expected = pub.TABLE3[t.label]
        col.rel(f"T3.lifetime.{t.label}", 5, f"lifetime bound for {t.label} (ns)",
                atomic.lifetime_bound(t) * 1e9, expected["lifetime_bound_ns"], 0.03)
        col.rel(f"T3.dipole.{t.label}", 5, f"dipole bound for {t.label} (a.u.)",
                atomic.dipole_bound(t), expected["dipole_bound_au"], 0.03)
    h = builtin_transitions()[0]
    alt = h.with_radius(h.alternate_chu_radius)
    tau = atomic.lifetime_bound(alt) * 1e9
    col.rel("T3.lifetime.H_a1.73", 5, "hydrogen lifetime bound with the printed radius 1.73 (ns)", tau, 0.305, 0.01)
    col.add("T3.lifetime.H_a1.73_vs_published", 5, "printed radius 1.73 against the printed 0.01 ns bound", tau,
            pub.TABLE3["H 2P-1S"]["lifetime_bound_ns"].value, "n/a", False,
            pub.KNOWN_DEVIATIONS[(3, "H 2P-1S (a=1.73)", "lifetime_bound_ns", None)], known=True)


def _radial_checks(col: _Collector) -> None:
    coulomb = ModelPotentialParams.coulomb(1.0)
    worst, worst_state = 0.0, ""
    for n in range(1, 6):
        for l in range(n):
            state = QuantumState("H", n, l)
            defects = QuantumDefectSeries("H", {"SPDFG"[l]: (0.0, 0.0, 0.0)})
            r = rms_radius(solve_radial(state, coulomb, defects))
            dev = _rel(r, hydrogen_rms_radius(n, l))
            if dev > worst:
                worst, worst_state = dev, f"n={n} l={l}"
    col.add("R.coulomb", 6, "Coulomb solver vs closed-form hydrogen radii, n <= 5", worst, 0.0, "rel 0.001",
            worst < 1e-3, f"worst deviation {worst:.2e} at {worst_state}")
    col.rel("R.hydrogen_1s", 6, "closed-form hydrogen 1S radius is sqrt(3)", hydrogen_rms_radius(1, 0),
            pub.HYDROGEN_1S_RADIUS.value, 1e-12)

    for t in builtin_transitions()[1:]:
        n, l, j = t.upper_state
        data = element_data(t.element)
        state = QuantumState(t.element, n, l, j)
        sol = solve_radial(state, data.params, data.defects)
        r = rms_radius(sol)
        col.rel(f"R.radius.{t.label}", 6, f"RMS radius of {state}", r, pub.TABLE3[t.label]["chu_radius"].value, 0.05)
        half = rms_radius(solve_radial(state, data.params, data.defects, step=sol.step / 2))
        col.add(f"R.step_halving.{t.label}", 6, f"step-halving change of the {state} radius", _rel(half, r), 0.0,
                "rel 0.001", _rel(half, r) < 1e-3)
        col.add(f"R.cauchy_schwarz.{t.label}", 6, f"rms radius >= mean radius for {state}", r, mean_radius(sol),
                ">=", r >= mean_radius(sol))


def _vswr_checks(col: _Collector) -> None:
    ln = get_emitter("LN")
    col.rel("S3.vswr.LN", 7, "VSWR-2 bandwidth of the LN resonator",
            fb.vswr_bandwidth(ln.resonance.f, ln.q_total, ln.vswr), pub.LN_VSWR_BANDWIDTH.value, 0.02)


def _identity_checks(col: _Collector) -> None:
    rng = np.random.default_rng(IDENTITY_SEED)
    ka_grid = np.geomspace(1e-3, 1e2, 100)
    q = [chl.q_chl(x) for x in ka_grid]
    col.add("P.q_chl_monotone", 8, "Q_CHL strictly decreasing on a 100-point log grid of ka", None, None,
            "strict", all(b < a for a, b in zip(q, q[1:])))

    def worst(fn: Callable[[], float]) -> float:
        return max(fn() for _ in range(IDENTITY_SAMPLES))

    def sample():
        f = 10 ** rng.uniform(0, 9)
        df = f * 10 ** rng.uniform(-8, -0.5)
        a = 10 ** rng.uniform(-3, 4)
        eta = 10 ** rng.uniform(-12, 0)
        return chl.ResonanceSpec(f, df), a, eta

    def fom_identity():
        res, a, eta = sample()
        ka = chl.electrical_size(res.f, a).ka
        return _rel(chl.fom(eta, a, res), eta * res.delta_f * chl.q_chl_deep(ka) / res.f)

    def pdl_identity():
        res, a, _ = sample()
        ka = chl.electrical_size(res.f, a).ka
        return _rel(chl.power_density_limit(res) * chl.sphere_volume(a), chl.q_bw(res) / chl.q_chl_deep(ka))

    def einstein_identity():
        lam = 10 ** rng.uniform(-7.5, -5.5)
        radius = 10 ** rng.uniform(0, 1.5)
        t = atomic.AtomicTransition("sample", lam, radius)
        f = t.frequency
        return _rel(atomic.einstein_a(f, atomic.dipole_bound(t), "standard"),
                    4 * math.pi * f / atomic.transition_q_chl(t))

    def doubling():
        b = 10 ** rng.uniform(-16, -6)
        m = fb.FieldMeasurement(const.UncertainValue(b, b * rng.uniform(0, 1)), 10 ** rng.uniform(-1, 4))
        p = fb.isotropic_radiated_power(m)
        return abs(p.relative - 2 * m.b_rms.relative) / max(m.b_rms.relative, 1e-300)

    for id, desc, fn in (
        ("P.fom_identity", "FOM = eta * delta_f * Q_CHL,ds / f", fom_identity),
        ("P.pdl_identity", "power-density limit * V = Q_bw / Q_CHL,ds", pdl_identity),
        ("P.einstein_identity", "A(standard) at the dipole bound = 4 pi f / Q_CHL", einstein_identity),
        ("P.uncertainty_doubling", "relative power uncertainty = 2 x relative field uncertainty", doubling),
    ):
        w = worst(fn)
        col.add(id, 8, desc, w, 0.0, "rel 1e-12", w <= 1e-12, f"worst relative error {w:.2e} over "
                f"{IDENTITY_SAMPLES} samples")

    for t in builtin_transitions():
        col.add(f"P.lifetime_respected.{t.label}", 8, f"lifetime bound <= reference lifetime for {t.label}",
                atomic.lifetime_bound(t), t.reference_lifetime, "<=",
                atomic.lifetime_bound(t) <= t.reference_lifetime)
        col.add(f"P.dipole_respected.{t.label}", 8, f"dipole bound >= reference dipole for {t.label}",
                atomic.dipole_bound(t), t.reference_dipole, ">=", atomic.dipole_bound(t) >= t.reference_dipole)


def run_checks() -> list[Check]:
    col = _Collector()
    _table1_checks(col)
    _device_checks(col)
    _table2_checks(col)
    _eq7_checks(col)
    _table3_checks(col)
    _radial_checks(col)
    _vswr_checks(col)
    _identity_checks(col)
    return col.checks


def summary(checks: list[Check]) -> dict[str, int]:
    out = {PASS: 0, FAIL: 0, EXPECTED: 0}
    for c in checks:
        out[c.status] += 1
    return out
