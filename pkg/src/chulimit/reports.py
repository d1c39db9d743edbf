"""Tabulated reports: the three reference tables, single-emitter evaluation, sweeps.

Every computed cell is evaluated live from catalog inputs; published values
from :mod:`chulimit.published` appear only in the comparison column.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import atomic_limits as atomic
from . import chl_core as chl
from . import published as pub
from .catalog import EmitterRecord, builtin_emitters, builtin_transitions
from .errors import InputError
from .radial_atoms import QuantumState, hydrogen_rms_radius, state_rms_radius

__all__ = [
    "INTERPRETATIONS",
    "Cell",
    "ReportRow",
    "Table",
    "table1",
    "table2",
    "table3",
    "build_table",
    "evaluate_emitter",
    "sweep",
    "SWEEP_COLUMNS",
]

INTERPRETATIONS = ("primary", "alternate")
# Sigma multiple within which an exceedance of the bound is called consistent.
EXCEEDANCE_SIGMAS = 2.0


@dataclass
class Cell:
    column: str
    computed: float
    published: Optional[float] = None
    note: str = ""

    @property
    def deviation(self) -> Optional[float]:
        if self.published is None or self.published == 0.0:
            return None
        return self.computed / self.published - 1.0

    def as_dict(self) -> dict:
        return {
            "column": self.column,
            "computed": self.computed,
            "published": self.published,
            "relative_deviation": self.deviation,
            "note": self.note,
        }


@dataclass
class ReportRow:
    label: str
    inputs: dict[str, float] = field(default_factory=dict)
    cells: list[Cell] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    def cell(self, column: str) -> Cell:
        for c in self.cells:
            if c.column == column:
                return c
        raise KeyError(column)

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "inputs": dict(self.inputs),
            "cells": [c.as_dict() for c in self.cells],
            "flags": list(self.flags),
        }


@dataclass
class Table:
    number: int
    title: str
    rows: list[ReportRow]
    options: dict[str, str] = field(default_factory=dict)

    def row(self, label: str) -> ReportRow:
        for r in self.rows:
            if r.label == label:
                return r
        raise KeyError(label)

    def as_dict(self) -> dict:
        return {
            "table": self.number,
            "title": self.title,
            "options": dict(self.options),
            "rows": [r.as_dict() for r in self.rows],
        }


def _check_interpretation(interpretation: str) -> None:
    if interpretation not in INTERPRETATIONS:
        raise InputError(f"unknown bandwidth interpretation {interpretation!r}")


def _known(table, row, column, interpretation=None) -> str:
    return pub.KNOWN_DEVIATIONS.get((table, row, column, interpretation)) or pub.KNOWN_DEVIATIONS.get(
        (table, row, column, None), ""
    )


def _emitters_by_name() -> dict[str, EmitterRecord]:
    return {rec.name: rec for rec in builtin_emitters()}


def evaluate_emitter(rec: EmitterRecord, interpretation: str = "primary") -> ReportRow:
    """Full bound / FOM pipeline for one emitter, with discrepancy flags."""
    _check_interpretation(interpretation)
    res = rec.resonance_for(interpretation)
    a = chl.enclosing_radius(rec.geometry)
    eta = rec.efficiency_estimate()
    report = chl.chl_report(res, a, eta.value)

    inputs = {"f": res.f, "delta_f": res.delta_f, "a": a, "eta": eta.value}
    if eta.sigma:
        inputs["eta_sigma"] = eta.sigma
    cells = [
        Cell("ka", report.ka),
        Cell("q_chl", report.q_chl),
        Cell("q_bw", report.q_bw),
        Cell("efficiency_bound", report.efficiency_bound),
        Cell("power_density_limit", report.power_density_limit),
        Cell("fom", report.fom),
    ]

    flags = []
    if not chl.electrical_size(res.f, a).electrically_small:
        flags.append("not electrically small (ka >= 1)")
    if report.clipped:
        flags.append("efficiency bound clipped at 1 (q_bw >= q_chl)")
    if eta.value > report.efficiency_bound:
        flags.append("exceeds CHL efficiency bound")
        if eta.sigma and eta.value - EXCEEDANCE_SIGMAS * eta.sigma <= report.efficiency_bound:
            flags.append(f"exceedance within {EXCEEDANCE_SIGMAS:g}-sigma measurement uncertainty")
    if report.fom > 1.0:
        flags.append("FOM > 1")
    if rec.alternate_delta_f is not None:
        flags.append(f"bandwidth interpretation: {interpretation}")
    return ReportRow(rec.name, inputs, cells, flags)


def table1(interpretation: str = "primary") -> Table:
    _check_interpretation(interpretation)
    emitters = _emitters_by_name()
    rows = []
    for name in ("ELF", "VLF"):
        rec = emitters[name]
        expected = pub.TABLE1[name]
        res = rec.resonance_for(interpretation)
        a = chl.enclosing_radius(rec.geometry)
        ka = chl.electrical_size(res.f, a).ka
        bound = chl.efficiency_bound(res, a)
        values = {
            "f": res.f,
            "delta_f": res.delta_f,
            "a": a,
            "q_chl": chl.q_chl(ka),
            "efficiency_bound": bound,
            "reported_efficiency": rec.efficiency_estimate().value,
        }
        cells = [
            Cell(col, val, expected[col].value, _known(1, name, col, interpretation))
            for col, val in values.items()
        ]
        flags = []
        if chl.unclipped_efficiency_bound(res, a) >= 1.0:
            flags.append("efficiency bound clipped at 1")
        if rec.alternate_delta_f is not None:
            flags.append(f"bandwidth interpretation: {interpretation}")
        rows.append(ReportRow(name, {"f": res.f, "delta_f": res.delta_f, "a": a}, cells, flags))
    return Table(1, "Efficiency bound for the ELF and VLF facilities", rows,
                 {"delta_f_interpretation": interpretation})


def table2(interpretation: str = "primary") -> Table:
    _check_interpretation(interpretation)
    emitters = _emitters_by_name()
    rows = []
    for name in ("ELF", "VLF", "PZT", "LN"):
        row = evaluate_emitter(emitters[name], interpretation)
        fom = row.cell("fom")
        fom.published = pub.TABLE2[name].value
        fom.note = _known(2, name, "fom", interpretation)
        row.cells = [fom]
        rows.append(row)
    return Table(2, "Emitter figure of merit", rows, {"delta_f_interpretation": interpretation})


def _transition_row(t: atomic.AtomicTransition, label: str, mode: str, computed_radius: Optional[float]):
    expected = pub.TABLE3[t.label]
    rep = atomic.atomic_bounds(t, mode)
    values = {
        "chu_radius": t.chu_radius,
        "lifetime_bound_ns": rep.lifetime_bound * 1e9,
        "reference_lifetime_ns": t.reference_lifetime * 1e9,
        "dipole_bound_au": rep.dipole_bound,
        "reference_dipole_au": t.reference_dipole,
    }
    cells = [Cell(col, val, expected[col].value, _known(3, label, col)) for col, val in values.items()]
    if computed_radius is not None:
        cells.insert(1, Cell("computed_radius", computed_radius, expected["chu_radius"].value,
                             _known(3, label, "chu_radius")))
    flags = []
    if rep.lifetime_bound > t.reference_lifetime:
        flags.append("reference lifetime below CHL lifetime bound")
    if rep.dipole_bound < t.reference_dipole:
        flags.append("reference dipole above CHL dipole bound")
    inputs = {"wavelength": t.wavelength, "f": rep.frequency, "chu_radius": t.chu_radius, "q_chl": rep.q_chl}
    return ReportRow(label, inputs, cells, flags)


def _solver_radius(t: atomic.AtomicTransition) -> float:
    n, l, j = t.upper_state
    if t.element == "H":
        return hydrogen_rms_radius(n, l)
    return state_rms_radius(QuantumState(t.element, n, l, j))


def table3(mode: str = "standard", radius_source: str = "catalog") -> Table:
    """Atomic lifetime/dipole bounds.

    ``radius_source="catalog"`` uses the tabulated radii for the bounds and
    shows the solver radius alongside; ``"computed"`` feeds solver radii into
    the bounds. A final row repeats hydrogen with the alternate radius 1.73.
    """
    if radius_source not in ("catalog", "computed"):
        raise InputError(f"unknown radius source {radius_source!r}")
    if mode not in atomic.A_MODES:
        raise InputError(f"unknown A-coefficient mode {mode!r}")
    rows = []
    hydrogen = None
    for t in builtin_transitions():
        computed = _solver_radius(t)
        if radius_source == "computed":
            t = t.with_radius(computed)
        rows.append(_transition_row(t, t.label, mode, computed))
        if t.element == "H":
            hydrogen = t
    alt = hydrogen.with_radius(hydrogen.alternate_chu_radius)
    alt_label = f"{hydrogen.label} (a={hydrogen.alternate_chu_radius:g})"
    row = _transition_row(alt, alt_label, mode, None)
    row.cells[0].note = "alternate tabulated radius"
    rows.append(row)
    return Table(3, "Atomic lifetime and dipole bounds (radii and dipoles in a.u., lifetimes in ns)",
                 rows, {"a_mode": mode, "radius_source": radius_source})


def build_table(which: int, interpretation: str = "primary", mode: str = "standard",
                radius_source: str = "catalog") -> Table:
    if which == 1:
        return table1(interpretation)
    if which == 2:
        return table2(interpretation)
    if which == 3:
        return table3(mode, radius_source)
    raise InputError(f"no table {which!r}; expected 1, 2 or 3")


SWEEP_COLUMNS = ("frequency_hz", "bandwidth_hz", "radius_m", "ka", "q_chl",
                 "efficiency_bound", "power_density_limit")


def sweep(param: str, start: float, stop: float, steps: int, *, frequency: float | None = None,
          bandwidth: float | None = None, radius: float | None = None, scale: str = "log") -> list[tuple]:
    """Evaluate the bound and power-density ceiling over a grid of one parameter.

    The grid is strictly increasing from ``start`` to ``stop``. Rows follow
    ``SWEEP_COLUMNS``.
    """
    fixed = {"frequency": frequency, "bandwidth": bandwidth, "radius": radius}
    if param not in fixed:
        raise InputError(f"cannot sweep {param!r}; expected frequency, radius or bandwidth")
    if steps < 2:
        raise InputError("steps must be >= 2")
    if not (math.isfinite(start) and math.isfinite(stop) and 0.0 < start < stop):
        raise InputError(f"need 0 < start < stop, got {start!r}, {stop!r}")
    missing = [k for k, v in fixed.items() if k != param and v is None]
    if missing:
        raise InputError(f"sweep over {param} needs fixed {', '.join(missing)}")
    if scale == "log":
        grid = np.geomspace(start, stop, steps)
    elif scale == "linear":
        grid = np.linspace(start, stop, steps)
    else:
        raise InputError(f"unknown scale {scale!r}")
    grid[0], grid[-1] = start, stop

    rows = []
    for x in grid.tolist():
        values = dict(fixed, **{param: x})
        res = chl.ResonanceSpec(values["frequency"], values["bandwidth"])
        a = values["radius"]
        if not a > 0.0:
            raise InputError(f"radius must be positive, got {a!r}")
        ka = chl.electrical_size(res.f, a).ka
        rows.append((res.f, res.delta_f, a, ka, chl.q_chl(ka), chl.efficiency_bound(res, a),
                     chl.power_density_limit(res)))
    return rows
