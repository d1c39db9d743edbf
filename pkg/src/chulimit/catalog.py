"""Reference emitters and atomic transitions, and the emitter file format.

Emitter files are INI-style text, one emitter per file, with unit-suffixed
keys::

    [emitter]
    name = LN
    notes = free text on one line

    [geometry]
    # rod (length_m, diameter_m) | disk (diameter_m, height_m)
    # crossed_dipoles (length_m) | sphere (radius_m)
    kind = rod
    length_m = 0.094
    diameter_m = 0.016

    [resonance]
    # frequency_hz may be replaced by band_low_hz + band_high_hz, and
    # bandwidth_hz by q_total + vswr; alternate_bandwidth_hz is optional
    frequency_hz = 35568
    bandwidth_hz = 0.084
    q_total = 303000
    vswr = 2

    # optional; all keys optional
    [power]
    input_power_w = 1.2
    radiated_power_w = 2
    efficiency = 1e-8
    efficiency_sigma = 0
    efficiency_upper = 2e-7

    # optional; gain defaults to 1.5 (small dipole)
    [field_measurement]
    b_rms_t = 5e-14
    b_rms_sigma_t = 1e-14
    distance_m = 4.5
    far_field_onset_m = 1.3
    gain = 1.5

A record needs an efficiency source: ``efficiency``, or
``radiated_power_w`` with ``input_power_w``, or a field measurement with
``input_power_w``.
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import constants as const
from .atomic_limits import AtomicTransition
from .chl_core import Geometry, ResonanceSpec
from .constants import UncertainValue
from .errors import DataError, InputError, ParseError, ValidationError
from .field_budget import FieldMeasurement, radiation_budget, radiation_efficiency, vswr_bandwidth
from .radial_atoms import hydrogen_rms_radius

__all__ = [
    "EmitterRecord",
    "builtin_emitters",
    "get_emitter",
    "builtin_transitions",
    "get_transition",
    "dumps_emitter",
    "loads_emitter",
    "load_emitter_file",
    "save_emitter_file",
]


@dataclass(frozen=True)
class EmitterRecord:
    name: str
    geometry: Geometry
    resonance: ResonanceSpec
    alternate_delta_f: Optional[float] = None
    p_in: Optional[float] = None
    p_rad: Optional[float] = None
    efficiency: Optional[UncertainValue] = None
    efficiency_upper: Optional[float] = None
    field_measurement: Optional[FieldMeasurement] = None
    q_total: Optional[float] = None
    vswr: Optional[float] = None
    band_edges: Optional[tuple[float, float]] = None
    notes: str = ""

    def __post_init__(self):
        _validate(self)

    def resonance_for(self, interpretation: str = "primary") -> ResonanceSpec:
        """Resonance under the primary or alternate bandwidth reading."""
        if interpretation == "primary" or self.alternate_delta_f is None:
            return self.resonance
        if interpretation == "alternate":
            return ResonanceSpec(self.resonance.f, self.alternate_delta_f)
        raise InputError(f"unknown bandwidth interpretation {interpretation!r}")

    def efficiency_estimate(self) -> UncertainValue:
        """Stated efficiency, else radiated/input power, else the field pipeline."""
        if self.efficiency is not None:
            return self.efficiency
        if self.p_rad is not None:
            return radiation_efficiency(self.p_rad, self.p_in)
        return radiation_budget(self.field_measurement, self.p_in).eta


def _positive(field: str, value, allow_zero: bool = False) -> None:
    if value is None:
        return
    ok = value >= 0.0 if allow_zero else value > 0.0
    if not (isinstance(value, (int, float)) and math.isfinite(value) and ok):
        raise ValidationError(field, f"must be {'non-negative' if allow_zero else 'positive'}, got {value!r}")


def _validate(rec: EmitterRecord) -> None:
    if not rec.name.strip():
        raise ValidationError("name", "must not be empty")
    if "\n" in rec.notes or "\n" in rec.name:
        raise ValidationError("notes", "must be a single line")
    _positive("input_power_w", rec.p_in)
    _positive("radiated_power_w", rec.p_rad, allow_zero=True)
    _positive("alternate_bandwidth_hz", rec.alternate_delta_f)
    _positive("efficiency_upper", rec.efficiency_upper)
    _positive("q_total", rec.q_total)
    if rec.vswr is not None and not rec.vswr >= 1.0:
        raise ValidationError("vswr", f"must be >= 1, got {rec.vswr!r}")
    if rec.efficiency is not None:
        _positive("efficiency", rec.efficiency.value, allow_zero=True)
        if rec.efficiency.value > 1.0:
            raise ValidationError("efficiency", f"must not exceed 1, got {rec.efficiency.value!r}")
    if rec.alternate_delta_f is not None and not rec.alternate_delta_f < rec.resonance.f:
        raise ValidationError("alternate_bandwidth_hz", "must be smaller than frequency_hz")
    has_source = (
        rec.efficiency is not None
        or (rec.p_rad is not None and rec.p_in is not None)
        or (rec.field_measurement is not None and rec.p_in is not None)
    )
    if not has_source:
        raise ValidationError(
            "efficiency source",
            "need efficiency, or radiated_power_w with input_power_w, "
            "or a field measurement with input_power_w",
        )


def builtin_emitters() -> list[EmitterRecord]:
    return [
        EmitterRecord(
            name="ELF",
            geometry=Geometry("crossed_dipoles", length=const.convert_length(14, "mile")),
            resonance=ResonanceSpec(76.0, 4.0),
            alternate_delta_f=8.0,
            p_in=1e6,
            p_rad=2.0,
            notes=(
                "Clam Lake ELF facility: two orthogonal 14-mile dipoles, MSK between 72 and 80 Hz. "
                "Primary bandwidth 4 Hz, alternate 8 Hz (full 72-80 Hz span). ~2 W radiated at 1 MW input."
            ),
        ),
        EmitterRecord(
            name="VLF",
            geometry=Geometry("sphere", radius=935.0),
            resonance=ResonanceSpec(24000.0, 240.0),
            efficiency=UncertainValue(0.5),
            notes=(
                "Cutler NAA VLF facility, rated above 2 MW. Bandwidth 1.2 x 200 baud. "
                "Efficiency 0.5 is a reported lower bound."
            ),
        ),
        EmitterRecord(
            name="LN",
            geometry=Geometry("rod", length=0.094, diameter=0.016),
            resonance=ResonanceSpec(35568.0, 0.084),
            efficiency=UncertainValue(1e-8),
            efficiency_upper=2e-7,
            q_total=303000.0,
            vswr=2.0,
            notes=(
                "Lithium niobate piezoelectric rod, 9.4 cm x 1.6 cm. Bandwidth estimated at VSWR 2. "
                "Efficiency estimate range 1e-8 to 2e-7; the lower value is used."
            ),
        ),
        EmitterRecord(
            name="PZT",
            geometry=Geometry("disk", diameter=0.08, height=0.01),
            resonance=ResonanceSpec.from_band(33218.0, 33248.0),
            band_edges=(33218.0, 33248.0),
            p_in=1.2,
            field_measurement=FieldMeasurement(
                b_rms=UncertainValue(50e-15, 10e-15),
                distance=4.5,
                far_field_onset=1.3,
                gain=1.5,
            ),
            notes="PZT disk, 8 cm x 1 cm, BFSK between 33.218 and 33.248 kHz, 1.2 W input.",
        ),
    ]


def get_emitter(name: str) -> EmitterRecord:
    for rec in builtin_emitters():
        if rec.name.lower() == name.strip().lower():
            return rec
    raise DataError(f"no builtin emitter named {name!r}")


def builtin_transitions() -> list[AtomicTransition]:
    """Hydrogen Lyman-alpha plus the Cs and 87Rb D lines.

    Hydrogen carries two radii: sqrt(30) (the 2P state) as the working value
    and 1.73 (= sqrt(3), the 1S state) as the alternate tabulated one.
    """
    return [
        AtomicTransition(
            label="H 2P-1S",
            wavelength=121.567e-9,
            chu_radius=hydrogen_rms_radius(2, 1),
            alternate_chu_radius=1.73,
            reference_lifetime=1.6e-9,
            reference_dipole=0.745,
            element="H",
            upper_state=(2, 1, None),
            note="radius sqrt(30) of 2P; tabulated 1.73 is the 1S value",
        ),
        AtomicTransition("Cs D1", 894.59295986e-9, 8.18, 34.79e-9, 3.19, "Cs", (6, 1, 0.5)),
        AtomicTransition("Cs D2", 852.34727582e-9, 8.42, 30.41e-9, 4.48, "Cs", (6, 1, 1.5)),
        AtomicTransition("Rb87 D1", 794.978851156e-9, 7.72, 27.68e-9, 2.99, "Rb87", (5, 1, 0.5)),
        AtomicTransition("Rb87 D2", 780.241209686e-9, 7.82, 26.24e-9, 4.23, "Rb87", (5, 1, 1.5)),
    ]


def get_transition(label: str) -> AtomicTransition:
    key = label.strip().lower().replace("_", " ")
    for t in builtin_transitions():
        if t.label.lower() == key:
            return t
    raise DataError(f"no builtin transition {label!r}")


# -- emitter files -----------------------------------------------------------

_SCHEMA = {
    "emitter": {"name", "notes"},
    "geometry": {"kind", "length_m", "diameter_m", "height_m", "radius_m"},
    "resonance": {
        "frequency_hz", "bandwidth_hz", "alternate_bandwidth_hz",
        "band_low_hz", "band_high_hz", "q_total", "vswr",
    },
    "power": {"input_power_w", "radiated_power_w", "efficiency", "efficiency_sigma", "efficiency_upper"},
    "field_measurement": {"b_rms_t", "b_rms_sigma_t", "distance_m", "far_field_onset_m", "gain"},
}


def _num(text: str) -> str:
    return repr(float(text))


def dumps_emitter(rec: EmitterRecord) -> str:
    """Serialize ``rec``; floats are written with ``repr`` so reloading is exact."""
    lines = ["[emitter]", f"name = {rec.name}"]
    if rec.notes:
        lines.append(f"notes = {rec.notes}")
    lines += ["", "[geometry]", f"kind = {rec.geometry.kind}"]
    for dim, value in rec.geometry.dimensions.items():
        lines.append(f"{dim}_m = {_num(value)}")
    lines += [
        "",
        "[resonance]",
        f"frequency_hz = {_num(rec.resonance.f)}",
        f"bandwidth_hz = {_num(rec.resonance.delta_f)}",
    ]
    if rec.alternate_delta_f is not None:
        lines.append(f"alternate_bandwidth_hz = {_num(rec.alternate_delta_f)}")
    if rec.band_edges is not None:
        lines.append(f"band_low_hz = {_num(rec.band_edges[0])}")
        lines.append(f"band_high_hz = {_num(rec.band_edges[1])}")
    if rec.q_total is not None:
        lines.append(f"q_total = {_num(rec.q_total)}")
    if rec.vswr is not None:
        lines.append(f"vswr = {_num(rec.vswr)}")

    power = []
    if rec.p_in is not None:
        power.append(f"input_power_w = {_num(rec.p_in)}")
    if rec.p_rad is not None:
        power.append(f"radiated_power_w = {_num(rec.p_rad)}")
    if rec.efficiency is not None:
        power.append(f"efficiency = {_num(rec.efficiency.value)}")
        if rec.efficiency.sigma:
            power.append(f"efficiency_sigma = {_num(rec.efficiency.sigma)}")
    if rec.efficiency_upper is not None:
        power.append(f"efficiency_upper = {_num(rec.efficiency_upper)}")
    if power:
        lines += ["", "[power]", *power]

    m = rec.field_measurement
    if m is not None:
        lines += [
            "",
            "[field_measurement]",
            f"b_rms_t = {_num(m.b_rms.value)}",
            f"b_rms_sigma_t = {_num(m.b_rms.sigma)}",
            f"distance_m = {_num(m.distance)}",
        ]
        if m.far_field_onset is not None:
            lines.append(f"far_field_onset_m = {_num(m.far_field_onset)}")
        lines.append(f"gain = {_num(m.gain)}")
    return "\n".join(lines) + "\n"


def _get_float(sec: dict[str, str], key: str, required: bool = False) -> Optional[float]:
    if key not in sec or sec[key].strip() == "":
        if required:
            raise ValidationError(key, "required field is missing")
        return None
    try:
        value = float(sec[key])
    except ValueError:
        raise ValidationError(key, f"not a number: {sec[key]!r}") from None
    if not math.isfinite(value):
        raise ValidationError(key, f"must be finite, got {sec[key]!r}")
    return value


def _field_error(field: str, exc: InputError) -> ValidationError:
    if isinstance(exc, ValidationError):
        return exc
    return ValidationError(field, str(exc))


def loads_emitter(text: str, source: str = "<string>") -> EmitterRecord:
    parser = configparser.ConfigParser(interpolation=None, delimiters=("=",))
    parser.optionxform = str
    try:
        parser.read_string(text, source=source)
    except configparser.Error as exc:
        raise ParseError(f"cannot parse {source}: {exc}") from None

    sections: dict[str, dict[str, str]] = {}
    for name in parser.sections():
        if name not in _SCHEMA:
            raise ValidationError(f"[{name}]", "unknown section")
        unknown = set(parser[name]) - _SCHEMA[name]
        if unknown:
            raise ValidationError(sorted(unknown)[0], f"unknown key in [{name}]")
        sections[name] = dict(parser[name])
    for required in ("emitter", "geometry", "resonance"):
        if required not in sections:
            raise ValidationError(f"[{required}]", "required section is missing")

    em = sections["emitter"]
    if not em.get("name", "").strip():
        raise ValidationError("name", "required field is missing")

    g = sections["geometry"]
    if "kind" not in g:
        raise ValidationError("kind", "required field is missing")
    dims = {}
    for dim in ("length", "diameter", "height", "radius"):
        value = _get_float(g, f"{dim}_m")
        if value is not None:
            _positive(f"{dim}_m", value)
            dims[dim] = value
    try:
        geometry = Geometry(g["kind"].strip(), **dims)
    except InputError as exc:
        raise _field_error("geometry", exc) from None

    r = sections["resonance"]
    f = _get_float(r, "frequency_hz")
    df = _get_float(r, "bandwidth_hz")
    low, high = _get_float(r, "band_low_hz"), _get_float(r, "band_high_hz")
    q_total, vswr = _get_float(r, "q_total"), _get_float(r, "vswr")
    band = None
    if (low is None) != (high is None):
        raise ValidationError("band_low_hz" if low is None else "band_high_hz", "band edges come in pairs")
    if low is not None:
        _positive("band_low_hz", low)
        if not high > low:
            raise ValidationError("band_high_hz", "must exceed band_low_hz")
        band = (low, high)
        if f is None:
            f = 0.5 * (low + high)
        if df is None:
            df = high - low
    if f is None:
        raise ValidationError("frequency_hz", "required field is missing")
    _positive("frequency_hz", f)
    if df is None and q_total is not None and vswr is not None:
        _positive("q_total", q_total)
        df = vswr_bandwidth(f, q_total, vswr) if vswr >= 1.0 else None
        if df is None:
            raise ValidationError("vswr", f"must be >= 1, got {vswr!r}")
    if df is None:
        raise ValidationError("bandwidth_hz", "required field is missing")
    _positive("bandwidth_hz", df)
    try:
        resonance = ResonanceSpec(f, df)
    except InputError as exc:
        raise _field_error("bandwidth_hz", exc) from None

    p = sections.get("power", {})
    eff = _get_float(p, "efficiency")
    eff_sigma = _get_float(p, "efficiency_sigma")
    if eff_sigma is not None and eff is None:
        raise ValidationError("efficiency_sigma", "given without efficiency")
    _positive("efficiency_sigma", eff_sigma, allow_zero=True)
    efficiency = None if eff is None else UncertainValue(eff, eff_sigma or 0.0)

    measurement = None
    if "field_measurement" in sections:
        fm = sections["field_measurement"]
        b = _get_float(fm, "b_rms_t", required=True)
        b_sigma = _get_float(fm, "b_rms_sigma_t") or 0.0
        _positive("b_rms_t", b, allow_zero=True)
        _positive("b_rms_sigma_t", b_sigma, allow_zero=True)
        distance = _get_float(fm, "distance_m", required=True)
        _positive("distance_m", distance)
        onset = _get_float(fm, "far_field_onset_m")
        _positive("far_field_onset_m", onset)
        gain = _get_float(fm, "gain")
        try:
            measurement = FieldMeasurement(
                UncertainValue(b, b_sigma), distance, onset, 1.5 if gain is None else gain
            )
        except InputError as exc:
            raise _field_error("gain", exc) from None

    return EmitterRecord(
        name=em["name"].strip(),
        geometry=geometry,
        resonance=resonance,
        alternate_delta_f=_get_float(r, "alternate_bandwidth_hz"),
        p_in=_get_float(p, "input_power_w"),
        p_rad=_get_float(p, "radiated_power_w"),
        efficiency=efficiency,
        efficiency_upper=_get_float(p, "efficiency_upper"),
        field_measurement=measurement,
        q_total=q_total,
        vswr=vswr,
        band_edges=band,
        notes=em.get("notes", "").strip(),
    )


def load_emitter_file(path) -> EmitterRecord:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads_emitter(text, str(path))


def save_emitter_file(rec: EmitterRecord, path) -> None:
    Path(path).write_text(dumps_emitter(rec), encoding="utf-8")
