"""Chu-Harrington limit and the efficiency-bound / figure-of-merit algebra.

All functions are scalar and pure. Frequencies in Hz, lengths in meters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import constants as const
from .errors import InputError

__all__ = [
    "ResonanceSpec",
    "ElectricalSize",
    "Geometry",
    "ChlReport",
    "q_stored",
    "electrical_size",
    "q_chl",
    "q_chl_deep",
    "q_bw",
    "efficiency_bound",
    "unclipped_efficiency_bound",
    "power_density_limit",
    "sphere_volume",
    "fom",
    "enclosing_radius",
    "chl_report",
]


@dataclass(frozen=True)
class ResonanceSpec:
    """Center frequency ``f`` and 3-dB bandwidth ``delta_f``, both in Hz.

    Only narrowband single resonances are accepted (``0 < delta_f < f``).
    """

    f: float
    delta_f: float

    def __post_init__(self):
        if not (math.isfinite(self.f) and self.f > 0.0):
            raise InputError(f"resonance frequency must be positive, got {self.f!r}")
        if not (math.isfinite(self.delta_f) and self.delta_f > 0.0):
            raise InputError(f"bandwidth must be positive, got {self.delta_f!r}")
        if not self.delta_f < self.f:
            raise InputError(
                f"bandwidth {self.delta_f!r} Hz is not narrowband for f={self.f!r} Hz"
            )

    @classmethod
    def from_band(cls, f_low: float, f_high: float) -> "ResonanceSpec":
        """Midpoint and width of the band [f_low, f_high]."""
        if not f_high > f_low:
            raise InputError("upper band edge must exceed the lower edge")
        return cls(0.5 * (f_low + f_high), f_high - f_low)


@dataclass(frozen=True)
class ElectricalSize:
    ka: float
    a: float

    @property
    def electrically_small(self) -> bool:
        return self.ka < 1.0


_GEOMETRY_DIMS = {
    "rod": ("length", "diameter"),
    "disk": ("diameter", "height"),
    "crossed_dipoles": ("length",),
    "sphere": ("radius",),
}


@dataclass(frozen=True)
class Geometry:
    """Emitter shape tag plus its dimensions in meters.

    ``rod`` uses length/diameter, ``disk`` diameter/height,
    ``crossed_dipoles`` the length of each of two orthogonal dipoles crossing
    at their centers, ``sphere`` the radius itself.
    """

    kind: str
    length: Optional[float] = None
    diameter: Optional[float] = None
    height: Optional[float] = None
    radius: Optional[float] = None

    def __post_init__(self):
        if self.kind not in _GEOMETRY_DIMS:
            raise InputError(
                f"unknown geometry {self.kind!r}; expected one of {sorted(_GEOMETRY_DIMS)}"
            )
        for name in _GEOMETRY_DIMS[self.kind]:
            value = getattr(self, name)
            if value is None:
                raise InputError(f"{self.kind} geometry requires {name}")
            if not (math.isfinite(value) and value > 0.0):
                raise InputError(f"{self.kind} {name} must be positive, got {value!r}")

    @property
    def dimensions(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in _GEOMETRY_DIMS[self.kind]}


@dataclass(frozen=True)
class ChlReport:
    ka: float
    q_chl: float
    q_chl_ds: float
    q_bw: float
    efficiency_bound: float
    power_density_limit: float
    fom: Optional[float]

    @property
    def clipped(self) -> bool:
        """True when the bandwidth requirement alone cannot limit efficiency."""
        return self.q_bw >= self.q_chl


def q_stored(w_m: float, w_e: float, p_rad: float, p_loss: float, omega: float) -> float:
    """Stored-energy quality factor omega (W_m + W_e) / (P_rad + P_loss)."""
    for name, value in (("w_m", w_m), ("w_e", w_e), ("p_rad", p_rad), ("p_loss", p_loss), ("omega", omega)):
        if not value >= 0.0:
            raise InputError(f"{name} must be non-negative, got {value!r}")
    p_diss = p_rad + p_loss
    if p_diss == 0.0:
        raise InputError("dissipated power is zero; Q is undefined")
    return omega * (w_m + w_e) / p_diss


def electrical_size(f: float, a: float) -> ElectricalSize:
    if not f > 0.0:
        raise InputError(f"frequency must be positive, got {f!r}")
    if not a > 0.0:
        raise InputError(f"radius must be positive, got {a!r}")
    return ElectricalSize(2.0 * math.pi * f * a / const.c, a)


def q_chl(ka: float) -> float:
    """Chu-Harrington minimum Q, 1/(ka)^3 + 1/ka."""
    if not ka > 0.0:
        raise InputError(f"ka must be positive, got {ka!r}")
    return 1.0 / ka**3 + 1.0 / ka


def q_chl_deep(ka: float) -> float:
    """Deep-subwavelength form 1/(ka)^3."""
    if not ka > 0.0:
        raise InputError(f"ka must be positive, got {ka!r}")
    return 1.0 / ka**3


def q_bw(res: ResonanceSpec) -> float:
    return res.f / res.delta_f


def unclipped_efficiency_bound(res: ResonanceSpec, a: float) -> float:
    return q_bw(res) / q_chl(electrical_size(res.f, a).ka)


def efficiency_bound(res: ResonanceSpec, a: float) -> float:
    """Largest radiation efficiency compatible with bandwidth ``res.delta_f``.

    An emitter of radius ``a`` reaching a bandwidth wider than the CHL permits
    must dissipate the difference, so efficiency <= min(Q_bw / Q_CHL, 1).
    """
    return min(unclipped_efficiency_bound(res, a), 1.0)


def power_density_limit(res: ResonanceSpec) -> float:
    """Ceiling on radiated power per unit input power per unit volume, 1/m^3."""
    return 6.0 * math.pi**2 * res.f**4 / (const.c**3 * res.delta_f)


def sphere_volume(a: float) -> float:
    return 4.0 * math.pi * a**3 / 3.0


def fom(eta: float, a: float, res: ResonanceSpec) -> float:
    """Figure of merit: achieved radiated power density over its ceiling.

    Not clipped; values above 1 mean the stated efficiency beats the
    deep-subwavelength bound.
    """
    if not eta >= 0.0:
        raise InputError(f"efficiency must be non-negative, got {eta!r}")
    if not a > 0.0:
        raise InputError(f"radius must be positive, got {a!r}")
    return eta / sphere_volume(a) / power_density_limit(res)


def enclosing_radius(geometry: Geometry) -> float:
    """Radius of the sphere assigned to ``geometry`` (meters).

    Conventions: a rod uses half its length (the diameter is ignored; the
    half-diagonal would give a ~4% larger bound for the LN resonator), a disk
    uses its half-diagonal, crossed dipoles use L/sqrt(2).
    """
    kind = geometry.kind
    if kind == "rod":
        return geometry.length / 2.0
    if kind == "disk":
        return math.hypot(geometry.diameter, geometry.height) / 2.0
    if kind == "crossed_dipoles":
        return geometry.length / math.sqrt(2.0)
    if kind == "sphere":
        return geometry.radius
    raise InputError(f"unknown geometry {kind!r}")  # pragma: no cover - Geometry validates


def chl_report(res: ResonanceSpec, a: float, eta: Optional[float] = None) -> ChlReport:
    ka = electrical_size(res.f, a).ka
    return ChlReport(
        ka=ka,
        q_chl=q_chl(ka),
        q_chl_ds=q_chl_deep(ka),
        q_bw=q_bw(res),
        efficiency_bound=efficiency_bound(res, a),
        power_density_limit=power_density_limit(res),
        fom=None if eta is None else fom(eta, a, res),
    )
