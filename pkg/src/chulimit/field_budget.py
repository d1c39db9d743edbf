"""Radiated power and efficiency inferred from a far-field magnetic-field reading.

Uncertainties propagate to first order with no correlations; every step
after the field-to-power conversion is a pure scaling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import constants as const
from .constants import UncertainValue
from .errors import InputError

__all__ = [
    "DEFAULT_DIPOLE_GAIN",
    "FieldMeasurement",
    "RadiationBudget",
    "isotropic_radiated_power",
    "gain_corrected_power",
    "radiation_efficiency",
    "radiation_budget",
    "vswr_bandwidth",
]

# Directivity of an electrically small dipole.
DEFAULT_DIPOLE_GAIN = 1.5


@dataclass(frozen=True)
class FieldMeasurement:
    """RMS magnetic flux density (T) observed at ``distance`` (m).

    ``far_field_onset`` is carried as reported metadata and never enforced.
    """

    b_rms: UncertainValue
    distance: float
    far_field_onset: float | None = None
    gain: float = DEFAULT_DIPOLE_GAIN

    def __post_init__(self):
        if not self.b_rms.value >= 0.0:
            raise InputError(f"field magnitude must be non-negative, got {self.b_rms.value!r}")
        if not self.distance > 0.0:
            raise InputError(f"distance must be positive, got {self.distance!r}")
        if not self.gain >= 1.0:
            raise InputError(f"gain must be >= 1, got {self.gain!r}")
        if self.far_field_onset is not None and not self.far_field_onset > 0.0:
            raise InputError(f"far-field onset must be positive, got {self.far_field_onset!r}")


@dataclass(frozen=True)
class RadiationBudget:
    p_rad_iso: UncertainValue
    p_rad: UncertainValue
    p_in: float
    eta: UncertainValue
    gain: float


def isotropic_radiated_power(m: FieldMeasurement) -> UncertainValue:
    """Power an isotropic source would radiate to produce ``m.b_rms`` at ``m.distance``.

    Uses the far-field intensity c B^2 / (2 mu0) over a sphere of radius R.
    """
    b = m.b_rms.value
    value = const.c / (2.0 * const.mu0) * b * b * 4.0 * math.pi * m.distance**2
    sigma = 2.0 * m.b_rms.relative * value if b > 0.0 else 0.0
    return UncertainValue(value, sigma)


def gain_corrected_power(p_iso: UncertainValue, gain: float) -> UncertainValue:
    if not gain >= 1.0:
        raise InputError(f"gain must be >= 1, got {gain!r}")
    return p_iso.scaled(1.0 / gain)


def radiation_efficiency(p_rad: UncertainValue | float, p_in: float) -> UncertainValue:
    """Efficiency of a matched emitter: radiated over input power."""
    if not p_in > 0.0:
        raise InputError(f"input power must be positive, got {p_in!r}")
    if not isinstance(p_rad, UncertainValue):
        p_rad = UncertainValue(float(p_rad))
    return p_rad.scaled(1.0 / p_in)


def radiation_budget(m: FieldMeasurement, p_in: float) -> RadiationBudget:
    p_iso = isotropic_radiated_power(m)
    p_rad = gain_corrected_power(p_iso, m.gain)
    return RadiationBudget(
        p_rad_iso=p_iso,
        p_rad=p_rad,
        p_in=p_in,
        eta=radiation_efficiency(p_rad, p_in),
        gain=m.gain,
    )


def vswr_bandwidth(f: float, q_total: float, s: float) -> float:
    """Bandwidth (Hz) of a matched resonator of loaded Q over which VSWR <= s.

    Delta f = (f / Q) (s - 1) / sqrt(s).
    """
    if not f > 0.0:
        raise InputError(f"frequency must be positive, got {f!r}")
    if not q_total > 0.0:
        raise InputError(f"Q must be positive, got {q_total!r}")
    if not s >= 1.0:
        raise InputError(f"VSWR must be >= 1, got {s!r}")
    return f / q_total * (s - 1.0) / math.sqrt(s)
