"""Physical constants (CODATA 2018) and the few unit conversions the package needs.

Every quantity is SI unless a name says otherwise. Other modules read the
module-level aliases (``constants.c`` etc.) at call time, so a test can
monkeypatch one of them to probe sensitivity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InputError

__all__ = [
    "PhysicalConstants",
    "CODATA2018",
    "UncertainValue",
    "MILE",
    "convert_length",
    "length_from_meters",
    "wavelength_to_frequency",
    "frequency_to_wavelength",
    "dipole_si_to_atomic",
    "dipole_atomic_to_si",
]


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA 2018 values in SI units."""

    c: float = 299792458.0  # m/s, exact
    mu0: float = 1.25663706212e-6  # H/m
    eps0: float = 8.8541878128e-12  # F/m
    h: float = 6.62607015e-34  # J s, exact
    e_charge: float = 1.602176634e-19  # C, exact
    a0: float = 5.29177210903e-11  # m
    hbar: float = field(init=False)
    ea0: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "hbar", self.h / (2.0 * math.pi))
        object.__setattr__(self, "ea0", self.e_charge * self.a0)


CODATA2018 = PhysicalConstants()

c = CODATA2018.c
mu0 = CODATA2018.mu0
eps0 = CODATA2018.eps0
h = CODATA2018.h
hbar = CODATA2018.hbar
e_charge = CODATA2018.e_charge
a0 = CODATA2018.a0
ea0 = CODATA2018.ea0

MILE = 1609.344  # m, international mile

_LENGTH_UNITS = {
    "m": lambda: 1.0,
    "cm": lambda: 1e-2,
    "mile": lambda: MILE,
    "bohr": lambda: a0,
}


@dataclass(frozen=True)
class UncertainValue:
    """A value with a symmetric absolute 1-sigma uncertainty in the same unit."""

    value: float
    sigma: float = 0.0

    def __post_init__(self):
        if not self.sigma >= 0.0:
            raise InputError(f"uncertainty must be non-negative, got {self.sigma!r}")

    @property
    def relative(self) -> float:
        """sigma / |value|; zero when value is zero."""
        if self.value == 0.0:
            return 0.0
        return self.sigma / abs(self.value)

    def scaled(self, factor: float) -> "UncertainValue":
        return UncertainValue(self.value * factor, self.sigma * abs(factor))

    def __float__(self) -> float:
        return float(self.value)


def _unit_factor(unit: str) -> float:
    try:
        return _LENGTH_UNITS[unit]()
    except KeyError:
        raise InputError(
            f"unknown length unit {unit!r}; expected one of {sorted(_LENGTH_UNITS)}"
        ) from None


def convert_length(value: float, unit: str) -> float:
    """Convert ``value`` expressed in ``unit`` (mile, cm, m, bohr) to meters."""
    if not math.isfinite(value):
        raise InputError(f"length must be finite, got {value!r}")
    return value * _unit_factor(unit)


def length_from_meters(value: float, unit: str) -> float:
    """Inverse of :func:`convert_length`."""
    if not math.isfinite(value):
        raise InputError(f"length must be finite, got {value!r}")
    return value / _unit_factor(unit)


def wavelength_to_frequency(wavelength: float) -> float:
    """Vacuum wavelength (m) to frequency (Hz)."""
    if not wavelength > 0.0:
        raise InputError(f"wavelength must be positive, got {wavelength!r}")
    return c / wavelength


def frequency_to_wavelength(frequency: float) -> float:
    if not frequency > 0.0:
        raise InputError(f"frequency must be positive, got {frequency!r}")
    return c / frequency


def dipole_si_to_atomic(d: float) -> float:
    """Dipole moment in C m to atomic units (e a0)."""
    return d / ea0


def dipole_atomic_to_si(d: float) -> float:
    return d * ea0
