"""Chu-limit bounds on the lifetime and dipole moment of a two-level atom.

A spontaneously emitting atom has a Lorentzian line, so its bandwidth Q sits
between the Chu minimum and the energy-time uncertainty ceiling
``4 pi f dt``. That pins a minimum lifetime, and through the Einstein A
coefficient a maximum transition dipole.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import constants as const
from .chl_core import electrical_size, q_chl
from .errors import InputError

__all__ = [
    "A_MODES",
    "AtomicTransition",
    "AtomicBoundReport",
    "transition_q_chl",
    "uncertainty_qbw_bound",
    "lifetime_bound",
    "dipole_bound",
    "einstein_a",
    "atomic_bounds",
]

# "paper_factor2" keeps the extra factor 2 in the printed A-coefficient expression.
A_MODES = ("standard", "paper_factor2")


@dataclass(frozen=True)
class AtomicTransition:
    """Two-level transition.

    ``wavelength`` is the vacuum wavelength in meters; ``chu_radius`` is in
    Bohr radii; reference lifetime (s) and dipole (e a0) are measured data.
    ``alternate_chu_radius`` carries a second tabulated radius when the
    source data disagree on it.
    """

    label: str
    wavelength: float
    chu_radius: float
    reference_lifetime: Optional[float] = None
    reference_dipole: Optional[float] = None
    element: str = ""
    upper_state: tuple[int, int, float] | None = None
    alternate_chu_radius: Optional[float] = None
    note: str = ""

    def __post_init__(self):
        if not self.wavelength > 0.0:
            raise InputError(f"{self.label}: wavelength must be positive")
        if not self.chu_radius > 0.0:
            raise InputError(f"{self.label}: Chu radius must be positive")
        for name in ("reference_lifetime", "reference_dipole", "alternate_chu_radius"):
            value = getattr(self, name)
            if value is not None and not value > 0.0:
                raise InputError(f"{self.label}: {name} must be positive when given")

    @property
    def frequency(self) -> float:
        return const.wavelength_to_frequency(self.wavelength)

    def with_radius(self, chu_radius: float) -> "AtomicTransition":
        return AtomicTransition(
            label=self.label,
            wavelength=self.wavelength,
            chu_radius=chu_radius,
            reference_lifetime=self.reference_lifetime,
            reference_dipole=self.reference_dipole,
            element=self.element,
            upper_state=self.upper_state,
            alternate_chu_radius=self.alternate_chu_radius,
            note=self.note,
        )


@dataclass(frozen=True)
class AtomicBoundReport:
    label: str
    frequency: float
    chu_radius: float
    q_chl: float
    lifetime_bound: float  # s
    dipole_bound: float  # e a0
    a_coefficient_mode: str
    a_at_dipole_bound: float  # 1/s


def transition_q_chl(t: AtomicTransition) -> float:
    return q_chl(electrical_size(t.frequency, t.chu_radius * const.a0).ka)


def uncertainty_qbw_bound(f: float, delta_t: float) -> float:
    """Largest bandwidth Q allowed by the energy-time uncertainty relation."""
    if not f > 0.0:
        raise InputError(f"frequency must be positive, got {f!r}")
    if not delta_t > 0.0:
        raise InputError(f"lifetime must be positive, got {delta_t!r}")
    return 4.0 * math.pi * f * delta_t


def lifetime_bound(t: AtomicTransition) -> float:
    """Shortest excited-state lifetime (s) consistent with the Chu limit."""
    return transition_q_chl(t) / (4.0 * math.pi * t.frequency)


def dipole_bound(t: AtomicTransition) -> float:
    """Largest transition dipole (e a0) consistent with the lifetime bound."""
    f = t.frequency
    d_si = math.sqrt(
        3.0 * const.eps0 * const.h * const.c**3 / (4.0 * math.pi**2 * f**2 * transition_q_chl(t))
    )
    return d_si / const.ea0


def einstein_a(f: float, d: float, mode: str = "standard") -> float:
    """Spontaneous emission rate (1/s) for frequency ``f`` and dipole ``d`` in e a0.

    ``standard``: omega^3 |d|^2 / (3 pi eps0 hbar c^3).
    ``paper_factor2``: twice that.
    """
    if mode not in A_MODES:
        raise InputError(f"unknown A-coefficient mode {mode!r}; expected one of {A_MODES}")
    if not f > 0.0:
        raise InputError(f"frequency must be positive, got {f!r}")
    if not d >= 0.0:
        raise InputError(f"dipole must be non-negative, got {d!r}")
    omega = 2.0 * math.pi * f
    d_si = d * const.ea0
    rate = omega**3 * d_si**2 / (3.0 * math.pi * const.eps0 * const.hbar * const.c**3)
    return 2.0 * rate if mode == "paper_factor2" else rate


def atomic_bounds(t: AtomicTransition, mode: str = "standard") -> AtomicBoundReport:
    d_max = dipole_bound(t)
    return AtomicBoundReport(
        label=t.label,
        frequency=t.frequency,
        chu_radius=t.chu_radius,
        q_chl=transition_q_chl(t),
        lifetime_bound=lifetime_bound(t),
        dipole_bound=d_max,
        a_coefficient_mode=mode,
        a_at_dipole_bound=einstein_a(t.frequency, d_max, mode),
    )
