"""Chu-Harrington-limit bounds for electrically small emitters.

Efficiency bounds, radiated-power-density ceilings and a figure of merit for
antennas and mechanical resonators, plus lifetime and dipole bounds for
atomic emitters with RMS radii from a Numerov radial solver.
"""

__version__ = "0.1.0"

from .chl_core import (  # noqa: E402
    ChlReport,
    Geometry,
    ResonanceSpec,
    chl_report,
    efficiency_bound,
    enclosing_radius,
    fom,
    power_density_limit,
    q_bw,
    q_chl,
    q_stored,
)
from .constants import UncertainValue  # noqa: E402
from .errors import DataError, InputError, NumericError, ParseError, ValidationError  # noqa: E402

__all__ = [
    "ChlReport",
    "Geometry",
    "ResonanceSpec",
    "UncertainValue",
    "chl_report",
    "efficiency_bound",
    "enclosing_radius",
    "fom",
    "power_density_limit",
    "q_bw",
    "q_chl",
    "q_stored",
    "DataError",
    "InputError",
    "NumericError",
    "ParseError",
    "ValidationError",
]
