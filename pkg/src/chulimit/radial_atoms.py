"""RMS radii of atomic states.

Hydrogen has a closed form. Alkali valence states are obtained by Numerov
integration of the radial equation in a parametric core potential, at the
energy given by quantum-defect data, following the approach of the ARC
library. Everything here is in atomic units (Bohr radii, Hartree).
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import DataError, InputError, NumericError

__all__ = [
    "DEFAULT_STEP",
    "QuantumState",
    "ModelPotentialParams",
    "QuantumDefectSeries",
    "RadialSolution",
    "ElementData",
    "load_parameter_file",
    "builtin_parameters",
    "element_data",
    "hydrogen_rms_radius",
    "alkali_energy",
    "solve_radial",
    "rms_radius",
    "mean_radius",
    "state_rms_radius",
]

DEFAULT_STEP = 1e-3
L_LETTERS = "SPDFGHIK"

_ELEMENT_ALIASES = {"h": "H", "cs": "Cs", "cs133": "Cs", "rb": "Rb87", "rb87": "Rb87", "87rb": "Rb87"}

_RESCALE_AT = 1e200


def canonical_element(name: str) -> str:
    try:
        return _ELEMENT_ALIASES[name.strip().lower()]
    except KeyError:
        raise DataError(f"unsupported element {name!r}; expected one of H, Rb87, Cs") from None


@dataclass(frozen=True)
class QuantumState:
    element: str
    n: int
    l: int
    j: Optional[float] = None

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.l <= self.n - 1:
            raise InputError(f"l must satisfy 0 <= l <= n-1, got n={self.n}, l={self.l}")
        if self.j is not None:
            allowed = {self.l + 0.5} | ({self.l - 0.5} if self.l > 0 else set())
            if self.j not in allowed:
                raise InputError(f"j={self.j} not allowed for l={self.l}")

    @property
    def term(self) -> str:
        letter = L_LETTERS[self.l] if self.l < len(L_LETTERS) else f"[l={self.l}]"
        if self.j is None:
            return letter
        return f"{letter}{int(2 * self.j)}/2"

    def __str__(self) -> str:
        return f"{self.element} {self.n}{self.term}"


@dataclass(frozen=True)
class ModelPotentialParams:
    """Parametric core potential for one element.

    V_l(r) = -Z_l(r)/r - alpha_c/(2 r^4) (1 - exp(-(r/r_c)^6)), with
    Z_l(r) = 1 + (z-1) exp(-a1 r) - r (a3 + a4 r) exp(-a2 r).
    ``coefficients[l]`` is (a1, a2, a3, a4, r_c).
    """

    element: str
    z: float
    alpha_c: float
    coefficients: tuple[tuple[float, float, float, float, float], ...]

    def __post_init__(self):
        if self.alpha_c < 0.0:
            raise DataError(f"{self.element}: core polarizability must be >= 0")
        if len(self.coefficients) < 4:
            raise DataError(f"{self.element}: potential coefficients required for l = 0..3")
        for l, row in enumerate(self.coefficients):
            if len(row) != 5 or not row[4] > 0.0:
                raise DataError(f"{self.element}: bad potential row for l={l}: {row!r}")

    @classmethod
    def coulomb(cls, z: float = 1.0) -> "ModelPotentialParams":
        """Bare Coulomb potential -z/r (z=1 gives hydrogen)."""
        row = (0.0, 0.0, 0.0, 0.0, 1.0)
        return cls("coulomb", z, 0.0, (row,) * 4)

    def row(self, l: int) -> tuple[float, float, float, float, float]:
        return self.coefficients[min(l, len(self.coefficients) - 1)]

    def potential(self, l: int, r: np.ndarray) -> np.ndarray:
        a1, a2, a3, a4, r_c = self.row(l)
        r = np.asarray(r, dtype=float)
        z_eff = 1.0 + (self.z - 1.0) * np.exp(-a1 * r) - r * (a3 + a4 * r) * np.exp(-a2 * r)
        v = -z_eff / r
        if self.alpha_c:
            v = v - self.alpha_c / (2.0 * r**4) * (1.0 - np.exp(-((r / r_c) ** 6)))
        return v


@dataclass(frozen=True)
class QuantumDefectSeries:
    """Rydberg-Ritz quantum defects, keyed by term (e.g. ``"P3/2"`` or ``"P"``).

    ``measured`` maps (n, term) to a defect derived from a measured level
    energy; it takes precedence over the series for that state.
    """

    element: str
    series: dict[str, tuple[float, float, float]]
    measured: dict[tuple[int, str], float] = field(default_factory=dict)

    def _series_for(self, state: QuantumState) -> tuple[float, float, float]:
        for key in (state.term, L_LETTERS[state.l] if state.l < len(L_LETTERS) else None):
            if key is not None and key in self.series:
                return self.series[key]
        raise DataError(f"no quantum-defect data for {self.element} {state.term}")

    def defect(self, state: QuantumState) -> float:
        if (state.n, state.term) in self.measured:
            return self.measured[(state.n, state.term)]
        d0, d2, d4 = self._series_for(state)
        x = state.n - d0
        return d0 + d2 / x**2 + d4 / x**4

    def effective_n(self, state: QuantumState) -> float:
        n_eff = state.n - self.defect(state)
        if not n_eff > 0.0:
            raise DataError(f"non-positive effective quantum number for {state}")
        return n_eff


@dataclass(frozen=True)
class ElementData:
    params: ModelPotentialParams
    defects: QuantumDefectSeries
    lowest_n: tuple[int, ...]

    def check_state(self, state: QuantumState) -> None:
        if state.l < len(self.lowest_n) and state.n < self.lowest_n[state.l]:
            raise DataError(
                f"{state} lies below the valence shell (lowest n for l={state.l} is "
                f"{self.lowest_n[state.l]})"
            )


@dataclass
class RadialSolution:
    """Reduced radial wavefunction u(r) = r R(r) on an ascending uniform grid."""

    grid: np.ndarray
    u: np.ndarray
    energy: float
    norm_check: float
    state: Optional[QuantumState] = None
    step: float = DEFAULT_STEP

    def expectation(self, power: float) -> float:
        """<r^power> by trapezoidal quadrature."""
        w = self.u * self.u
        return float(np.trapezoid(w * self.grid**power, self.grid) / np.trapezoid(w, self.grid))


def _floats(text: str, where: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split())
    except ValueError:
        raise DataError(f"non-numeric entry in {where}: {text!r}") from None


def _parse_term(term: str) -> tuple[int, Optional[float]]:
    letter, rest = term[:1], term[1:]
    l = L_LETTERS.find(letter.upper()) if letter else -1
    if l < 0:
        raise DataError(f"unknown orbital letter in term {term!r}")
    if not rest:
        return l, None
    num, slash, den = rest.partition("/")
    if slash != "/" or den != "2" or not num.isdigit():
        raise DataError(f"bad term {term!r}")
    return l, int(num) / 2.0


def _parse_element(name: str, sec: configparser.SectionProxy) -> ElementData:
    where = f"[{name}]"
    try:
        z = float(sec["z"])
        alpha_c = float(sec["alpha_c"])
    except KeyError as exc:
        raise DataError(f"{where} missing key {exc.args[0]}") from None
    except ValueError as exc:
        raise DataError(f"{where}: {exc}") from None

    rows = []
    l = 0
    while f"potential.{l}" in sec:
        row = _floats(sec[f"potential.{l}"], f"{where} potential.{l}")
        if len(row) != 5:
            raise DataError(f"{where} potential.{l} needs 5 numbers, got {len(row)}")
        rows.append(row)
        l += 1
    params = ModelPotentialParams(name, z, alpha_c, tuple(rows))

    series: dict[str, tuple[float, float, float]] = {}
    levels: dict[tuple[int, str], float] = {}
    for key, value in sec.items():
        if key.startswith("defect."):
            term = key[len("defect."):]
            _parse_term(term)
            coeffs = _floats(value, f"{where} {key}")
            if len(coeffs) != 3:
                raise DataError(f"{where} {key} needs 3 numbers")
            series[term] = coeffs
        elif key.startswith("level."):
            name = key[len("level."):]
            digits = len(name) - len(name.lstrip("0123456789"))
            if digits == 0:
                raise DataError(f"{where} {key}: level key must start with n")
            levels[(int(name[:digits]), name[digits:])] = float(value)

    measured: dict[tuple[int, str], float] = {}
    if levels:
        try:
            rydberg = float(sec["rydberg_cm"])
            ionization = float(sec["ionization_cm"])
        except KeyError as exc:
            raise DataError(f"{where} has levels but no {exc.args[0]}") from None
        for (n, term), energy in levels.items():
            binding = ionization - energy
            if not binding > 0.0:
                raise DataError(f"{where} level {n}{term} lies above the ionization limit")
            measured[(n, term)] = n - math.sqrt(rydberg / binding)

    lowest = tuple(int(x) for x in _floats(sec.get("lowest_n", "1 2 3 4"), f"{where} lowest_n"))
    return ElementData(params, QuantumDefectSeries(name, series, measured), lowest)


def load_parameter_file(path) -> dict[str, ElementData]:
    """Read a parameter data file (see ``data/model_potentials.ini`` for the format)."""
    text = Path(path).read_text(encoding="utf-8")
    return _parse_parameter_text(text, str(path))


def _parse_parameter_text(text: str, source: str) -> dict[str, ElementData]:
    parser = configparser.ConfigParser(interpolation=None, delimiters=("=",))
    parser.optionxform = str
    try:
        parser.read_string(text, source=source)
    except configparser.Error as exc:
        raise DataError(f"cannot parse {source}: {exc}") from None
    return {name: _parse_element(name, parser[name]) for name in parser.sections() if name != "meta"}


@lru_cache(maxsize=1)
def builtin_parameters() -> dict[str, ElementData]:
    text = resources.files("chulimit").joinpath("data/model_potentials.ini").read_text(encoding="utf-8")
    return _parse_parameter_text(text, "model_potentials.ini")


def element_data(element: str) -> ElementData:
    name = canonical_element(element)
    try:
        return builtin_parameters()[name]
    except KeyError:
        raise DataError(f"no parameter data for {name}") from None


def hydrogen_rms_radius(n: int, l: int) -> float:
    """sqrt(<r^2>) of hydrogen (n, l) in Bohr radii: n^2 (5n^2 + 1 - 3l(l+1)) / 2."""
    if not (isinstance(n, int) and isinstance(l, int)) or n < 1 or not 0 <= l <= n - 1:
        raise InputError(f"invalid hydrogen state n={n!r}, l={l!r}")
    return math.sqrt(n * n * (5 * n * n + 1 - 3 * l * (l + 1)) / 2.0)


def alkali_energy(state: QuantumState, defects: QuantumDefectSeries) -> float:
    """Binding energy -1 / (2 (n - delta)^2) in Hartree."""
    return -0.5 / defects.effective_n(state) ** 2


def _numerov_inward(w: list[float], u_last: float, u_next: float) -> list[float]:
    # w[i] = 1 - h^2 F_i / 12 for u'' = F u; recurrence runs from the end of the grid.
    n = len(w)
    u = [0.0] * n
    u[-1] = u_last
    u[-2] = u_next
    for i in range(n - 2, 0, -1):
        u[i - 1] = ((12.0 - 10.0 * w[i]) * u[i] - w[i + 1] * u[i + 1]) / w[i - 1]
        if abs(u[i - 1]) > _RESCALE_AT:
            for k in range(i - 1, n):
                u[k] /= _RESCALE_AT
    return u


def _cut_inner_divergence(u: np.ndarray, coeff: np.ndarray) -> np.ndarray:
    # Below the innermost classically allowed point the physical solution grows
    # outward; an inward-growing piece is the irregular solution and is dropped.
    allowed = np.flatnonzero(coeff < 0.0)
    if allowed.size == 0 or allowed[0] == 0:
        return u
    stop = allowed[0]
    m = int(np.argmin(np.abs(u[: stop + 1])))
    if m > 0:
        u = u.copy()
        u[:m] = 0.0
    return u


def solve_radial(
    state: QuantumState,
    params: ModelPotentialParams,
    defects: QuantumDefectSeries,
    step: float = DEFAULT_STEP,
    r_max: Optional[float] = None,
    r_min: Optional[float] = None,
) -> RadialSolution:
    """Integrate u'' = [2V(r) + l(l+1)/r^2 - 2E] u inward with Numerov's method.

    The energy E comes from the quantum defects, so no eigenvalue search is
    done. Integration starts at r_max = 2n(n+15) on a decaying seed and stops
    at r_min = alpha_c**(1/3) (at least 0.01). The result is normalized.
    """
    if not step > 0.0:
        raise InputError(f"step must be positive, got {step!r}")
    energy = alkali_energy(state, defects)
    n, l = state.n, state.l
    if r_max is None:
        r_max = 2.0 * n * (n + 15)
    if r_min is None:
        r_min = max(params.alpha_c ** (1.0 / 3.0), 0.01)
    if not 0.0 < r_min < r_max:
        raise InputError(f"need 0 < r_min < r_max, got {r_min!r}, {r_max!r}")

    count = int(round((r_max - r_min) / step))
    if count < 3:
        raise InputError("grid too coarse: fewer than three points")
    grid = (r_max - step * np.arange(count + 1))[::-1]

    coeff = 2.0 * params.potential(l, grid) + l * (l + 1) / grid**2 - 2.0 * energy
    w = 1.0 - step * step * coeff / 12.0
    kappa = math.sqrt(-2.0 * energy)
    u = np.asarray(_numerov_inward(w.tolist(), 1e-30, 1e-30 * math.exp(kappa * step)))
    if not np.all(np.isfinite(u)):
        raise NumericError(f"Numerov integration for {state} produced non-finite values")

    u = _cut_inner_divergence(u, coeff)
    norm = float(np.trapezoid(u * u, grid))
    if not (math.isfinite(norm) and norm > 0.0):
        raise NumericError(f"wavefunction for {state} has zero or non-finite norm ({norm!r})")
    u = u / math.sqrt(norm)
    # orient the dominant lobe positive
    if u[int(np.argmax(np.abs(u)))] < 0.0:
        u = -u
    return RadialSolution(grid, u, energy, float(np.trapezoid(u * u, grid)), state, step)


def rms_radius(sol: RadialSolution) -> float:
    """sqrt(<r^2>) of a radial solution, in Bohr radii."""
    return math.sqrt(sol.expectation(2))


def mean_radius(sol: RadialSolution) -> float:
    return sol.expectation(1)


def state_rms_radius(state: QuantumState, step: float = DEFAULT_STEP) -> float:
    """RMS radius from builtin data; hydrogen uses the closed form."""
    name = canonical_element(state.element)
    if name == "H":
        return hydrogen_rms_radius(state.n, state.l)
    data = element_data(name)
    data.check_state(state)
    return rms_radius(solve_radial(state, data.params, data.defects, step))
