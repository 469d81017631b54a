"""Physical parameters of a scalar-coupled spin-1/2 pair.

A pair is specified by the two Larmor angular frequencies omega1, omega2
and the scalar coupling J >= 0, all in the same angular-frequency units.
In dimensionless mode everything is quoted in units of J (so J itself
is 1). The quantities every formula downstream consumes are

    omega_sigma = omega1 + omega2
    omega_delta = omega1 - omega2
    D           = sqrt(omega_delta**2 + J**2)
    theta       = mixing angle, tan(2 theta) = J / omega_delta

theta parameterises the hybridisation of the |ab>, |ba> product states
in the coupled eigenbasis and lies in [0, pi/4]; the homonuclear case
(omega_delta = 0, J > 0) sits exactly at pi/4, while the fully
degenerate case J = 0, omega_delta = 0 is fixed at 0 so all
coupling-dependent terms vanish in the uncoupled limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

K_BOLTZMANN = 1.380649e-23  # J/K
HBAR = 1.054571817e-34      # J*s
TWO_PI = 2.0 * math.pi

_UNIT_MODES = ("dimensionless", "si")

# omega2 : omega1 ratios for the named systems. hc and hp follow the
# gyromagnetic ratios gamma_H ~ 4 gamma_C and gamma_H ~ 2.5 gamma_P;
# hyperfine has a Zeeman term on one spin only; positronium carries
# equal and opposite moments, so omega_sigma is exactly zero.
PRESET_RATIOS = {
    "hh": 1.0,
    "hc": 0.25,
    "hp": 0.4,
    "hyperfine": 0.0,
    "positronium": -1.0,
}


@dataclass(frozen=True)
class UnitContext:
    """Physical constants plus the Hz convention for SI-mode input.

    ``hz_convention=True`` means frequencies quoted in Hz are
    (angular frequency)/2pi and get multiplied by 2pi internally.
    """

    k_boltzmann: float = K_BOLTZMANN
    hbar: float = HBAR
    hz_convention: bool = True


DEFAULT_UNITS = UnitContext()


@dataclass(frozen=True)
class SpinSystem:
    """A scalar-coupled pair of spin-1/2 nuclei.

    Stored in canonical orientation omega1 >= omega2 >= 0; the
    constructor swaps the spin labels if the inputs violate this and
    records the swap. The one sanctioned exception is the antiparallel
    configuration (positronium), where omega2 = -omega1 is kept as
    given so that omega_sigma is exactly zero.
    """

    omega1: float
    omega2: float
    coupling: float
    unit_mode: str = "dimensionless"
    swapped: bool = False
    antiparallel: bool = False

    def __post_init__(self):
        if self.unit_mode not in _UNIT_MODES:
            raise ValueError(f"unknown unit_mode {self.unit_mode!r}")
        for name in ("omega1", "omega2", "coupling"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if not self.coupling >= 0.0:
            raise ValueError("coupling must be >= 0")
        if self.antiparallel:
            if self.omega2 != -self.omega1:
                raise ValueError("antiparallel systems require omega2 == -omega1")
            return
        if self.omega2 > self.omega1:
            o1, o2 = self.omega1, self.omega2
            object.__setattr__(self, "omega1", o2)
            object.__setattr__(self, "omega2", o1)
            object.__setattr__(self, "swapped", True)
        if self.omega2 < 0.0:
            raise ValueError(
                "negative Larmor frequencies are only supported for the "
                "positronium (antiparallel) configuration"
            )


@dataclass(frozen=True)
class DerivedParams:
    """Sum/difference frequencies, effective splitting D, mixing angle."""

    omega_sigma: float
    omega_delta: float
    d_coupling: float
    theta: float

    @property
    def sin_2theta(self) -> float:
        return math.sin(2.0 * self.theta)

    @property
    def cos_2theta(self) -> float:
        return math.cos(2.0 * self.theta)


def derive(system: SpinSystem) -> DerivedParams:
    """Derived quantities for a system; total after canonicalisation."""
    return derive_from_sigma_delta(
        system.omega1 + system.omega2,
        system.omega1 - system.omega2,
        system.coupling,
    )


def derive_from_sigma_delta(
    omega_sigma: float, omega_delta: float, coupling: float
) -> DerivedParams:
    """Build DerivedParams directly from (omega_sigma, omega_delta, J).

    Accepts any omega_sigma >= 0, including values below omega_delta
    (field sweeps start at zero field, where omega2 runs negative).
    """
    if not (math.isfinite(omega_sigma) and math.isfinite(omega_delta)):
        raise ValueError("frequencies must be finite")
    if omega_sigma < 0.0:
        raise ValueError("omega_sigma must be >= 0")
    if omega_delta < 0.0:
        raise ValueError("omega_delta must be >= 0")
    if not coupling >= 0.0:
        raise ValueError("coupling must be >= 0")
    d = math.hypot(omega_delta, coupling)
    # atan2(0, 0) = 0 fixes the degenerate J = 0, omega_delta = 0 case;
    # atan2(J, 0) = pi/2 makes the homonuclear angle exactly pi/4.
    theta = 0.5 * math.atan2(coupling, omega_delta)
    return DerivedParams(omega_sigma, omega_delta, d, theta)


def preset(name: str, field_omega: float, coupling: float = 1.0) -> SpinSystem:
    """Named two-spin system at a given field, omega1 = field_omega.

    Recognised (lowercase) names: hh, hc, hp, hyperfine, positronium.
    """
    try:
        ratio = PRESET_RATIOS[name]
    except KeyError:
        raise ValueError(
            f"unknown preset {name!r}; expected one of {sorted(PRESET_RATIOS)}"
        ) from None
    if not field_omega >= 0.0:
        raise ValueError("field_omega must be >= 0")
    omega2 = ratio * field_omega
    if name == "positronium":
        return SpinSystem(field_omega, omega2, coupling, antiparallel=True)
    return SpinSystem(field_omega, omega2, coupling)


def from_si(
    nu1_hz: float, nu2_hz: float, j_hz: float, units: UnitContext = DEFAULT_UNITS
) -> tuple[SpinSystem, float]:
    """Normalise Hz-quoted inputs to a dimensionless system in units of J.

    Returns the system (coupling 1, omega_i = nu_i / j_hz) together with
    the energy scale hbar * J in Joule, which converts dimensionless
    beta*J products to absolute temperature.
    """
    if not j_hz > 0.0:
        raise ValueError("j_hz must be > 0")
    factor = TWO_PI if units.hz_convention else 1.0
    energy_scale = units.hbar * factor * j_hz
    return SpinSystem(nu1_hz / j_hz, nu2_hz / j_hz, 1.0), energy_scale
