"""Level crossing between E3 and E4 and the zero-temperature critical point.

E3 = E4 requires omega_sigma = D + J, equivalently

    J = (omega_sigma^2 - omega_delta^2) / (2 omega_sigma)
      = 2 omega1 omega2 / (omega1 + omega2).

A crossing exists only when that J is positive: it never happens when
one spin carries no Zeeman term (omega2 = 0) or when the moments are
equal and opposite (omega_sigma = 0), so those configurations have no
zero-temperature critical point for any J >= 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import SpinSystem, derive
from . import thermo

DEGENERACY_RTOL = 1e-12

# Critical field in units of J / gamma_1 for the presets that do cross:
# B_crit * gamma_1 / J = (1 + r) / (2 r) with r = omega2 / omega1.
FIELD_RATIOS = {"hh": 1.0, "hc": 2.5, "hp": 1.75}

_NO_CROSSING_PRESETS = ("hyperfine", "positronium")


@dataclass(frozen=True)
class GroundState:
    """Index (1..4) of the lowest level, plus the degenerate pair if any."""

    index: int
    degenerate_pair: tuple[int, int] | None = None


def crossing_coupling(omega1: float, omega2: float) -> float | None:
    """Coupling at which E3 and E4 cross, or None when no crossing exists."""
    total = omega1 + omega2
    if total == 0.0:
        return None
    j_cross = 2.0 * omega1 * omega2 / total
    return j_cross if j_cross > 0.0 else None


def critical_field_ratio(name: str) -> float:
    """B_crit * gamma_1 / J for a named preset."""
    if name in FIELD_RATIOS:
        return FIELD_RATIOS[name]
    if name in _NO_CROSSING_PRESETS:
        raise ValueError(f"preset {name!r} has no level crossing")
    raise ValueError(f"unknown preset {name!r}")


def critical_omega_sigma(omega_delta: float, coupling: float) -> float:
    """Positive root of omega_sigma^2 - 2 J omega_sigma - omega_delta^2 = 0."""
    if not coupling > 0.0:
        raise ValueError("coupling must be > 0")
    return coupling + math.hypot(coupling, omega_delta)


def ground_state(system: SpinSystem) -> GroundState:
    """Which level is lowest, with exact degeneracies flagged."""
    levels = thermo.energies(derive(system), system.coupling).as_tuple()
    scale = max(1.0, max(abs(e) for e in levels))
    emin = min(levels)
    members = [i + 1 for i, e in enumerate(levels) if e - emin <= DEGENERACY_RTOL * scale]
    pair = (members[0], members[1]) if len(members) >= 2 else None
    return GroundState(index=members[0], degenerate_pair=pair)
