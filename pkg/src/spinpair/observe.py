"""Longitudinal polarization observables and entanglement reconstruction.

Three standard one-dimensional measurements determine the full
population vector whenever cos 2theta != 0:

    P1z    = p1 - p4 + (p2 - p3) cos 2theta
    P2z    = p1 - p4 + (p3 - p2) cos 2theta
    P1z,2z = p1 + p4 - p2 - p3

Inverting and inserting into the population form of the concurrence
gives entanglement directly in terms of observables:

    C = max{0, |P1z - P2z| |tan 2theta|
              - sqrt((1 + P1z,2z)^2 - (P1z + P2z)^2)} / 2

The radicand above equals 16 p1 p4 identically. A variant with
radicand 1 + P1z,2z^2 - (P1z + P2z)^2 circulates; it drops the cross
term 2 P1z,2z and disagrees with the population route whenever
P1z,2z != 0, so it is kept only behind ``printed_radicand=True`` for
side-by-side comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .thermo import Populations

SINGULAR_COS2THETA = 1e-8
CLAMP_ATOL = 1e-10
RADICAND_FLOOR = -1e-12

_RANGE_TOL = 1e-9


@dataclass(frozen=True)
class Observables:
    """Expectation values of s1z, s2z and the two-spin order s1z s2z."""

    p1z: float
    p2z: float
    p1z2z: float

    def __post_init__(self):
        for name in ("p1z", "p2z", "p1z2z"):
            value = getattr(self, name)
            if not math.isfinite(value) or abs(value) > 1.0 + _RANGE_TOL:
                raise ValueError(f"{name} must lie in [-1, 1]")


def polarizations(pops, theta: float) -> Observables:
    probs = getattr(pops, "probs", None)
    if probs is None:
        probs = tuple(float(v) for v in pops)
    p1, p2, p3, p4 = probs
    c = math.cos(2.0 * theta)
    return Observables(
        p1z=p1 - p4 + (p2 - p3) * c,
        p2z=p1 - p4 + (p3 - p2) * c,
        p1z2z=p1 + p4 - p2 - p3,
    )


def _check_regular(theta: float) -> float:
    c = math.cos(2.0 * theta)
    if abs(c) < SINGULAR_COS2THETA:
        raise ValueError(
            "reconstruction is singular at cos 2theta = 0 (homonuclear limit)"
        )
    return c


def _clamp_population(value: float, label: str) -> float:
    if -CLAMP_ATOL <= value < 0.0:
        return 0.0
    if 1.0 < value <= 1.0 + CLAMP_ATOL:
        return 1.0
    if 0.0 <= value <= 1.0:
        return value
    raise ValueError(f"observables are inconsistent: {label} = {value} outside [0, 1]")


def reconstruct_populations(obs: Observables, theta: float) -> Populations:
    """Invert the three observables into populations.

    The result carries nan for z and beta: a reconstructed vector has
    no thermal provenance. Values outside [0, 1] by more than a
    rounding margin mean the observables cannot come from any valid
    state and raise.
    """
    c = _check_regular(theta)
    skew = (obs.p1z - obs.p2z) / c
    p1 = 0.25 * (1.0 + obs.p1z + obs.p2z + obs.p1z2z)
    p2 = 0.25 * (1.0 - obs.p1z2z + skew)
    p3 = 0.25 * (1.0 - obs.p1z2z - skew)
    p4 = 0.25 * (1.0 - obs.p1z - obs.p2z + obs.p1z2z)
    return Populations(
        _clamp_population(p1, "p1"),
        _clamp_population(p2, "p2"),
        _clamp_population(p3, "p3"),
        _clamp_population(p4, "p4"),
    )


def concurrence_from_observables(
    obs: Observables, theta: float, printed_radicand: bool = False
) -> float:
    """Concurrence straight from the three observables."""
    c = _check_regular(theta)
    if printed_radicand:
        radicand = 1.0 + obs.p1z2z**2 - (obs.p1z + obs.p2z) ** 2
    else:
        radicand = (1.0 + obs.p1z2z) ** 2 - (obs.p1z + obs.p2z) ** 2
    if radicand < RADICAND_FLOOR:
        raise ValueError("observables are inconsistent: negative radicand")
    radicand = max(radicand, 0.0)
    value = abs(obs.p1z - obs.p2z) * abs(math.tan(2.0 * theta)) - math.sqrt(radicand)
    return 0.5 * value if value > 0.0 else 0.0
