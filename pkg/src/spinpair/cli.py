"""Command-line front end.

Scalar results go to stdout as JSON, sweeps and spectra as CSV. All
dimensionless flags are quoted in units of J (tau = k_B T / J,
omega_sigma / J, omega_delta / J). Exit codes: 0 success, 2 bad
usage or validation, 3 internal numerical failure. The environment
variable SPINPAIR_PRECISION overrides the number of significant
digits in the output (default 12).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import critical, entangle, observe, spectrum, thermo
from .model import PRESET_RATIOS, derive_from_sigma_delta, preset
from .oracle import ConvergenceError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

DEFAULT_DIGITS = 12


def _digits() -> int:
    raw = os.environ.get("SPINPAIR_PRECISION")
    if raw is None:
        return DEFAULT_DIGITS
    try:
        digits = int(raw)
    except ValueError:
        raise ValueError(f"SPINPAIR_PRECISION must be an integer, got {raw!r}") from None
    if not 1 <= digits <= 17:
        raise ValueError("SPINPAIR_PRECISION must lie in [1, 17]")
    return digits


def _sig(value: float, digits: int) -> float:
    return float(f"{value:.{digits}g}")


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload))


def _beta_from_args(args) -> float:
    if args.zero_temp:
        return math.inf
    if args.tau is None:
        raise ValueError("either --tau or --zero-temp is required")
    if not args.tau > 0.0:
        raise ValueError("--tau must be > 0 (use --zero-temp for the limit)")
    return 1.0 / args.tau


def _cmd_concurrence(args) -> int:
    digits = _digits()
    params = derive_from_sigma_delta(args.omega_sigma, args.omega_delta, 1.0)
    beta = _beta_from_args(args)
    pops = thermo.populations(thermo.energies(params, 1.0), beta)
    c = entangle.concurrence_from_populations(pops, params.theta)
    _emit_json(
        {
            "concurrence": _sig(c, digits),
            "populations": [_sig(p, digits) for p in pops.probs],
        }
    )
    return EXIT_OK


def _grid(start: float, stop: float, points: int) -> list[float]:
    if points < 1:
        raise ValueError("--points must be >= 1")
    if points == 1:
        return [start]
    if not stop > start:
        raise ValueError("--to must exceed --from for multi-point grids")
    step = (stop - start) / (points - 1)
    return [start + i * step for i in range(points)]


def _cmd_scan(args) -> int:
    digits = _digits()
    grid = _grid(args.start, args.stop, args.points)
    if args.axis == "tau":
        rows = entangle.sweep(
            "temperature",
            grid,
            omega_sigma=args.omega_sigma,
            omega_delta=args.omega_delta,
        )
    else:
        if args.tau is None:
            raise ValueError("field scans require --tau")
        rows = entangle.sweep(
            "field", grid, omega_delta=args.omega_delta, tau=args.tau
        )
    print("x,concurrence")
    for x, c in rows:
        print(f"{x:.{digits}g},{c:.{digits}g}")
    return EXIT_OK


def _cmd_threshold(args) -> int:
    digits = _digits()
    if args.j_hz is not None:
        _emit_json({"t_kelvin": _sig(entangle.threshold_kelvin(args.j_hz), digits)})
        return EXIT_OK
    if args.omega_delta is None:
        raise ValueError("either --omega-delta or --j-hz is required")
    tau_t = entangle.threshold_tau(args.omega_delta, args.coupling)
    _emit_json({"tau_t": "never" if tau_t is None else _sig(tau_t, digits)})
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    digits = _digits()
    if not args.phi > 0.0:
        raise ValueError("--phi must be > 0 degrees")
    phi = math.radians(args.phi)
    if phi > math.pi:
        raise ValueError("--phi must not exceed 180 degrees")
    params = derive_from_sigma_delta(args.omega_sigma, args.omega_delta, 1.0)
    beta = _beta_from_args(args)
    levels = thermo.energies(params, 1.0)
    pops = thermo.populations(levels, beta)
    freqs = spectrum.transition_frequencies(levels)
    amps = spectrum.transition_amplitudes(pops, params.theta, phi)
    lines = [
        spectrum.SpectrumLine(t, freqs[t], amps[t]) for t in spectrum.TRANSITIONS
    ]
    print("transition,frequency,amplitude")
    for line in lines:
        print(f"{line.transition},{line.frequency:.{digits}g},{line.amplitude:.{digits}g}")
    if args.render is not None:
        start, stop, points = args.render
        grid = _grid(start, stop, int(points))
        curve = spectrum.render_lorentzian(lines, args.linewidth, grid)
        print("f,intensity")
        for f, value in zip(grid, curve):
            print(f"{f:.{digits}g},{value:.{digits}g}")
    return EXIT_OK


def _cmd_crossing(args) -> int:
    digits = _digits()
    if args.preset is not None:
        system = preset(args.preset, 1.0)
        j_cross = critical.crossing_coupling(system.omega1, system.omega2)
        payload = {"j_cross": "none" if j_cross is None else _sig(j_cross, digits)}
        if args.preset in critical.FIELD_RATIOS:
            payload["field_ratio"] = critical.critical_field_ratio(args.preset)
        _emit_json(payload)
        return EXIT_OK
    if args.omega1 is None or args.omega2 is None:
        raise ValueError("provide --preset or both --omega1 and --omega2")
    j_cross = critical.crossing_coupling(args.omega1, args.omega2)
    _emit_json({"j_cross": "none" if j_cross is None else _sig(j_cross, digits)})
    return EXIT_OK


def _cmd_reconstruct(args) -> int:
    digits = _digits()
    theta = math.radians(args.theta_deg)
    obs = observe.Observables(args.p1z, args.p2z, args.p1z2z)
    pops = observe.reconstruct_populations(obs, theta)
    c = observe.concurrence_from_observables(obs, theta)
    _emit_json(
        {
            "populations": [_sig(p, digits) for p in pops.probs],
            "concurrence": _sig(c, digits),
        }
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinpair",
        description="Thermal entanglement of a scalar-coupled spin-1/2 pair.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("concurrence", help="concurrence and populations at one point")
    p.add_argument("--omega-sigma", type=float, required=True)
    p.add_argument("--omega-delta", type=float, required=True)
    p.add_argument("--tau", type=float, help="k_B T / J")
    p.add_argument("--zero-temp", action="store_true")
    p.set_defaults(func=_cmd_concurrence)

    p = sub.add_parser("scan", help="CSV sweep of concurrence over tau or field")
    p.add_argument("--axis", choices=("tau", "field"), required=True)
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--omega-sigma", type=float, default=0.0)
    p.add_argument("--omega-delta", type=float, default=0.0)
    p.add_argument("--tau", type=float, help="fixed tau for field scans")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("threshold", help="threshold temperature")
    p.add_argument("--omega-delta", type=float)
    p.add_argument("--coupling", type=float, default=1.0)
    p.add_argument("--j-hz", type=float, help="coupling/2pi in Hz (SI mode)")
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("spectrum", help="line list, optionally a rendered curve")
    p.add_argument("--omega-sigma", type=float, required=True)
    p.add_argument("--omega-delta", type=float, required=True)
    p.add_argument("--tau", type=float)
    p.add_argument("--zero-temp", action="store_true")
    p.add_argument("--phi", type=float, default=5.0, help="flip angle in degrees")
    p.add_argument("--linewidth", type=float, default=spectrum.DEFAULT_LINEWIDTH)
    p.add_argument(
        "--render",
        nargs=3,
        type=float,
        metavar=("FROM", "TO", "POINTS"),
        help="sample the Lorentzian curve on this grid",
    )
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("crossing", help="level-crossing coupling / critical field")
    p.add_argument("--omega1", type=float)
    p.add_argument("--omega2", type=float)
    p.add_argument("--preset", choices=sorted(PRESET_RATIOS))
    p.set_defaults(func=_cmd_crossing)

    p = sub.add_parser("reconstruct", help="populations and concurrence from observables")
    p.add_argument("--p1z", type=float, required=True)
    p.add_argument("--p2z", type=float, required=True)
    p.add_argument("--p1z2z", type=float, required=True)
    p.add_argument("--theta-deg", type=float, required=True)
    p.set_defaults(func=_cmd_reconstruct)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
