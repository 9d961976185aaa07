"""Command-line interface: constants dump, rate evaluation, field sweeps,
barrier inspection and inverse field calibration.

Exit codes: 0 success, 2 validation failure, 3 regime failure (shallow
tunnelling / suppressed barrier), 4 numeric failure.  Setting
ESFI_GUARD_OVERRIDE=1 disables the deep-tunnelling guard for the
closed-form methods; such results are labelled 'extrapolated'.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Optional

import numpy as np

from . import __version__
from .barrier import MotiveModel, MotiveVariant, rate_jwkb
from .errors import (
    BarrierSuppressed,
    NumericError,
    RegimeError,
    ShallowTunnellingRegime,
    ValidationError,
)
from .hydrogenic import make_atom
from .invert import invert_rate
from .rates import rate_ll
from .units import FIELD, REGISTRY, UnitSystem, convert, to_canonical

_METHODS = ("ll", "jwkb-parabolic", "jwkb-cartesian", "jwkb-naive")


def _unit_system(name: str) -> UnitSystem:
    return UnitSystem(name)


def _field_to_canonical(value: float, system: UnitSystem) -> float:
    return to_canonical(value, FIELD, system).value


def _field_from_canonical(value: float, system: UnitSystem) -> float:
    if system is UnitSystem.AU:
        return value / REGISTRY.au_field
    if system is UnitSystem.SI:
        return value * 1e9  # V/nm -> V/m
    return value


def _rate_from_canonical(value: float, system: UnitSystem) -> float:
    # rates are s^-1 in both SI and the canonical system
    return value * REGISTRY.au_time if system is UnitSystem.AU else value


def _length_from_canonical(value: float, system: UnitSystem) -> float:
    if system is UnitSystem.AU:
        return value / REGISTRY.au_length
    if system is UnitSystem.SI:
        return value * 1e-9  # nm -> m
    return value


def _guard_override() -> bool:
    return os.environ.get("ESFI_GUARD_OVERRIDE", "") == "1"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(record: dict, out: Optional[str]) -> None:
    _emit(json.dumps(record, indent=2, sort_keys=True) + "\n", out)


def cmd_constants(args: argparse.Namespace) -> int:
    system = _unit_system(args.units)
    rows = []
    for name, quantity in REGISTRY.constants().items():
        if system is UnitSystem.SI and name in REGISTRY.SI_NOT_USED:
            continue
        c = convert(quantity, system)
        rows.append((name, c.value, c.units, REGISTRY.sig_figs(name)))
    if args.format == "csv":
        lines = ["symbol,value,units"]
        lines += [f"{name},{value:.9e},{units}" for name, value, units, _ in rows]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        record = {
            name: {
                "value": value,
                "units": units,
                "unit_system": system.value,
                "sig_figs": figs,
            }
            for name, value, units, figs in rows
        }
        _emit_json(record, args.out)
    return 0


def _rate_record(args: argparse.Namespace, method: str, F_canonical: float) -> dict:
    """Evaluate one method at one canonical field; values still canonical."""
    atom = make_atom(args.Z, args.ionization_energy)
    if method == "ll":
        r = rate_ll(atom, F_canonical, allow_shallow=_guard_override())
        return {
            "K_e": r.K_e,
            "pre_exponential": r.pre_exponential,
            "exponent": r.exponent,
            "D_eff": r.D_eff,
            "T": r.T,
            "regime": r.regime,
        }
    sol = rate_jwkb(MotiveModel(MotiveVariant(method), atom, F_canonical))
    pre = atom.nu_Z * sol.P_eff
    return {
        "K_e": sol.K_e,
        "pre_exponential": pre,
        "exponent": sol.G,
        "D_eff": sol.D_eff,
        "T": sol.P_jwkb * math.exp(-sol.G),
        "regime": sol.regime,
    }


def cmd_rate(args: argparse.Namespace) -> int:
    system = _unit_system(args.units)
    F_canonical = _field_to_canonical(args.field, system)
    rec = _rate_record(args, args.method, F_canonical)
    record = {
        "method": args.method,
        "unit_system": system.value,
        "Z": args.Z,
        "ionization_energy_eV": make_atom(args.Z, args.ionization_energy).I,
        "field": args.field,
        "K_e": _rate_from_canonical(rec["K_e"], system),
        "pre_exponential": _rate_from_canonical(rec["pre_exponential"], system),
        "exponent": rec["exponent"],
        "D_eff": rec["D_eff"],
        "T": rec["T"],
        "regime": rec["regime"],
    }
    _emit_json(record, args.out)
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    system = _unit_system(args.units)
    if not (0.0 < args.f_min < args.f_max):
        raise ValidationError(
            f"sweep requires 0 < F_min < F_max, got ({args.f_min}, {args.f_max})"
        )
    if not (2 <= args.points <= 10**6):
        raise ValidationError(f"points must be in [2, 1e6], got {args.points}")
    methods = []
    for m in args.methods.split(","):
        m = m.strip()
        if m not in _METHODS:
            raise ValidationError(f"unknown method {m!r}; choose from {_METHODS}")
        if m not in methods:
            methods.append(m)

    if args.spacing == "log":
        grid = np.geomspace(args.f_min, args.f_max, args.points)
    else:
        grid = np.linspace(args.f_min, args.f_max, args.points)

    lines = [
        "F,"
        + ",".join(f"K_{m}" for m in methods)
        + ","
        + ",".join(f"exponent_{m}" for m in methods)
    ]
    for F in grid:
        F_canonical = _field_to_canonical(float(F), system)
        ks, exps = [], []
        for m in methods:
            try:
                rec = _rate_record(args, m, F_canonical)
                ks.append(f"{_rate_from_canonical(rec['K_e'], system):.9e}")
                exps.append(f"{rec['exponent']:.9e}")
            except (ValidationError, RegimeError, NumericError) as exc:
                print(f"note: {m} at F={F:.9e}: {exc}", file=sys.stderr)
                ks.append("nan")
                exps.append("nan")
        lines.append(f"{F:.9e}," + ",".join(ks) + "," + ",".join(exps))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_invert(args: argparse.Namespace) -> int:
    system = _unit_system(args.units)
    atom = make_atom(args.Z, args.ionization_energy)
    bracket = None
    if args.f_lo is not None or args.f_hi is not None:
        if args.f_lo is None or args.f_hi is None:
            raise ValidationError("provide both --f-lo and --f-hi or neither")
        bracket = (
            _field_to_canonical(args.f_lo, system),
            _field_to_canonical(args.f_hi, system),
        )
    result = invert_rate(args.target, atom, method=args.method, bracket=bracket)
    record = {
        "F": _field_from_canonical(result.F, system),
        "iterations": result.iterations,
        "residual": result.residual,
        "unit_system": system.value,
    }
    _emit_json(record, args.out)
    return 0


def cmd_barrier(args: argparse.Namespace) -> int:
    system = _unit_system(args.units)
    atom = make_atom(args.Z, args.ionization_energy)
    F_canonical = _field_to_canonical(args.field, system)
    try:
        sol = rate_jwkb(
            MotiveModel(MotiveVariant(args.model), atom, F_canonical),
            simple_prefactor=args.simple,
        )
    except BarrierSuppressed as exc:
        if exc.suppression_field is not None:
            f_bs = _field_from_canonical(exc.suppression_field, system)
            raise BarrierSuppressed(
                f"barrier suppressed for {args.model}: field "
                f"{args.field:.6g} is at or above the suppression field "
                f"{f_bs:.6g} ({system.value})",
                exc.suppression_field,
            ) from exc
        raise
    record = {
        "model": args.model,
        "unit_system": system.value,
        "coord_in": _length_from_canonical(sol.coord_in, system),
        "coord_out": _length_from_canonical(sol.coord_out, system),
        "G": sol.G,
        "P_jwkb": sol.P_jwkb,
        "P_eff": sol.P_eff,
        "D_eff": sol.D_eff,
        "K_e": _rate_from_canonical(sol.K_e, system),
        "regime": sol.regime,
    }
    _emit_json(record, args.out)
    return 0


def _add_atom_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--Z", type=float, default=1.0, help="charge number (default 1)")
    p.add_argument(
        "--ionization-energy",
        type=float,
        default=None,
        metavar="EV",
        help="override the ionization energy [eV] (B stays Z-based)",
    )


def _add_units_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--units",
        choices=["si", "evnm", "au"],
        default="evnm",
        help="unit system for fields and rates (default evnm: V/nm, s^-1)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="esfi",
        description="Field-ionization rate constants for ground-state "
        "hydrogenic atoms (closed-form and JWKB barrier routes).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="dump the constants registry")
    _add_units_flag(p)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("rate", help="evaluate a single rate constant")
    _add_atom_flags(p)
    p.add_argument("--field", type=float, required=True, help="field magnitude")
    _add_units_flag(p)
    p.add_argument("--method", choices=_METHODS, default="ll")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_rate)

    p = sub.add_parser("sweep", help="rate constants over a field grid (CSV)")
    _add_atom_flags(p)
    p.add_argument("--f-min", type=float, required=True)
    p.add_argument("--f-max", type=float, required=True)
    p.add_argument("--points", type=int, default=50)
    p.add_argument("--spacing", choices=["linear", "log"], default="log")
    p.add_argument(
        "--methods",
        default="ll",
        help="comma-separated subset of " + ",".join(_METHODS),
    )
    _add_units_flag(p)
    p.add_argument("--out", default=None, help="CSV output path (default stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("invert", help="solve K_e(F) = target for F")
    _add_atom_flags(p)
    p.add_argument("--target", type=float, required=True, help="target rate [s^-1]")
    p.add_argument("--method", choices=_METHODS, default="ll")
    p.add_argument("--f-lo", type=float, default=None, help="bracket low end")
    p.add_argument("--f-hi", type=float, default=None, help="bracket high end")
    _add_units_flag(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("barrier", help="inspect a JWKB barrier solution")
    _add_atom_flags(p)
    p.add_argument("--field", type=float, required=True)
    p.add_argument(
        "--model",
        choices=[v.value for v in MotiveVariant],
        default="jwkb-parabolic",
        help="barrier shape; coordinates in the output are eta for "
        "jwkb-parabolic and z on the symmetry axis otherwise",
    )
    p.add_argument(
        "--simple",
        action="store_true",
        help="use the plain attempt-frequency estimate (tunnelling pre-factor 1)",
    )
    _add_units_flag(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_barrier)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RegimeError as exc:
        hint = (
            "; set ESFI_GUARD_OVERRIDE=1 to extrapolate"
            if isinstance(exc, ShallowTunnellingRegime)
            else ""
        )
        print(f"error: {exc}{hint}", file=sys.stderr)
        return 3
    except NumericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
