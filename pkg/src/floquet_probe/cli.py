"""Command-line front end for sweeps, presets, and verification.

Exit codes: 0 success, 2 configuration error, 3 numerical failure,
4 verification failure.
"""
from __future__ import annotations

import argparse
import sys

from .errors import ConfigInvalid, FloquetProbeError
from .presets import PRESETS, oracle_companion, preset_config
from .sweep import AxisSpec, SweepConfig, run_sweep
from .validation import run_checks

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_VERIFY = 4


def _parse_trunc(text: str):
    if text == "auto":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integer or 'auto', got {text!r}")


def _add_sweep_flags(sub: argparse.ArgumentParser, eps0_default: str,
                     amp_default: str) -> None:
    sub.add_argument("--eps0", default=eps0_default, metavar="MIN:MAX:COUNT",
                     help="static bias axis in units of the drive quantum")
    sub.add_argument("--amp", default=amp_default, metavar="MIN:MAX:COUNT",
                     help="drive amplitude axis in units of the drive quantum")
    sub.add_argument("--delta", type=float, default=0.37,
                     help="tunneling amplitude")
    sub.add_argument("--omega-p", type=float, default=0.092,
                     help="probe frequency in units of the drive frequency")
    sub.add_argument("--amp-p", type=float, default=1.0,
                     help="probe amplitude")
    sub.add_argument("--target-gamma", type=float, default=None,
                     help="undriven dephasing rate the bath is calibrated to")
    sub.add_argument("--beta", type=float, default=None,
                     help="dimensionless inverse temperature")
    sub.add_argument("--freq-ghz", type=float, default=None,
                     help="drive frequency over 2 pi in GHz (with --temp-mk)")
    sub.add_argument("--temp-mk", type=float, default=None,
                     help="temperature in mK (with --freq-ghz)")
    sub.add_argument("--trunc", type=_parse_trunc, default=None,
                     help="photon cutoff, or 'auto' for adaptive refinement")
    sub.add_argument("--tol", type=float, default=1e-10,
                     help="convergence tolerance of the adaptive refinement")
    sub.add_argument("--out", default=None, help="output dataset path")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--workers", type=int, default=0,
                     help="process count, 0 = hardware parallelism")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="floquet-probe",
        description="Quasienergy spectroscopy sweeps for a driven qubit")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("landscape", help="quasienergy gap over the bias-"
                        "amplitude plane")
    _add_sweep_flags(p, "0:3:61", "0:6:121")

    p = subs.add_parser("absorption", help="golden-rule probe absorption map")
    _add_sweep_flags(p, "0:3:61", "0:6:121")

    p = subs.add_parser("line", help="absorption cut along the amplitude axis")
    _add_sweep_flags(p, "1.05", "0:6:241")

    p = subs.add_parser("twomode", help="two-mode quasienergy gap sweep")
    _add_sweep_flags(p, "0:3:41", "0:6:41")

    p = subs.add_parser("reproduce", help="run a named preset sweep")
    p.add_argument("--preset", required=True, choices=sorted(PRESETS))
    p.add_argument("--eps0", default=None, metavar="MIN:MAX:COUNT")
    p.add_argument("--amp", default=None, metavar="MIN:MAX:COUNT")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=0)

    p = subs.add_parser("verify", help="run self-checks against references")
    p.add_argument("level", choices=("quick", "full"))
    p.add_argument("--workers", type=int, default=8)
    return parser


def _config_from_args(kind: str, args) -> SweepConfig:
    return SweepConfig(
        kind=kind,
        delta=args.delta,
        eps0=AxisSpec.parse(args.eps0, "eps0"),
        amp=AxisSpec.parse(args.amp, "amp"),
        omega_p=args.omega_p,
        amp_p=args.amp_p,
        target_gamma=args.target_gamma,
        beta=args.beta,
        freq_ghz=args.freq_ghz,
        temp_mk=args.temp_mk,
        trunc=args.trunc,
        tol=args.tol,
        out=args.out or f"{kind}.{args.format}",
        fmt=args.format,
        workers=args.workers,
    )


def _execute(config: SweepConfig) -> int:
    ds, failures = run_sweep(config)
    total = len(ds.rows)
    print(f"wrote {config.out}: {total} points, {len(failures)} failed")
    for msg in failures[:10]:
        print(f"  point failed {msg}", file=sys.stderr)
    if len(failures) > 10:
        print(f"  ... {len(failures) - 10} more", file=sys.stderr)
    if failures and len(failures) > 0.01 * total:
        return EXIT_NUMERICAL
    return EXIT_OK


def _run_reproduce(args) -> int:
    from dataclasses import replace
    config = preset_config(args.preset)
    overrides = {"fmt": args.format, "workers": args.workers}
    if args.out:
        overrides["out"] = args.out
    else:
        overrides["out"] = f"{args.preset}.{args.format}"
    if args.eps0:
        overrides["eps0"] = AxisSpec.parse(args.eps0, "eps0")
    if args.amp:
        overrides["amp"] = AxisSpec.parse(args.amp, "amp")
    config = replace(config, **overrides)
    code = _execute(config)
    companion = oracle_companion(config)
    if companion is not None:
        code = max(code, _execute(companion))
    return code


def _run_verify(args) -> int:
    results = run_checks(args.level, workers=args.workers)
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_OK if not failed else EXIT_VERIFY


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("landscape", "twomode"):
            return _execute(_config_from_args(args.command, args))
        if args.command in ("absorption", "line"):
            return _execute(_config_from_args("absorption", args))
        if args.command == "reproduce":
            return _run_reproduce(args)
        if args.command == "verify":
            return _run_verify(args)
        parser.error(f"unknown command {args.command!r}")
    except ConfigInvalid as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except FloquetProbeError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
