"""Command-line front end.

    youngsorkin [sweep] [options]     kappa(d) curve as CSV (default command)
    youngsorkin figure2 [options]     the two near-degenerate normalization curves
    youngsorkin verify [--nmax N]     oracle and identity self-checks
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .output import RunConfig, RunManifest, emit_csv, read_manifest, write_manifest
from .sorkin import FIGURE2_PERTURBATIONS, kappa_curve
from .source import parse_source
from .verify import run_checks

COMMANDS = ("sweep", "figure2", "verify")
BASE_N1 = 1.0 / 3.0
BASE_N2 = 2.0 / 3.0


def _sweep_spec(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"sweep must be min:max:steps, got {text!r}")
    try:
        lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"sweep must be min:max:steps, got {text!r}") from None
    if steps < 1 or not hi >= lo:
        raise argparse.ArgumentTypeError(f"sweep needs max >= min and steps >= 1, got {text!r}")
    return lo, hi, steps


def _source_spec(text: str) -> str:
    try:
        return parse_source(text).spec()
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _run_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--lambda", dest="wavelength", type=float, default=0.05, help="wavelength in m")
    p.add_argument("--slit-spacing", type=float, default=0.13, help="adjacent slit distance l in m")
    p.add_argument("--screen", type=float, default=1.25, help="screen distance D in m")
    p.add_argument("--source", type=_source_spec, default="fock:1",
                   help="fock:<n>, coherent:<re>,<im> or thermal:<mean>")
    g1 = p.add_mutually_exclusive_group()
    g1.add_argument("--n1", type=float, help="single-slit weight (absolute)")
    g1.add_argument("--n1-pct", type=float, help="single-slit weight as percent change of 1/3")
    g2 = p.add_mutually_exclusive_group()
    g2.add_argument("--n2", type=float, help="pair weight (absolute)")
    g2.add_argument("--n2-pct", type=float, help="pair weight as percent change of 2/3")
    p.add_argument("--sweep", type=_sweep_spec, default=None,
                   help="min:max:steps; default -0.5:0.5:2001 in units of D")
    p.add_argument("--d-over-D", dest="d_over_D", action="store_true",
                   help="read --sweep bounds in units of the screen distance")
    p.add_argument("--normalize", choices=("unit", "pabc0"), default="pabc0")
    p.add_argument("--out", type=Path, default=None, help="CSV path (stdout if omitted)")
    p.add_argument("--manifest", type=Path, default=None,
                   help="manifest path (default: <out>.manifest.json)")
    p.add_argument("--from-manifest", type=Path, default=None,
                   help="rerun the configuration recorded in a manifest")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="youngsorkin", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command")
    common = _run_options()
    sub.add_parser("sweep", parents=[common], help="emit one kappa(d) curve")
    sub.add_parser("figure2", parents=[common], help="emit the two perturbed-normalization curves")
    verify = sub.add_parser("verify", help="run the self-check battery")
    verify.add_argument("--nmax", type=int, default=4, help="largest Fock n to cross-check")
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parse argv; ``sweep`` is implied when no subcommand is given.

    For run commands the namespace carries a validated ``config``.
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or (argv[0] not in COMMANDS and argv[0] not in ("-h", "--help", "--version")):
        argv = ["sweep", *argv]
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        if args.nmax < 0:
            parser.error("--nmax must be non-negative")
        return args

    if args.from_manifest is not None:
        try:
            manifest = read_manifest(args.from_manifest)
        except (OSError, ValueError, KeyError) as exc:
            parser.error(f"cannot load manifest {args.from_manifest}: {exc}")
        args.config = manifest.config
        return args

    n1 = args.n1 if args.n1 is not None else BASE_N1 * (1 + (args.n1_pct or 0.0) / 100)
    n2 = args.n2 if args.n2 is not None else BASE_N2 * (1 + (args.n2_pct or 0.0) / 100)
    if args.sweep is None:
        lo, hi, steps, in_D = -0.5, 0.5, 2001, True
    else:
        (lo, hi, steps), in_D = args.sweep, args.d_over_D
    try:
        args.config = RunConfig(
            wavelength=args.wavelength,
            slit_spacing=args.slit_spacing,
            screen_distance=args.screen,
            source=args.source,
            n1=n1,
            n2=n2,
            normalizer=args.normalize,
            sweep_min=lo,
            sweep_max=hi,
            sweep_steps=steps,
            d_over_D=in_D,
        )
    except ValueError as exc:
        parser.error(str(exc))
    return args


def run_sweep(config: RunConfig, out: Optional[Path], manifest_path: Optional[Path], command="sweep",
              manifest: Optional[RunManifest] = None):
    curve = kappa_curve(config.geometry(), config.state(), config.sorkin_config(),
                        config.detector_positions())
    if out is None:
        emit_csv(curve, sys.stdout, config.screen_distance)
    else:
        emit_csv(curve, out, config.screen_distance)
        manifest = manifest or RunManifest(config, command)
        write_manifest(manifest, manifest_path or _default_manifest(out))
    return curve


def _default_manifest(out: Path) -> Path:
    return out.with_name(out.name + ".manifest.json")


def _figure2_paths(out: Path) -> tuple[Path, Path]:
    stem = out.with_suffix("") if out.suffix == ".csv" else out
    return (stem.with_name(stem.name + "_upper.csv"), stem.with_name(stem.name + "_lower.csv"))


def run_figure2(config: RunConfig, out: Optional[Path]) -> list:
    """Upper (n1 +1.3 %) and lower (n1 +1.2 %) curves at n2 = 2/3 +1.3 %."""
    paths = _figure2_paths(out) if out is not None else (None, None)
    curves = []
    for (dn1, dn2), path in zip(FIGURE2_PERTURBATIONS, paths):
        cfg = replace(config, n1=BASE_N1 * (1 + dn1 / 100), n2=BASE_N2 * (1 + dn2 / 100))
        curve = kappa_curve(cfg.geometry(), cfg.state(), cfg.sorkin_config(), cfg.detector_positions())
        curves.append(((dn1, dn2), curve))
        if path is not None:
            emit_csv(curve, path, cfg.screen_distance)
            write_manifest(RunManifest(cfg, "figure2"), _default_manifest(path))
    for (dn1, dn2), curve in curves:
        kn = curve.kappa_normalized
        mid = len(kn) // 2
        print(
            f"n1=1/3{dn1:+.1f}% n2=2/3{dn2:+.1f}%: kappa/P(0) at center {kn[mid]:+.6e}, "
            f"range [{np.min(kn):+.6e}, {np.max(kn):+.6e}]"
        )
    return curves


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = parse_args(argv)
    if args.command == "verify":
        checks = run_checks(args.nmax)
        for check in checks:
            print(check.line())
        failed = [c.name for c in checks if not c.passed]
        print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
        return 1 if failed else 0

    try:
        if args.command == "figure2":
            run_figure2(args.config, args.out)
        else:
            manifest = read_manifest(args.from_manifest) if args.from_manifest else None
            run_sweep(args.config, args.out, args.manifest, manifest=manifest)
    except (OSError, ZeroDivisionError) as exc:
        print(f"youngsorkin: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
