"""CSV curves and JSON run manifests."""

from __future__ import annotations

import datetime as _dt
import json
import os
from dataclasses import dataclass, field
from typing import IO, Union

import numpy as np

from . import __version__
from .geometry import SlitGeometry, symmetric_sweep
from .sorkin import KappaCurve, SorkinConfig
from .source import parse_source

CSV_COLUMNS = (
    "d", "d_over_D", "P_a", "P_b", "P_c", "P_ab", "P_ac", "P_bc", "P_abc", "kappa", "kappa_normalized",
)
MANIFEST_SCHEMA = "youngsorkin.run/1"


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines the numbers in an emitted CSV."""

    wavelength: float = 0.05
    slit_spacing: float = 0.13
    screen_distance: float = 1.25
    source: str = "fock:1"
    n1: float = 1.0 / 3.0
    n2: float = 2.0 / 3.0
    normalizer: str = "pabc0"
    sweep_min: float = -0.5
    sweep_max: float = 0.5
    sweep_steps: int = 2001
    d_over_D: bool = True

    def __post_init__(self):
        for name in ("wavelength", "slit_spacing", "screen_distance"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be positive, got {value}")
        if self.sweep_steps < 1:
            raise ValueError(f"sweep needs at least one point, got {self.sweep_steps}")
        if not self.sweep_max >= self.sweep_min:
            raise ValueError(f"sweep max {self.sweep_max} below min {self.sweep_min}")
        # canonicalize and validate the source spec
        object.__setattr__(self, "source", parse_source(self.source).spec())
        SorkinConfig(self.n1, self.n2, self.normalizer)

    def geometry(self) -> SlitGeometry:
        return SlitGeometry.three_slit(self.slit_spacing, self.screen_distance, self.wavelength)

    def sorkin_config(self) -> SorkinConfig:
        return SorkinConfig(self.n1, self.n2, self.normalizer)

    def state(self):
        return parse_source(self.source)

    def sweep_grid(self) -> np.ndarray:
        """Sweep values in the configured units (meters or d/D)."""
        if self.sweep_min == -self.sweep_max:
            return symmetric_sweep(self.sweep_max, self.sweep_steps)
        return np.linspace(self.sweep_min, self.sweep_max, self.sweep_steps)

    def detector_positions(self) -> np.ndarray:
        grid = self.sweep_grid()
        return grid * self.screen_distance if self.d_over_D else grid


@dataclass(frozen=True)
class RunManifest:
    config: RunConfig
    command: str = "sweep"
    version: str = __version__
    created: str = field(default_factory=lambda: utc_now_iso())


def utc_now_iso() -> str:
    return _dt.datetime.now(_dt.timezone.utc).replace(microsecond=0).isoformat()


def manifest_to_json(manifest: RunManifest) -> str:
    cfg = manifest.config
    payload = {
        "schema": MANIFEST_SCHEMA,
        "tool": "youngsorkin",
        "version": manifest.version,
        "created": manifest.created,
        "command": manifest.command,
        "geometry": {
            "wavelength": cfg.wavelength,
            "slit_spacing": cfg.slit_spacing,
            "screen_distance": cfg.screen_distance,
        },
        "source": cfg.source,
        "sorkin": {"n1": cfg.n1, "n2": cfg.n2, "normalizer": cfg.normalizer},
        "sweep": {
            "min": cfg.sweep_min,
            "max": cfg.sweep_max,
            "steps": cfg.sweep_steps,
            "units": "d_over_D" if cfg.d_over_D else "m",
        },
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def manifest_from_json(text: str) -> RunManifest:
    data = json.loads(text)
    if data.get("schema") != MANIFEST_SCHEMA:
        raise ValueError(f"not a run manifest (schema {data.get('schema')!r})")
    units = data["sweep"]["units"]
    if units not in ("d_over_D", "m"):
        raise ValueError(f"unknown sweep units {units!r}")
    cfg = RunConfig(
        wavelength=data["geometry"]["wavelength"],
        slit_spacing=data["geometry"]["slit_spacing"],
        screen_distance=data["geometry"]["screen_distance"],
        source=data["source"],
        n1=data["sorkin"]["n1"],
        n2=data["sorkin"]["n2"],
        normalizer=data["sorkin"]["normalizer"],
        sweep_min=data["sweep"]["min"],
        sweep_max=data["sweep"]["max"],
        sweep_steps=int(data["sweep"]["steps"]),
        d_over_D=units == "d_over_D",
    )
    return RunManifest(cfg, data["command"], data["version"], data["created"])


def write_manifest(manifest: RunManifest, path: Union[str, os.PathLike]) -> None:
    _write_text(path, manifest_to_json(manifest))


def read_manifest(path: Union[str, os.PathLike]) -> RunManifest:
    with open(path, encoding="utf-8") as f:
        return manifest_from_json(f.read())


def _fmt(x) -> str:
    return format(float(x), ".17g")


def format_csv(curve: KappaCurve, screen_distance: float) -> str:
    probs = curve.probabilities
    rows = [",".join(CSV_COLUMNS)]
    kn = curve.kappa_normalized
    for idx, d in enumerate(curve.d):
        values = [d, d / screen_distance]
        values += [probs[k][idx] for k in ("a", "b", "c", "ab", "ac", "bc", "abc")]
        values += [curve.kappa[idx], kn[idx]]
        rows.append(",".join(_fmt(v) for v in values))
    return "\n".join(rows) + "\n"


def emit_csv(curve: KappaCurve, destination: Union[str, os.PathLike, IO[str]], screen_distance: float) -> None:
    """Write a curve as CSV to a path or an open text stream."""
    if curve.d.size == 0:
        raise ValueError("nothing to write: empty curve")
    text = format_csv(curve, screen_distance)
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        _write_text(destination, text)


def _write_text(path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {os.fspath(path)}: {exc.strerror or exc}") from exc
