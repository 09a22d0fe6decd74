"""Planar N-slit interferometer geometry.

Slits are thin openings at transverse positions ``y_i`` in the plane of the
interferometer. The detector sits at transverse coordinate ``d`` on a screen a
distance ``D`` away. Path lengths are evaluated exactly (no paraxial or
Fraunhofer expansion), since the detection probabilities keep the separate
``1/r_i`` amplitude factors.

All lengths are in meters and phases in radians.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

SlitKey = Union[int, str]

DEFAULT_LABELS = ("a", "b", "c", "d", "e", "f")


@dataclass(frozen=True)
class SlitGeometry:
    """Slit layout, screen distance and wavelength.

    ``labels`` name the slits in order of increasing transverse position.
    """

    slit_positions: tuple[float, ...]
    screen_distance: float
    wavelength: float
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        positions = tuple(float(y) for y in self.slit_positions)
        object.__setattr__(self, "slit_positions", positions)
        if not positions:
            raise ValueError("at least one slit is required")
        if not all(math.isfinite(y) for y in positions):
            raise ValueError(f"slit positions must be finite, got {positions}")
        if any(b <= a for a, b in zip(positions, positions[1:])):
            raise ValueError(f"slit positions must be strictly increasing, got {positions}")
        if not (math.isfinite(self.screen_distance) and self.screen_distance > 0):
            raise ValueError(f"screen distance must be positive, got {self.screen_distance}")
        if not (math.isfinite(self.wavelength) and self.wavelength > 0):
            raise ValueError(f"wavelength must be positive, got {self.wavelength}")

        labels = tuple(self.labels)
        if not labels:
            if len(positions) > len(DEFAULT_LABELS):
                raise ValueError("explicit labels are required for more than six slits")
            labels = DEFAULT_LABELS[: len(positions)]
        if len(labels) != len(positions) or len(set(labels)) != len(labels):
            raise ValueError(f"need one distinct label per slit, got {labels}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def three_slit(cls, spacing: float, screen_distance: float, wavelength: float) -> "SlitGeometry":
        """Equally spaced slits a, b, c at ``(-l, 0, +l)``."""
        if not (math.isfinite(spacing) and spacing > 0):
            raise ValueError(f"slit spacing must be positive, got {spacing}")
        return cls((-spacing, 0.0, spacing), screen_distance, wavelength)

    @property
    def n_slits(self) -> int:
        return len(self.slit_positions)

    @property
    def wave_number(self) -> float:
        return 2.0 * math.pi / self.wavelength

    def index(self, slit: SlitKey) -> int:
        """Resolve a slit label or integer index to an index."""
        if isinstance(slit, str):
            try:
                return self.labels.index(slit)
            except ValueError:
                raise KeyError(f"unknown slit label {slit!r}; have {self.labels}") from None
        i = int(slit)
        if not 0 <= i < self.n_slits:
            raise IndexError(f"slit index {i} out of range for {self.n_slits} slits")
        return i

    def position(self, slit: SlitKey) -> float:
        return self.slit_positions[self.index(slit)]


def path_length(geom: SlitGeometry, slit: SlitKey, d):
    """Distance from a slit to the detector at transverse coordinate ``d``.

    ``d`` may be a scalar or an array; the result has the same shape.
    """
    y = geom.position(slit)
    return np.hypot(geom.screen_distance, np.subtract(d, y))


def phase(geom: SlitGeometry, slit: SlitKey, d):
    """Propagation phase ``-k r_i`` picked up between slit and detector.

    The common ``omega t`` and any source-to-slit delay are dropped; both are
    identical for every slit and cancel in all phase differences.
    """
    return -geom.wave_number * path_length(geom, slit, d)


def phase_difference(geom: SlitGeometry, i: SlitKey, j: SlitKey, d):
    """``phi_i - phi_j = k (r_j - r_i)``."""
    if geom.index(i) == geom.index(j):
        return np.zeros_like(np.asarray(d, dtype=float))[()]
    return geom.wave_number * (path_length(geom, j, d) - path_length(geom, i, d))


def fringe_spacing(geom: SlitGeometry) -> float:
    """Far-field fringe period ``lambda D / l`` for adjacent slit spacing ``l``."""
    spacing = min(b - a for a, b in zip(geom.slit_positions, geom.slit_positions[1:]))
    return geom.wavelength * geom.screen_distance / spacing


def symmetric_sweep(half_width: float, steps: int) -> np.ndarray:
    """Detector grid on ``[-w, w]`` that is exactly mirror symmetric.

    ``np.linspace`` can differ from its reversed negation in the last ulp;
    mirroring the left half removes that.
    """
    if steps < 1:
        raise ValueError("steps must be positive")
    grid = np.linspace(-half_width, half_width, steps)
    half = steps // 2
    grid[steps - half:] = -grid[:half][::-1]
    if steps % 2:
        grid[half] = 0.0
    return grid
