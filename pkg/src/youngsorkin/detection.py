"""Glauber single-photon detection probabilities.

At the detector the positive-frequency field is

    E+(d) = E0 * sum_i a_i exp(i phi_i(d)) / r_i(d)

summed over the open slits, and the detection probability is
``<E- E+>``:

    P(d) = |E0|^2 * sum_{i,j} C[i, j] exp(-i (phi_i - phi_j)) / (r_i r_j)

with ``C[i, j] = <a_i^dagger a_j>``. Values are intensity-like densities in
the units of ``|E0|^2 <n> / m^2``; they are not normalized to one.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from .geometry import SlitGeometry, path_length, phase
from .source import CorrelationMatrix, SlitConfiguration, SourceState, correlation_matrix

IMAG_TOLERANCE = 1e-14


def _check_intensity(field_intensity: float) -> None:
    if not (math.isfinite(field_intensity) and field_intensity > 0):
        raise ValueError(f"field intensity |E0|^2 must be positive, got {field_intensity}")


def detection_probability(
    geom: SlitGeometry,
    state: SourceState,
    config: SlitConfiguration,
    d,
    field_intensity: float = 1.0,
    correlations: Optional[CorrelationMatrix] = None,
):
    """Detection probability for the open slits in ``config`` at detector ``d``.

    ``d`` may be a scalar or an array. ``correlations`` overrides the analytic
    correlation matrix (used to cross-check against the Fock oracle).
    """
    _check_intensity(field_intensity)
    missing = [s for s in config.open_slits if s not in geom.labels]
    if missing:
        raise ValueError(f"open slits {missing} are not part of the geometry {geom.labels}")
    if correlations is None:
        correlations = correlation_matrix(state, config)
    c = np.asarray(correlations.entries)
    if c.shape != (config.splitting_count,) * 2:
        raise ValueError(f"correlation matrix shape {c.shape} does not match {config.open_slits}")

    d = np.asarray(d, dtype=float)
    shape = d.shape
    # 0-d inputs take a different ufunc path; keep scalars bit-identical to sweeps
    d = d.reshape(-1)
    amplitudes = [
        np.exp(1j * phase(geom, s, d)) / path_length(geom, s, d) for s in config.open_slits
    ]
    total = np.zeros(d.shape, dtype=complex)
    scale = np.zeros(d.shape, dtype=float)
    for i, ui in enumerate(amplitudes):
        for j, uj in enumerate(amplitudes):
            term = c[i, j] * np.conj(ui) * uj
            total = total + term
            scale = scale + np.abs(term)

    bad = np.abs(total.imag) > IMAG_TOLERANCE * np.maximum(scale, np.finfo(float).tiny)
    if np.any(bad):
        worst = float(np.max(np.abs(total.imag) / np.maximum(scale, np.finfo(float).tiny)))
        raise ArithmeticError(
            f"detection probability has relative imaginary part {worst:.3e}; "
            "correlation matrix is not Hermitian"
        )
    return (field_intensity * total.real).reshape(shape)[()]


def detection_curve(
    geom: SlitGeometry,
    state: SourceState,
    config: SlitConfiguration,
    sweep,
    field_intensity: float = 1.0,
    workers: Optional[int] = None,
) -> list[tuple[float, float]]:
    """``[(d, P(d)), ...]`` in sweep order.

    With ``workers`` the sweep is split across a thread pool. Every point is
    computed by the same elementwise kernel, so the result does not depend on
    the chunking.
    """
    points = np.asarray(sweep, dtype=float).ravel()
    if points.size == 0:
        raise ValueError("sweep must contain at least one detector position")
    if workers and workers > 1:
        chunks = np.array_split(points, min(workers, points.size))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(
                    lambda chunk: np.atleast_1d(
                        detection_probability(geom, state, config, chunk, field_intensity)
                    ),
                    chunks,
                )
            )
        values = np.concatenate(parts)
    else:
        values = np.atleast_1d(detection_probability(geom, state, config, points, field_intensity))
    return [(float(x), float(p)) for x, p in zip(points, values)]
