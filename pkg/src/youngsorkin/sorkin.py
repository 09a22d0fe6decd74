"""Sorkin parameter, abstract and physical.

The abstract form combines squared moduli of sums of three complex numbers
and vanishes identically. The physical form

    kappa(d) = P_abc - n2 (P_ab + P_ac + P_bc) + n1 (P_a + P_b + P_c)

uses detection probabilities measured with different slits closed. Closing
slits changes how the source flux is split, so ``kappa(d)`` vanishes only for
``n1 = 1/3`` and ``n2 = 2/3``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from .detection import detection_probability
from .geometry import SlitGeometry, path_length, phase_difference
from .source import ALL_CONFIGURATIONS, SlitConfiguration, SourceState

NORMALIZER_MODES = ("unit", "pabc0")
SINGLE_SLITS = ("a", "b", "c")
SLIT_PAIRS = ("ab", "ac", "bc")

# below this P_abc(0) the normalized curve is meaningless
NORMALIZER_FLOOR = 1e-300


@dataclass(frozen=True)
class SorkinConfig:
    n1: float = 1.0 / 3.0
    n2: float = 2.0 / 3.0
    normalizer: str = "pabc0"

    def __post_init__(self):
        if not (math.isfinite(self.n1) and math.isfinite(self.n2)):
            raise ValueError(f"n1, n2 must be finite, got {self.n1}, {self.n2}")
        if self.normalizer not in NORMALIZER_MODES:
            raise ValueError(f"normalizer must be one of {NORMALIZER_MODES}, got {self.normalizer!r}")

    def perturbed(self, dn1_pct: float = 0.0, dn2_pct: float = 0.0) -> "SorkinConfig":
        """Scale n1, n2 by ``1 + pct/100`` (relative perturbation)."""
        return replace(self, n1=self.n1 * (1 + dn1_pct / 100), n2=self.n2 * (1 + dn2_pct / 100))


ADJUSTED = SorkinConfig(1.0 / 3.0, 2.0 / 3.0)
NAIVE = SorkinConfig(1.0, 1.0)

# n2 = 2/3 + 1.3 % with n1 = 1/3 + 1.3 % (upper) and 1/3 + 1.2 % (lower)
FIGURE2_PERTURBATIONS = ((1.3, 1.3), (1.2, 1.3))


def kappa_identity(alpha: complex, beta: complex, gamma: complex) -> float:
    """Abstract Sorkin combination with normalizer 1. Zero up to rounding."""
    p = lambda z: abs(z) ** 2  # noqa: E731
    return (
        p(alpha + beta + gamma)
        - p(alpha + beta)
        - p(alpha + gamma)
        - p(beta + gamma)
        + p(alpha)
        + p(beta)
        + p(gamma)
    )


def _require_three_slits(geom: SlitGeometry) -> None:
    if geom.labels != SINGLE_SLITS:
        raise ValueError(f"Sorkin analysis needs exactly slits a, b, c; geometry has {geom.labels}")


def slit_probabilities(geom: SlitGeometry, state: SourceState, d, field_intensity: float = 1.0) -> dict:
    """All seven detection probabilities keyed ``"a"``, ..., ``"abc"``.

    Each configuration uses its own splitting over the open slits.
    """
    _require_three_slits(geom)
    return {
        cfg.name: detection_probability(geom, state, cfg, d, field_intensity)
        for cfg in ALL_CONFIGURATIONS
    }


def kappa_from_probabilities(probs: dict, cfg: SorkinConfig):
    pairs = probs["ab"] + probs["ac"] + probs["bc"]
    singles = probs["a"] + probs["b"] + probs["c"]
    return probs["abc"] - cfg.n2 * pairs + cfg.n1 * singles


def kappa_physical(
    geom: SlitGeometry, state: SourceState, d, cfg: SorkinConfig = ADJUSTED, field_intensity: float = 1.0
):
    """Un-normalized ``kappa(d)``; ``d`` scalar or array."""
    return kappa_from_probabilities(slit_probabilities(geom, state, d, field_intensity), cfg)


def naive_closed_form(geom: SlitGeometry, state: SourceState, d, field_intensity: float = 1.0):
    """``kappa(d)`` at ``n1 = n2 = 1`` written out directly:

    |E0|^2 <n>/3 [sum_i 1/r_i^2 - sum_{i<j} cos(phi_i - phi_j) / (r_i r_j)]
    """
    _require_three_slits(geom)
    r = {s: path_length(geom, s, d) for s in SINGLE_SLITS}
    diag = sum(1.0 / r[s] ** 2 for s in SINGLE_SLITS)
    cross = sum(
        np.cos(phase_difference(geom, i, j, d)) / (r[i] * r[j]) for i, j in ("ab", "bc", "ac")
    )
    return field_intensity * state.mean_photon_number / 3.0 * (diag - cross)


def normalizer_value(
    geom: SlitGeometry, state: SourceState, cfg: SorkinConfig, field_intensity: float = 1.0
) -> float:
    if cfg.normalizer == "unit":
        return 1.0
    p0 = float(detection_probability(geom, state, SlitConfiguration.of("abc"), 0.0, field_intensity))
    if not p0 > NORMALIZER_FLOOR:
        raise ZeroDivisionError(
            f"P_abc(d=0) = {p0!r} is too small to normalize by; "
            "the source is dark or the geometry is degenerate"
        )
    return p0


@dataclass
class KappaCurve:
    d: np.ndarray
    kappa: np.ndarray
    normalizer: float
    config: SorkinConfig
    probabilities: dict

    @property
    def kappa_normalized(self) -> np.ndarray:
        return self.kappa / self.normalizer

    def pairs(self) -> list[tuple[float, float]]:
        return [(float(x), float(k)) for x, k in zip(self.d, self.kappa_normalized)]


def kappa_curve(
    geom: SlitGeometry,
    state: SourceState,
    cfg: SorkinConfig,
    sweep: Sequence[float],
    field_intensity: float = 1.0,
) -> KappaCurve:
    """``kappa(d)`` over a sweep, divided by the configured normalizer."""
    d = np.asarray(sweep, dtype=float).ravel()
    if d.size == 0:
        raise ValueError("sweep must contain at least one detector position")
    norm = normalizer_value(geom, state, cfg, field_intensity)
    probs = slit_probabilities(geom, state, d, field_intensity)
    return KappaCurve(d, kappa_from_probabilities(probs, cfg), norm, cfg, probs)


def perturbation_sweep(
    geom: SlitGeometry,
    state: SourceState,
    base: SorkinConfig,
    perturbations: Iterable[tuple[float, float]],
    sweep: Sequence[float],
    field_intensity: float = 1.0,
    relative: bool = True,
) -> list[tuple[tuple[float, float], KappaCurve]]:
    """One ``kappa`` curve per ``(dn1, dn2)`` pair.

    With ``relative`` the pair is in percent of the base values; otherwise it
    is added to them.
    """
    perturbations = list(perturbations)
    if not perturbations:
        raise ValueError("need at least one perturbation")
    d = np.asarray(sweep, dtype=float).ravel()
    if d.size == 0:
        raise ValueError("sweep must contain at least one detector position")
    norm = normalizer_value(geom, state, base, field_intensity)
    probs = slit_probabilities(geom, state, d, field_intensity)
    out = []
    for dn1, dn2 in perturbations:
        if relative:
            cfg = base.perturbed(dn1, dn2)
        else:
            cfg = replace(base, n1=base.n1 + dn1, n2=base.n2 + dn2)
        out.append(((dn1, dn2), KappaCurve(d, kappa_from_probabilities(probs, cfg), norm, cfg, probs)))
    return out


def figure2_curves(
    geom: SlitGeometry, state: SourceState, sweep: Sequence[float], normalizer: str = "pabc0"
) -> list[tuple[tuple[float, float], KappaCurve]]:
    """The two near-degenerate curves: upper (n1 +1.3 %) then lower (n1 +1.2 %)."""
    return perturbation_sweep(
        geom, state, SorkinConfig(1.0 / 3.0, 2.0 / 3.0, normalizer), FIGURE2_PERTURBATIONS, sweep
    )
