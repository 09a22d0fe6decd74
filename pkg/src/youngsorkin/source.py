"""Mono-chromatic source states and the slit-mode correlation matrix.

A single source mode ``s`` feeds the open slits through the boundary condition
``s = (a_1 + ... + a_N) / sqrt(N)``, the remaining ``N - 1`` orthogonal
combinations being local modes held in vacuum. For every state with a
Glauber P-representation the first-order moments of the slit modes are then

    <a_i^dagger a_j> = <n> / N    for all open i, j,

so Fock, coherent and thermal sources differ only through their mean photon
number.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Iterable, Union

import numpy as np

SLIT_LABELS = ("a", "b", "c")


@dataclass(frozen=True)
class Fock:
    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 0:
            raise ValueError(f"Fock photon number must be a non-negative integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))

    @property
    def mean_photon_number(self) -> float:
        return float(self.n)

    def spec(self) -> str:
        return f"fock:{self.n}"


@dataclass(frozen=True)
class Coherent:
    alpha: complex

    def __post_init__(self):
        alpha = complex(self.alpha)
        if not cmath.isfinite(alpha):
            raise ValueError(f"coherent amplitude must be finite, got {alpha}")
        object.__setattr__(self, "alpha", alpha)

    @property
    def mean_photon_number(self) -> float:
        return abs(self.alpha) ** 2

    def spec(self) -> str:
        return f"coherent:{self.alpha.real!r},{self.alpha.imag!r}"


@dataclass(frozen=True)
class Thermal:
    mean: float

    def __post_init__(self):
        mean = float(self.mean)
        if not (math.isfinite(mean) and mean >= 0):
            raise ValueError(f"thermal mean photon number must be >= 0, got {self.mean!r}")
        object.__setattr__(self, "mean", mean)

    @property
    def mean_photon_number(self) -> float:
        return self.mean

    def spec(self) -> str:
        return f"thermal:{self.mean!r}"


SourceState = Union[Fock, Coherent, Thermal]


def parse_source(text: str) -> SourceState:
    """Parse ``fock:<n>``, ``coherent:<re>,<im>`` or ``thermal:<mean>``."""
    kind, sep, arg = text.strip().partition(":")
    if not sep:
        raise ValueError(f"source spec {text!r} must look like kind:value")
    kind = kind.lower()
    try:
        if kind == "fock":
            return Fock(int(arg))
        if kind == "coherent":
            parts = arg.split(",")
            if len(parts) == 1:
                return Coherent(complex(float(parts[0]), 0.0))
            if len(parts) == 2:
                return Coherent(complex(float(parts[0]), float(parts[1])))
            raise ValueError("coherent amplitude takes re,im")
        if kind == "thermal":
            return Thermal(float(arg))
    except ValueError as exc:
        raise ValueError(f"bad source spec {text!r}: {exc}") from None
    raise ValueError(f"unknown source kind {kind!r} (expected fock, coherent or thermal)")


@dataclass(frozen=True)
class SlitConfiguration:
    """The set of open slits, stored in label order."""

    open_slits: tuple[str, ...]

    def __post_init__(self):
        slits = tuple(self.open_slits)
        if not slits:
            raise ValueError("at least one slit must be open")
        unknown = [s for s in slits if s not in SLIT_LABELS]
        if unknown:
            raise ValueError(f"unknown slits {unknown}; choose from {SLIT_LABELS}")
        if len(set(slits)) != len(slits):
            raise ValueError(f"duplicate slits in {slits}")
        object.__setattr__(self, "open_slits", tuple(sorted(slits, key=SLIT_LABELS.index)))

    @classmethod
    def of(cls, slits: Union[str, Iterable[str]]) -> "SlitConfiguration":
        """``SlitConfiguration.of("ac")`` opens slits a and c."""
        return cls(tuple(slits))

    @property
    def splitting_count(self) -> int:
        return len(self.open_slits)

    @property
    def name(self) -> str:
        return "".join(self.open_slits)


ALL_CONFIGURATIONS = tuple(
    SlitConfiguration.of(s) for s in ("a", "b", "c", "ab", "ac", "bc", "abc")
)


@dataclass(frozen=True)
class CorrelationMatrix:
    labels: tuple[str, ...]
    entries: np.ndarray = field(repr=False)

    def __getitem__(self, key):
        i, j = key
        if isinstance(i, str):
            i = self.labels.index(i)
        if isinstance(j, str):
            j = self.labels.index(j)
        return self.entries[i, j]

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries).real)


def split_mode_relation(n_open: int) -> np.ndarray:
    """Coefficients of the open slit modes in the source mode."""
    if n_open < 1:
        raise ValueError(f"need at least one open slit, got {n_open}")
    return np.full(n_open, 1.0 / math.sqrt(n_open))


def split_coherent(alpha: complex, n_open: int) -> np.ndarray:
    """Per-slit coherent amplitudes: ``|alpha>`` factorizes into ``|alpha/sqrt(N)>``."""
    return complex(alpha) * split_mode_relation(n_open).astype(complex)


def correlation_matrix(state: SourceState, config: SlitConfiguration) -> CorrelationMatrix:
    """``C[i, j] = <a_i^dagger a_j>`` over the open slits.

    For a P-representable state the slit modes are in the product coherent
    state ``|c_1 alpha> ... |c_N alpha>`` weighted by P(alpha), so
    ``C[i, j] = conj(c_i) c_j <|alpha|^2> = conj(c_i) c_j <n>``.
    """
    coeffs = split_mode_relation(config.splitting_count).astype(complex)
    mean = state.mean_photon_number
    size = len(coeffs)
    c = np.zeros((size, size), dtype=complex)
    for i in range(size):
        c[i, i] = mean * abs(coeffs[i]) ** 2
        for j in range(i + 1, size):
            c[i, j] = mean * coeffs[i].conjugate() * coeffs[j]
            c[j, i] = c[i, j].conjugate()
    return CorrelationMatrix(config.open_slits, c)
