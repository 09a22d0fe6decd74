"""Brute-force truncated multimode Fock space.

States are sparse dictionaries from occupation tuples ``(k_1, ..., k_N)`` to
complex amplitudes. Ladder operators act on the occupation basis directly, so
moments computed here do not share any code path with the analytic
correlation matrix in :mod:`youngsorkin.source`.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

DEFAULT_NMAX = 8


@dataclass
class FockStateVector:
    n_modes: int
    n_max: int = DEFAULT_NMAX
    amplitudes: dict[tuple[int, ...], complex] = field(default_factory=dict)

    def norm_squared(self) -> float:
        return math.fsum(abs(a) ** 2 for a in self.amplitudes.values())

    def total_photons(self) -> set[int]:
        return {sum(k) for k, a in self.amplitudes.items() if a != 0}

    def copy(self) -> "FockStateVector":
        return FockStateVector(self.n_modes, self.n_max, dict(self.amplitudes))


def vacuum(n_modes: int, n_max: int = DEFAULT_NMAX) -> FockStateVector:
    return FockStateVector(n_modes, n_max, {(0,) * n_modes: 1.0 + 0j})


def annihilate(state: FockStateVector, mode: int) -> FockStateVector:
    out: dict[tuple[int, ...], complex] = {}
    for occ, amp in state.amplitudes.items():
        k = occ[mode]
        if k == 0:
            continue
        new = occ[:mode] + (k - 1,) + occ[mode + 1:]
        out[new] = out.get(new, 0j) + math.sqrt(k) * amp
    return FockStateVector(state.n_modes, state.n_max, out)


def create(state: FockStateVector, mode: int) -> FockStateVector:
    out: dict[tuple[int, ...], complex] = {}
    for occ, amp in state.amplitudes.items():
        if sum(occ) + 1 > state.n_max:
            raise ValueError(f"creation would exceed truncation n_max={state.n_max}")
        k = occ[mode]
        new = occ[:mode] + (k + 1,) + occ[mode + 1:]
        out[new] = out.get(new, 0j) + math.sqrt(k + 1) * amp
    return FockStateVector(state.n_modes, state.n_max, out)


def inner(bra: FockStateVector, ket: FockStateVector) -> complex:
    """``<bra|ket>``."""
    return sum(
        (amp.conjugate() * ket.amplitudes[occ] for occ, amp in bra.amplitudes.items() if occ in ket.amplitudes),
        0j,
    )


def add(x: FockStateVector, y: FockStateVector, scale: complex = 1.0) -> FockStateVector:
    """``x + scale * y``."""
    out = dict(x.amplitudes)
    for occ, amp in y.amplitudes.items():
        out[occ] = out.get(occ, 0j) + scale * amp
    return FockStateVector(x.n_modes, x.n_max, out)


def _compositions(total: int, parts: int):
    """All tuples of ``parts`` non-negative integers summing to ``total``."""
    for cut in itertools.combinations(range(total + parts - 1), parts - 1):
        bounds = (-1,) + cut + (total + parts - 1,)
        yield tuple(bounds[i + 1] - bounds[i] - 1 for i in range(parts))


def expand_fock_source(n: int, n_open: int, n_max: int = DEFAULT_NMAX) -> FockStateVector:
    """Source Fock state ``|n>_s`` written in the slit-mode occupation basis.

    Amplitude of ``(k_1, ..., k_N)`` is ``sqrt(n! / prod k_i!) / sqrt(N^n)``;
    the integer ratio is formed exactly before the square root.
    """
    if n < 0:
        raise ValueError(f"photon number must be non-negative, got {n}")
    if n > n_max:
        raise ValueError(f"n={n} exceeds truncation n_max={n_max}")
    if n_open < 1:
        raise ValueError(f"need at least one mode, got {n_open}")
    amps = {}
    for occ in _compositions(n, n_open):
        multinomial = math.factorial(n)
        for k in occ:
            multinomial //= math.factorial(k)
        amps[occ] = complex(math.sqrt(multinomial / n_open**n))
    return FockStateVector(n_open, n_max, amps)


def apply_source_creation(state: FockStateVector, coefficients) -> FockStateVector:
    """Apply ``sum_i c_i a_i^dagger`` to ``state``."""
    out = FockStateVector(state.n_modes, state.n_max)
    for i, c in enumerate(coefficients):
        if c != 0:
            out = add(out, create(state, i), c)
    return out


def build_fock_source(n: int, transform: np.ndarray, n_max: int = DEFAULT_NMAX) -> FockStateVector:
    """``(s^dagger)^n |0> / sqrt(n!)`` built by repeated creation operators.

    ``transform`` is the mode transform with ``s = sum_i U[0, i] a_i``, so
    ``s^dagger = sum_i conj(U[0, i]) a_i^dagger``. Independent route to
    :func:`expand_fock_source`.
    """
    if n > n_max:
        raise ValueError(f"n={n} exceeds truncation n_max={n_max}")
    first_row = np.asarray(transform)[0]
    state = vacuum(len(first_row), n_max)
    for _ in range(n):
        state = apply_source_creation(state, np.conj(first_row))
    scale = 1.0 / math.sqrt(math.factorial(n))
    state.amplitudes = {k: a * scale for k, a in state.amplitudes.items()}
    return state


def oracle_expectation(state: FockStateVector, i: int, j: int) -> complex:
    """``<psi| a_i^dagger a_j |psi>`` as the overlap of ``a_i psi`` with ``a_j psi``."""
    return inner(annihilate(state, i), annihilate(state, j))


def oracle_correlation_matrix(state: FockStateVector) -> np.ndarray:
    size = state.n_modes
    c = np.zeros((size, size), dtype=complex)
    for i in range(size):
        for j in range(size):
            c[i, j] = oracle_expectation(state, i, j)
    return c


def unitary_completion(n_open: int) -> np.ndarray:
    """Unitary whose first row is the source mode, the rest local vacuum modes.

    Uses the discrete Fourier matrix ``U[m, i] = exp(-2 pi i m i / N) / sqrt(N)``.
    For ``N = 2`` this is ``[[1, 1], [1, -1]] / sqrt(2)``.
    """
    if n_open < 1:
        raise ValueError(f"need at least one mode, got {n_open}")
    u = np.empty((n_open, n_open), dtype=complex)
    for m in range(n_open):
        for i in range(n_open):
            u[m, i] = cmath.exp(-2j * math.pi * ((m * i) % n_open) / n_open)
    u /= math.sqrt(n_open)
    # exact +-1 entries for N=2 instead of exp(-i pi) rounding
    return np.where(np.abs(u.imag) < 1e-15, u.real, u).astype(complex)


def unitarity_defect(u: np.ndarray) -> float:
    return float(np.max(np.abs(u @ u.conj().T - np.eye(len(u)))))


def commutator_defect(state: FockStateVector, i: int, j: int) -> float:
    """Max amplitude of ``(a_i a_j^dagger - a_j^dagger a_i - delta_ij) psi``."""
    lhs = annihilate(create(state, j), i)
    rhs = create(annihilate(state, i), j)
    diff = add(lhs, rhs, -1.0)
    if i == j:
        diff = add(diff, state, -1.0)
    return max((abs(a) for a in diff.amplitudes.values()), default=0.0)


def random_state(n_modes: int, n_total_max: int, rng: np.random.Generator, n_max: int = DEFAULT_NMAX) -> FockStateVector:
    """Normalized random superposition over all occupations with total <= n_total_max."""
    amps = {}
    for total in range(n_total_max + 1):
        for occ in _compositions(total, n_modes):
            amps[occ] = complex(rng.normal(), rng.normal())
    norm = math.sqrt(math.fsum(abs(a) ** 2 for a in amps.values()))
    return FockStateVector(n_modes, n_max, {k: a / norm for k, a in amps.items()})
