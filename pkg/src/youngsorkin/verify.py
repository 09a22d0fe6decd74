"""Self-check battery behind ``youngsorkin verify``.

Each check reports the largest deviation it measured against its tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import fock
from .geometry import SlitGeometry, symmetric_sweep
from .sorkin import ADJUSTED, kappa_identity, kappa_physical, normalizer_value
from .source import Fock, SlitConfiguration, correlation_matrix

TOLERANCE = 1e-12
IDENTITY_TOLERANCE = 1e-10


@dataclass(frozen=True)
class Check:
    name: str
    max_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.max_deviation <= self.tolerance)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name:<44s} max dev {self.max_deviation:.3e} (tol {self.tolerance:.0e})"


def check_identity_battery(samples: int = 10_000, seed: int = 20180101) -> Check:
    rng = np.random.default_rng(seed)
    moduli = 10.0 * np.sqrt(rng.random((samples, 3)))
    angles = rng.uniform(0.0, 2.0 * np.pi, (samples, 3))
    z = moduli * np.exp(1j * angles)
    worst = max(abs(kappa_identity(*row)) for row in z)
    return Check("kappa_S identity, random triples |z|<=10", worst, IDENTITY_TOLERANCE)


def check_oracle_agreement(nmax: int, correlation=correlation_matrix) -> list[Check]:
    labels = ("a", "b", "c")
    worst_oracle = worst_uniform = worst_trace = 0.0
    for n in range(nmax + 1):
        for n_open in (1, 2, 3):
            config = SlitConfiguration(labels[:n_open])
            analytic = correlation(Fock(n), config).entries
            brute = fock.oracle_correlation_matrix(fock.expand_fock_source(n, n_open, max(nmax, fock.DEFAULT_NMAX)))
            worst_oracle = max(worst_oracle, float(np.max(np.abs(analytic - brute))))
            worst_uniform = max(worst_uniform, float(np.max(np.abs(analytic - n / n_open))))
            worst_trace = max(worst_trace, abs(float(np.trace(brute).real) - n))
    return [
        Check(f"analytic vs Fock oracle, n<={nmax}, N=1..3", worst_oracle, TOLERANCE),
        Check("correlation entries equal <n>/N", worst_uniform, TOLERANCE),
        Check("oracle photon-number conservation", worst_trace, TOLERANCE),
    ]


def check_expansion_routes(nmax: int) -> Check:
    worst = 0.0
    for n_open in (1, 2, 3):
        u = fock.unitary_completion(n_open)
        for n in range(nmax + 1):
            direct = fock.expand_fock_source(n, n_open, max(nmax, fock.DEFAULT_NMAX))
            built = fock.build_fock_source(n, u, max(nmax, fock.DEFAULT_NMAX))
            keys = set(direct.amplitudes) | set(built.amplitudes)
            for k in keys:
                worst = max(worst, abs(direct.amplitudes.get(k, 0) - built.amplitudes.get(k, 0)))
    return Check("multinomial expansion vs (s^dag)^n|0>", worst, TOLERANCE)


def check_unitary_completion() -> Check:
    worst = max(fock.unitarity_defect(fock.unitary_completion(n)) for n in (1, 2, 3))
    return Check("U(N) completion unitary, N=1..3", worst, TOLERANCE)


def check_commutators(seed: int = 7) -> Check:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for n_modes in (2, 3):
        state = fock.random_state(n_modes, 3, rng)
        for i in range(n_modes):
            for j in range(n_modes):
                worst = max(worst, fock.commutator_defect(state, i, j))
    return Check("[a_i, a_j^dag] = delta_ij on random states", worst, TOLERANCE)


def check_adjusted_nullity(geom: SlitGeometry | None = None) -> Check:
    geom = geom or SlitGeometry.three_slit(0.13, 1.25, 0.05)
    d = symmetric_sweep(0.5, 2001) * geom.screen_distance
    state = Fock(1)
    kappa = kappa_physical(geom, state, d, ADJUSTED)
    worst = float(np.max(np.abs(kappa))) / normalizer_value(geom, state, ADJUSTED)
    return Check("adjusted kappa(d)/P_abc(0), n1=1/3 n2=2/3", worst, TOLERANCE)


def run_checks(nmax: int = 4, correlation: Callable = correlation_matrix) -> list[Check]:
    """All checks. ``correlation`` is injectable so tests can plant a fault."""
    if nmax < 0:
        raise ValueError("nmax must be non-negative")
    return [
        check_identity_battery(),
        *check_oracle_agreement(nmax, correlation),
        check_expansion_routes(nmax),
        check_unitary_completion(),
        check_commutators(),
        check_adjusted_nullity(),
    ]
