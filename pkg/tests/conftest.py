import numpy as np
import pytest

from youngsorkin.geometry import SlitGeometry, symmetric_sweep

# lambda = 0.05 m, l = 0.13 m, D = 1.25 m
FIG2 = dict(spacing=0.13, screen_distance=1.25, wavelength=0.05)


@pytest.fixture
def fig2_geometry():
    return SlitGeometry.three_slit(**FIG2)


@pytest.fixture
def fig2_sweep(fig2_geometry):
    """2001 detector positions over d/D in [-0.5, 0.5], in meters."""
    return symmetric_sweep(0.5, 2001) * fig2_geometry.screen_distance


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one acceptance line, then assert it."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, [])

    def check(label: str, ok: bool, detail: str):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}"
        lines.append(line)
        print(line)
        assert ok, line

    return check


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
