import cmath

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from youngsorkin.source import (
    ALL_CONFIGURATIONS,
    Coherent,
    Fock,
    SlitConfiguration,
    Thermal,
    correlation_matrix,
    parse_source,
    split_coherent,
    split_mode_relation,
)

means = st.floats(0.0, 1e3, allow_nan=False, allow_subnormal=False)


class TestSplitting:
    def test_two_slits(self):
        np.testing.assert_allclose(split_mode_relation(2), [2**-0.5, 2**-0.5], rtol=1e-15)

    def test_one_slit(self):
        np.testing.assert_array_equal(split_mode_relation(1), [1.0])

    @pytest.mark.parametrize("n_open", [1, 2, 3])
    def test_normalized(self, n_open):
        assert np.sum(np.abs(split_mode_relation(n_open)) ** 2) == pytest.approx(1.0, abs=1e-15)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            split_mode_relation(0)

    def test_coherent_split(self):
        np.testing.assert_allclose(split_coherent(2**0.5, 2), [1.0, 1.0], rtol=1e-15)
        np.testing.assert_array_equal(split_coherent(0, 3), [0, 0, 0])

    @given(st.complex_numbers(max_magnitude=100, allow_nan=False), st.integers(1, 3))
    def test_coherent_split_preserves_mean(self, alpha, n_open):
        parts = split_coherent(alpha, n_open)
        assert np.sum(np.abs(parts) ** 2) == pytest.approx(abs(alpha) ** 2, rel=1e-12, abs=1e-12)


class TestCorrelationMatrix:
    def test_fock3_three_slits_all_ones(self):
        c = correlation_matrix(Fock(3), SlitConfiguration.of("abc"))
        np.testing.assert_allclose(c.entries, np.ones((3, 3)), atol=1e-15)

    @pytest.mark.parametrize("cfg", ALL_CONFIGURATIONS, ids=lambda c: c.name)
    def test_vacuum_is_zero(self, cfg):
        np.testing.assert_array_equal(correlation_matrix(Fock(0), cfg).entries, 0)

    def test_coherent_two_slits(self):
        c = correlation_matrix(Coherent(cmath.rect(2**0.5, 0.7)), SlitConfiguration.of("ab"))
        np.testing.assert_allclose(c.entries, np.ones((2, 2)), rtol=1e-14)
        assert c["a", "b"] == pytest.approx(1.0)

    @given(means, st.sampled_from(ALL_CONFIGURATIONS))
    def test_invariants(self, mean, cfg):
        c = correlation_matrix(Thermal(mean), cfg)
        m = c.entries
        np.testing.assert_array_equal(m, m.conj().T)
        assert np.all(m.diagonal().real >= 0)
        assert c.trace == pytest.approx(mean, rel=1e-14, abs=1e-300)
        assert np.min(np.linalg.eigvalsh(m)) >= -1e-12 * max(mean, 1.0)
        np.testing.assert_allclose(m, mean / cfg.splitting_count, rtol=1e-15)

    @given(st.integers(0, 50), st.sampled_from(ALL_CONFIGURATIONS))
    def test_source_independence(self, n, cfg):
        fock = correlation_matrix(Fock(n), cfg).entries
        coh = correlation_matrix(Coherent(cmath.rect(n**0.5, 1.1)), cfg).entries
        th = correlation_matrix(Thermal(n), cfg).entries
        np.testing.assert_allclose(coh, fock, rtol=1e-12, atol=1e-12)
        np.testing.assert_allclose(th, fock, rtol=1e-15)


class TestStates:
    def test_mean_photon_numbers(self):
        assert Fock(4).mean_photon_number == 4
        assert Coherent(2 + 0j).mean_photon_number == 4
        assert Thermal(2.5).mean_photon_number == 2.5

    @pytest.mark.parametrize("bad", [lambda: Fock(-1), lambda: Fock(1.5), lambda: Thermal(-0.1)])
    def test_invalid(self, bad):
        with pytest.raises(ValueError):
            bad()

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("fock:3", Fock(3)),
            ("coherent:1.0,0.0", Coherent(1.0)),
            ("coherent:2,-1", Coherent(2 - 1j)),
            ("thermal:4", Thermal(4.0)),
        ],
    )
    def test_parse(self, text, expected):
        state = parse_source(text)
        assert state == expected
        assert parse_source(state.spec()) == state

    @pytest.mark.parametrize("text", ["fock", "fock:x", "fock:-2", "squeezed:1", "coherent:1,2,3", "thermal:-1"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            parse_source(text)


class TestConfiguration:
    def test_canonical_order(self):
        assert SlitConfiguration.of("ca").open_slits == ("a", "c")
        assert SlitConfiguration.of("ca").name == "ac"

    @pytest.mark.parametrize("slits", ["", "aa", "abd"])
    def test_rejects(self, slits):
        with pytest.raises(ValueError):
            SlitConfiguration.of(slits)

    def test_closed_slit_absent(self):
        c = correlation_matrix(Fock(2), SlitConfiguration.of("ac"))
        assert c.entries.shape == (2, 2)
        assert c.labels == ("a", "c")
