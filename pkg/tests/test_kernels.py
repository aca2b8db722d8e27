"""Equivalence of the numba and pure-numpy kernel backends."""

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from landau_wigner import _kernels
from landau_wigner._kernels import ENV_VAR, numba_impl, numpy_impl

needs_numba = pytest.mark.skipif(numba_impl is None, reason="numba not installed")


@needs_numba
class TestEquivalence:
    @given(st.integers(0, 40), st.floats(0.0, 3.0))
    @settings(max_examples=30, deadline=None)
    def test_laguerre(self, nmax, alpha):
        x = np.linspace(0.0, 30.0, 57)
        a = numpy_impl.laguerre_table(nmax, alpha, x)
        b = numba_impl.laguerre_table(nmax, alpha, x)
        np.testing.assert_allclose(a, b, rtol=1e-12, atol=1e-12)

    @given(st.integers(0, 30))
    @settings(max_examples=20, deadline=None)
    def test_hermite(self, nmax):
        x = np.linspace(-4.0, 4.0, 33)
        np.testing.assert_allclose(numpy_impl.hermite_table(nmax, x),
                                   numba_impl.hermite_table(nmax, x), rtol=1e-12, atol=1e-12)

    @pytest.mark.parametrize("mu,kappa", [(0.25, 0.0), (1.0, 0.5), (3.0, 10.0)])
    def test_spectrum_sums(self, mu, kappa):
        a = numpy_impl.spectrum_sums(mu, kappa, 0, 50_000)
        b = numba_impl.spectrum_sums(mu, kappa, 0, 50_000)
        np.testing.assert_allclose(a, b, rtol=1e-11)
        c = numpy_impl.spectrum_sums(mu, kappa, 100, 2000)
        d = numba_impl.spectrum_sums(mu, kappa, 100, 2000)
        np.testing.assert_allclose(c, d, rtol=1e-11)

    @pytest.mark.parametrize("s,a", [(-1.5, 0.5), (0.5, 1.0), (3.0, 10.0)])
    def test_power_sum(self, s, a):
        assert numba_impl.power_sum(s, a, 1000) == pytest.approx(
            numpy_impl.power_sum(s, a, 1000), rel=1e-12)


class TestSelection:
    def test_active_backend(self):
        expected = "numba" if numba_impl is not None else "numpy"
        if os.environ.get(ENV_VAR, "").lower() == "numpy":
            expected = "numpy"
        assert _kernels.BACKEND == expected

    def test_shapes(self):
        assert _kernels.laguerre_table(3, 0.0, np.zeros((2, 2))).shape == (4, 4)
        assert _kernels.hermite_table(0, [0.1]).shape == (1, 1)
        assert numpy_impl.power_sum(1.0, 1.0, 0) == 0.0

    @pytest.mark.parametrize("flag", ["numpy", "bogus"])
    def test_env_flag(self, flag):
        env = dict(os.environ, **{ENV_VAR: flag})
        proc = subprocess.run(
            [sys.executable, "-c",
             "import landau_wigner as lw; print(lw.BACKEND);"
             "print(lw.partition_direct(1.0, 0.0).value)"],
            capture_output=True, text=True, env=env, check=False)
        if flag == "numpy":
            assert proc.returncode == 0
            backend, value = proc.stdout.split()
            assert backend == "numpy"
            assert float(value) == pytest.approx(2.6704068179663397212, rel=1e-13)
        else:
            assert proc.returncode != 0 and ENV_VAR in proc.stderr
