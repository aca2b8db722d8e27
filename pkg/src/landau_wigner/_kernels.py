"""Hot numerical kernels with a numba path and a pure-numpy fallback.

The kernels are small loops that dominate the cost of grid evaluations and
long spectral sums:

* ``laguerre_table`` -- generalized Laguerre polynomials ``L_k^{(alpha)}(x)``
  for all ``k <= nmax`` on an array of points (three-term recurrence);
* ``hermite_table`` -- physicists' Hermite polynomials on an array of points;
* ``spectrum_sums`` -- weighted Boltzmann sums over the levels
  ``n0 <= n < n1`` of the spectrum ``sqrt(kappa + n)``;
* ``power_sum`` -- ``sum_k (a + k)**(-s)`` used by the zeta routines (both
  backends share the vectorized numpy version, which is faster here).

The backend is chosen once at import time from the environment variable
``LANDAU_WIGNER_BACKEND`` (``"numba"`` or ``"numpy"``).  When the variable is
unset numba is used if it can be imported.  Both implementations are always
reachable as :data:`numba_impl` / :data:`numpy_impl` so that tests and the
benchmark can compare them directly.
"""

from __future__ import annotations

import math
import os
from types import SimpleNamespace

import numpy as np

ENV_VAR = "LANDAU_WIGNER_BACKEND"


# ---------------------------------------------------------------------------
# pure numpy implementations
# ---------------------------------------------------------------------------

def _laguerre_table_np(nmax: int, alpha: float, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64).ravel()
    out = np.empty((nmax + 1, x.size))
    out[0] = 1.0
    if nmax >= 1:
        out[1] = 1.0 + alpha - x
    for k in range(1, nmax):
        out[k + 1] = ((2 * k + 1 + alpha - x) * out[k] - (k + alpha) * out[k - 1]) / (k + 1)
    return out


def _hermite_table_np(nmax: int, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64).ravel()
    out = np.empty((nmax + 1, x.size))
    out[0] = 1.0
    if nmax >= 1:
        out[1] = 2.0 * x
    for k in range(1, nmax):
        out[k + 1] = 2.0 * x * out[k] - 2.0 * k * out[k - 1]
    return out


def _spectrum_sums_np(mu: float, kappa: float, n0: int, n1: int) -> np.ndarray:
    """Return the seven sums documented in :func:`spectrum_sums`."""
    res = np.zeros(7)
    shift = math.sqrt(kappa)
    chunk = 1 << 20
    for start in range(n0, n1, chunk):
        stop = min(n1, start + chunk)
        n = np.arange(start, stop + 1, dtype=np.float64)
        e = np.sqrt(kappa + n)
        p = np.exp(-mu * (e - shift))
        pc, ec = p[:-1], e[:-1]
        res[0] += pc.sum()
        res[1] += (ec * pc).sum()
        res[2] += ((kappa + n[:-1]) * pc).sum()
        res[3] += (pc * pc).sum()
        res[4] += (pc * p[1:]).sum()
        res[5] += (ec * pc * pc).sum()
        res[6] += ((kappa + n[:-1]) * pc * pc).sum()
    return res


def _power_sum_np(s: float, a: float, n: int) -> float:
    if n <= 0:
        return 0.0
    k = np.arange(n, dtype=np.float64)
    return float(np.sum((a + k) ** (-s)))


numpy_impl = SimpleNamespace(
    name="numpy",
    laguerre_table=_laguerre_table_np,
    hermite_table=_hermite_table_np,
    spectrum_sums=_spectrum_sums_np,
    power_sum=_power_sum_np,
)


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

def _build_numba():
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - depends on environment
        return None

    @njit(cache=True)
    def laguerre_loop(nmax, alpha, x):
        m = x.size
        out = np.empty((nmax + 1, m))
        for j in range(m):
            out[0, j] = 1.0
        if nmax >= 1:
            for j in range(m):
                out[1, j] = 1.0 + alpha - x[j]
        for k in range(1, nmax):
            for j in range(m):
                out[k + 1, j] = ((2 * k + 1 + alpha - x[j]) * out[k, j]
                                 - (k + alpha) * out[k - 1, j]) / (k + 1)
        return out

    @njit(cache=True)
    def hermite_loop(nmax, x):
        m = x.size
        out = np.empty((nmax + 1, m))
        for j in range(m):
            out[0, j] = 1.0
        if nmax >= 1:
            for j in range(m):
                out[1, j] = 2.0 * x[j]
        for k in range(1, nmax):
            for j in range(m):
                out[k + 1, j] = 2.0 * x[j] * out[k, j] - 2.0 * k * out[k - 1, j]
        return out

    @njit(cache=True)
    def spectrum_loop(mu, kappa, n0, n1):
        res = np.zeros(7)
        shift = math.sqrt(kappa)
        e = math.sqrt(kappa + n0)
        p = math.exp(-mu * (e - shift))
        for n in range(n0, n1):
            e_next = math.sqrt(kappa + n + 1)
            p_next = math.exp(-mu * (e_next - shift))
            lev = kappa + n
            res[0] += p
            res[1] += e * p
            res[2] += lev * p
            res[3] += p * p
            res[4] += p * p_next
            res[5] += e * p * p
            res[6] += lev * p * p
            e = e_next
            p = p_next
        return res

    def laguerre_table(nmax, alpha, x):
        return laguerre_loop(int(nmax), float(alpha),
                             np.ascontiguousarray(np.asarray(x, dtype=np.float64).ravel()))

    def hermite_table(nmax, x):
        return hermite_loop(int(nmax),
                            np.ascontiguousarray(np.asarray(x, dtype=np.float64).ravel()))

    def spectrum_sums(mu, kappa, n0, n1):
        return spectrum_loop(float(mu), float(kappa), int(n0), int(n1))

    return SimpleNamespace(
        name="numba",
        laguerre_table=laguerre_table,
        hermite_table=hermite_table,
        spectrum_sums=spectrum_sums,
        # numpy's vectorized pow beats a scalar compiled loop here
        power_sum=_power_sum_np,
    )


numba_impl = _build_numba()


def _select():
    requested = os.environ.get(ENV_VAR, "").strip().lower()
    if requested == "numpy":
        return numpy_impl
    if requested not in ("", "numba"):
        raise ImportError(f"{ENV_VAR} must be 'numba' or 'numpy', got {requested!r}")
    if numba_impl is None:
        if requested == "numba":
            raise ImportError(f"{ENV_VAR}=numba requested but numba is not installed")
        return numpy_impl
    return numba_impl


_active = _select()
BACKEND: str = _active.name


def laguerre_table(nmax: int, alpha: float, x) -> np.ndarray:
    """Generalized Laguerre values ``L_k^{(alpha)}(x)`` for ``k = 0..nmax``.

    Parameters
    ----------
    nmax : int
        Highest degree (``>= 0``).
    alpha : float
        Laguerre parameter.
    x : array_like
        Evaluation points (flattened).

    Returns
    -------
    numpy.ndarray
        Array of shape ``(nmax + 1, x.size)``.
    """
    return _active.laguerre_table(nmax, alpha, x)


def hermite_table(nmax: int, x) -> np.ndarray:
    """Physicists' Hermite values ``H_k(x)`` for ``k = 0..nmax``."""
    return _active.hermite_table(nmax, x)


def spectrum_sums(mu: float, kappa: float, n0: int, n1: int) -> np.ndarray:
    """Scaled Boltzmann sums over levels ``n0 <= n < n1``.

    With ``e_n = sqrt(kappa + n)`` and ``p_n = exp(-mu (e_n - sqrt(kappa)))``
    the entries are ``sum p_n``, ``sum e_n p_n``, ``sum e_n^2 p_n``,
    ``sum p_n^2``, ``sum p_n p_{n+1}``, ``sum e_n p_n^2`` and
    ``sum e_n^2 p_n^2``.
    """
    return _active.spectrum_sums(mu, kappa, n0, n1)


def power_sum(s: float, a: float, n: int) -> float:
    """Finite sum ``sum_{k<n} (a + k)**(-s)``."""
    return _active.power_sum(s, a, n)
