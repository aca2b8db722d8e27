"""Canonical-ensemble thermodynamics of the Landau spectrum ``sqrt(kappa + n)``.

All quantities are dimensionless: energies in units of ``sqrt(2 eB)`` and
``mu = sqrt(2 eB) / T``.  The partition function

.. math::

    Z(\\mu) = \\sum_{n \\ge 0} e^{-\\mu \\sqrt{\\kappa + n}}

is computed two ways:

* directly, summing until an integral bound on the tail is below the
  requested relative tolerance (sums are scaled by ``exp(mu sqrt(kappa))``
  so that large ``mu`` does not underflow);
* from its Hurwitz-zeta expansion

  .. math::

      Z = \\sum_{m=0}^{M} \\zeta(-m/2, \\kappa) \\frac{(-\\mu)^m}{m!}
          + \\frac{2}{\\mu^2},

  validated for ``mu <= 2``.  For ``kappa = 0`` the ``n = 0`` term is split
  off: ``zeta(-m/2, 0) := zeta(-m/2, 1) + delta_{m0}``.

Internal energy ``U = -d ln Z / d mu``, specific heat
``C = mu^2 (<E^2> - U^2)``, free energy ``F = -ln Z / mu`` and entropy
``S = ln Z + mu U`` follow from weighted sums (direct path) or term-wise
differentiated series (zeta path).  Physical values are obtained by scaling
energies with ``c sqrt(2 eB hbar)``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Literal

import numpy as np

from . import _kernels
from .errors import DomainError, NumericalFailure
from .specfun import hurwitz_zeta

__all__ = [
    "ZETA_WINDOW",
    "ZetaWindowWarning",
    "ThermalSpec",
    "DirectSums",
    "PartitionResult",
    "direct_sums",
    "partition_direct",
    "partition_zeta",
    "zeta_series",
    "internal_energy",
    "specific_heat",
    "free_energy",
    "entropy_thermo",
    "thermal_purity",
    "thermal_entropy_ps",
    "thermal_entropy_ps_without_p1",
    "thermal_entropy_sp",
    "thermal_concurrence_sq",
    "thermal_mutual_info",
    "ThermalRow",
    "evaluate",
]

#: largest mu for which the zeta expansion is validated (with M = 40)
ZETA_WINDOW = 2.0
DEFAULT_ORDER = 40
DEFAULT_RTOL = 1e-15
MAX_TERMS = 400_000_000


class ZetaWindowWarning(UserWarning):
    """The zeta expansion was requested outside its validated window."""


def _check(mu: float, kappa: float) -> tuple[float, float]:
    mu, kappa = float(mu), float(kappa)
    if not (math.isfinite(mu) and mu > 0):
        raise DomainError(f"mu must be positive and finite, got {mu}")
    if not (math.isfinite(kappa) and kappa >= 0):
        raise DomainError(f"kappa must be nonnegative and finite, got {kappa}")
    return mu, kappa


# ---------------------------------------------------------------------------
# direct summation
# ---------------------------------------------------------------------------

def _tail_bound(mu: float, kappa: float, N: int, j: int, shift: float = 0.0) -> float:
    """Bound on ``sum_{n>N} (kappa+n)^{j/2} exp(-mu (sqrt(kappa+n) - shift))``.

    Uses ``sum_{n>N} f(n) <= int_N^inf f`` for decreasing ``f``:
    with ``v = sqrt(kappa + x)`` the integral is
    ``2 int_{v0}^inf v^{j+1} e^{-mu v} dv = 2 (j+1)! e^{-mu v0} sum_k (mu v0)^k / k! / mu^{j+2}``.
    Returns ``inf`` where the summand is not yet decreasing.
    """
    v0 = math.sqrt(kappa + N)
    if mu * v0 <= j:
        return math.inf
    x = mu * v0
    poly = math.fsum(x ** k / math.factorial(k) for k in range(j + 2))
    return 2.0 * math.factorial(j + 1) * poly * math.exp(-x + mu * shift) / mu ** (j + 2)


@dataclass(frozen=True)
class DirectSums:
    """Scaled spectral sums ``sum w_n p_n`` with ``p_n = exp(-mu (e_n - sqrt(kappa)))``.

    Attributes
    ----------
    z0, z1, z2 : float
        ``sum p_n``, ``sum e_n p_n``, ``sum e_n^2 p_n``.
    q0, q1, q2 : float
        The same sums with ``p_n^2`` (i.e. at ``2 mu``).
    neighbor : float
        ``sum_{n>=0} p_n p_{n+1}``.
    p1 : float
        Scaled weight of the first excited level.
    n_terms : int
        Number of levels summed.
    rel_tail : float
        Largest relative tail bound over the sums.
    """

    mu: float
    kappa: float
    z0: float
    z1: float
    z2: float
    q0: float
    q1: float
    q2: float
    neighbor: float
    p1: float
    n_terms: int
    rel_tail: float

    @property
    def shift(self) -> float:
        return math.sqrt(self.kappa)

    @property
    def log_z(self) -> float:
        return math.log(self.z0) - self.mu * self.shift

    @property
    def energy(self) -> float:
        return self.z1 / self.z0

    @property
    def energy_sq(self) -> float:
        return self.z2 / self.z0


def direct_sums(mu: float, kappa: float, rtol: float = DEFAULT_RTOL,
                max_terms: int = MAX_TERMS) -> DirectSums:
    """Accumulate all direct spectral sums until the tail bounds reach ``rtol``.

    Results are memoized (they are immutable), so repeated thermodynamic
    queries at one grid point sum the spectrum once.

    Raises
    ------
    NumericalFailure
        If ``rtol`` is not reached within ``max_terms`` levels; the partial
        sum and tail bound are attached.
    """
    mu, kappa = _check(mu, kappa)
    return _direct_sums(mu, kappa, float(rtol), int(max_terms))


@lru_cache(maxsize=512)
def _direct_sums(mu: float, kappa: float, rtol: float, max_terms: int) -> DirectSums:
    shift = math.sqrt(kappa)
    acc = np.zeros(7)
    n0, chunk = 0, 4096
    while True:
        n1 = min(n0 + chunk, max_terms)
        acc += _kernels.spectrum_sums(mu, kappa, n0, n1)
        n0 = n1
        N = n0 - 1
        tails = [
            _tail_bound(mu, kappa, N, 0, shift) / acc[0],
            _tail_bound(mu, kappa, N, 1, shift) / acc[1] if acc[1] > 0 else math.inf,
            _tail_bound(mu, kappa, N, 2, shift) / acc[2] if acc[2] > 0 else math.inf,
            _tail_bound(2 * mu, kappa, N, 0, shift) / acc[3],
        ]
        rel = max(tails)
        if rel <= rtol:
            break
        if n0 >= max_terms:
            raise NumericalFailure(
                f"direct sum did not reach rtol={rtol:g} within {max_terms} levels",
                estimate=float(acc[0] * math.exp(-mu * shift)), error_bound=rel)
        chunk *= 2
    p1 = math.exp(-mu * (math.sqrt(kappa + 1.0) - shift))
    a = [float(v) for v in acc]
    return DirectSums(mu, kappa, a[0], a[1], a[2], a[3], a[5], a[6], a[4], p1, n0, float(rel))


@dataclass(frozen=True)
class PartitionResult:
    """Partition function value with the achieved tail bound."""

    value: float
    tail_bound: float
    n_terms: int

    def __float__(self) -> float:
        return self.value


def partition_direct(mu: float, kappa: float, tol: float = 1e-14) -> PartitionResult:
    """Direct sum ``sum_n exp(-mu sqrt(kappa + n))``.

    Parameters
    ----------
    mu, kappa : float
        Inverse temperature (``> 0``) and gap (``>= 0``).
    tol : float
        Relative tolerance on the integral-bounded tail.

    Returns
    -------
    PartitionResult
        ``value`` and absolute ``tail_bound``.

    Examples
    --------
    >>> round(partition_direct(1.0, 0.0).value, 9)
    2.670406818
    """
    sums = direct_sums(mu, kappa, rtol=tol)
    scale = math.exp(-sums.mu * sums.shift)
    value = sums.z0 * scale
    return PartitionResult(value, sums.rel_tail * value, sums.n_terms)


# ---------------------------------------------------------------------------
# zeta expansion
# ---------------------------------------------------------------------------

def zeta_series(mu: float, kappa: float, offset: int, order: int = DEFAULT_ORDER) -> float:
    """``sum_{m=0}^{M} zeta(-(m + offset)/2, a) (-mu)^m / m!`` with ``a = kappa``
    (``a = 1`` when ``kappa = 0``)."""
    a = kappa if kappa > 0 else 1.0
    total = 0.0
    term_scale = 1.0
    for m in range(order + 1):
        if m:
            term_scale *= -mu / m
        total += hurwitz_zeta(-(m + offset) / 2.0, a) * term_scale
    return total


def _zeta_window(mu: float, fallback: bool) -> bool:
    """Return True when the direct path must be used instead."""
    if mu <= ZETA_WINDOW:
        return False
    warnings.warn(f"zeta expansion requested at mu={mu:g} > {ZETA_WINDOW:g}; "
                  + ("using the direct sum" if fallback else "result not validated"),
                  ZetaWindowWarning, stacklevel=3)
    return fallback


def partition_zeta(mu: float, kappa: float, M: int = DEFAULT_ORDER,
                   fallback: bool = True) -> float:
    """Hurwitz-zeta expansion of the partition function.

    Parameters
    ----------
    mu, kappa : float
        Inverse temperature and gap.
    M : int
        Expansion order.
    fallback : bool
        Outside ``mu <= 2`` emit :class:`ZetaWindowWarning` and return the
        direct sum (``True``) or the raw series (``False``).
    """
    mu, kappa = _check(mu, kappa)
    if int(M) < 1:
        raise DomainError("expansion order M must be >= 1")
    if _zeta_window(mu, fallback):
        return partition_direct(mu, kappa).value
    value = zeta_series(mu, kappa, 0, int(M)) + 2.0 / mu ** 2
    if kappa == 0.0:
        value += 1.0
    return value


# ---------------------------------------------------------------------------
# thermodynamic functions
# ---------------------------------------------------------------------------

Method = Literal["direct", "zeta"]


def _use_zeta(method: str, mu: float) -> bool:
    if method not in ("direct", "zeta"):
        raise DomainError(f"method must be 'direct' or 'zeta', got {method!r}")
    return method == "zeta" and not _zeta_window(mu, True)


def internal_energy(mu: float, kappa: float, method: Method = "direct",
                    M: int = DEFAULT_ORDER) -> float:
    """``U = -d ln Z / d mu`` (dimensionless)."""
    mu, kappa = _check(mu, kappa)
    if _use_zeta(method, mu):
        z = partition_zeta(mu, kappa, M)
        return (zeta_series(mu, kappa, 1, M) + 4.0 / mu ** 3) / z
    return direct_sums(mu, kappa).energy


def specific_heat(mu: float, kappa: float, method: Method = "direct",
                  M: int = DEFAULT_ORDER) -> float:
    """``C = -mu^2 dU/dmu = mu^2 (<E^2> - U^2)``."""
    mu, kappa = _check(mu, kappa)
    if _use_zeta(method, mu):
        z = partition_zeta(mu, kappa, M)
        u = (zeta_series(mu, kappa, 1, M) + 4.0 / mu ** 3) / z
        e2 = (zeta_series(mu, kappa, 2, M) + 12.0 / mu ** 4) / z
        return mu * mu * (e2 - u * u)
    sums = direct_sums(mu, kappa)
    u = sums.energy
    return mu * mu * (sums.energy_sq - u * u)


def _log_z(mu: float, kappa: float, method: str, M: int) -> float:
    if _use_zeta(method, mu):
        return math.log(partition_zeta(mu, kappa, M))
    return direct_sums(mu, kappa).log_z


def free_energy(mu: float, kappa: float, method: Method = "direct",
                M: int = DEFAULT_ORDER) -> float:
    """``F = -ln Z / mu``."""
    mu, kappa = _check(mu, kappa)
    return -_log_z(mu, kappa, method, M) / mu


def entropy_thermo(mu: float, kappa: float, method: Method = "direct",
                   M: int = DEFAULT_ORDER) -> float:
    """``S = mu^2 dF/dmu = ln Z + mu U``."""
    mu, kappa = _check(mu, kappa)
    return _log_z(mu, kappa, method, M) + mu * internal_energy(mu, kappa, method, M)


def thermal_purity(mu: float, kappa: float) -> float:
    """Purity ``Z(2 mu) / Z(mu)^2`` of the canonical ensemble (direct path)."""
    sums = direct_sums(mu, kappa)
    return sums.q0 / sums.z0 ** 2


# ---------------------------------------------------------------------------
# kappa = 0 information closed forms
# ---------------------------------------------------------------------------

def thermal_entropy_ps(mu: float) -> float:
    """Phase-space linear entropy of the ``kappa = 0`` ensemble.

    ``1 - [Z(2mu)/2 + p0^2/2 + p0 p1/2 + (1/2) sum_{n>=0} p_n p_{n+1}] / Z^2``
    with ``p_n = exp(-mu sqrt(n))`` and ground normalization ``eta_0 = 1``.
    """
    s = direct_sums(mu, 0.0)
    num = 0.5 * s.q0 + 0.5 + 0.5 * s.p1 + 0.5 * s.neighbor
    return 1.0 - num / s.z0 ** 2


def thermal_entropy_ps_without_p1(mu: float) -> float:
    """Variant of :func:`thermal_entropy_ps` without the ``p0 p1 / 2`` term.

    Kept for comparison: it differs from the exact ensemble value by
    ``p0 p1 / (2 Z^2)``.
    """
    s = direct_sums(mu, 0.0)
    return 1.0 - (0.5 * s.q0 + 0.5 + 0.5 * s.neighbor) / s.z0 ** 2


def thermal_entropy_sp(mu: float) -> float:
    """Spin-parity linear entropy ``(1 - p0^2 / Z^2) / 2`` (``kappa = 0``)."""
    s = direct_sums(mu, 0.0)
    return 0.5 * (1.0 - 1.0 / s.z0 ** 2)


def thermal_concurrence_sq(mu: float) -> float:
    """Ensemble concurrence ``(Z - p0) / (2 Z)`` (``kappa = 0``)."""
    s = direct_sums(mu, 0.0)
    return (s.z0 - 1.0) / (2.0 * s.z0)


def thermal_mutual_info(mu: float) -> float:
    """``I_ps + I_sp - (1 - P)`` from the closed forms (``kappa = 0``)."""
    return thermal_entropy_ps(mu) + thermal_entropy_sp(mu) - (1.0 - thermal_purity(mu, 0.0))


# ---------------------------------------------------------------------------
# grid rows
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ThermalSpec:
    """Inputs of one thermodynamic evaluation.

    ``method = "zeta"`` is validated only for ``mu <= 2``; beyond that the
    direct sum is used and the flag ``zeta_fallback`` is set.
    """

    mu: float
    kappa: float = 0.0
    M: int = DEFAULT_ORDER
    method: Method = "direct"

    def __post_init__(self):
        _check(self.mu, self.kappa)
        if int(self.M) < 1:
            raise DomainError("expansion order M must be >= 1")
        if self.method not in ("direct", "zeta"):
            raise DomainError("method must be 'direct' or 'zeta'")

    @property
    def flags(self) -> tuple[str, ...]:
        if self.method == "zeta" and self.mu > ZETA_WINDOW:
            return ("zeta_fallback",)
        return ()


@dataclass(frozen=True)
class ThermalRow:
    """One grid point of thermodynamic and information data."""

    mu: float
    kappa: float
    Z_direct: float
    Z_zeta: float
    U: float
    C: float
    F: float
    S: float
    purity: float
    I_ps: float
    I_sp: float
    C2: float
    flags: tuple[str, ...] = field(default=())

    FIELDS = ("mu", "kappa", "Z_direct", "Z_zeta", "U", "C", "F", "S",
              "purity", "I_ps", "I_sp", "C2", "flags")


def evaluate(spec: ThermalSpec) -> ThermalRow:
    """Evaluate all columns for one :class:`ThermalSpec`.

    Information columns are closed forms and are only available for
    ``kappa = 0`` (``nan`` otherwise); ``Z_zeta`` is ``nan`` outside the
    zeta window.
    """
    mu, kappa = spec.mu, spec.kappa
    flags = list(spec.flags)
    sums = direct_sums(mu, kappa)
    z_direct = sums.z0 * math.exp(-mu * sums.shift)
    if mu <= ZETA_WINDOW:
        z_zeta = partition_zeta(mu, kappa, spec.M)
    else:
        z_zeta = math.nan
        flags.append("zeta_outside_window")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ZetaWindowWarning)
        u = internal_energy(mu, kappa, spec.method, spec.M)
        c = specific_heat(mu, kappa, spec.method, spec.M)
        f = free_energy(mu, kappa, spec.method, spec.M)
        s = entropy_thermo(mu, kappa, spec.method, spec.M)
    purity = sums.q0 / sums.z0 ** 2
    if kappa == 0.0:
        i_ps, i_sp, c2 = thermal_entropy_ps(mu), thermal_entropy_sp(mu), thermal_concurrence_sq(mu)
    else:
        i_ps = i_sp = c2 = math.nan
    return ThermalRow(mu, kappa, z_direct, z_zeta, u, c, f, s, purity, i_ps, i_sp, c2,
                      tuple(dict.fromkeys(flags)))
