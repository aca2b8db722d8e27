"""Special functions: Laguerre/Hermite polynomials, Bernoulli polynomials and
the Hurwitz zeta function with its analytic continuation.

The Hurwitz zeta function ``zeta(s, a) = sum_{n>=0} (a + n)**(-s)`` is
evaluated in two independent ways:

``euler_maclaurin`` (production)
    Euler--Maclaurin summation with a shift ``N`` and ``p`` Bernoulli
    corrections.  For strongly negative ``s`` with small ``a`` the
    Euler--Maclaurin remainder cannot be made small in double precision, and
    Hurwitz's Fourier series for ``0 < a <= 1`` (followed by the exact
    recurrence ``zeta(s, a + 1) = zeta(s, a) - a**(-s)``) is used instead.

``hasse_series`` (oracle)
    Hasse's globally convergent double series

    .. math::

        \\zeta(s, a) = \\frac{1}{s-1} \\sum_{n \\ge 0} \\frac{1}{n+1}
        \\sum_{k=0}^{n} (-1)^k \\binom{n}{k} (a + k)^{1-s},

    evaluated in extended-precision decimal arithmetic because the inner
    alternating sums cancel catastrophically.  The argument is first shifted
    to ``a >= 10`` (exactly, by a finite sum) where the series converges
    geometrically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Literal

import numpy as np

from . import _kernels
from .errors import DomainError, PoleError

__all__ = [
    "laguerre",
    "genlaguerre",
    "laguerre_deriv",
    "hermite",
    "gamma_residue",
    "bernoulli_number",
    "bernoulli_poly",
    "ZetaMethod",
    "hurwitz_zeta",
    "riemann_zeta",
    "zeta_residue_check",
    "residue_extrapolate",
]


def _as_points(x):
    arr = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise DomainError("special functions require finite arguments")
    return arr


def _finish(values: np.ndarray, shape):
    if shape == ():
        return float(values[0])
    return values.reshape(shape)


# ---------------------------------------------------------------------------
# orthogonal polynomials
# ---------------------------------------------------------------------------

def genlaguerre(n: int, alpha: float, x):
    """Generalized Laguerre polynomial ``L_n^{(alpha)}(x)``.

    Parameters
    ----------
    n : int
        Degree; ``n = -1`` returns zeros.
    alpha : float
        Parameter of the polynomial family.
    x : float or array_like
        Finite evaluation points.

    Returns
    -------
    float or numpy.ndarray
        Same shape as ``x``.
    """
    n = int(n)
    if n < -1:
        raise DomainError(f"Laguerre degree must be >= -1, got {n}")
    arr = _as_points(x)
    if n == -1:
        return _finish(np.zeros(max(arr.size, 1)), arr.shape)
    table = _kernels.laguerre_table(n, alpha, arr.ravel())
    return _finish(table[n], arr.shape)


def laguerre(n: int, x):
    """Laguerre polynomial ``L_n(x)`` by the three-term recurrence.

    ``L_{-1}`` is the zero polynomial, the convention used by the ground
    Landau level.

    Examples
    --------
    >>> laguerre(1, 2.0)
    -1.0
    """
    return genlaguerre(n, 0.0, x)


def laguerre_deriv(n: int, x):
    """Derivative ``dL_n/dx = -L^{(1)}_{n-1}(x)``; zero for ``n <= 0``."""
    n = int(n)
    if n <= 0:
        arr = _as_points(x)
        return _finish(np.zeros(max(arr.size, 1)), arr.shape)
    val = genlaguerre(n - 1, 1.0, x)
    return -val


def hermite(n: int, x):
    """Physicists' Hermite polynomial ``H_n(x)``."""
    n = int(n)
    if n < 0:
        raise DomainError(f"Hermite degree must be >= 0, got {n}")
    arr = _as_points(x)
    table = _kernels.hermite_table(n, arr.ravel())
    return _finish(table[n], arr.shape)


def gamma_residue(n: int) -> float:
    """Residue of the Gamma function at ``-n``: ``(-1)**n / n!``."""
    n = int(n)
    if n < 0:
        raise DomainError("Gamma poles sit at non-positive integers; n must be >= 0")
    return (-1.0) ** n / math.factorial(n)


# ---------------------------------------------------------------------------
# Bernoulli numbers and polynomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_table(kmax: int) -> tuple[Fraction, ...]:
    # Akiyama--Tanigawa algorithm, exact rational arithmetic (B_1 = +1/2),
    # converted to the B_1 = -1/2 convention below.
    work = [Fraction(0)] * (kmax + 1)
    out = []
    for m in range(kmax + 1):
        work[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            work[j - 1] = j * (work[j - 1] - work[j])
        out.append(work[0])
    if kmax >= 1:
        out[1] = -out[1]
    return tuple(out)


def bernoulli_number(k: int) -> Fraction:
    """Exact Bernoulli number ``B_k`` with ``B_1 = -1/2``."""
    k = int(k)
    if k < 0:
        raise DomainError("Bernoulli index must be nonnegative")
    return _bernoulli_table(max(k, 64))[k]


def bernoulli_poly(k: int, a: float) -> float:
    """Bernoulli polynomial ``B_k(a) = sum_j C(k, j) B_j a**(k-j)``."""
    k = int(k)
    if k < 0:
        raise DomainError("Bernoulli index must be nonnegative")
    a = float(a)
    total = 0.0
    for j in range(k + 1):
        total += math.comb(k, j) * float(bernoulli_number(j)) * a ** (k - j)
    return total


# ---------------------------------------------------------------------------
# Hurwitz zeta
# ---------------------------------------------------------------------------

_EM_MAX_ORDER = 38


@lru_cache(maxsize=None)
def _em_coefficients() -> np.ndarray:
    """``B_{2j} / (2j)!`` for ``j = 0..38``."""
    return np.array([float(bernoulli_number(2 * j) / math.factorial(2 * j))
                     for j in range(_EM_MAX_ORDER + 1)])


@dataclass(frozen=True)
class ZetaMethod:
    """Choice of algorithm for :func:`hurwitz_zeta`.

    Attributes
    ----------
    method : {"euler_maclaurin", "hasse_series"}
        Algorithm tag.
    truncation : int
        Maximal number of Bernoulli corrections (Euler--Maclaurin) or of
        outer Hasse terms.
    tolerance : float
        Relative size below which correction terms are dropped
        (Euler--Maclaurin only).
    shift : int or None
        Euler--Maclaurin shift ``N``; ``None`` selects it automatically.
    """

    method: Literal["euler_maclaurin", "hasse_series"] = "euler_maclaurin"
    truncation: int = _EM_MAX_ORDER
    tolerance: float = 1e-17
    shift: int | None = None

    def __post_init__(self):
        if self.method not in ("euler_maclaurin", "hasse_series"):
            raise DomainError(f"unknown zeta method {self.method!r}")
        if int(self.truncation) < 1:
            raise DomainError("truncation must be >= 1")
        if not self.tolerance > 0:
            raise DomainError("tolerance must be > 0")
        if self.shift is not None and int(self.shift) < 0:
            raise DomainError("shift must be >= 0")

    @classmethod
    def hasse(cls, terms: int = 100) -> "ZetaMethod":
        """Convenience constructor for the Hasse oracle."""
        return cls(method="hasse_series", truncation=terms)


EULER_MACLAURIN = ZetaMethod()
HASSE = ZetaMethod.hasse()


def _em_sum(s: float, a: float, shift: int, order: int, tol: float) -> float:
    total = _kernels.power_sum(s, a, shift)
    x = a + shift
    total += x ** (1.0 - s) / (s - 1.0) + 0.5 * x ** (-s)
    coef = _em_coefficients()
    poch = s                      # s (s+1) ... (s+2j-2)
    xp = x ** (-s - 1.0)
    prev = math.inf
    for j in range(1, min(order, _EM_MAX_ORDER) + 1):
        term = coef[j] * poch * xp
        if poch == 0.0:
            break                 # series terminates for nonpositive integer s
        if abs(term) > prev:      # asymptotic series started to diverge
            break
        total += term
        if abs(term) <= tol * abs(total):
            break
        prev = abs(term)
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        xp /= x * x
    return total


def _zeta_fourier(s: float, a: float) -> float:
    """Hurwitz's formula for ``s < 0`` and ``0 < a <= 1``."""
    q = 1.0 - s
    total = 0.0
    phase = math.pi * q / 2.0
    for k in range(1, 200000):
        inv = k ** (-q)
        total += math.cos(phase - 2.0 * math.pi * k * a) * inv
        if k > 8 and inv < 1e-18 * max(abs(total), 1e-300):
            break
    return 2.0 * math.gamma(q) / (2.0 * math.pi) ** q * total


def _zeta_em(s: float, a: float, cfg: ZetaMethod) -> float:
    if cfg.shift is None and s <= -5.0 and a < abs(s) + 2.0:
        whole = math.ceil(a) - 1
        frac = a - whole
        value = _zeta_fourier(s, frac)
        return value - _kernels.power_sum(s, frac, whole)
    if cfg.shift is not None:
        shift = int(cfg.shift)
    elif s <= -5.0:
        shift = 0
    elif s < 0.0:
        shift = max(0, math.ceil(6.0 - a))
    else:
        shift = max(0, math.ceil(10.0 - a))
    return _em_sum(s, a, shift, int(cfg.truncation), float(cfg.tolerance))


def _zeta_hasse(s: float, a: float, terms: int) -> float:
    whole = max(0, math.ceil(10.0 - a))
    a_shift = a + whole
    # decimal digits needed to absorb the cancellation of the inner sums
    log_mag = (abs(1.0 - s) * math.log10(a_shift + terms) + terms * math.log10(2.0))
    digits = int(log_mag) + 40
    with localcontext() as ctx:
        ctx.prec = digits
        ds = Decimal(repr(s))
        expo = 1 - ds
        da = Decimal(repr(a))
        dshift = Decimal(repr(a)) + whole
        powers = [((dshift + k).ln() * expo).exp() for k in range(terms)]
        total = Decimal(0)
        row = [1]
        for n in range(terms):
            if n:
                row = [1] + [row[k - 1] + row[k] for k in range(1, n)] + [1]
            inner = Decimal(0)
            for k in range(n + 1):
                if k % 2:
                    inner -= row[k] * powers[k]
                else:
                    inner += row[k] * powers[k]
            total += inner / (n + 1)
        value = total / (ds - 1)
        for k in range(whole):
            value += ((da + k).ln() * (-ds)).exp()
        return float(value)


def hurwitz_zeta(s: float, a: float, cfg: ZetaMethod | None = None) -> float:
    """Hurwitz zeta function ``zeta(s, a)`` for real ``s != 1`` and ``a > 0``.

    Parameters
    ----------
    s : float
        Real argument; the pole at ``s = 1`` raises :class:`PoleError`.
    a : float
        Positive shift.
    cfg : ZetaMethod, optional
        Algorithm selection; defaults to Euler--Maclaurin.

    Returns
    -------
    float

    Examples
    --------
    >>> round(hurwitz_zeta(-1.0, 1.0), 12)
    -0.083333333333
    """
    s = float(s)
    a = float(a)
    if not (math.isfinite(s) and math.isfinite(a)):
        raise DomainError("zeta arguments must be finite")
    if s == 1.0:
        raise PoleError("zeta(s, a) has a simple pole at s = 1")
    if a <= 0.0:
        raise DomainError(f"Hurwitz zeta requires a > 0, got a = {a}")
    cfg = cfg or EULER_MACLAURIN
    if cfg.method == "hasse_series":
        return _zeta_hasse(s, a, int(cfg.truncation))
    return _zeta_em(s, a, cfg)


def riemann_zeta(s: float, cfg: ZetaMethod | None = None) -> float:
    """Riemann zeta ``zeta(s) = zeta(s, 1)``."""
    return hurwitz_zeta(s, 1.0, cfg)


def zeta_residue_check(a: float, eps: float, cfg: ZetaMethod | None = None) -> float:
    """Return ``(z - 1) zeta(z, a)`` at ``z = 1 + eps``.

    The value tends to the residue 1 as ``eps -> 0`` for every ``a``.
    """
    eps = float(eps)
    if not 0.0 < eps < 0.5:
        raise DomainError("eps must satisfy 0 < eps < 0.5")
    return eps * hurwitz_zeta(1.0 + eps, a, cfg)


def residue_extrapolate(a: float, eps=(1e-2, 1e-3, 1e-4),
                        cfg: ZetaMethod | None = None) -> float:
    """Richardson (polynomial) extrapolation of :func:`zeta_residue_check` to ``eps = 0``."""
    xs = [float(e) for e in eps]
    ys = [zeta_residue_check(a, e, cfg) for e in xs]
    # Neville's scheme evaluated at 0
    p = list(ys)
    m = len(xs)
    for level in range(1, m):
        for i in range(m - level):
            j = i + level
            p[i] = (xs[j] * p[i] - xs[i] * p[i + 1]) / (xs[j] - xs[i])
    return p[0]
