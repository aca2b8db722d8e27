"""Phase-space oscillator basis ``{L_n, M_n}`` and its exact overlap algebra.

Units are dimensionless (``eB = 1``).  With ``r^2 = s^2 + k_x^2``

.. math::

    \\mathcal{L}_n(s, k_x) = \\frac{(-1)^n}{\\pi} e^{-r^2} L_n(2 r^2), \\qquad
    \\mathcal{M}_n(s, k_x) = \\frac{(-1)^n}{2\\pi\\sqrt{n}} e^{-r^2}
        \\, 4 s \\, L_n'(2 r^2).

Under the normalized product ``<f, g> = 2 pi \\int\\int f g ds dk_x`` the
family is orthonormal, ``L`` and ``M`` functions are mutually orthogonal,
``\\int L_n = 1`` and ``\\int M_n = 0``.  Every Wigner-matrix entry in the
library is a :class:`BasisExpansion`, so all integrals of products reduce to
dot products of coefficient vectors.  Quadrature routines in this module
exist only as independent oracles for that algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Iterable, Literal, Mapping

import numpy as np
from scipy import integrate

from . import _kernels
from .errors import DomainError, NumericalFailure
from .specfun import hermite

__all__ = [
    "BasisLabel",
    "BasisExpansion",
    "eval_L",
    "eval_M",
    "basis_tables",
    "overlap",
    "total_integral",
    "quad2d",
    "QuadResult",
    "gauss_integral",
    "hermite_gaussian",
    "wigner_kernel_oracle",
    "overlap_constants_text",
    "load_overlap_constants",
    "gram_matrix",
]


# ---------------------------------------------------------------------------
# labels and pointwise evaluation
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class BasisLabel:
    """Label of one basis function.

    ``kind == "L"`` admits ``index >= -1`` (``L_{-1}`` is the zero
    function); ``kind == "M"`` requires ``index >= 1``.
    """

    kind: Literal["L", "M"]
    index: int

    def __post_init__(self):
        if self.kind not in ("L", "M"):
            raise DomainError(f"basis kind must be 'L' or 'M', got {self.kind!r}")
        if self.kind == "L" and self.index < -1:
            raise DomainError("L labels need index >= -1")
        if self.kind == "M" and self.index < 1:
            raise DomainError("M labels need index >= 1")

    @property
    def is_zero(self) -> bool:
        return self.kind == "L" and self.index == -1

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "BasisLabel":
        text = text.strip()
        return cls(text[0], int(text[1:]))


def _radial(s, kx):
    s = np.asarray(s, dtype=np.float64)
    kx = np.asarray(kx, dtype=np.float64)
    s, kx = np.broadcast_arrays(s, kx)
    return s, kx, s * s + kx * kx


def basis_tables(nmax: int, s, kx) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate ``L_0..L_nmax`` and ``M_0..M_nmax`` (``M_0 := 0``) at once.

    Returns
    -------
    (lag, der) : tuple of numpy.ndarray
        Arrays of shape ``(nmax + 1,) + broadcast_shape(s, kx)``.
    """
    s, kx, r2 = _radial(s, kx)
    shape = s.shape
    flat_r2 = r2.ravel()
    gauss = np.exp(-flat_r2)
    x = 2.0 * flat_r2
    lag0 = _kernels.laguerre_table(nmax, 0.0, x)
    signs = (-1.0) ** np.arange(nmax + 1)
    lag = signs[:, None] * gauss[None, :] * lag0 / math.pi
    der = np.zeros_like(lag)
    if nmax >= 1:
        lag1 = _kernels.laguerre_table(nmax - 1, 1.0, x)     # L^{(1)}_{n-1}
        idx = np.arange(1, nmax + 1)
        pref = signs[1:] / (2.0 * math.pi * np.sqrt(idx))
        der[1:] = pref[:, None] * gauss[None, :] * 4.0 * s.ravel()[None, :] * (-lag1)
    return lag.reshape((nmax + 1,) + shape), der.reshape((nmax + 1,) + shape)


def _scalar_or_array(values, s, kx):
    if np.ndim(s) == 0 and np.ndim(kx) == 0:
        return float(np.asarray(values).reshape(-1)[0])
    return values


def eval_L(n: int, s, kx):
    """Diagonal basis function ``L_n(s, kx)``; identically zero for ``n = -1``."""
    n = int(n)
    if n < -1:
        raise DomainError("eval_L requires n >= -1")
    if n == -1:
        _, _, r2 = _radial(s, kx)
        return _scalar_or_array(np.zeros_like(r2), s, kx)
    lag, _ = basis_tables(n, s, kx)
    return _scalar_or_array(lag[n], s, kx)


def eval_M(n: int, s, kx):
    """Off-diagonal basis function ``M_n(s, kx)`` (odd in ``s``), ``n >= 1``."""
    n = int(n)
    if n < 1:
        raise DomainError("eval_M requires n >= 1")
    _, der = basis_tables(n, s, kx)
    return _scalar_or_array(der[n], s, kx)


def eval_label(label: BasisLabel, s, kx):
    """Evaluate the basis function named by ``label``."""
    if label.kind == "L":
        return eval_L(label.index, s, kx)
    return eval_M(label.index, s, kx)


# ---------------------------------------------------------------------------
# exact algebra
# ---------------------------------------------------------------------------

def overlap(a: BasisLabel, b: BasisLabel) -> float:
    """Normalized inner product ``2 pi \\int\\int f_a f_b`` (closed table)."""
    if a.is_zero or b.is_zero:
        return 0.0
    return 1.0 if (a.kind == b.kind and a.index == b.index) else 0.0


def total_integral(a: BasisLabel) -> float:
    """``\\int\\int f_a ds dk_x``: 1 for ``L_n`` (``n >= 0``), 0 otherwise."""
    return 1.0 if (a.kind == "L" and a.index >= 0) else 0.0


def _trim(arr: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(arr)
    arr = arr[: nz[-1] + 1] if nz.size else arr[:0]
    return arr


def _pad(a: np.ndarray, size: int) -> np.ndarray:
    if a.size == size:
        return a
    out = np.zeros(size)
    out[: a.size] = a
    return out


class BasisExpansion:
    """Finite real combination ``sum_k a_k L_k + sum_k b_k M_k``.

    Coefficients are stored densely: ``lag[k]`` multiplies ``L_k`` and
    ``der[k]`` multiplies ``M_k`` (``der[0]`` is always zero).  Trailing
    zeros are trimmed so zero terms are never stored.  Instances are
    immutable.

    Parameters
    ----------
    lag, der : array_like
        Coefficient vectors.
    """

    __slots__ = ("_lag", "_der")

    def __init__(self, lag=(), der=()):
        lag = _trim(np.array(lag, dtype=np.float64).ravel())
        der = np.array(der, dtype=np.float64).ravel()
        if der.size and der[0] != 0.0:
            raise DomainError("M_0 does not exist; der[0] must be zero")
        der = _trim(der)
        lag.setflags(write=False)
        der.setflags(write=False)
        self._lag = lag
        self._der = der

    # -- construction ------------------------------------------------------
    @classmethod
    def zero(cls) -> "BasisExpansion":
        return cls()

    @classmethod
    def single(cls, kind: str, index: int, coef: float = 1.0) -> "BasisExpansion":
        """``coef`` times one basis function (``L_{-1}`` gives zero)."""
        label = BasisLabel(kind, int(index))
        return cls.from_terms({label: coef})

    @classmethod
    def from_terms(cls, terms: Mapping[BasisLabel, float]) -> "BasisExpansion":
        lag_n = [lab.index for lab in terms if lab.kind == "L"]
        der_n = [lab.index for lab in terms if lab.kind == "M"]
        lag = np.zeros(max(lag_n, default=-1) + 1)
        der = np.zeros(max(der_n, default=0) + 1)
        for lab, c in terms.items():
            if lab.is_zero:
                continue
            if lab.kind == "L":
                lag[lab.index] += c
            else:
                der[lab.index] += c
        return cls(lag, der)

    # -- views -------------------------------------------------------------
    @property
    def lag(self) -> np.ndarray:
        return self._lag

    @property
    def der(self) -> np.ndarray:
        return self._der

    @property
    def terms(self) -> dict[BasisLabel, float]:
        out = {BasisLabel("L", int(k)): float(self._lag[k]) for k in np.flatnonzero(self._lag)}
        out.update({BasisLabel("M", int(k)): float(self._der[k]) for k in np.flatnonzero(self._der)})
        return out

    @property
    def max_index(self) -> int:
        return max(self._lag.size, self._der.size) - 1

    def is_zero(self) -> bool:
        return self._lag.size == 0 and self._der.size == 0

    # -- linear structure -----------------------------------------------------
    def _combine(self, other: "BasisExpansion", sign: float) -> "BasisExpansion":
        nl = max(self._lag.size, other._lag.size)
        nd = max(self._der.size, other._der.size)
        return BasisExpansion(_pad(self._lag, nl) + sign * _pad(other._lag, nl),
                              _pad(self._der, nd) + sign * _pad(other._der, nd))

    def __add__(self, other):
        if not isinstance(other, BasisExpansion):
            return NotImplemented
        return self._combine(other, 1.0)

    def __sub__(self, other):
        if not isinstance(other, BasisExpansion):
            return NotImplemented
        return self._combine(other, -1.0)

    def __neg__(self):
        return BasisExpansion(-self._lag, -self._der)

    def __mul__(self, c):
        if isinstance(c, (int, float, np.floating, np.integer)):
            c = float(c)
            if c == 0.0:
                return BasisExpansion()
            return BasisExpansion(c * self._lag, c * self._der)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BasisExpansion):
            return NotImplemented
        return (np.array_equal(self._lag, other._lag)
                and np.array_equal(self._der, other._der))

    def __hash__(self):
        return hash((self._lag.tobytes(), self._der.tobytes()))

    def allclose(self, other: "BasisExpansion", atol: float = 1e-12) -> bool:
        diff = self - other
        return bool(np.all(np.abs(diff._lag) <= atol) and np.all(np.abs(diff._der) <= atol))

    def __repr__(self) -> str:
        parts = [f"{c:+.6g}*{lab}" for lab, c in sorted(self.terms.items())]
        return "BasisExpansion(" + (" ".join(parts) if parts else "0") + ")"

    # -- integration -------------------------------------------------------------
    def inner(self, other: "BasisExpansion") -> float:
        """Normalized product ``2 pi \\int\\int self * other`` via the overlap table."""
        nl = min(self._lag.size, other._lag.size)
        nd = min(self._der.size, other._der.size)
        return float(np.dot(self._lag[:nl], other._lag[:nl])
                     + np.dot(self._der[:nd], other._der[:nd]))

    def integral(self) -> float:
        """Plain phase-space integral ``\\int\\int f ds dk_x``."""
        return float(np.sum(self._lag))

    def second_moment(self) -> float:
        """``\\int\\int s^2 f = \\int\\int k_x^2 f`` (``M`` terms are odd in ``s``).

        Uses ``\\int\\int r^2 L_k = 2k + 1`` and rotational symmetry.
        """
        k = np.arange(self._lag.size)
        return float(np.sum(self._lag * (2 * k + 1)) / 2.0)

    def evaluate(self, s, kx):
        """Pointwise value on arrays ``s``, ``kx`` (broadcast)."""
        nmax = max(self.max_index, 0)
        lag, der = basis_tables(nmax, s, kx)
        out = np.tensordot(_pad(self._lag, nmax + 1), lag, axes=1)
        out = out + np.tensordot(_pad(self._der, nmax + 1), der, axes=1)
        return _scalar_or_array(out, s, kx)


# ---------------------------------------------------------------------------
# quadrature oracles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadResult:
    """Value and error estimate returned by :func:`quad2d`."""

    value: float
    error: float
    nodes: int

    def __float__(self) -> float:
        return self.value


def quad2d(f: Callable[[np.ndarray, np.ndarray], np.ndarray], radial_cut: float = 9.0,
           tol: float = 1e-11, max_nodes: int = 4_000_000) -> QuadResult:
    """Adaptive polar quadrature of ``\\int\\int f(s, kx) ds dk_x``.

    The radial range ``[0, radial_cut]`` is split into Gauss--Legendre
    panels and the angle is handled by the trapezoidal rule (exponentially
    accurate for periodic integrands).  Panels and angular nodes are doubled
    until two successive estimates agree to ``tol``.

    Parameters
    ----------
    f : callable
        Vectorized integrand ``f(s, kx)``.
    radial_cut : float
        Radius beyond which ``f`` is negligible.
    tol : float
        Absolute tolerance on successive estimates.
    max_nodes : int
        Node budget; exceeding it raises :class:`NumericalFailure`.

    Returns
    -------
    QuadResult
    """
    if not radial_cut > 0:
        raise DomainError("radial_cut must be positive")
    order = 24
    gl_x, gl_w = np.polynomial.legendre.leggauss(order)
    panels, n_phi = 8, 32
    previous = None
    while True:
        edges = np.linspace(0.0, radial_cut, panels + 1)
        half = 0.5 * np.diff(edges)
        mid = 0.5 * (edges[1:] + edges[:-1])
        r = (mid[:, None] + half[:, None] * gl_x[None, :]).ravel()
        wr = (half[:, None] * gl_w[None, :]).ravel() * r
        phi = 2.0 * math.pi * np.arange(n_phi) / n_phi
        s = r[:, None] * np.cos(phi)[None, :]
        kx = r[:, None] * np.sin(phi)[None, :]
        vals = np.asarray(f(s, kx), dtype=np.float64)
        est = float(np.sum(wr[:, None] * vals) * (2.0 * math.pi / n_phi))
        nodes = r.size * n_phi
        if previous is not None:
            err = abs(est - previous)
            if err <= tol:
                return QuadResult(est, err, nodes)
            if 4 * nodes > max_nodes:
                raise NumericalFailure("quad2d did not converge within the node budget",
                                       estimate=est, error_bound=err)
        previous = est
        panels *= 2
        n_phi *= 2


def gauss_integral(alpha: float) -> float:
    """``\\int\\int exp(alpha (s^2 + kx^2)) ds dk_x = -pi / alpha`` for ``alpha < 0``."""
    alpha = float(alpha)
    if not alpha < 0:
        raise DomainError("the Gaussian integral converges only for alpha < 0")
    return -math.pi / alpha


def hermite_gaussian(n: int, s):
    """Normalized oscillator function ``F_n(s) = H_n(s) e^{-s^2/2} / sqrt(2^n n! sqrt(pi))``."""
    n = int(n)
    if n < 0:
        s_arr = np.asarray(s, dtype=np.float64)
        return np.zeros_like(s_arr) if s_arr.ndim else 0.0
    norm = 1.0 / math.sqrt(2.0 ** n * math.factorial(n) * math.sqrt(math.pi))
    s_arr = np.asarray(s, dtype=np.float64)
    val = norm * np.exp(-0.5 * s_arr * s_arr) * hermite(n, s_arr)
    return float(val) if s_arr.ndim == 0 else val


def wigner_kernel_oracle(n: int, m: int, s: float, kx: float, *,
                         return_imag: bool = False, tol: float = 1e-12):
    """Configuration-space Fourier integral reproducing ``L``/``M`` pointwise.

    Evaluates

    .. math::

        K_{nm}(s, k_x) = \\frac{c_{nm}}{\\pi} \\int du\\, e^{2 i k_x u}
            \\tfrac12 [F_n(s-u) F_m(s+u) + F_m(s-u) F_n(s+u)]

    with ``c_nn = 1`` and ``c_{n,n+-1} = sqrt(2)``, so that ``K_nn = L_n``
    and ``K_{n,n-1} = M_n``.

    Parameters
    ----------
    n, m : int
        Oscillator indices with ``|n - m| <= 1``.
    s, kx : float
        Phase-space point.
    return_imag : bool
        Also return the (vanishing) imaginary part.

    Raises
    ------
    NumericalFailure
        If the quadrature error estimate exceeds ``tol`` or the imaginary
        part exceeds ``1e-10``.
    """
    n, m = int(n), int(m)
    if n < 0 or m < 0 or abs(n - m) > 1:
        raise DomainError("wigner_kernel_oracle needs n, m >= 0 and |n - m| <= 1")
    s, kx = float(s), float(kx)

    def sym(u):
        return 0.5 * (hermite_gaussian(n, s - u) * hermite_gaussian(m, s + u)
                      + hermite_gaussian(m, s - u) * hermite_gaussian(n, s + u))

    cut = abs(s) + 12.0 + math.sqrt(2.0 * max(n, m) + 1.0)
    opts = dict(epsabs=tol * 1e-2, epsrel=1e-13, limit=400)
    re, err_re = integrate.quad(lambda u: sym(u) * math.cos(2.0 * kx * u), -cut, cut, **opts)
    im, err_im = integrate.quad(lambda u: sym(u) * math.sin(2.0 * kx * u), -cut, cut, **opts)
    scale = (1.0 if n == m else math.sqrt(2.0)) / math.pi
    re *= scale
    im *= scale
    if max(err_re, err_im) * scale > tol:
        raise NumericalFailure("kernel quadrature did not converge", estimate=re,
                               error_bound=max(err_re, err_im) * scale)
    if abs(im) > 1e-10:
        raise NumericalFailure(f"kernel is not real: imaginary part {im:.3e}", estimate=re)
    return (re, im) if return_imag else re


# ---------------------------------------------------------------------------
# generated overlap constants
# ---------------------------------------------------------------------------

CONSTANTS_FILE = "overlap_constants.txt"


def _labels_up_to(nmax: int) -> list[BasisLabel]:
    return ([BasisLabel("L", k) for k in range(-1, nmax + 1)]
            + [BasisLabel("M", k) for k in range(1, nmax + 1)])


def overlap_constants_text(nmax: int = 8, tol: float = 1e-11) -> str:
    """Derive the overlap table by quadrature and render the constants file.

    Each pair is integrated with :func:`quad2d`; the closed-table value is
    written together with the quadrature estimate and its deviation.  A
    deviation above ``1e-7`` raises :class:`NumericalFailure`.
    """
    labels = _labels_up_to(nmax)
    lines = [
        "# phase-space overlap table <a,b> = 2*pi*int int f_a f_b ds dkx  (eB = 1)",
        f"# derived by polar quadrature (Gauss-Legendre x trapezoid), tol = {tol:.1e}, radial_cut = 9",
        "# acceptance threshold for |quadrature - table|: 1e-07",
        "# columns: label_a label_b table_value quadrature_value abs_deviation",
    ]
    worst = 0.0
    for i, a in enumerate(labels):
        for b in labels[i:]:
            exact = overlap(a, b)
            if a.is_zero or b.is_zero:
                quad = 0.0
            else:
                quad = 2.0 * math.pi * quad2d(
                    lambda s, k, a=a, b=b: eval_label(a, s, k) * eval_label(b, s, k),
                    tol=tol).value
            dev = abs(quad - exact)
            worst = max(worst, dev)
            lines.append(f"{a} {b} {exact:.1f} {quad:.15e} {dev:.3e}")
    if worst > 1e-7:
        raise NumericalFailure(f"overlap table not confirmed: deviation {worst:.3e}")
    lines.append(f"# worst deviation: {worst:.3e}")
    return "\n".join(lines) + "\n"


def load_overlap_constants() -> dict[tuple[BasisLabel, BasisLabel], float]:
    """Read the checked-in constants file into ``{(a, b): value}`` (both orders)."""
    text = resources.files("landau_wigner").joinpath("data", CONSTANTS_FILE).read_text()
    table = {}
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        a, b, val, *_ = line.split()
        la, lb = BasisLabel.parse(a), BasisLabel.parse(b)
        table[(la, lb)] = table[(lb, la)] = float(val)
    return table


def gram_matrix(expansions: Iterable[BasisExpansion]) -> np.ndarray:
    """Matrix of normalized inner products between expansions."""
    items = list(expansions)
    out = np.empty((len(items), len(items)))
    for i, a in enumerate(items):
        for j, b in enumerate(items):
            out[i, j] = a.inner(b)
    return out
