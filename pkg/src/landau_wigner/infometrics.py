"""Quantum-information quantifiers of equal-time Wigner matrices.

All phase-space integrals of products are exact: matrix entries are
:class:`~landau_wigner.phase_space.BasisExpansion` objects and the
normalized product ``2 pi \\int\\int f g`` is a coefficient dot product.

Quantities (``X = gamma^0 W``):

* purity ``P = 2 pi \\int Tr[X^2]``;
* phase-space linear entropy ``I_ps = 1 - 2 pi \\int (Tr[W gamma^0])^2``;
* spin-parity linear entropy ``I_sp = 1 - Tr[rho_SP^2]`` with
  ``rho_SP = (\\int W) gamma^0``;
* mutual information ``M = I_ps + I_sp - (1 - P)``;
* pure-state concurrence ``C^2 = 2 pi \\int Tr[X F X F]`` with the flip
  ``F = sigma_y (x) sigma_y``.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import (DomainError, InternalConsistencyError, PreconditionError,
                     UnavailableResult)
from .spinor_wigner import (GAMMA0, GAMMA0_DIAG, SPIN_FLIP, EnsembleWeights, WignerMatrix,
                            _coeffs, format_descriptor, thermal_ensemble)

__all__ = [
    "InfoReport",
    "purity",
    "reduced_spin_parity",
    "entropy_sp",
    "entropy_ps",
    "mutual_info",
    "info_report",
    "concurrence_sq_pure",
    "concurrence_sq_ensemble",
    "wootters_concurrence",
    "binary_entropy",
    "eof_from_concurrence",
    "GaussianClosedForms",
    "gaussian_closed_forms",
    "format_number",
    "level_concurrence_sq",
    "thermal_report",
]

# F has a single nonzero entry per row: F[i, FLIP[i]] = FLIP_SIGN[i]
_FLIP = np.array([3, 2, 1, 0])
_FLIP_SIGN = np.array([SPIN_FLIP[i, _FLIP[i]] for i in range(4)])
PURITY_TOL = 1e-10


def format_number(value: float | None) -> str:
    """Render a value with 12 significant digits (``unavailable`` for ``None``)."""
    if value is None:
        return "unavailable"
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if value == 0.0:
        return "0"
    return f"{value:.12g}"


@dataclass(frozen=True)
class InfoReport:
    """Information quantifiers of one state.

    ``concurrence_sq`` is ``None`` when no pure decomposition is known.
    """

    purity: float
    entropy_ps: float
    entropy_sp: float
    mutual_info: float
    concurrence_sq: float | None = None
    descriptor: str = ""

    FIELDS = ("state", "purity", "entropy_ps", "entropy_sp", "mutual_info", "concurrence_sq")

    def identity_residual(self) -> float:
        """``M - (I_ps + I_sp - (1 - P))``; zero by construction."""
        return self.mutual_info - (self.entropy_ps + self.entropy_sp - (1.0 - self.purity))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["state"] = d.pop("descriptor")
        return {k: d[k] for k in self.FIELDS}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    @classmethod
    def csv_header(cls) -> str:
        return ",".join(cls.FIELDS)

    def to_csv_row(self) -> str:
        vals = [self.descriptor] + [format_number(getattr(self, k)) for k in self.FIELDS[1:]]
        return ",".join(vals)


# ---------------------------------------------------------------------------
# purity and entropies
# ---------------------------------------------------------------------------

def purity(W: WignerMatrix) -> float:
    """``2 pi \\int Tr[(gamma^0 W)^2]`` via the overlap table."""
    total = 0.0
    for (i, j), e in W.nonzero.items():
        other = W.entry(j, i)
        if other.is_zero():
            continue
        total += GAMMA0_DIAG[i] * GAMMA0_DIAG[j] * e.inner(other)
    return float(total)


def reduced_spin_parity(W: WignerMatrix, atol: float = 1e-10) -> np.ndarray:
    """Spin-parity density ``rho_SP = (\\int W ds dkx) gamma^0``.

    Raises
    ------
    InternalConsistencyError
        If the trace deviates from 1 by more than ``atol``.
    """
    rho = W.integrated() @ GAMMA0
    tr = float(np.trace(rho))
    if abs(tr - 1.0) > atol:
        raise InternalConsistencyError(f"reduced spin-parity trace is {tr!r}, not 1")
    return rho


def entropy_sp(W: WignerMatrix) -> float:
    """Spin-parity linear entropy ``1 - Tr[rho_SP^2]``."""
    rho = reduced_spin_parity(W)
    return 1.0 - float(np.trace(rho @ rho))


def entropy_ps(W: WignerMatrix) -> float:
    """Phase-space linear entropy ``1 - 2 pi \\int (Tr[W gamma^0])^2``."""
    density = W.gamma0_trace()
    return float(1.0 - density.inner(density))


# ---------------------------------------------------------------------------
# concurrence
# ---------------------------------------------------------------------------

def _flip_trace(W: WignerMatrix) -> float:
    # Tr[X F X F] = sum_ij X_ij s_j X_{f(j) f(i)} s_{f(i)},  X = gamma^0 W
    total = 0.0
    for (i, j), e in W.nonzero.items():
        fi, fj = _FLIP[i], _FLIP[j]
        other = W.entry(fj, fi)
        if other.is_zero():
            continue
        coef = (GAMMA0_DIAG[i] * GAMMA0_DIAG[fj] * _FLIP_SIGN[j] * _FLIP_SIGN[fi])
        total += coef * e.inner(other)
    return float(total)


def concurrence_sq_pure(W: WignerMatrix, check: bool = True) -> float:
    """Squared intrinsic concurrence ``2 pi \\int Tr[X F X F]`` of a pure state.

    Raises
    ------
    PreconditionError
        If ``purity(W)`` differs from 1 by more than ``1e-10``.
    """
    if check:
        p = purity(W)
        if abs(p - 1.0) > PURITY_TOL:
            raise PreconditionError(f"concurrence_sq_pure needs a pure state (purity {p:.12g})")
    return _flip_trace(W)


def concurrence_sq_ensemble(weights: EnsembleWeights, states) -> float:
    """Average ``sum_i w_i C_i^2`` over a recorded pure decomposition.

    The recorded decomposition is trusted rather than minimized over: for
    mixtures of quantized Landau states it is the physically selected one.

    Parameters
    ----------
    weights : EnsembleWeights
        Component weights.
    states : sequence of WignerMatrix or callable
        Pure components, or ``i -> WignerMatrix``.

    Raises
    ------
    UnavailableResult
        If no states are supplied.
    """
    if states is None:
        raise UnavailableResult("no recorded decomposition")
    get = states if callable(states) else (lambda i: states[i])
    total = 0.0
    for i, (_, w) in enumerate(weights.items):
        if w == 0.0:
            continue
        total += w * concurrence_sq_pure(get(i))
    return float(total)


def _ensemble_concurrence(W: WignerMatrix) -> float | None:
    if W.meta.pure:
        return concurrence_sq_pure(W)
    dec = W.meta.decomposition
    if dec is None:
        return None
    return concurrence_sq_ensemble(dec.weights, dec.state)


def mutual_info(W: WignerMatrix) -> InfoReport:
    """Assemble the :class:`InfoReport` of ``W``.

    The concurrence is filled for pure states and for states carrying a
    recorded decomposition; otherwise it is reported as unavailable.
    """
    p = purity(W)
    i_ps = entropy_ps(W)
    i_sp = entropy_sp(W)
    m = i_ps + i_sp - (1.0 - p)
    return InfoReport(p, i_ps, i_sp, m, _ensemble_concurrence(W), W.meta.descriptor)


info_report = mutual_info


def level_concurrence_sq(params) -> float:
    """Quantized concurrence ``2 (eta_n B_n)^2`` shared by all states of a level."""
    c = _coeffs(params)
    return 2.0 * (c.eta * c.B) ** 2


def thermal_report(mu: float, kappa: float = 0.0, tail: float = 1e-12) -> InfoReport:
    """Information quantifiers of the canonical ensemble at any ``kappa``.

    Purity and entropies use the exact ensemble Wigner matrix; the ensemble
    concurrence averages the per-level quantized value over the Boltzmann
    weights, which equals :func:`concurrence_sq_ensemble` on the recorded
    decomposition without building every component.  ``mu = 0`` returns the
    infinite-temperature limits.
    """
    mu, kappa = float(mu), float(kappa)
    if mu == 0.0:
        if kappa < 0:
            raise DomainError("kappa must be nonnegative")
        return InfoReport(0.0, 1.0, 0.5, 0.5, 0.5,
                          f"mu=0,kappa={format_descriptor(kappa)}")
    W = thermal_ensemble(mu, kappa, tail=tail)
    w = W.meta.extra["weights"]
    n = np.arange(w.size, dtype=np.float64)
    m = math.sqrt(2.0 * kappa)
    energy = np.sqrt(m * m + 2.0 * n)
    with np.errstate(divide="ignore", invalid="ignore"):
        eta_b = np.where(energy > 0, np.sqrt(2.0 * n) / (2.0 * energy), 0.0)
    c2 = float(np.dot(w, 2.0 * eta_b ** 2))
    p = purity(W)
    i_ps = entropy_ps(W)
    i_sp = entropy_sp(W)
    return InfoReport(p, i_ps, i_sp, i_ps + i_sp - (1.0 - p), c2, W.meta.descriptor)


# ---------------------------------------------------------------------------
# two-qubit diagnostics
# ---------------------------------------------------------------------------

def wootters_concurrence(rho, atol: float = 1e-10) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    Uses the eigenvalues of the positive semidefinite product
    ``sqrt(rho) rho~ sqrt(rho)`` with ``rho~ = F rho* F``, whose square
    roots are the ``lambda_i`` of the usual definition.

    Raises
    ------
    DomainError
        If ``rho`` is not Hermitian, unit-trace and positive semidefinite
        within ``atol``.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (4, 4):
        raise DomainError("expected a 4x4 density matrix")
    if np.max(np.abs(rho - rho.conj().T)) > atol:
        raise DomainError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > atol:
        raise DomainError("density matrix does not have unit trace")
    evals, evecs = np.linalg.eigh(rho)
    if evals.min() < -atol:
        raise DomainError("density matrix is not positive semidefinite")
    root = (evecs * np.sqrt(np.clip(evals, 0.0, None))) @ evecs.conj().T
    tilde = SPIN_FLIP @ rho.conj() @ SPIN_FLIP
    prod = root @ tilde @ root
    prod = 0.5 * (prod + prod.conj().T)
    lam = np.sqrt(np.clip(np.linalg.eigvalsh(prod), 0.0, None))
    lam = np.sort(lam, kind="stable")[::-1]
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def binary_entropy(lam: float) -> float:
    """``-lam log2 lam - (1-lam) log2 (1-lam)`` with limit value 0 at the ends."""
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise DomainError("binary entropy needs 0 <= lam <= 1")
    out = 0.0
    for x in (lam, 1.0 - lam):
        if x > 0.0:
            out -= x * math.log2(x)
    return out


def eof_from_concurrence(C: float) -> float:
    """Entanglement of formation ``E[(1 - sqrt(1 - C^2)) / 2]``."""
    C = float(C)
    if not 0.0 <= C <= 1.0:
        raise DomainError("concurrence must lie in [0, 1]")
    return binary_entropy(0.5 * (1.0 - math.sqrt(max(0.0, 1.0 - C * C))))


# ---------------------------------------------------------------------------
# Gaussian family closed forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussianClosedForms:
    """Closed-form quantifiers of the Gaussian family at ``z``."""

    z: float
    report: InfoReport
    sigma_sq: float
    concurrence_bound: float


def gaussian_closed_forms(z: float) -> GaussianClosedForms:
    """Closed forms for the Gaussian family.

    ``P = (z-1)(z^2-2) / (4(z+1))``, ``I_ps = z(2 + z - z^2)/2``,
    ``I_sp = (1 + z - z^2/2)/2``, ``M = (3z^2 + z - z^4)/(2 + 2z)``,
    ``sigma_x^2 = sigma_kx^2 = (1 + z^2)/(2(1 - z))`` and the concurrence
    ``z/2`` of the massless decomposition.
    """
    z = float(z)
    if not 0.0 <= z < 1.0:
        raise DomainError("Gaussian closed forms need 0 <= z < 1")
    p = (z - 1.0) * (z * z - 2.0) / (4.0 * (z + 1.0))
    i_ps = 0.5 * z * (2.0 + z - z * z)
    i_sp = 0.5 * (1.0 + z - 0.5 * z * z)
    m = (3.0 * z * z + z - z ** 4) / (2.0 + 2.0 * z)
    report = InfoReport(p, i_ps, i_sp, m, 0.5 * z, f"z={format_descriptor(z)}")
    return GaussianClosedForms(z, report, (z * z + 1.0) / (2.0 * (1.0 - z)), 0.5 * z)
