"""Equal-time Wigner matrices of relativistic Landau levels.

Every state is a :class:`WignerMatrix`: a 4x4 array of
:class:`~landau_wigner.phase_space.BasisExpansion` entries.  Pure states are
generated from configuration-space spinors through the exact rule

.. math::

    W_{\\xi\\lambda} = \\sum_{j, l} c^{\\xi}_j c^{\\lambda}_l g_\\lambda K_{jl},
    \\qquad K_{jj} = \\mathcal{L}_j,\\; K_{j, j\\pm1} = \\mathcal{M}_{\\max(j, j\\pm1)},

where ``c^xi_j`` are the Hermite-Gaussian coefficients of spinor component
``xi`` and ``g = diag(gamma^0) = (1, 1, -1, -1)``.  The pointwise oracle
:func:`wigner_from_spinors` evaluates the same matrices by numerical Fourier
integrals of the spinors returned by :func:`config_spinor`.

Dimensionless units ``eB = 1`` are used; :class:`OneParticleParams` keeps
``eB`` only to derive the spectrum constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Literal, Mapping, Sequence

import numpy as np

from .errors import ConstructionError, DomainError, InternalConsistencyError, NumericalFailure
from .phase_space import BasisExpansion, hermite_gaussian, wigner_kernel_oracle

__all__ = [
    "GAMMA0_DIAG",
    "GAMMA0",
    "SPIN_FLIP",
    "OneParticleParams",
    "LevelCoefficients",
    "Spinor",
    "level_spinor",
    "EnsembleWeights",
    "Decomposition",
    "StateMeta",
    "WignerMatrix",
    "wigner_from_coefficients",
    "pure_state",
    "interference_matrix",
    "superposition",
    "mixture",
    "phi_mixture",
    "maximally_mixed",
    "ground_mixture",
    "GaussianClosedForm",
    "gaussian_family",
    "thermal_level_params",
    "thermal_levels",
    "thermal_ensemble",
    "config_spinor",
    "wigner_from_spinors",
    "GrapheneState",
    "graphene_map",
    "format_descriptor",
]

#: diagonal of gamma^0 in the Dirac representation
GAMMA0_DIAG = np.array([1.0, 1.0, -1.0, -1.0])
GAMMA0 = np.diag(GAMMA0_DIAG)
#: spin-parity flip sigma_y (x) sigma_y = -i gamma^2 (a real matrix)
SPIN_FLIP = np.array([[0.0, 0.0, 0.0, -1.0],
                      [0.0, 0.0, 1.0, 0.0],
                      [0.0, 1.0, 0.0, 0.0],
                      [-1.0, 0.0, 0.0, 0.0]])

Spin = Literal["+", "-"]


def format_descriptor(value: float) -> str:
    """Compact, deterministic text for a real parameter in descriptors."""
    return f"{float(value):.12g}"


# ---------------------------------------------------------------------------
# parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LevelCoefficients:
    """Spinor constants ``(A_n, B_n, eta_n)`` of one Landau level.

    The identity ``eta (1 + A^2 + B^2) = 1`` is enforced to ``1e-12``.
    """

    n: int
    A: float
    B: float
    eta: float

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("Landau index must be nonnegative")
        if self.n == 0 and self.B != 0.0:
            raise DomainError("the ground level has B_0 = 0")
        if abs(self.eta * (1.0 + self.A ** 2 + self.B ** 2) - 1.0) > 1e-12:
            raise DomainError("level constants violate eta (1 + A^2 + B^2) = 1")

    @classmethod
    def massless(cls, n: int, B: float) -> "LevelCoefficients":
        """Massless level with ``A^2 + B^2 = 1`` and ``eta = 1/2``."""
        if not 0.0 <= B <= 1.0:
            raise DomainError("massless B must lie in [0, 1]")
        if n == 0:
            return cls(0, 0.0, 0.0, 1.0)
        return cls(int(n), math.sqrt(max(0.0, 1.0 - B * B)), float(B), 0.5)


@dataclass(frozen=True)
class OneParticleParams:
    """Physical inputs of a Landau level and the derived spectrum constants.

    Parameters
    ----------
    n : int
        Landau index.
    m : float
        Mass (energy units), ``m >= 0``.
    kz : float
        Longitudinal momentum, ``kz >= 0``.
    eB : float
        Field strength (energy squared units).
    """

    n: int
    m: float = 0.0
    kz: float = 0.0
    eB: float = 1.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise DomainError("n must be a nonnegative integer")
        if self.m < 0 or self.kz < 0:
            raise DomainError("m and kz must be nonnegative")
        if not self.eB > 0:
            raise DomainError("eB must be positive")

    @property
    def energy(self) -> float:
        return math.sqrt(self.m ** 2 + self.kz ** 2 + 2 * self.n * self.eB)

    @property
    def delta_sq(self) -> float:
        return self.m ** 2 + self.kz ** 2

    @property
    def kappa(self) -> float:
        return self.delta_sq / (2.0 * self.eB)

    def mu(self, temperature: float) -> float:
        """Dimensionless inverse temperature ``sqrt(2 eB) / T``."""
        return math.sqrt(2.0 * self.eB) / temperature

    def coefficients(self) -> LevelCoefficients:
        e = self.energy
        if e == 0.0:
            # massless ground level at kz = 0: the normalization is free;
            # take eta_0 = 1, A_0 = 0.
            return LevelCoefficients(0, 0.0, 0.0, 1.0)
        denom = e + self.m
        return LevelCoefficients(self.n, self.kz / denom,
                                 math.sqrt(2 * self.n * self.eB) / denom,
                                 denom / (2.0 * e))

    @property
    def A(self) -> float:
        return self.coefficients().A

    @property
    def B(self) -> float:
        return self.coefficients().B

    @property
    def eta(self) -> float:
        return self.coefficients().eta


def _coeffs(params) -> LevelCoefficients:
    if isinstance(params, LevelCoefficients):
        return params
    if isinstance(params, OneParticleParams):
        return params.coefficients()
    raise TypeError("expected OneParticleParams or LevelCoefficients")


# ---------------------------------------------------------------------------
# spinors in the Hermite-Gaussian basis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Spinor:
    """Four-component spinor ``psi_xi(s) = sum_j c^xi_j F_j(s)``.

    ``components[xi]`` maps Hermite index ``j`` to the real coefficient.
    """

    components: tuple[Mapping[int, float], ...]

    def __post_init__(self):
        if len(self.components) != 4:
            raise DomainError("a Dirac spinor has four components")

    def __add__(self, other: "Spinor") -> "Spinor":
        return Spinor.combine([(1.0, self), (1.0, other)])

    def scale(self, c: float) -> "Spinor":
        return Spinor.combine([(c, self)])

    @staticmethod
    def combine(terms: Iterable[tuple[float, "Spinor"]]) -> "Spinor":
        comps = [dict() for _ in range(4)]
        for c, sp in terms:
            for xi in range(4):
                for j, v in sp.components[xi].items():
                    comps[xi][j] = comps[xi].get(j, 0.0) + c * v
        cleaned = tuple({j: v for j, v in comp.items() if v != 0.0 and j >= 0} for comp in comps)
        return Spinor(cleaned)

    def norm_sq(self) -> float:
        """``int |psi|^2 ds`` (the ``F_j`` are orthonormal)."""
        return float(sum(v * v for comp in self.components for v in comp.values()))

    def is_zero(self) -> bool:
        return all(not comp for comp in self.components)

    def evaluate(self, s) -> np.ndarray:
        """Component values at ``s``; shape ``(4,) + shape(s)``."""
        s = np.asarray(s, dtype=np.float64)
        out = np.zeros((4,) + s.shape)
        for xi, comp in enumerate(self.components):
            for j, v in comp.items():
                out[xi] = out[xi] + v * hermite_gaussian(j, s)
        return out


def level_spinor(params, parity: int, spin: Spin) -> Spinor:
    """Configuration-space spinor ``u^{spin}_{n,parity}`` in coefficient form.

    With ``F' = F_{n-1}`` and ``F = F_n`` the four spinors are (times
    ``sqrt(eta)``)::

        u+_{n,1} = ( F',     0,   A F',  -B F )
        u-_{n,1} = ( 0,      F,  -B F',  -A F )
        u+_{n,2} = ( B F',  A F,   0,      F  )
        u-_{n,2} = (-A F',  B F,   F',     0  )

    ``F_{-1} = 0`` removes the missing components of the ground level.
    """
    c = _coeffs(params)
    n, A, B = c.n, c.A, c.B
    lo, hi = n - 1, n
    if parity == 1 and spin == "+":
        comps = ({lo: 1.0}, {}, {lo: A}, {hi: -B})
    elif parity == 1 and spin == "-":
        comps = ({}, {hi: 1.0}, {lo: -B}, {hi: -A})
    elif parity == 2 and spin == "+":
        comps = ({lo: B}, {hi: A}, {}, {hi: 1.0})
    elif parity == 2 and spin == "-":
        comps = ({lo: -A}, {hi: B}, {lo: 1.0}, {})
    else:
        raise DomainError(f"parity must be 1 or 2 and spin '+' or '-', got ({parity}, {spin})")
    root = math.sqrt(c.eta)
    return Spinor.combine([(root, Spinor(comps))])


def config_spinor(params, parity: int, spin: Spin, s) -> np.ndarray:
    """Values of ``u^{spin}_{n,parity}(s)`` as four complex numbers."""
    return level_spinor(params, parity, spin).evaluate(s).astype(np.complex128)


# ---------------------------------------------------------------------------
# ensembles and metadata
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EnsembleWeights:
    """Ordered ``(descriptor, weight)`` pairs with unit sum and distinct labels."""

    items: tuple[tuple[str, float], ...]

    def __post_init__(self):
        items = tuple((str(d), float(w)) for d, w in self.items)
        object.__setattr__(self, "items", items)
        if not items:
            raise DomainError("an ensemble needs at least one state")
        labels = [d for d, _ in items]
        if len(set(labels)) != len(labels):
            raise DomainError("ensemble descriptors must be distinct")
        if any(w < 0 or not math.isfinite(w) for _, w in items):
            raise DomainError("ensemble weights must be finite and nonnegative")
        total = math.fsum(w for _, w in items)
        if abs(total - 1.0) > 1e-12:
            raise DomainError(f"ensemble weights sum to {total!r}, not 1")

    @classmethod
    def from_pairs(cls, labels: Sequence[str], weights: Sequence[float]) -> "EnsembleWeights":
        if len(labels) != len(weights):
            raise DomainError("labels and weights differ in length")
        return cls(tuple(zip(labels, weights)))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(d for d, _ in self.items)

    @property
    def weights(self) -> np.ndarray:
        return np.array([w for _, w in self.items])

    def __len__(self) -> int:
        return len(self.items)


@dataclass(frozen=True)
class Decomposition:
    """Recorded decomposition of a mixed state into pure components.

    ``states`` holds the components explicitly, or ``factory(i)`` builds the
    ``i``-th component on demand (used for long thermal ensembles).
    """

    weights: EnsembleWeights
    states: tuple["WignerMatrix", ...] | None = None
    factory: Callable[[int], "WignerMatrix"] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.states is None and self.factory is None:
            raise DomainError("a decomposition needs states or a factory")
        if self.states is not None and len(self.states) != len(self.weights):
            raise DomainError("number of states and weights differ")

    def state(self, i: int) -> "WignerMatrix":
        if self.states is not None:
            return self.states[i]
        return self.factory(i)

    def __iter__(self):
        for i, (_, w) in enumerate(self.weights.items):
            yield w, self.state(i)


@dataclass(frozen=True)
class StateMeta:
    """Provenance of a Wigner matrix."""

    descriptor: str = ""
    pure: bool = False
    decomposition: Decomposition | None = None
    extra: Mapping[str, object] = field(default_factory=dict, compare=False)


# ---------------------------------------------------------------------------
# Wigner matrices
# ---------------------------------------------------------------------------

_ZERO = BasisExpansion()


class WignerMatrix:
    """4x4 matrix of basis expansions with provenance metadata.

    Parameters
    ----------
    entries : mapping
        ``{(i, j): BasisExpansion}`` for the nonzero entries (0-based).
    meta : StateMeta, optional
        Construction provenance.
    """

    __slots__ = ("_entries", "meta")

    def __init__(self, entries: Mapping[tuple[int, int], BasisExpansion],
                 meta: StateMeta | None = None):
        clean = {}
        for (i, j), e in entries.items():
            if not (0 <= i < 4 and 0 <= j < 4):
                raise DomainError("Wigner matrix indices run over 0..3")
            if not e.is_zero():
                clean[(int(i), int(j))] = e
        self._entries = clean
        self.meta = meta or StateMeta()

    # -- access ------------------------------------------------------------
    def entry(self, i: int, j: int) -> BasisExpansion:
        return self._entries.get((i, j), _ZERO)

    def __getitem__(self, key):
        return self.entry(*key)

    @property
    def nonzero(self) -> dict[tuple[int, int], BasisExpansion]:
        return dict(self._entries)

    def with_meta(self, meta: StateMeta) -> "WignerMatrix":
        return WignerMatrix(self._entries, meta)

    # -- algebra -------------------------------------------------------------
    @staticmethod
    def linear_combination(terms: Iterable[tuple[float, "WignerMatrix"]],
                           meta: StateMeta | None = None) -> "WignerMatrix":
        acc: dict[tuple[int, int], BasisExpansion] = {}
        for c, w in terms:
            for key, e in w._entries.items():
                acc[key] = acc.get(key, _ZERO) + c * e
        return WignerMatrix(acc, meta)

    def __add__(self, other: "WignerMatrix") -> "WignerMatrix":
        return WignerMatrix.linear_combination([(1.0, self), (1.0, other)])

    def __sub__(self, other: "WignerMatrix") -> "WignerMatrix":
        return WignerMatrix.linear_combination([(1.0, self), (-1.0, other)])

    def __mul__(self, c: float) -> "WignerMatrix":
        return WignerMatrix.linear_combination([(float(c), self)])

    __rmul__ = __mul__

    def allclose(self, other: "WignerMatrix", atol: float = 1e-12) -> bool:
        keys = set(self._entries) | set(other._entries)
        return all(self.entry(*k).allclose(other.entry(*k), atol) for k in keys)

    # -- derived quantities -----------------------------------------------------
    def gamma0_trace(self) -> BasisExpansion:
        """Phase-space density ``Tr[W gamma^0]``."""
        out = _ZERO
        for i in range(4):
            out = out + GAMMA0_DIAG[i] * self.entry(i, i)
        return out

    def integrated(self) -> np.ndarray:
        """Entrywise phase-space integral as a 4x4 array."""
        out = np.zeros((4, 4))
        for (i, j), e in self._entries.items():
            out[i, j] = e.integral()
        return out

    def normalization(self) -> float:
        """``\\int Tr[W gamma^0]`` (equal to 1 for physical states)."""
        return self.gamma0_trace().integral()

    def is_pseudo_hermitian(self, atol: float = 1e-12) -> bool:
        """Check ``W^T = gamma^0 W gamma^0`` (real entries)."""
        for i in range(4):
            for j in range(4):
                lhs = self.entry(j, i)
                rhs = (GAMMA0_DIAG[i] * GAMMA0_DIAG[j]) * self.entry(i, j)
                if not lhs.allclose(rhs, atol):
                    return False
        return True

    def evaluate(self, s, kx) -> np.ndarray:
        """Pointwise matrix values; shape ``broadcast(s, kx).shape + (4, 4)``."""
        s_arr, k_arr = np.broadcast_arrays(np.asarray(s, float), np.asarray(kx, float))
        out = np.zeros(s_arr.shape + (4, 4))
        for (i, j), e in self._entries.items():
            out[..., i, j] = e.evaluate(s_arr, k_arr)
        return out

    def __repr__(self) -> str:
        return f"WignerMatrix({self.meta.descriptor or 'unnamed'}, {len(self._entries)} nonzero entries)"


def wigner_from_coefficients(spinor: Spinor, other: Spinor | None = None,
                             meta: StateMeta | None = None) -> WignerMatrix:
    """Exact Wigner matrix of a spinor (or symmetrized cross matrix of two).

    ``W_{xi lam} = sum_{j,l} c^xi_j d^lam_l g_lam K_{jl}``; with ``other``
    given the result is ``(psi psibar' + psi' psibar) / 2``.

    Raises
    ------
    ConstructionError
        If two coupled components differ by more than one oscillator quantum.
    """
    pairs = [(spinor, spinor)] if other is None else [(spinor, other), (other, spinor)]
    weight = 1.0 / len(pairs)
    acc: dict[tuple[int, int], dict] = {}
    for left, right in pairs:
        for xi in range(4):
            for lam in range(4):
                for j, cj in left.components[xi].items():
                    for l, cl in right.components[lam].items():
                        if abs(j - l) > 1:
                            raise ConstructionError(
                                "components couple oscillator indices differing by more than one")
                        kind, idx = ("L", j) if j == l else ("M", max(j, l))
                        key = (xi, lam)
                        terms = acc.setdefault(key, {})
                        terms[(kind, idx)] = terms.get((kind, idx), 0.0) + \
                            weight * cj * cl * GAMMA0_DIAG[lam]
    entries = {}
    for key, terms in acc.items():
        expansion = _ZERO
        for (kind, idx), c in terms.items():
            expansion = expansion + BasisExpansion.single(kind, idx, c)
        entries[key] = expansion
    return WignerMatrix(entries, meta)


def _pure_descriptor(n: int, parity: int, spin: str) -> str:
    return f"{n}:{parity}:{spin}"


def pure_state(params, parity: int, spin: Spin) -> WignerMatrix:
    """Wigner matrix ``omega^{spin}_{n,parity}`` of a stationary Landau state.

    Parameters
    ----------
    params : OneParticleParams or LevelCoefficients
        Level and its spinor constants.
    parity : {1, 2}
        Intrinsic parity label.
    spin : {"+", "-"}
        Spin label.

    Raises
    ------
    ConstructionError
        For the two ground-level combinations that do not exist.

    Examples
    --------
    >>> w = pure_state(LevelCoefficients(0, 0.0, 0.0, 1.0), 1, "-")
    >>> w.entry(1, 1)
    BasisExpansion(+1*L0)
    """
    c = _coeffs(params)
    if parity not in (1, 2) or spin not in ("+", "-"):
        raise DomainError(f"invalid state labels ({parity}, {spin})")
    if c.n == 0 and (parity, spin) in ((1, "+"), (2, "-")):
        raise ConstructionError(
            f"ground level has no (r={parity}, spin {spin}) state: the n = 0 level lacks the "
            "two-fold spin degeneracy (only (1,-) and (2,+) exist)")
    spinor = level_spinor(c, parity, spin)
    meta = StateMeta(descriptor=_pure_descriptor(c.n, parity, spin), pure=True,
                     extra={"coefficients": c})
    return wigner_from_coefficients(spinor, meta=meta)


def interference_matrix(params) -> WignerMatrix:
    """Interference term ``Omega_n`` of the parity-1 spin doublet.

    With ``L' = L_{n-1}``, ``L = L_n``, ``M = M_n``::

        eta * [[ 0,     M,       B L',          A M        ],
               [ M,     0,      -A M,           B L        ],
               [-B L',  A M,     2 A B L',     (A^2-B^2) M ],
               [-A M,  -B L,    (A^2-B^2) M,   -2 A B L    ]]

    This is ``u+ ubar- + u- ubar+`` for the spinors of :func:`level_spinor`.
    """
    c = _coeffs(params)
    if c.n == 0:
        raise ConstructionError("the ground level has no spin doublet to interfere")
    n, A, B, eta = c.n, c.A, c.B, c.eta
    Lp = BasisExpansion.single("L", n - 1)
    L = BasisExpansion.single("L", n)
    M = BasisExpansion.single("M", n)
    table = {
        (0, 1): M, (0, 2): B * Lp, (0, 3): A * M,
        (1, 0): M, (1, 2): -A * M, (1, 3): B * L,
        (2, 0): -B * Lp, (2, 1): A * M, (2, 2): 2 * A * B * Lp, (2, 3): (A * A - B * B) * M,
        (3, 0): -A * M, (3, 1): -B * L, (3, 2): (A * A - B * B) * M, (3, 3): -2 * A * B * L,
    }
    return WignerMatrix({k: eta * v for k, v in table.items()},
                        StateMeta(descriptor=f"Omega:{n}"))


def superposition(params, theta: float) -> WignerMatrix:
    """Pure superposition ``sin(theta) u+_{n,1} + cos(theta) u-_{n,1}``.

    Returns ``sin^2 omega+ + cos^2 omega- + sin cos Omega_n``.
    """
    c = _coeffs(params)
    if c.n == 0:
        raise ConstructionError("superposition needs the two-fold spin degeneracy (n >= 1)")
    st, ct = math.sin(theta), math.cos(theta)
    meta = StateMeta(descriptor=f"theta={format_descriptor(theta)}", pure=True,
                     extra={"coefficients": c, "theta": float(theta)})
    return WignerMatrix.linear_combination(
        [(st * st, pure_state(c, 1, "+")), (ct * ct, pure_state(c, 1, "-")),
         (st * ct, interference_matrix(c))], meta)


def mixture(states: Sequence[WignerMatrix], weights: EnsembleWeights,
            descriptor: str | None = None, check: bool = True) -> WignerMatrix:
    """Convex combination ``sum_i w_i W_i`` recording the decomposition.

    Raises
    ------
    DomainError
        If the number of states and weights differ or an input is not
        normalized.
    """
    states = tuple(states)
    if len(states) != len(weights):
        raise DomainError("number of states and weights differ")
    if check:
        for w in states:
            if abs(w.normalization() - 1.0) > 1e-10:
                raise DomainError(f"input state {w.meta.descriptor!r} is not normalized")
    meta = StateMeta(descriptor=descriptor or "mixture", pure=False,
                     decomposition=Decomposition(weights, states))
    return WignerMatrix.linear_combination(zip(weights.weights, states), meta)


def phi_mixture(params, phi: float) -> WignerMatrix:
    """Two-state mixture ``sin^2(phi) omega+_{n,1} + cos^2(phi) omega-_{n,1}``."""
    c = _coeffs(params)
    if c.n == 0:
        raise ConstructionError("the phi-mixture needs the two-fold spin degeneracy (n >= 1)")
    plus, minus = pure_state(c, 1, "+"), pure_state(c, 1, "-")
    sp = math.sin(phi) ** 2
    weights = EnsembleWeights(((plus.meta.descriptor, sp), (minus.meta.descriptor, 1.0 - sp)))
    return mixture([plus, minus], weights, descriptor=f"phi={format_descriptor(phi)}")


def _massless_level(n: int) -> LevelCoefficients:
    return OneParticleParams(n).coefficients()


def _level_states(c: LevelCoefficients) -> list[WignerMatrix]:
    if c.n == 0:
        return [pure_state(c, 1, "-"), pure_state(c, 2, "+")]
    return [pure_state(c, r, sp) for r in (1, 2) for sp in ("+", "-")]


def maximally_mixed(n: int, params=None) -> WignerMatrix:
    """Equal mixture of the four states of level ``n >= 1``.

    Equals ``diag(L_{n-1}, L_n, -L_{n-1}, -L_n) / 4`` for any spinor
    constants; ``params`` only selects the recorded decomposition
    (default: massless, ``kz = 0``).
    """
    n = int(n)
    if n < 1:
        raise ConstructionError("level 0 has two states only; use ground_mixture()")
    c = _coeffs(params) if params is not None else _massless_level(n)
    if c.n != n:
        raise DomainError("params belong to a different level")
    states = _level_states(c)
    weights = EnsembleWeights(tuple((w.meta.descriptor, 0.25) for w in states))
    return mixture(states, weights, descriptor=f"mixed:{n}", check=False)


def ground_mixture(params=None) -> WignerMatrix:
    """Equal mixture of the two ground states, ``diag(0, L_0, 0, -L_0) / 2``
    when ``A_0 = 0``."""
    c = _coeffs(params) if params is not None else _massless_level(0)
    if c.n != 0:
        raise DomainError("params belong to an excited level")
    states = _level_states(c)
    weights = EnsembleWeights(tuple((w.meta.descriptor, 0.5) for w in states))
    return mixture(states, weights, descriptor="mixed:0", check=False)


# ---------------------------------------------------------------------------
# Gaussian family
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussianClosedForm:
    """Closed-form Gaussian Wigner matrix of the geometric level mixture.

    With ``r^2 = s^2 + kx^2`` and ``G = exp(-r^2 (1 - z)/(1 + z))``::

        W11 = (1 - z) z G / (4 pi (1 + z))
        W22 = (1 - z) (exp(-r^2) + G / (1 + z)) / (4 pi)
        W33 = -W11,  W44 = -W22
    """

    z: float

    def evaluate(self, s, kx) -> np.ndarray:
        s_arr, k_arr = np.broadcast_arrays(np.asarray(s, float), np.asarray(kx, float))
        z = self.z
        r2 = s_arr ** 2 + k_arr ** 2
        g = np.exp(-r2 * (1.0 - z) / (1.0 + z))
        w11 = (1.0 - z) * z * g / (4.0 * math.pi * (1.0 + z))
        w22 = (1.0 - z) * (np.exp(-r2) + g / (1.0 + z)) / (4.0 * math.pi)
        out = np.zeros(s_arr.shape + (4, 4))
        out[..., 0, 0] = w11
        out[..., 1, 1] = w22
        out[..., 2, 2] = -w11
        out[..., 3, 3] = -w22
        return out

    def density(self, s, kx) -> np.ndarray:
        """``Tr[W gamma^0]``."""
        w = self.evaluate(s, kx)
        return w[..., 0, 0] + w[..., 1, 1] - w[..., 2, 2] - w[..., 3, 3]


def _gaussian_levels(z: float, n_max: int | None, tail: float) -> int:
    if n_max is not None:
        return int(n_max)
    if z == 0.0:
        return 0
    # smallest N with z^(N+1) < tail
    N = max(0, int(math.ceil(math.log(tail) / math.log(z))) - 1)
    while z ** (N + 1) >= tail:
        N += 1
    while N > 0 and z ** N < tail:
        N -= 1
    return N


def gaussian_family(z: float, n_max: int | None = None, tail: float = 1e-15,
                    level_params: Callable[[int], LevelCoefficients] | None = None) -> WignerMatrix:
    """Series view ``sum_{n<=N} (1-z) z^n W_n`` of the Gaussian mixed family.

    ``W_n`` is :func:`maximally_mixed` for ``n >= 1`` and the two-state
    :func:`ground_mixture` for ``n = 0``.  Truncated weights are renormalized
    by ``1 - z^(N+1)``.  The closed form is attached as
    ``meta.extra["closed_form"]``.

    Parameters
    ----------
    z : float
        Mixing parameter in ``[0, 1)``.
    n_max : int, optional
        Highest level kept; by default the smallest ``N`` with
        ``z^(N+1) < tail``.
    tail : float
        Truncation target for the automatic ``N``.
    level_params : callable, optional
        Spinor constants per level for the recorded pure decomposition
        (default: massless, ``kz = 0``).
    """
    z = float(z)
    if not 0.0 <= z < 1.0:
        raise DomainError("the Gaussian family requires 0 <= z < 1")
    N = _gaussian_levels(z, n_max, tail)
    if N > 2_000_000:
        raise NumericalFailure("Gaussian series needs too many levels", error_bound=z ** (N + 1))
    n = np.arange(N + 1)
    c = (1.0 - z) * z ** n
    c = c / c.sum()
    lag_low = np.zeros(N + 1)            # coefficients of L_k in W11
    lag_low[: N] = c[1:] / 4.0
    lag_high = c / 4.0                    # coefficients of L_k in W22
    lag_high[0] = c[0] / 2.0
    w11 = BasisExpansion(lag_low)
    w22 = BasisExpansion(lag_high)
    entries = {(0, 0): w11, (1, 1): w22, (2, 2): -w11, (3, 3): -w22}

    level_of = level_params or _massless_level
    labels, weights, index = [], [], []
    for k in range(N + 1):
        count = 2 if k == 0 else 4
        for slot in range(count):
            index.append((k, slot))
            weights.append(c[k] / count)
    state_cache: dict[int, list[WignerMatrix]] = {}

    def states_of(k):
        if k not in state_cache:
            state_cache.clear()
            state_cache[k] = _level_states(level_of(k))
        return state_cache[k]

    for k, slot in index:
        if k == 0:
            labels.append(("0:1:-", "0:2:+")[slot])
        else:
            labels.append(f"{k}:{(1, 1, 2, 2)[slot]}:{('+', '-', '+', '-')[slot]}")

    def factory(i):
        k, slot = index[i]
        return states_of(k)[slot]

    total = math.fsum(weights)
    weights = [w / total for w in weights]
    decomposition = Decomposition(EnsembleWeights.from_pairs(labels, weights), factory=factory)
    meta = StateMeta(descriptor=f"z={format_descriptor(z)}", pure=False,
                     decomposition=decomposition,
                     extra={"closed_form": GaussianClosedForm(z), "n_max": N})
    return WignerMatrix(entries, meta)


# ---------------------------------------------------------------------------
# thermal ensemble
# ---------------------------------------------------------------------------

def thermal_level_params(n: int, kappa: float) -> OneParticleParams:
    """Level parameters realizing ``kappa``: ``kz = 0`` and ``m = sqrt(2 kappa)``."""
    return OneParticleParams(n, m=math.sqrt(2.0 * kappa), kz=0.0, eB=1.0)


def thermal_levels(mu: float, kappa: float, tail: float = 1e-12,
                   max_levels: int = 5_000_000) -> tuple[np.ndarray, float]:
    """Scaled Boltzmann weights ``exp(-mu (sqrt(kappa+n) - sqrt(kappa)))``.

    Returns the weights for ``n = 0..N`` and the integral bound on the
    relative weight of the dropped tail, with ``N`` the smallest count
    reaching ``tail``.
    """
    if not mu > 0:
        raise DomainError("mu must be positive")
    if kappa < 0:
        raise DomainError("kappa must be nonnegative")
    from .thermo import _tail_bound  # local import: thermo depends on this module

    shift = math.sqrt(kappa)
    N = 64
    while True:
        n = np.arange(N + 1, dtype=np.float64)
        p = np.exp(-mu * (np.sqrt(kappa + n) - shift))
        bound = _tail_bound(mu, kappa, N, 0) * math.exp(mu * shift)
        rel = bound / p.sum()
        if rel < tail:
            return p, rel
        if N >= max_levels:
            raise NumericalFailure("thermal tail bound unreachable within the level budget",
                                   estimate=float(p.sum()), error_bound=rel)
        N = min(2 * N, max_levels)


def thermal_ensemble(mu: float, kappa: float = 0.0, n_max: int | None = None,
                     tail: float = 1e-12) -> WignerMatrix:
    """Canonical mixture ``(1/Z) sum_n exp(-mu sqrt(kappa+n)) omega^-_{n,1}``.

    Each level uses ``kz = 0`` and ``m = sqrt(2 kappa)`` so that ``A_n = 0``;
    the ground level then has ``eta_0 = 1``.  ``Z`` is the truncated sum,
    so the ensemble is exactly normalized.

    Parameters
    ----------
    mu : float
        Dimensionless inverse temperature.
    kappa : float
        Dimensionless gap ``(m^2 + kz^2) / (2 eB)``.
    n_max : int, optional
        Highest level; by default chosen from an integral tail bound so that
        the dropped weight is below ``tail`` relative to ``Z``.
    """
    mu, kappa = float(mu), float(kappa)
    if n_max is None:
        p, _ = thermal_levels(mu, kappa, tail)
    else:
        if not mu > 0 or kappa < 0:
            raise DomainError("need mu > 0 and kappa >= 0")
        n = np.arange(int(n_max) + 1, dtype=np.float64)
        p = np.exp(-mu * (np.sqrt(kappa + n) - math.sqrt(kappa)))
    N = p.size - 1
    w = p / p.sum()
    n = np.arange(N + 1, dtype=np.float64)
    m = math.sqrt(2.0 * kappa)
    energy = np.sqrt(m * m + 2.0 * n)
    with np.errstate(divide="ignore", invalid="ignore"):
        eta = np.where(energy > 0, (energy + m) / (2.0 * energy), 1.0)
        B = np.where(energy > 0, np.sqrt(2.0 * n) / (energy + m), 0.0)
    d22 = w * eta                              # L_n in (1,1)
    m23 = w * eta * B                          # M_n in (1,2); -M_n in (2,1)
    l33 = np.zeros(N + 1)                      # L_{n-1} in (2,2), negative
    l33[:N] = (w * eta * B * B)[1:]
    entries = {
        (1, 1): BasisExpansion(d22),
        (1, 2): BasisExpansion((), m23),
        (2, 1): BasisExpansion((), -m23),
        (2, 2): BasisExpansion(-l33),
    }
    labels = [_pure_descriptor(k, 1, "-") for k in range(N + 1)]

    def factory(i):
        return pure_state(thermal_level_params(i, kappa), 1, "-")

    decomposition = Decomposition(EnsembleWeights.from_pairs(labels, list(w)), factory=factory)
    meta = StateMeta(descriptor=f"mu={format_descriptor(mu)},kappa={format_descriptor(kappa)}",
                     decomposition=decomposition,
                     extra={"n_max": N, "weights": w})
    return WignerMatrix(entries, meta)


# ---------------------------------------------------------------------------
# configuration-space oracle
# ---------------------------------------------------------------------------

@lru_cache(maxsize=65536)
def _kernel(j: int, l: int, s: float, kx: float) -> float:
    return wigner_kernel_oracle(max(j, l), min(j, l), s, kx)


def wigner_from_spinors(ua: Spinor, ub: Spinor, s: float, kx: float) -> np.ndarray:
    """Pointwise Wigner (cross) matrix from configuration-space spinors.

    Evaluates ``pi^{-1} int du e^{2 i kx u} psibar_lam(s-u) psi_xi(s+u)`` by
    numerical quadrature of each Hermite-Gaussian pair, symmetrized over
    ``ua``/``ub``: ``(ua ubar_b + ub ubar_a) / 2``.  For ``ua = ub`` this is
    the Wigner matrix of the state; for the two members of a doublet it is
    half of their interference term.

    Returns
    -------
    numpy.ndarray
        Real 4x4 array.
    """
    s, kx = float(s), float(kx)
    out = np.zeros((4, 4))
    for left, right in ((ua, ub), (ub, ua)):
        for xi in range(4):
            for lam in range(4):
                for j, cj in left.components[xi].items():
                    for l, cl in right.components[lam].items():
                        if abs(j - l) > 1:
                            raise ConstructionError("oracle supports |j - l| <= 1 only")
                        out[xi, lam] += 0.5 * cj * cl * GAMMA0_DIAG[lam] * _kernel(j, l, s, kx)
    return out


# ---------------------------------------------------------------------------
# graphene correspondence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GrapheneState:
    """Equal-weight parity-mixing combination mapped to a graphene band state."""

    n: int
    band: Literal["conduction", "valence"]
    labels: tuple[tuple[int, int, str], ...]
    weights: tuple[float, float]
    phases: tuple[int, int]
    energy: float

    def spinor(self) -> Spinor:
        """Normalized spinor ``(phase_1 u_1 + phase_2 u_2) / sqrt(2)``."""
        c = _massless_level(self.n)
        terms = [(ph * math.sqrt(w), level_spinor(c, r, sp))
                 for (_, r, sp), w, ph in zip(self.labels, self.weights, self.phases)]
        return Spinor.combine(terms)

    def wigner(self) -> WignerMatrix:
        """Exact Wigner matrix of the combined (pure) state."""
        meta = StateMeta(descriptor=f"graphene:{self.band}:{self.n}", pure=True)
        return wigner_from_coefficients(self.spinor(), meta=meta)


def graphene_map(n: int, band: Literal["conduction", "valence"]) -> GrapheneState:
    """Map a massless ``kz = 0`` Landau doublet onto a graphene band state.

    Conduction: ``u+_{n,1} + u-_{n,2}`` with energy ``+sqrt(2n)``;
    valence: ``-u-_{n,1} + u+_{n,2}`` with energy ``-sqrt(2n)`` (units
    ``hbar = v = l_B = 1``).

    The mapped state shares purity, both linear entropies and the mutual
    information with the stationary superposition ``superposition(c, pi/4)``
    of the massless level, from which it differs by the sign of one spinor
    component.  That sign does change the spin-parity flip contraction: the
    mapped state has ``C^2 = 1/2`` while the stationary analog is separable.
    """
    n = int(n)
    if n < 1:
        raise ConstructionError("the graphene map relates excited levels only (n >= 1)")
    e = math.sqrt(2.0 * n)
    if band == "conduction":
        return GrapheneState(n, band, ((n, 1, "+"), (n, 2, "-")), (0.5, 0.5), (1, 1), e)
    if band == "valence":
        return GrapheneState(n, band, ((n, 1, "-"), (n, 2, "+")), (0.5, 0.5), (-1, 1), -e)
    raise DomainError("band must be 'conduction' or 'valence'")
