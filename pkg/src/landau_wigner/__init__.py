"""Phase-space information of Dirac bispinors in Landau levels.

Subpackages of functionality:

* :mod:`~landau_wigner.specfun` -- Laguerre/Hermite polynomials, Bernoulli
  numbers and the Hurwitz zeta function with analytic continuation;
* :mod:`~landau_wigner.phase_space` -- the ``L_n``/``M_n`` phase-space basis,
  exact overlaps and quadrature oracles;
* :mod:`~landau_wigner.spinor_wigner` -- Landau-level spinors, equal-time
  Wigner matrices, superpositions, mixtures and thermal ensembles;
* :mod:`~landau_wigner.infometrics` -- purity, linear entropies, mutual
  information and concurrence;
* :mod:`~landau_wigner.thermo` -- partition function (direct and zeta),
  thermodynamic functions and thermal information closed forms;
* :mod:`~landau_wigner.cli` -- command-line figure data.

Set ``LANDAU_WIGNER_BACKEND=numpy`` to disable the optional numba kernels.
"""

__version__ = "0.1.0"

from ._kernels import BACKEND  # noqa: E402
from .errors import (ConstructionError, DomainError, InternalConsistencyError,  # noqa: E402
                     LandauWignerError, NumericalFailure, PoleError, PreconditionError,
                     UnavailableResult)
from .infometrics import InfoReport, concurrence_sq_pure, mutual_info, purity  # noqa: E402
from .phase_space import BasisExpansion, BasisLabel  # noqa: E402
from .specfun import hurwitz_zeta  # noqa: E402
from .spinor_wigner import (OneParticleParams, WignerMatrix, gaussian_family,  # noqa: E402
                            pure_state, superposition, thermal_ensemble)
from .thermo import partition_direct, partition_zeta  # noqa: E402

__all__ = [
    "__version__", "BACKEND",
    "LandauWignerError", "DomainError", "PoleError", "ConstructionError", "PreconditionError",
    "UnavailableResult", "InternalConsistencyError", "NumericalFailure",
    "InfoReport", "purity", "mutual_info", "concurrence_sq_pure",
    "BasisExpansion", "BasisLabel", "hurwitz_zeta",
    "OneParticleParams", "WignerMatrix", "pure_state", "superposition", "gaussian_family",
    "thermal_ensemble", "partition_direct", "partition_zeta",
]
