"""Exact polynomial eigenstates of a charged scalar particle in a
linearly polarized plane wave propagating in an underdense medium.

The library solves the periodic second-order equation that governs the
modulation factor of the wave function, via the eigenvalue problems of
four small tridiagonal matrix families, and maps the eigenvalues to
quantized momentum spectra and full wave functions.
"""

__version__ = "0.1.0"

from .core import (
    DerivedParams,
    Family,
    FAMILY_NAMES,
    InceProblem,
    LaserPlasmaConfig,
    derive_params,
    family_from_name,
    transverse_momentum,
)
from .tridiag import (
    EigenPair,
    Tridiagonal,
    char_poly,
    eigen_all,
    eigen_count_below,
    eigenvalues_by_bisection,
)
from .ince import (
    IncePolynomial,
    OrthogonalityResult,
    build_matrix,
    evaluate,
    evaluate_deriv2,
    ode_residual,
    orthogonality_matrix,
    recurrence_next_coeff,
    solve_family,
)
from .specialfns import (
    EnvelopeSeries,
    ScaledBesselRow,
    bessel_i_scaled,
    envelope,
    envelope_fourier,
    normalized_envelope_sq,
)
from .physics import (
    FrameVectors,
    MassShell,
    MomentumState,
    WhittakerHillParams,
    decompose_four_vector,
    minkowski_dot,
    momentum_spectrum,
    reconstruct_four_vector,
    volkov_phase,
    wavefunction,
    wh_params,
)

__all__ = [
    "__version__",
    "DerivedParams",
    "Family",
    "FAMILY_NAMES",
    "InceProblem",
    "LaserPlasmaConfig",
    "derive_params",
    "family_from_name",
    "transverse_momentum",
    "EigenPair",
    "Tridiagonal",
    "char_poly",
    "eigen_all",
    "eigen_count_below",
    "eigenvalues_by_bisection",
    "IncePolynomial",
    "OrthogonalityResult",
    "build_matrix",
    "evaluate",
    "evaluate_deriv2",
    "ode_residual",
    "orthogonality_matrix",
    "recurrence_next_coeff",
    "solve_family",
    "EnvelopeSeries",
    "ScaledBesselRow",
    "bessel_i_scaled",
    "envelope",
    "envelope_fourier",
    "normalized_envelope_sq",
    "FrameVectors",
    "MassShell",
    "MomentumState",
    "WhittakerHillParams",
    "decompose_four_vector",
    "minkowski_dot",
    "momentum_spectrum",
    "reconstruct_four_vector",
    "volkov_phase",
    "wavefunction",
    "wh_params",
]
