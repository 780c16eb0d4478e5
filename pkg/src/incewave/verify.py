"""Self-check suites: residuals, orthogonality, limits, reconstruction.

Each suite returns a dict with a name, a pass flag, the worst observed
deviation, and the tolerance it was held to.  ``run_all`` aggregates
them into the report consumed by the command-line ``verify`` command.
The ``eta_perturbation`` hook exists so a deliberately corrupted
eigenvalue demonstrably trips the residual check.
"""

from __future__ import annotations

import numpy as np

from .core import Family
from .ince import (
    IncePolynomial,
    build_matrix,
    _build_matrix_signed,
    ode_residual,
    orthogonality_matrix,
    recurrence_next_coeff,
    solve_family,
)
from .specialfns import envelope_fourier
from .tridiag import eigen_all

__all__ = ["run_all", "DEFAULT_A_VALUES", "DEFAULT_N_MAX"]

DEFAULT_A_VALUES = (0.1, 1.0, 14.0)
DEFAULT_N_MAX = 30


def _family_n_range(family: Family, n_max: int):
    return range(family.min_n(), n_max + 1)


def _solutions(families, n_max, a_values, eta_perturbation=0.0):
    for family in families:
        for n in _family_n_range(family, n_max):
            for a in a_values:
                for sol in solve_family(family, n, a):
                    if eta_perturbation:
                        sol = IncePolynomial(
                            family=sol.family,
                            n=sol.n,
                            k=sol.k,
                            a=sol.a,
                            eta=sol.eta + eta_perturbation,
                            coeffs=sol.coeffs,
                        )
                    yield sol


def check_ode_residual(
    families=tuple(Family),
    n_max: int = DEFAULT_N_MAX,
    a_values=DEFAULT_A_VALUES,
    eta_perturbation: float = 0.0,
) -> dict:
    """Max scaled residual of the defining equation on a 101-point grid."""
    xi = np.linspace(-2 * np.pi, 2 * np.pi, 101)
    worst = 0.0
    for sol in _solutions(families, n_max, a_values, eta_perturbation):
        scale = (1.0 + abs(sol.eta) + sol.q * sol.a) * np.abs(sol.coeffs).max()
        worst = max(worst, float(ode_residual(sol, xi).max()) / scale)
    return {
        "name": "ode_residual",
        "passed": worst <= 1e-9,
        "max_scaled_residual": worst,
        "tolerance": 1e-9,
    }


def check_orthogonality(
    families=tuple(Family), n: int = 20, a: float = 14.0
) -> dict:
    """Weighted Gram off-diagonals ~ 0, unweighted norms = pi."""
    worst_off = 0.0
    worst_diag = 0.0
    for family in families:
        sols = solve_family(family, max(n, family.min_n()), a)
        result = orthogonality_matrix(sols)
        gram = result.gram
        scale = np.sqrt(np.outer(np.diag(gram), np.diag(gram)))
        off = np.abs(gram / scale)
        np.fill_diagonal(off, 0.0)
        worst_off = max(worst_off, float(off.max()))
        worst_diag = max(
            worst_diag, float(np.abs(result.unweighted_diag / np.pi - 1.0).max())
        )
    return {
        "name": "orthogonality",
        "passed": worst_off <= 1e-10 and worst_diag <= 1e-10,
        "max_offdiag_over_scale": worst_off,
        "max_norm_deviation": worst_diag,
        "tolerance": 1e-10,
    }


def check_mirror_identity(n_max: int = DEFAULT_N_MAX, a: float = 14.0) -> dict:
    """Spectrum of the odd-sine matrix equals the odd-cosine one at -a."""
    worst = 0.0
    for n in range(0, n_max + 1):
        direct = np.array(
            [p.value for p in eigen_all(build_matrix(Family.ODD_SINE, n, a))]
        )
        mirrored = np.array(
            [p.value for p in eigen_all(_build_matrix_signed(Family.ODD_COSINE, n, -a))]
        )
        scale = max(1.0, np.abs(direct).max())
        worst = max(worst, float(np.abs(np.sort(direct) - np.sort(mirrored)).max()) / scale)
    return {
        "name": "mirror_identity",
        "passed": worst <= 1e-10,
        "max_scaled_deviation": worst,
        "tolerance": 1e-10,
    }


def check_small_a_limit(n_max: int = DEFAULT_N_MAX, a: float = 1e-8) -> dict:
    """Eigenvalues approach 4r^2 / (2r+1)^2 and vectors single harmonics."""
    worst_eta = 0.0
    worst_vec = 0.0
    for family in Family:
        for n in _family_n_range(family, n_max):
            sols = solve_family(family, n, a)
            if family is Family.EVEN_COSINE:
                targets = 4.0 * np.arange(n + 1) ** 2
            elif family is Family.EVEN_SINE:
                targets = 4.0 * np.arange(1, n + 1) ** 2
            else:
                targets = (2.0 * np.arange(n + 1) + 1.0) ** 2
            etas = np.array([s.eta for s in sols])
            worst_eta = max(worst_eta, float(np.abs(etas - targets).max()))
            for i, s in enumerate(sols):
                unit = np.zeros_like(s.coeffs)
                unit[i] = 1.0
                vec = s.coeffs / np.linalg.norm(s.coeffs)
                worst_vec = max(worst_vec, float(np.abs(vec - unit).max()))
    return {
        "name": "small_a_limit",
        "passed": worst_eta <= 1e-6 and worst_vec <= 1e-6,
        "max_eta_deviation": worst_eta,
        "max_vector_deviation": worst_vec,
        "tolerance": 1e-6,
    }


def check_truncation(
    families=tuple(Family), n_max: int = DEFAULT_N_MAX, a_values=(0.1, 1.0, 14.0)
) -> dict:
    """Extending the recurrence one step past the cut gives ~0."""
    worst = 0.0
    for sol in _solutions(families, n_max, a_values):
        nxt = recurrence_next_coeff(sol)
        worst = max(worst, abs(nxt) / np.abs(sol.coeffs).max())
    return {
        "name": "truncation",
        "passed": worst <= 1e-10,
        "max_scaled_next_coeff": worst,
        "tolerance": 1e-10,
    }


def check_bessel_reconstruction(a_values=(1.0, 4.0, 14.0, 100.0)) -> dict:
    """Fourier partial sums rebuild the envelope; sum identity holds."""
    xi = np.linspace(-np.pi, np.pi, 64)
    worst_rec = 0.0
    worst_sum = 0.0
    for a in a_values:
        series = envelope_fourier(a, max_order=int(np.ceil(a / 4.0)) + 30)
        rec = series.reconstruct_scaled(xi)
        exact = np.exp(-(a / 4.0) * (1.0 + np.cos(xi)))
        worst_rec = max(worst_rec, float(np.abs(rec - exact).max()))
        row_sum = series.coeffs_scaled[0] + 2.0 * series.coeffs_scaled[1:].sum()
        worst_sum = max(worst_sum, abs(row_sum - 1.0))
    return {
        "name": "bessel_reconstruction",
        "passed": worst_rec <= 1e-10 and worst_sum <= 1e-12,
        "max_reconstruction_error": worst_rec,
        "max_sum_identity_error": worst_sum,
        "tolerance": 1e-10,
    }


def run_all(
    families=tuple(Family),
    n_max: int = DEFAULT_N_MAX,
    a_values=DEFAULT_A_VALUES,
    eta_perturbation: float = 0.0,
) -> dict:
    """Run every suite; overall pass iff each suite passes."""
    checks = [
        check_ode_residual(families, n_max, a_values, eta_perturbation),
        check_orthogonality(families),
        check_mirror_identity(n_max),
        check_small_a_limit(min(n_max, DEFAULT_N_MAX)),
        check_truncation(families, n_max),
        check_bessel_reconstruction(),
    ]
    return {"passed": all(c["passed"] for c in checks), "checks": checks}
