"""The four polynomial families: matrices, eigenpairs, evaluation.

Substituting a finite trigonometric sum into

    w'' + a sin(2z) w' + (eta - q a cos(2z)) w = 0          (*)

turns the coefficient recurrence into the eigenproblem of a small real
tridiagonal matrix, one family per parity/phase combination:

  even cosine  q = 2n   w = sum_{r=0..n} A_r cos(2rz)    size n+1
  even sine    q = 2n   w = sum_{r=1..n} B_r sin(2rz)    size n
  odd cosine   q = 2n+1 w = sum_{r=0..n} A'_r cos((2r+1)z)  size n+1
  odd sine     q = 2n+1 w = sum_{r=0..n} B'_r sin((2r+1)z)  size n+1

Coefficients are normalized so that the integral of w^2 over a full
period [-pi, pi] in z equals pi, which for the cosine-even family means
2 A_0^2 + sum_{r>=1} A_r^2 = 1 and a plain unit coefficient vector for
the rest.  Solutions of the same (family, n, a) with different
eigenvalues are orthogonal under the weight exp(-(a/2) cos 2z).

Everything here works with z = xi/2; public evaluation takes the wave
phase xi.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Family
from .tridiag import EigenPair, Tridiagonal, eigen_all

__all__ = [
    "IncePolynomial",
    "build_matrix",
    "solve_family",
    "evaluate",
    "evaluate_deriv2",
    "ode_residual",
    "recurrence_next_coeff",
    "orthogonality_matrix",
    "OrthogonalityResult",
]


def _build_matrix_signed(family: Family, n: int, a: float) -> Tridiagonal:
    """Band contents for the given family; ``a`` may be negative here.

    The signed version exists because the odd-sine matrix at +a is
    similar to the odd-cosine matrix at -a (half-period symmetry); only
    internal identities ever use a < 0.
    """
    if n < family.min_n():
        raise ValueError(f"{family.value} requires n >= {family.min_n()}")
    if family is Family.EVEN_COSINE:
        r = np.arange(n + 1)
        diag = (4.0 * r * r).astype(float)
        sup = (n + 1.0 + np.arange(n)) * a
        sub = np.empty(n)
        if n >= 1:
            sub[0] = 2.0 * n * a
            sub[1:] = (n - np.arange(2, n + 1) + 1.0) * a
        return Tridiagonal(diag, sup, sub)
    if family is Family.EVEN_SINE:
        r = np.arange(1, n + 1)
        diag = (4.0 * r * r).astype(float)
        sup = (n + 1.0 + np.arange(1, n)) * a
        sub = (n - np.arange(2, n + 1) + 1.0) * a
        return Tridiagonal(diag, sup, sub)
    # odd families share all bands except the first diagonal entry
    r = np.arange(n + 1)
    diag = ((2.0 * r + 1.0) ** 2).astype(float)
    diag[0] = 1.0 + (n + 1.0) * a if family is Family.ODD_COSINE else 1.0 - (n + 1.0) * a
    sup = (n + 2.0 + np.arange(n)) * a
    sub = (n + 1.0 - np.arange(1, n + 1)) * a
    return Tridiagonal(diag, sup, sub)


def build_matrix(family: Family, n: int, a: float) -> Tridiagonal:
    """Tridiagonal matrix whose eigenpairs give the (family, n) solutions.

    ``a`` must be non-negative; n >= 1 for the even sine family and
    n >= 0 otherwise.
    """
    if a < 0:
        raise ValueError("a must be non-negative")
    return _build_matrix_signed(family, n, a)


@dataclass(frozen=True, eq=False)
class IncePolynomial:
    """One eigen-solution of (*): eigenvalue plus harmonic coefficients.

    ``k`` is the ascending-eigenvalue index (1..n for the even sine
    family, 0..n otherwise).  ``coeffs[r]`` multiplies the family's
    r-th harmonic; see :func:`harmonics` for the multipliers in z.
    """

    family: Family
    n: int
    k: int
    a: float
    eta: float
    coeffs: np.ndarray

    @property
    def q(self) -> int:
        return self.family.q_from_n(self.n)

    def harmonics(self) -> np.ndarray:
        """Integer harmonic multipliers m_r such that the terms are
        cos(m_r z) or sin(m_r z) with z = xi/2."""
        if self.family is Family.EVEN_COSINE:
            return 2 * np.arange(self.n + 1)
        if self.family is Family.EVEN_SINE:
            return 2 * np.arange(1, self.n + 1)
        return 2 * np.arange(self.n + 1) + 1

    def normalization_quadratic_form(self) -> float:
        """The family's quadratic form; equals 1 for a normalized solution."""
        return _quadratic_form(self.family, self.coeffs)


def _quadratic_form(family: Family, coeffs: np.ndarray) -> float:
    sq = coeffs * coeffs
    if family is Family.EVEN_COSINE:
        return float(2.0 * sq[0] + sq[1:].sum())
    return float(sq.sum())


def _normalize(family: Family, pair: EigenPair) -> np.ndarray:
    # Rescale the unit eigenvector so the period integral of w^2 is pi.
    coeffs = pair.vector / np.sqrt(_quadratic_form(family, pair.vector))
    return coeffs


def solve_family(family: Family, n: int, a: float) -> list[IncePolynomial]:
    """All polynomial solutions for one (family, n, a), ascending eta."""
    matrix = build_matrix(family, n, a)
    pairs = eigen_all(matrix)
    k0 = 1 if family is Family.EVEN_SINE else 0
    return [
        IncePolynomial(
            family=family,
            n=n,
            k=k0 + i,
            a=a,
            eta=pair.value,
            coeffs=_normalize(family, pair),
        )
        for i, pair in enumerate(pairs)
    ]


def evaluate(p: IncePolynomial, xi) -> np.ndarray | float:
    """w(z) at z = xi/2; accepts scalars or arrays of xi."""
    xi_arr = np.asarray(xi, dtype=float)
    z = 0.5 * xi_arr
    mz = np.multiply.outer(p.harmonics().astype(float), z)
    basis = np.cos(mz) if p.family.is_cosine else np.sin(mz)
    w = np.tensordot(p.coeffs, basis, axes=1)
    return float(w) if np.isscalar(xi) or xi_arr.ndim == 0 else w


def evaluate_deriv2(p: IncePolynomial, xi):
    """(w, w', w'') with derivatives taken with respect to z = xi/2.

    Derivatives are term-by-term analytic, not finite differences.
    """
    xi_arr = np.asarray(xi, dtype=float)
    z = 0.5 * xi_arr
    m = p.harmonics().astype(float)
    mz = np.multiply.outer(m, z)
    cos_mz, sin_mz = np.cos(mz), np.sin(mz)
    if p.family.is_cosine:
        w = np.tensordot(p.coeffs, cos_mz, axes=1)
        w1 = np.tensordot(-p.coeffs * m, sin_mz, axes=1)
        w2 = np.tensordot(-p.coeffs * m * m, cos_mz, axes=1)
    else:
        w = np.tensordot(p.coeffs, sin_mz, axes=1)
        w1 = np.tensordot(p.coeffs * m, cos_mz, axes=1)
        w2 = np.tensordot(-p.coeffs * m * m, sin_mz, axes=1)
    if np.isscalar(xi) or xi_arr.ndim == 0:
        return float(w), float(w1), float(w2)
    return w, w1, w2


def ode_residual(p: IncePolynomial, xi) -> np.ndarray | float:
    """|w'' + a sin(2z) w' + (eta - q a cos(2z)) w| at z = xi/2."""
    w, w1, w2 = evaluate_deriv2(p, xi)
    z = 0.5 * np.asarray(xi, dtype=float)
    res = np.abs(w2 + p.a * np.sin(2 * z) * w1 + (p.eta - p.q * p.a * np.cos(2 * z)) * w)
    return float(res) if np.isscalar(xi) or res.ndim == 0 else res


def recurrence_next_coeff(p: IncePolynomial) -> float:
    """Coefficient one step past the truncation, from the full recurrence.

    For a true solution the infinite three-term recurrence, evaluated at
    the computed eigenvalue with the computed coefficients, must produce
    a vanishing next coefficient; this returns that value.  Requires
    a > 0 (at a = 0 the recurrence does not couple neighbors).
    """
    if p.a <= 0:
        raise ValueError("truncation extension needs a > 0")
    c = p.coeffs
    n, a, eta = p.n, p.a, p.eta
    if p.family is Family.EVEN_COSINE:
        # row m = n of the infinite system:
        # (4n^2 - eta) A_n + a A_{n-1} + (2n+1) a A_{n+1} = 0
        prev = c[n - 1] if n >= 1 else 0.0
        return -((4.0 * n * n - eta) * c[n] + a * prev) / ((2.0 * n + 1.0) * a)
    if p.family is Family.EVEN_SINE:
        last, prev = c[n - 1], (c[n - 2] if n >= 2 else 0.0)
        return -((4.0 * n * n - eta) * last + a * prev) / ((2.0 * n + 1.0) * a)
    # odd families: ((2n+1)^2 - eta) C_n + a C_{n-1} + (2n+2) a C_{n+1} = 0
    prev = c[n - 1] if n >= 1 else 0.0
    return -(((2.0 * n + 1.0) ** 2 - eta) * c[n] + a * prev) / ((2.0 * n + 2.0) * a)


@dataclass(frozen=True, eq=False)
class OrthogonalityResult:
    """Weighted Gram matrix and unweighted norm diagnostics.

    ``gram[l, m]`` is the integral over z in [-pi, pi] of
    exp(-(a/2) cos 2z) w_l w_m; ``unweighted_diag[l]`` is the plain
    integral of w_l^2, which equals pi for normalized solutions.
    """

    gram: np.ndarray
    unweighted_diag: np.ndarray
    npoints: int


def orthogonality_matrix(solutions: list[IncePolynomial]) -> OrthogonalityResult:
    """Gram matrix of the weighted inner product over one period.

    All solutions must share (family, n, a).  Uses the periodic
    trapezoid rule on a uniform z grid, which is spectrally accurate
    for these trigonometric-times-entire integrands.
    """
    if not solutions:
        raise ValueError("need at least one solution")
    first = solutions[0]
    for s in solutions[1:]:
        if s.family is not first.family or s.n != first.n or s.a != first.a:
            raise ValueError("solutions must share family, n, and a")

    npoints = max(256, 16 * (first.n + 1))
    h = 2.0 * np.pi / npoints
    z = -np.pi + h * np.arange(npoints)
    values = np.vstack([evaluate(s, 2.0 * z) for s in solutions])
    weight = np.exp(-(first.a / 2.0) * np.cos(2.0 * z))
    gram = (values * weight) @ values.T * h
    unweighted_diag = np.einsum("ij,ij->i", values, values) * h
    return OrthogonalityResult(gram=gram, unweighted_diag=unweighted_diag, npoints=npoints)
