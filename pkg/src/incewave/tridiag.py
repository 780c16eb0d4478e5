"""Real tridiagonal matrices and a robust eigensolver.

The matrices produced by the polynomial construction are not symmetric,
but every product of paired off-diagonal entries is positive, which
guarantees a real simple spectrum (the classical tridiagonal lemma).
``eigen_all`` makes that hypothesis structural: it rescales the matrix
to a symmetric tridiagonal by a diagonal similarity with off-diagonals
sqrt(sub*super), solves that by bisection plus inverse iteration
(LAPACK stebz/stein), and maps the eigenvectors back.

``char_poly`` and ``eigen_count_below`` provide an independent route to
the same spectrum (three-term determinant recurrence and Sturm counts);
``eigenvalues_by_bisection`` turns the Sturm count into a standalone
root finder used as a cross-check oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import scipy.linalg

__all__ = [
    "Tridiagonal",
    "EigenPair",
    "CharPolyResult",
    "char_poly",
    "eigen_count_below",
    "eigen_all",
    "eigenvalues_by_bisection",
    "residual_inf",
]

# Entries smaller than this times the largest component are treated as
# zero when fixing the sign of an eigenvector.
_SIGN_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Tridiagonal:
    """Real tridiagonal matrix stored as three bands.

    ``diag`` has length N, ``superdiag``/``subdiag`` length N - 1:
    ``superdiag[i]`` sits at (i, i+1), ``subdiag[i]`` at (i+1, i).
    """

    diag: np.ndarray
    superdiag: np.ndarray
    subdiag: np.ndarray

    def __post_init__(self) -> None:
        d = np.asarray(self.diag, dtype=float)
        up = np.asarray(self.superdiag, dtype=float)
        lo = np.asarray(self.subdiag, dtype=float)
        if d.ndim != 1 or d.size == 0:
            raise ValueError("diag must be a non-empty 1-d array")
        if up.shape != (d.size - 1,) or lo.shape != (d.size - 1,):
            raise ValueError("off-diagonal bands must have length N - 1")
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "superdiag", up)
        object.__setattr__(self, "subdiag", lo)

    @property
    def size(self) -> int:
        return self.diag.size

    def offdiag_products(self) -> np.ndarray:
        """Paired products subdiag[i]*superdiag[i], length N - 1."""
        return self.subdiag * self.superdiag

    def to_dense(self) -> np.ndarray:
        n = self.size
        m = np.zeros((n, n))
        m[np.arange(n), np.arange(n)] = self.diag
        if n > 1:
            m[np.arange(n - 1), np.arange(1, n)] = self.superdiag
            m[np.arange(1, n), np.arange(n - 1)] = self.subdiag
        return m

    def matvec(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        out = self.diag * v
        if self.size > 1:
            out[:-1] += self.superdiag * v[1:]
            out[1:] += self.subdiag * v[:-1]
        return out

    def norm_inf(self) -> float:
        n = self.size
        rows = np.abs(self.diag).copy()
        if n > 1:
            rows[:-1] += np.abs(self.superdiag)
            rows[1:] += np.abs(self.subdiag)
        return float(rows.max())


@dataclass(frozen=True, eq=False)
class EigenPair:
    """One eigenvalue with its unit-norm, sign-fixed eigenvector."""

    value: float
    vector: np.ndarray


class CharPolyResult(NamedTuple):
    det: float
    count_below: int | None


def char_poly(m: Tridiagonal, eta: float) -> CharPolyResult:
    """det(M - eta*I) and the Sturm count of eigenvalues below eta.

    The determinant follows the three-term recurrence
    d_k = (diag_k - eta) d_{k-1} - sub_k super_{k-1} d_{k-2}
    with power-of-two rescaling so intermediates never overflow; the
    true determinant may still exceed the double range, in which case
    +/-inf is returned.

    ``count_below`` comes from the Sturm sequence of the symmetrized
    matrix and is ``None`` when a negative off-diagonal product makes
    real symmetrization impossible.
    """
    beta = m.diag
    prod = m.offdiag_products() if m.size > 1 else np.empty(0)

    d_prev2, d_prev1 = 1.0, beta[0] - eta
    exponent = 0
    for k in range(1, m.size):
        d = (beta[k] - eta) * d_prev1 - prod[k - 1] * d_prev2
        d_prev2, d_prev1 = d_prev1, d
        amax = max(abs(d_prev1), abs(d_prev2))
        if amax > 2.0**512 or (0.0 < amax < 2.0**-512):
            _, e = math.frexp(amax)
            d_prev1 = math.ldexp(d_prev1, -e)
            d_prev2 = math.ldexp(d_prev2, -e)
            exponent += e
    try:
        det = math.ldexp(d_prev1, exponent)
    except OverflowError:
        det = math.inf * math.copysign(1.0, d_prev1)

    count: int | None
    if m.size > 1 and prod.min() < 0.0:
        count = None
    else:
        count = _sturm_count(beta, prod, eta)
    return CharPolyResult(det=det, count_below=count)


def _sturm_count(beta: np.ndarray, prod: np.ndarray, eta: float) -> int:
    """Number of eigenvalues below eta (inertia of M - eta*I).

    Zero pivots are clamped to -pivmin, the LAPACK convention: a pivot
    that vanishes exactly (eta hits an eigenvalue of a leading minor)
    counts as negative, and the clamp keeps the divisions bounded.
    """
    pivmin = 1e-300 * max(1.0, float(prod.max()) if prod.size else 0.0)
    count = 0
    q = float(beta[0]) - eta
    if q <= 0.0:
        count += 1
    for k in range(1, beta.size):
        if abs(q) < pivmin:
            q = -pivmin
        q = (float(beta[k]) - eta) - float(prod[k - 1]) / q
        if q <= 0.0:
            count += 1
    return count


def eigen_count_below(m: Tridiagonal, eta: float) -> int:
    """Sturm count of eigenvalues strictly below ``eta``.

    Requires all off-diagonal products to be non-negative.
    """
    if m.size > 1:
        prod = m.offdiag_products()
        if prod.min() < 0.0:
            raise ValueError(
                "negative off-diagonal product: matrix is not similar to a "
                "real symmetric tridiagonal"
            )
    else:
        prod = np.empty(0)
    return _sturm_count(m.diag, prod, eta)


def _symmetrize_scaling(sup: np.ndarray, sub: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Log-magnitudes and signs of the diagonal similarity D.

    D^-1 M D is symmetric with off-diagonals sqrt(sub*super); valid only
    when every product sub[i]*super[i] > 0.  Working with logs keeps the
    cumulative scale stable for long matrices.
    """
    ratio = sub / sup
    logd = np.concatenate(([0.0], np.cumsum(0.5 * np.log(np.abs(ratio)))))
    signs = np.concatenate(([1.0], np.cumprod(np.sign(sup))))
    return logd, signs


def _solve_block(
    diag: np.ndarray, sup: np.ndarray, sub: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Eigenpairs of one irreducible block (all products > 0).

    Returns ascending eigenvalues and the eigenvector matrix (columns)
    in the original non-symmetric basis, unit-normalized.
    """
    if diag.size == 1:
        return diag.copy(), np.ones((1, 1))
    offdiag = np.sqrt(sub * sup)
    values, sym_vecs = scipy.linalg.eigh_tridiagonal(
        diag, offdiag, lapack_driver="stebz"
    )
    logd, signs = _symmetrize_scaling(sup, sub)
    scale = signs * np.exp(logd - logd.max())
    vecs = scale[:, None] * sym_vecs
    vecs /= np.linalg.norm(vecs, axis=0)
    return values, vecs


def _fix_sign(vec: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(np.abs(vec) > _SIGN_TOL * np.abs(vec).max())
    lead = nz[0] if nz.size else 0
    return -vec if vec[lead] < 0.0 else vec


def _refine_vector(m: Tridiagonal, value: float, v0: np.ndarray) -> np.ndarray:
    """One or two inverse-iteration steps on the full matrix.

    Used when a zero off-diagonal product leaves blocks triangularly
    coupled, so a zero-padded block eigenvector is not yet an
    eigenvector of the full matrix.
    """
    n = m.size
    shift = value
    scale = m.norm_inf() + abs(value)
    v = v0.copy()
    for _ in range(3):
        ab = np.zeros((3, n))
        ab[0, 1:] = m.superdiag
        ab[1, :] = m.diag - shift
        ab[2, :-1] = m.subdiag
        try:
            w = scipy.linalg.solve_banded((1, 1), ab, v)
        except scipy.linalg.LinAlgError:
            shift = value + 1e-14 * scale
            continue
        nrm = np.linalg.norm(w)
        if not np.isfinite(nrm) or nrm == 0.0:
            shift = value + 1e-14 * scale
            continue
        v = w / nrm
        res = np.abs(m.matvec(v) - value * v).max()
        if res <= 1e-12 * scale:
            break
    return v


def eigen_all(m: Tridiagonal) -> list[EigenPair]:
    """All eigenpairs, values ascending.

    Requires every off-diagonal product to be non-negative.  Zero
    products split the matrix into blocks which are solved separately;
    strictly positive products give a strictly increasing spectrum.
    Eigenvectors have unit Euclidean norm and first significant entry
    positive.
    """
    n = m.size
    prod = m.offdiag_products() if n > 1 else np.empty(0)
    if n > 1 and prod.min() < 0.0:
        raise ValueError(
            "negative off-diagonal product: matrix is not similar to a "
            "real symmetric tridiagonal"
        )

    splits = np.flatnonzero(prod == 0.0)
    starts = np.concatenate(([0], splits + 1))
    stops = np.concatenate((splits + 1, [n]))
    # A zero product with a nonzero partner couples the blocks
    # triangularly: the spectrum still decouples, the vectors do not.
    coupled = any(
        m.superdiag[i] != 0.0 or m.subdiag[i] != 0.0 for i in splits
    )

    pairs: list[EigenPair] = []
    for lo, hi in zip(starts, stops):
        values, vecs = _solve_block(
            m.diag[lo:hi], m.superdiag[lo : hi - 1], m.subdiag[lo : hi - 1]
        )
        for j, value in enumerate(values):
            full = np.zeros(n)
            full[lo:hi] = vecs[:, j]
            if coupled:
                full = _refine_vector(m, float(value), full)
            pairs.append(EigenPair(value=float(value), vector=_fix_sign(full)))
    pairs.sort(key=lambda p: p.value)
    return pairs


def eigenvalues_by_bisection(m: Tridiagonal, rel_tol: float = 1e-13) -> np.ndarray:
    """All eigenvalues found purely through Sturm-count bisection.

    Independent of :func:`eigen_all`; serves as its oracle.  Brackets
    come from the Gershgorin disks of the symmetrized matrix.
    """
    n = m.size
    if n > 1:
        prod = m.offdiag_products()
        if prod.min() < 0.0:
            raise ValueError("negative off-diagonal product")
        e = np.sqrt(prod)
    else:
        e = np.empty(0)
    radius = np.zeros(n)
    if n > 1:
        radius[:-1] += e
        radius[1:] += e
    lo = float((m.diag - radius).min())
    hi = float((m.diag + radius).max())
    span = max(hi - lo, 1.0)
    lo -= 1e-12 * span
    hi += 1e-12 * span

    values = np.empty(n)
    for k in range(n):
        a, b = lo, hi
        while b - a > rel_tol * max(1.0, abs(a), abs(b)):
            mid = 0.5 * (a + b)
            if mid in (a, b):
                break
            if eigen_count_below(m, mid) >= k + 1:
                b = mid
            else:
                a = mid
        values[k] = 0.5 * (a + b)
    return values


def residual_inf(m: Tridiagonal, pair: EigenPair) -> float:
    """Max-norm residual |M v - value v| of an eigenpair."""
    return float(np.abs(m.matvec(pair.vector) - pair.value * pair.vector).max())
