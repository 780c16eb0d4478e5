"""From eigenvalues back to relativistic wave functions and momenta.

Conventions: metric (+, -, -, -); four-vectors are length-4 arrays of
contravariant components (p0, p1, p2, p3).  The wave propagates along
axis 2 (called y) and is polarized along axis 1 (called x); the third
spatial axis is called x3 to keep it apart from the phase variable
z = xi/2.  The test charge is an electron (negative), positive-energy
branch; the opposite charge is covered by the half-period symmetry of
the underlying equation.

The phase variable and the longitudinal coordinate are

    xi   = omega0 (t - n_m y / c),
    xhat = k0 (y - n_m c t) / kp,

and the conserved longitudinal momentum conjugate to xhat is
phat = k0 (p_y - n_m p_0) / kp.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import constants
from .core import DerivedParams, InceProblem
from .ince import IncePolynomial, evaluate
from .specialfns import envelope

__all__ = [
    "MassShell",
    "WhittakerHillParams",
    "MomentumState",
    "FrameVectors",
    "minkowski_dot",
    "wh_params",
    "decompose_four_vector",
    "reconstruct_four_vector",
    "momentum_spectrum",
    "wavefunction",
    "volkov_phase",
]


class MassShell(enum.Enum):
    """Mass-shell prescription for the longitudinal spectrum."""

    FREE = "free"          # p^2 = kappa^2
    DRESSED = "dressed"    # p^2 = kappa^2 + (eps A0)^2


def minkowski_dot(u, v) -> float:
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return float(u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3])


@dataclass(frozen=True, eq=False)
class FrameVectors:
    """Wave vector, complementary wave vector, and polarization axes.

    Satisfies k.k = kp^2, khat.khat = -kp^2, k.khat = 0, and e_i.k = 0;
    khat is space-like precisely because n_m < 1.
    """

    k: np.ndarray
    k_hat: np.ndarray
    e1: np.ndarray
    e2: np.ndarray

    @classmethod
    def from_medium(cls, k0: float, n_m: float) -> "FrameVectors":
        return cls(
            k=k0 * np.array([1.0, 0.0, n_m, 0.0]),
            k_hat=-k0 * np.array([n_m, 0.0, 1.0, 0.0]),
            e1=np.array([0.0, 1.0, 0.0, 0.0]),
            e2=np.array([0.0, 0.0, 0.0, 1.0]),
        )

    @classmethod
    def from_derived(cls, derived: DerivedParams) -> "FrameVectors":
        return cls.from_medium(derived.k0, derived.n_m)

    @property
    def kp(self) -> float:
        return math.sqrt(minkowski_dot(self.k, self.k))


def decompose_four_vector(p, frame: FrameVectors) -> tuple[float, float, float, float]:
    """Projections (k.p, khat.p, p.e1, p.e2) onto the frame."""
    return (
        minkowski_dot(frame.k, p),
        minkowski_dot(frame.k_hat, p),
        minkowski_dot(p, frame.e1),
        minkowski_dot(p, frame.e2),
    )


def reconstruct_four_vector(
    components: tuple[float, float, float, float], frame: FrameVectors
) -> np.ndarray:
    """Inverse of :func:`decompose_four_vector`.

    p = (k.p/k^2) k - (khat.p/k^2) khat - (p.e1) e1 - (p.e2) e2.
    """
    kp2 = minkowski_dot(frame.k, frame.k)
    k_p, khat_p, pe1, pe2 = components
    return (
        (k_p / kp2) * frame.k
        - (khat_p / kp2) * frame.k_hat
        - pe1 * frame.e1
        - pe2 * frame.e2
    )


@dataclass(frozen=True)
class WhittakerHillParams:
    """Dimensionless coefficients of the three-term periodic equation

        w'' + (theta0 + 2 theta1 cos 2z + 2 theta2 cos 4z) w = 0.

    theta2 is non-negative; its root sets the coupling a = 4 sqrt(theta2),
    and eta = theta0 + 2 theta2 is the eigenvalue of the reduced equation.
    """

    theta0: float
    theta1: float
    theta2: float

    @property
    def a(self) -> float:
        return 4.0 * math.sqrt(self.theta2)

    @property
    def eta(self) -> float:
        return self.theta0 + 2.0 * self.theta2


def wh_params(
    derived: DerivedParams, p_x: float, p_xi: float, p_squared: float
) -> WhittakerHillParams:
    """Three-term-equation parameters for given momentum projections.

    Parameters are the transverse momentum p_x [1/m], the projection
    p_xi = k.p [1/m^2], and the invariant p.p [1/m^2].  Electron branch:
    2 theta1 = -(q+1) a with q + 1 = 2 p_x / kp.

    Raises
    ------
    ValueError
        If kp = 0 (vacuum): the reduction to a periodic equation in
        z needs a nonzero invariant wave-vector square.
    """
    kp = derived.kp
    if kp == 0.0:
        raise ValueError("kp must be positive; the vacuum case has no "
                         "periodic reduction (use volkov_phase instead)")
    kp2 = kp * kp
    eps_a0_sq = derived.eps_a0**2
    theta2 = eps_a0_sq / kp2  # equals (a/4)^2
    theta1 = -(p_x / kp) * derived.a
    theta0 = (4.0 / kp2) * (
        p_xi * p_xi / kp2 - p_squared + derived.kappa**2 + eps_a0_sq / 2.0
    )
    return WhittakerHillParams(theta0=theta0, theta1=theta1, theta2=theta2)


@dataclass(frozen=True)
class MomentumState:
    """Momentum parameters attached to one eigen-solution.

    ``p_hat`` is the real longitudinal momentum when the radicand is
    non-negative; otherwise the state is evanescent, ``p_hat`` is None
    and ``p_hat_imag`` holds |Im p_hat| (the wave grows or decays like
    exp(+-|p_hat| xhat), admissible only in bounded interaction
    regions).  On the free shell an eigenvalue below (a/2)^2 makes
    p_xi imaginary; such gap states carry ``p_xi = None``.  p0 and p_y
    are populated only when both p_hat and p_xi are real.

    Wavenumber units (1/m) except ``pxi_ratio`` = 2 p_xi / kp^2 and the
    radicand, which are dimensionless.
    """

    p_x: float
    p_z: float
    kp: float
    k0: float
    n_m: float
    mass_shell: MassShell
    p_hat_radicand: float
    p_hat: float | None
    p_hat_imag: float | None
    pxi_ratio: float | None
    p_xi: float | None
    p0: float | None
    p_y: float | None
    evanescent: bool
    gap_state: bool

    def identity_residual(self) -> float:
        """|p0^2 - p_y^2 - (p_xi^2/kp^2 - p_hat^2)|, zero in exact arithmetic."""
        if self.p0 is None or self.p_hat is None:
            raise ValueError("identity needs a non-evanescent, non-gap state")
        lhs = self.p0**2 - self.p_y**2
        rhs = self.p_xi**2 / self.kp**2 - self.p_hat**2
        return abs(lhs - rhs)


def momentum_spectrum(
    eta: float,
    problem: InceProblem,
    derived: DerivedParams,
    p_z: float = 0.0,
    mass_shell: MassShell = MassShell.FREE,
    pxi_sign: int = 1,
) -> tuple[MomentumState, MomentumState]:
    """Momentum parameters for one eigenvalue; both p_hat signs.

    The longitudinal momentum is

        p_hat = +-(kp/2) sqrt(eta - (q+1)^2 - (2 p_z/kp)^2
                               - (2 kappa/kp)^2 - (a/2)^2),

    and the energy-type projection satisfies 2 p_xi / kp^2 =
    +-sqrt(eta - (a/2)^2) on the free shell, +-sqrt(eta) on the dressed
    shell.  The returned pair holds the (+, -) p_hat branches with the
    p_xi sign fixed by ``pxi_sign`` (positive by default).
    """
    if pxi_sign not in (1, -1):
        raise ValueError("pxi_sign must be +1 or -1")
    a, q = problem.a, problem.q
    kp, k0, n_m = derived.kp, derived.k0, derived.n_m
    kappa = derived.kappa
    p_x = (q + 1) * kp / 2.0

    radicand = (
        eta
        - (q + 1.0) ** 2
        - (2.0 * p_z / kp) ** 2
        - (2.0 * kappa / kp) ** 2
        - (a / 2.0) ** 2
    )
    pxi_radicand = eta - (a / 2.0) ** 2 if mass_shell is MassShell.FREE else eta

    evanescent = radicand < 0.0
    gap_state = pxi_radicand < 0.0
    pxi_ratio = None if gap_state else pxi_sign * math.sqrt(pxi_radicand)
    p_xi = None if gap_state else pxi_ratio * kp * kp / 2.0

    def make(sign: int) -> MomentumState:
        if evanescent:
            p_hat = None
            p_hat_imag = (kp / 2.0) * math.sqrt(-radicand)
        else:
            p_hat = sign * (kp / 2.0) * math.sqrt(radicand)
            p_hat_imag = None
        if evanescent or gap_state:
            p0 = p_y = None
        else:
            p0 = k0 * (p_xi / kp**2 + n_m * p_hat / kp)
            p_y = k0 * (n_m * p_xi / kp**2 + p_hat / kp)
        return MomentumState(
            p_x=p_x,
            p_z=p_z,
            kp=kp,
            k0=k0,
            n_m=n_m,
            mass_shell=mass_shell,
            p_hat_radicand=radicand,
            p_hat=p_hat,
            p_hat_imag=p_hat_imag,
            pxi_ratio=pxi_ratio,
            p_xi=p_xi,
            p0=p0,
            p_y=p_y,
            evanescent=evanescent,
            gap_state=gap_state,
        )

    return make(+1), make(-1)


def wavefunction(
    solution: IncePolynomial,
    state: MomentumState,
    derived: DerivedParams,
    t,
    x,
    y,
    x3,
    allow_evanescent: bool = False,
):
    """Complex wave-function value at the spacetime point (t, x, y, x3).

    The value is exp[i(phat xhat + p_x x + p_z x3)] times the real
    envelope exp[-(a/4) cos xi] times the polynomial factor, with
    xi = omega0 (t - n_m y/c) and xhat = k0 (y - n_m c t)/kp.  Its
    modulus does not depend on x, x3, or (for real phat) xhat.  The
    overall constant normalization is left open; only the periodic
    modulation is fixed by the coefficient convention.

    Evanescent states are rejected unless ``allow_evanescent`` is set,
    in which case the positive-imaginary branch exp(-|phat| xhat) is
    used (meaningful only over a bounded region).

    Accepts scalars or broadcastable arrays for the coordinates; times
    are seconds, lengths meters.
    """
    t = np.asarray(t, dtype=float)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    x3 = np.asarray(x3, dtype=float)
    c = constants.C
    omega0 = state.k0 * c
    xi = omega0 * (t - state.n_m * y / c)
    xhat = state.k0 * (y - state.n_m * c * t) / state.kp

    modulation = envelope(solution.a, xi) * evaluate(solution, xi)
    transverse_phase = np.exp(1j * (state.p_x * x + state.p_z * x3))
    if state.evanescent:
        if not allow_evanescent:
            raise ValueError(
                "evanescent state: wave function grows without bound along "
                "xhat; pass allow_evanescent=True for bounded-region studies"
            )
        longitudinal = np.exp(-state.p_hat_imag * xhat)
    else:
        longitudinal = np.exp(1j * state.p_hat * xhat)
    out = longitudinal * transverse_phase * modulation
    if all(np.ndim(v) == 0 for v in (t, x, y, x3)):
        return complex(out)
    return out


def volkov_phase(p, eps_a0: float, k0: float, xi):
    """Oscillating action integral of the vacuum plane-wave states.

    For the vacuum wave A = e1 A0 cos xi with k = k0(1, 0, 1, 0), the
    phase of the closed-form solution is p.x plus this integral,

        (1/(2 k.p)) * integral_0^xi [-2 eps p.A + eps^2 A^2] dxi',

    which evaluates in closed form (no quadrature):

        [2 (eps A0) p1 sin xi - (eps A0)^2 (xi/2 + sin(2 xi)/4)] / (2 k.p).

    ``eps_a0`` is the signed product eps*A0 [1/m] (negative for an
    electron); ``p`` holds contravariant components [1/m].

    Raises
    ------
    ValueError
        If k.p = 0 (light-like degeneracy).
    """
    p = np.asarray(p, dtype=float)
    k = k0 * np.array([1.0, 0.0, 1.0, 0.0])
    k_dot_p = minkowski_dot(k, p)
    if k_dot_p == 0.0:
        raise ValueError("k.p = 0: phase integral is singular")
    xi_arr = np.asarray(xi, dtype=float)
    integral = 2.0 * eps_a0 * p[1] * np.sin(xi_arr) - eps_a0**2 * (
        xi_arr / 2.0 + np.sin(2.0 * xi_arr) / 4.0
    )
    out = integral / (2.0 * k_dot_p)
    return float(out) if np.isscalar(xi) or xi_arr.ndim == 0 else out
