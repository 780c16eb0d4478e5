"""Physical inputs, derived dimensionless parameters, and problem descriptors.

The driving field is a linearly polarized monochromatic plane wave in a
dispersive medium with index of refraction below one (an underdense
plasma in the Drude picture).  Everything downstream is controlled by a
handful of dimensionless numbers, chief among them the coupling

    a = 4 |e/(hbar c)| A0 / k_p,

the work done by the electric force over a plasma wavelength divided by
the photon energy.  ``derive_params`` maps laboratory inputs (photon
energy, intensity, plasma density) to those numbers.

Units on the public surface are the laboratory ones: eV for quantum
energies, W/cm^2 for intensity, cm^-3 for densities.  Wavenumbers are
in 1/m.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import constants


class Family(enum.Enum):
    """The four trigonometric families of polynomial solutions.

    Even families pair with an even harmonic index parameter (q = 2n)
    and contain integer harmonics cos(r*xi) or sin(r*xi); odd families
    pair with q = 2n + 1 and contain half-integer harmonics
    cos((r + 1/2)*xi) or sin((r + 1/2)*xi).
    """

    EVEN_COSINE = "even_cosine"
    EVEN_SINE = "even_sine"
    ODD_COSINE = "odd_cosine"
    ODD_SINE = "odd_sine"

    @property
    def is_even(self) -> bool:
        return self in (Family.EVEN_COSINE, Family.EVEN_SINE)

    @property
    def is_cosine(self) -> bool:
        return self in (Family.EVEN_COSINE, Family.ODD_COSINE)

    def q_from_n(self, n: int) -> int:
        return 2 * n if self.is_even else 2 * n + 1

    def n_from_q(self, q: int) -> int:
        if self.is_even:
            if q % 2 != 0:
                raise ValueError(f"{self.value} requires even q, got {q}")
            return q // 2
        if q % 2 != 1:
            raise ValueError(f"{self.value} requires odd q, got {q}")
        return (q - 1) // 2

    def min_n(self) -> int:
        # The sine series over sin(2rz), r >= 1, is empty for n = 0.
        return 1 if self is Family.EVEN_SINE else 0

    def coeff_count(self, n: int) -> int:
        return n if self is Family.EVEN_SINE else n + 1


#: CLI / file-format names for the families, in the canonical order.
FAMILY_NAMES = tuple(f.value for f in Family)


def family_from_name(name: str) -> Family:
    try:
        return Family(name.strip().lower())
    except ValueError:
        raise ValueError(
            f"unknown family {name!r}; expected one of {', '.join(FAMILY_NAMES)}"
        ) from None


@dataclass(frozen=True)
class LaserPlasmaConfig:
    """Laboratory inputs for the laser-plasma system.

    Exactly one of ``electron_density_cm3`` / ``plasmon_energy_ev``
    must be given; the other is derived.

    Attributes
    ----------
    photon_energy_ev : float
        Photon energy hbar*omega0 of the wave, in eV.  Must be positive.
    intensity_w_cm2 : float
        Peak intensity I0 in W/cm^2.  Must be non-negative.
    electron_density_cm3 : float, optional
        Plasma electron density n_e in cm^-3.
    plasmon_energy_ev : float, optional
        Plasmon energy hbar*omega_p in eV.
    """

    photon_energy_ev: float
    intensity_w_cm2: float
    electron_density_cm3: float | None = None
    plasmon_energy_ev: float | None = None

    def __post_init__(self) -> None:
        if self.photon_energy_ev <= 0:
            raise ValueError("photon energy must be positive")
        if self.intensity_w_cm2 < 0:
            raise ValueError("intensity must be non-negative")
        given = (self.electron_density_cm3 is not None) + (
            self.plasmon_energy_ev is not None
        )
        if given != 1:
            raise ValueError(
                "exactly one of electron_density_cm3 or plasmon_energy_ev "
                "must be specified"
            )
        if self.electron_density_cm3 is not None and self.electron_density_cm3 <= 0:
            raise ValueError("electron density must be positive")
        if self.plasmon_energy_ev is not None and self.plasmon_energy_ev <= 0:
            raise ValueError("plasmon energy must be positive")


@dataclass(frozen=True)
class DerivedParams:
    """Dimensionless and spectral quantities derived from a config.

    Attributes
    ----------
    n_m : float
        Index of refraction, sqrt(1 - (omega_p/omega0)^2), in (0, 1).
    k0 : float
        Vacuum wavenumber omega0/c [1/m].
    kp : float
        Plasma wavenumber omega_p/c = k0*sqrt(1 - n_m^2) [1/m].
    a : float
        Fundamental coupling 4|e/(hbar c)| A0 / kp (dimensionless).
    mu0 : float
        Intensity parameter e F0 / (m c omega0) (dimensionless).
    n_ph : float
        Photon density I0/(c hbar omega0) [cm^-3].
    kappa : float
        m c / hbar [1/m].
    kappa_star : float
        Field-dressed mass parameter sqrt(kappa^2 + (eps A0)^2) [1/m].
    eps_a0 : float
        |e/(hbar c)| A0 = a*kp/4 [1/m], the field strength scale that
        enters the dressed mass shell.
    omega0, omega_p : float
        Angular frequencies [rad/s].
    plasmon_energy_ev, electron_density_cm3 : float
        The plasma spec with the derived member filled in.
    photon_energy_ev, intensity_w_cm2, field_amplitude_v_m : float
        Echo of the inputs plus the peak field F0 [V/m].
    """

    n_m: float
    k0: float
    kp: float
    a: float
    mu0: float
    n_ph: float
    kappa: float
    kappa_star: float
    eps_a0: float
    omega0: float
    omega_p: float
    plasmon_energy_ev: float
    electron_density_cm3: float
    photon_energy_ev: float
    intensity_w_cm2: float
    field_amplitude_v_m: float

    @property
    def lambda_p_m(self) -> float:
        """Plasma wavelength 2*pi/kp [m]."""
        return 2.0 * math.pi / self.kp


def derive_params(cfg: LaserPlasmaConfig) -> DerivedParams:
    """Map laboratory inputs to the derived parameters.

    All quantities are evaluated from CODATA constants; in particular
    the coupling ``a`` comes from its exact definition rather than from
    any rounded shortcut.

    Raises
    ------
    ValueError
        If the plasmon energy reaches or exceeds the photon energy
        (the wave would not propagate), or the config is invalid.
    """
    omega0 = constants.ev_to_angular_frequency(cfg.photon_energy_ev)
    if cfg.plasmon_energy_ev is not None:
        omega_p = constants.ev_to_angular_frequency(cfg.plasmon_energy_ev)
        plasmon_energy_ev = cfg.plasmon_energy_ev
        electron_density_cm3 = constants.density_from_plasma_frequency(omega_p)
    else:
        omega_p = constants.plasma_frequency_from_density(cfg.electron_density_cm3)
        plasmon_energy_ev = constants.angular_frequency_to_ev(omega_p)
        electron_density_cm3 = cfg.electron_density_cm3

    if omega_p >= omega0:
        raise ValueError(
            f"plasmon energy {plasmon_energy_ev:.6g} eV must be below the "
            f"photon energy {cfg.photon_energy_ev:.6g} eV for a "
            "propagating wave (n_m real, 0 < n_m < 1)"
        )

    ratio = omega_p / omega0
    n_m = math.sqrt(1.0 - ratio * ratio)
    k0 = omega0 / constants.C
    kp = omega_p / constants.C

    f0 = constants.field_amplitude_from_intensity(cfg.intensity_w_cm2)
    mu0 = constants.E_CHARGE * f0 / (constants.M_ELECTRON * constants.C * omega0)
    # a = 4 |eps| A0 / kp with eps = e/(hbar c), A0 = F0/k0:
    #     a = 4 e F0 / (hbar omega0 kp)
    a = 4.0 * constants.E_CHARGE * f0 / (constants.HBAR * omega0 * kp)
    eps_a0 = a * kp / 4.0
    kappa = constants.KAPPA
    kappa_star = math.hypot(kappa, eps_a0)

    intensity_w_m2 = cfg.intensity_w_cm2 * 1e4
    n_ph_m3 = intensity_w_m2 / (constants.C * constants.HBAR * omega0)
    n_ph = n_ph_m3 / 1e6

    return DerivedParams(
        n_m=n_m,
        k0=k0,
        kp=kp,
        a=a,
        mu0=mu0,
        n_ph=n_ph,
        kappa=kappa,
        kappa_star=kappa_star,
        eps_a0=eps_a0,
        omega0=omega0,
        omega_p=omega_p,
        plasmon_energy_ev=plasmon_energy_ev,
        electron_density_cm3=electron_density_cm3,
        photon_energy_ev=cfg.photon_energy_ev,
        intensity_w_cm2=cfg.intensity_w_cm2,
        field_amplitude_v_m=f0,
    )


@dataclass(frozen=True)
class InceProblem:
    """One instance of the periodic eigenvalue problem.

    The triple (a, q, family) fixes the equation

        w'' + a sin(2z) w' + (eta - q a cos(2z)) w = 0,

    whose polynomial solutions exist when q and the family parity
    agree: even families need q = 2n, odd families q = 2n + 1.

    Note the half-period symmetry z -> z + pi/2, a -> -a leaves the
    equation unchanged, so a < 0 never needs to be represented; the
    transformation maps even-family coefficients c_r -> (-1)^r c_r and
    swaps the two odd families.
    """

    a: float
    q: int
    family: Family

    def __post_init__(self) -> None:
        if self.a < 0:
            raise ValueError("a must be non-negative")
        if self.q < 0:
            raise ValueError("q must be a non-negative integer")
        n = self.family.n_from_q(self.q)  # validates parity
        if n < self.family.min_n():
            raise ValueError(
                f"{self.family.value} requires n >= {self.family.min_n()}"
            )

    @classmethod
    def from_n(cls, family: Family, n: int, a: float) -> "InceProblem":
        return cls(a=a, q=family.q_from_n(n), family=family)

    @property
    def n(self) -> int:
        return self.family.n_from_q(self.q)


def transverse_momentum(problem: InceProblem, derived: DerivedParams) -> float:
    """Quantized transverse momentum p_x = (q + 1) kp / 2 [1/m].

    For q = 2n this is (n + 1/2) kp; for q = 2n + 1 it is (n + 1) kp.
    """
    return (problem.q + 1) * derived.kp / 2.0
