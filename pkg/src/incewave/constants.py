"""Physical constants used throughout the package.

All values come from :mod:`scipy.constants` (CODATA), so the numbers
below track whatever CODATA release the installed scipy carries.  The
package computes every derived quantity from these first-principles
constants; rounded literature coefficients appear only in tests, as
cross-checks.
"""

import math

from scipy import constants as _sc

#: speed of light in vacuum [m/s]
C = _sc.c

#: elementary charge [C]
E_CHARGE = _sc.elementary_charge

#: reduced Planck constant [J s]
HBAR = _sc.hbar

#: electron mass [kg]
M_ELECTRON = _sc.m_e

#: vacuum permittivity [F/m]
EPSILON_0 = _sc.epsilon_0

#: electron rest energy [eV]
MC2_EV = M_ELECTRON * C**2 / E_CHARGE

#: inverse reduced Compton wavelength m_e c / hbar [1/m]
KAPPA = M_ELECTRON * C / HBAR


def ev_to_angular_frequency(energy_ev: float) -> float:
    """Photon (or plasmon) energy in eV to angular frequency [rad/s]."""
    return energy_ev * E_CHARGE / HBAR


def angular_frequency_to_ev(omega: float) -> float:
    """Angular frequency [rad/s] to quantum energy [eV]."""
    return omega * HBAR / E_CHARGE


def field_amplitude_from_intensity(intensity_w_cm2: float) -> float:
    """Peak electric field [V/m] of a linearly polarized wave.

    Uses the vacuum relation I = eps0 c F0^2 / 2 with the intensity
    given in W/cm^2.
    """
    if intensity_w_cm2 < 0:
        raise ValueError("intensity must be non-negative")
    intensity_w_m2 = intensity_w_cm2 * 1e4
    return math.sqrt(2.0 * intensity_w_m2 / (EPSILON_0 * C))


def plasma_frequency_from_density(electron_density_cm3: float) -> float:
    """Electron plasma frequency [rad/s] from density in cm^-3."""
    if electron_density_cm3 <= 0:
        raise ValueError("electron density must be positive")
    n_m3 = electron_density_cm3 * 1e6
    return math.sqrt(n_m3 * E_CHARGE**2 / (EPSILON_0 * M_ELECTRON))


def density_from_plasma_frequency(omega_p: float) -> float:
    """Electron density [cm^-3] from plasma frequency [rad/s]."""
    if omega_p <= 0:
        raise ValueError("plasma frequency must be positive")
    n_m3 = omega_p**2 * EPSILON_0 * M_ELECTRON / E_CHARGE**2
    return n_m3 / 1e6
