"""Shared helpers for the test suite."""

import math

from incewave.core import DerivedParams


def make_derived(
    n_m: float = 0.6,
    k0: float = 1.25,
    a: float = 0.0,
    kappa: float = 2.0,
    mu0: float = 0.0,
) -> DerivedParams:
    """Synthetic parameter set with clean numbers for unit tests.

    kp follows from (k0, n_m); eps_a0 and kappa_star follow from (a, kp,
    kappa).  Quantities irrelevant to the test at hand are filled with
    consistent placeholders.
    """
    kp = k0 * math.sqrt(1.0 - n_m * n_m)
    eps_a0 = a * kp / 4.0
    return DerivedParams(
        n_m=n_m,
        k0=k0,
        kp=kp,
        a=a,
        mu0=mu0,
        n_ph=0.0,
        kappa=kappa,
        kappa_star=math.hypot(kappa, eps_a0),
        eps_a0=eps_a0,
        omega0=k0 * 2.99792458e8,
        omega_p=kp * 2.99792458e8,
        plasmon_energy_ev=1.0,
        electron_density_cm3=1.0,
        photon_energy_ev=1.0,
        intensity_w_cm2=0.0,
        field_amplitude_v_m=0.0,
    )
