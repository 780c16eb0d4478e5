"""Scaled modified Bessel functions and the envelope Fourier series.

The wave functions carry the factor exp[-(a/4) cos xi], whose Fourier
series is governed by modified Bessel functions of the first kind:

    exp[-(a/4) cos xi] = I_0(a/4) + 2 sum_{l>=1} I_l(a/4) cos[l(xi - pi)].

Raw I_l(x) overflows long before the interesting couplings run out
(a can reach a few 1e7), so everything is carried in the scaled form
I_l(x) e^{-x}, for which the generating-function identity reads

    values[0] + 2 sum_{l>=1} values[l] = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ScaledBesselRow",
    "bessel_i_scaled",
    "EnvelopeSeries",
    "envelope_fourier",
    "envelope",
    "normalized_envelope_sq",
]

_RESCALE_LIMIT = 1e250


@dataclass(frozen=True, eq=False)
class ScaledBesselRow:
    """values[l] = I_l(x) * exp(-x) for l = 0..max_order."""

    x: float
    max_order: int
    values: np.ndarray

    def sum_identity(self) -> float:
        """values[0] + 2*sum(values[1:]); equals 1 when the tail is tiny."""
        return float(self.values[0] + 2.0 * self.values[1:].sum())


def _miller_pass(x: float, max_order: int, start: int) -> np.ndarray:
    """One downward recurrence pass, normalized by the generating sum."""
    stored = np.zeros(max_order + 1)
    y_up = 0.0  # y_{l+1}
    y = 1e-30   # y_l, arbitrary seed; normalization removes it
    total = 0.0  # accumulates y_0 + 2*sum_{l>=1} y_l
    for l in range(start, 0, -1):
        if l <= max_order:
            stored[l] = y
        total += 2.0 * y
        y_prev = y_up + (2.0 * l / x) * y
        y_up, y = y, y_prev
        if abs(y) > _RESCALE_LIMIT:
            scale = 1.0 / abs(y)
            y *= scale
            y_up *= scale
            total *= scale
            if l <= max_order:
                stored[l:] *= scale
    stored[0] = y
    total += y
    return stored / total


def bessel_i_scaled(x: float, max_order: int) -> ScaledBesselRow:
    """Scaled modified Bessel functions I_l(x) e^{-x}, l = 0..max_order.

    Miller's downward recurrence normalized by the generating-function
    sum.  The start order begins at max_order + ceil(10 + 2*sqrt(max_order*x))
    and doubles until the normalized values stabilize to 1e-13.

    Raises
    ------
    ValueError
        For negative argument or order.
    """
    if x < 0:
        raise ValueError("argument must be non-negative")
    if max_order < 0:
        raise ValueError("max_order must be non-negative")
    values = np.zeros(max_order + 1)
    if x == 0.0:
        values[0] = 1.0
        return ScaledBesselRow(x=x, max_order=max_order, values=values)

    start = max_order + math.ceil(10.0 + 2.0 * math.sqrt(max_order * x))
    prev = _miller_pass(x, max_order, start)
    while True:
        start *= 2
        cur = _miller_pass(x, max_order, start)
        if np.abs(cur - prev).max() <= 1e-13:
            return ScaledBesselRow(x=x, max_order=max_order, values=cur)
        prev = cur


@dataclass(frozen=True, eq=False)
class EnvelopeSeries:
    """Cosine series of exp[-(a/4) cos xi] in overflow-safe scaled form.

    The true coefficients are c_l = coeffs_scaled[l] * exp(log_scale)
    with log_scale = a/4, so that

        exp[-(a/4) cos xi] = c_0 + 2 sum_{l>=1} c_l cos[l(xi - pi)].
    """

    a: float
    coeffs_scaled: np.ndarray
    log_scale: float

    @property
    def max_order(self) -> int:
        return self.coeffs_scaled.size - 1

    def reconstruct_scaled(self, xi) -> np.ndarray | float:
        """Partial sum times exp(-a/4), i.e. exp[-(a/4)(1 + cos xi)].

        Bounded by 1 for every a, so it never overflows.
        """
        xi_arr = np.asarray(xi, dtype=float)
        l = np.arange(1, self.coeffs_scaled.size, dtype=float)
        phases = np.multiply.outer(l, xi_arr - np.pi)
        out = self.coeffs_scaled[0] + 2.0 * np.tensordot(
            self.coeffs_scaled[1:], np.cos(phases), axes=1
        )
        return float(out) if np.isscalar(xi) or xi_arr.ndim == 0 else out

    def reconstruct(self, xi) -> np.ndarray | float:
        """The envelope exp[-(a/4) cos xi] itself (overflows past a ~ 2800)."""
        return np.exp(self.log_scale) * self.reconstruct_scaled(xi)


def _adaptive_order(x: float) -> int:
    # Tail estimate I_L(x)/I_0(x) < 1e-16: Gaussian decay exp(-L^2/2x)
    # for large x, super-factorial decay for small x.
    if x <= 1.0:
        return 25
    return int(math.ceil(math.sqrt(2.0 * x * 36.9))) + 15


def envelope_fourier(a: float, max_order: int | None = None) -> EnvelopeSeries:
    """Cosine-series coefficients of exp[-(a/4) cos xi].

    ``max_order`` defaults to an adaptive choice making the neglected
    tail smaller than 1e-16 relative to the leading coefficient.
    """
    if a < 0:
        raise ValueError("a must be non-negative")
    x = a / 4.0
    if max_order is None:
        max_order = _adaptive_order(x)
    row = bessel_i_scaled(x, max_order)
    return EnvelopeSeries(a=a, coeffs_scaled=row.values, log_scale=x)


def envelope(a: float, xi) -> np.ndarray | float:
    """exp[-(a/4) cos xi], the modulus envelope of the wave function."""
    return np.exp(-(a / 4.0) * np.cos(np.asarray(xi, dtype=float)))


def normalized_envelope_sq(a: float, xi) -> np.ndarray | float:
    """exp[-(a/2) cos xi] / e^{a/2} = exp[-(a/2)(1 + cos xi)].

    The squared envelope normalized to peak 1; its minimum over a
    period is exactly e^{-a}, reached at xi = 0 (mod 2 pi).
    """
    return np.exp(-(a / 2.0) * (1.0 + np.cos(np.asarray(xi, dtype=float))))
