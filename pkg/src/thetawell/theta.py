"""Jacobi theta functions with characteristics.

``theta_char`` evaluates the two-parameter lattice sum

    theta[a, b](z, tau) = sum_k exp(pi*i*tau*(k+a)^2 + 2*pi*i*(z+b)(k+a)),

absolutely convergent for Im(tau) > 0.  ``theta1`` is the odd member used by
the well wavefunction; this module fixes its sign as

    theta1(z, tau) = -theta[1/2, 1/2](z, tau),

the convention under which theta1 is odd in z with simple zeros on the lattice
z = m + n*tau.  (The opposite overall sign also appears in the literature; it
cancels in every squared-modulus quantity, but a single convention is applied
consistently here and callers that need the raw positive series use
``theta_char`` directly.)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import DEFAULT_TRUNCATION, Truncation, cutoff_for

__all__ = ["ThetaArgs", "theta_char", "theta1", "heat_identity_residual"]

_TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class ThetaArgs:
    """Arguments of a theta evaluation: characteristics (a, b), point z, modulus tau."""

    a: float
    b: float
    z: complex
    tau: complex

    def __post_init__(self) -> None:
        if not (complex(self.tau).imag > 0.0):
            raise ValueError(f"Im(tau) must be positive, got tau={self.tau!r}")


def _index_window(a: float, cutoff: int) -> np.ndarray:
    """Integer indices with |k + a| <= cutoff + 1/2, ordered center-out.

    The window is symmetric about the weight center k = -a, which keeps the
    pair cancellations (k vs -k-1 for half-integer a) exact at the boundary.
    """
    lo = math.ceil(-a - cutoff - 0.5)
    hi = math.floor(-a + cutoff + 0.5)
    ks = np.arange(lo, hi + 1)
    order = np.argsort(np.abs(ks + a), kind="stable")
    return ks[order]


def theta_char(args: ThetaArgs, trunc: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Evaluate the theta series, truncated per the tail-bound policy.

    Characteristics are reduced modulo 1 in ``a`` (an exact symmetry of the
    sum) so the Gaussian weight center stays inside the index window.  Terms
    are summed center-out, largest magnitude first.
    """
    shift = round(args.a)
    a = args.a - shift  # a in [-1/2, 1/2], series invariant under integer shifts
    b = args.b
    z = complex(args.z)
    tau = complex(args.tau)
    cutoff = cutoff_for(tau.imag, trunc)
    ks = _index_window(a, cutoff)
    ka = ks + a
    exponent = 1j * math.pi * tau * ka * ka + _TWO_PI_I * (z + b) * ka
    return complex(np.sum(np.exp(exponent)))


def theta1(z: complex, tau: complex, trunc: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Odd theta function, theta1(z, tau) = -theta[1/2, 1/2](z, tau).

    Odd in z, with zeros at z = m + n*tau for integer m, n.
    """
    return -theta_char(ThetaArgs(0.5, 0.5, z, tau), trunc)


def heat_identity_residual(
    args: ThetaArgs, h: float, trunc: Truncation = DEFAULT_TRUNCATION
) -> float:
    """Finite-difference residual of the heat-kernel identity d2θ/dz2 = 4πi dθ/dτ.

    The z second derivative uses a real central step h; the tau derivative
    steps along the imaginary direction (holomorphy makes the direction
    immaterial), which requires Im(tau) - h > 0 so every evaluation converges.
    Residual shrinks as O(h^2) down to the series-truncation floor.
    """
    if not (h > 0.0):
        raise ValueError(f"h must be positive, got {h}")
    tau = complex(args.tau)
    if not (tau.imag - h > 0.0):
        raise ValueError(f"need Im(tau) - h > 0, got tau={tau!r}, h={h}")

    def at(z: complex, t: complex) -> complex:
        return theta_char(ThetaArgs(args.a, args.b, z, t), trunc)

    z = complex(args.z)
    d2z = (at(z + h, tau) - 2.0 * at(z, tau) + at(z - h, tau)) / (h * h)
    dtau = (at(z, tau + 1j * h) - at(z, tau - 1j * h)) / (2j * h)
    return abs(d2z - 4j * math.pi * dtau)
