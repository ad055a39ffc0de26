"""Shared numerical substrate: truncation control, tagged samples, quadrature.

Every series in the package is a Gaussian-weighted sum over odd harmonic
indices 2k+1.  ``cutoff_for`` turns an inverse-temperature-like width and a
tolerance into the smallest admissible index window, so truncation error is
budgeted in exactly one place.  ``FieldSample`` carries field values together
with a tag for the points where a field is genuinely undefined (poles at
density zeros, 0/0 nodes); downstream code never emits fake large numbers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional

__all__ = [
    "Truncation",
    "TruncationOverflowError",
    "NonIntegrableSampleError",
    "FieldTag",
    "FieldSample",
    "DEFAULT_TRUNCATION",
    "cutoff_for",
    "integrate",
    "finite_diff",
]


class TruncationOverflowError(RuntimeError):
    """No cutoff within max_index satisfies the tail bound."""


class NonIntegrableSampleError(ValueError):
    """A quadrature node inside the open interval evaluated to a non-finite value."""


@dataclass(frozen=True)
class Truncation:
    """Tail-bound policy for the Gaussian-weighted harmonic sums.

    ``tol`` bounds the first discarded weight relative to the leading weight
    of the sum, so accuracy is relative and uniform in the width parameter.
    ``max_index`` is a hard cap on the harmonic index; if the bound cannot be
    met below it, evaluation fails loudly instead of silently degrading.
    """

    tol: float = 1e-14
    max_index: int = 4096

    def __post_init__(self) -> None:
        if not (0.0 < self.tol < 1.0):
            raise ValueError(f"tol must lie in (0, 1), got {self.tol!r}")
        if int(self.max_index) != self.max_index or self.max_index < 1:
            raise ValueError(f"max_index must be a positive integer, got {self.max_index!r}")


DEFAULT_TRUNCATION = Truncation()


class FieldTag(enum.Enum):
    """Classification of a field sample."""

    FINITE = "finite"
    POLE = "pole"
    NODE_UNDEFINED = "node-undefined"

    def __str__(self) -> str:  # serialized form used by the CLI
        return self.value


@dataclass(frozen=True)
class FieldSample:
    """A field value together with its definedness tag.

    The value is a finite float exactly when ``tag`` is FINITE; pole and
    node-undefined samples carry NaN so accidental arithmetic poisons the
    result instead of fabricating numbers.
    """

    value: float
    tag: FieldTag = FieldTag.FINITE

    def __post_init__(self) -> None:
        finite = math.isfinite(self.value)
        if finite != (self.tag is FieldTag.FINITE):
            raise ValueError(f"value {self.value!r} inconsistent with tag {self.tag}")

    @property
    def is_finite(self) -> bool:
        return self.tag is FieldTag.FINITE


def _satisfies_tail_bound(k: int, beta: float, tol: float) -> bool:
    # exp(-(pi*beta/4)(2k+1)^2) <= tol * exp(-pi*beta/2), compared in logs
    return math.pi * beta / 4.0 * (2 * k + 1) ** 2 >= math.pi * beta / 2.0 + math.log(1.0 / tol)


def cutoff_for(beta: float, trunc: Truncation = DEFAULT_TRUNCATION) -> int:
    """Smallest index K whose first discarded Gaussian weight is below tolerance.

    The governing weights are exp(-(pi*beta/4)(2k+1)^2); the returned K is the
    smallest integer with exp(-(pi*beta/4)(2K+1)^2) <= tol * exp(-pi*beta/2),
    i.e. (2K+1)^2 >= 2 + (4/(pi*beta)) ln(1/tol).  Monotone: smaller beta or
    smaller tol never shrink K.
    """
    if not (beta > 0.0) or not math.isfinite(beta):
        raise ValueError(f"beta must be a positive finite number, got {beta!r}")
    rhs = 2.0 + 4.0 * math.log(1.0 / trunc.tol) / (math.pi * beta)
    k = max(1, math.ceil((math.sqrt(rhs) - 1.0) / 2.0))
    # the closed form can be off by one ulp either way; settle it exactly
    while k > 1 and _satisfies_tail_bound(k - 1, beta, trunc.tol):
        k -= 1
    while not _satisfies_tail_bound(k, beta, trunc.tol):
        k += 1
    if k > trunc.max_index:
        raise TruncationOverflowError(
            f"truncation overflow: required cutoff {k} exceeds max_index "
            f"{trunc.max_index} (beta={beta}, tol={trunc.tol})"
        )
    return k


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    n_panels: int,
    *,
    fa: Optional[float] = None,
    fb: Optional[float] = None,
) -> float:
    """Composite Simpson quadrature on [a, b] with ``n_panels`` parabolic panels.

    Convergence order 4 on smooth integrands (halving the panel width shrinks
    the error by ~16x).  Endpoint samples may be supplied as one-sided limits
    via ``fa``/``fb`` when the integrand is singular exactly at a boundary;
    all interior samples must be finite.
    """
    if n_panels < 1:
        raise ValueError(f"n_panels must be >= 1, got {n_panels}")
    if not (b > a):
        raise ValueError(f"need b > a, got [{a}, {b}]")
    n = 2 * n_panels
    h = (b - a) / n
    total = 0.0
    for i in range(n + 1):
        x = a + i * h
        if i == 0 and fa is not None:
            y = fa
        elif i == n and fb is not None:
            y = fb
        else:
            y = float(f(x))
        if not math.isfinite(y):
            raise NonIntegrableSampleError(f"non-integrable sample at x={x!r}: {y!r}")
        if i == 0 or i == n:
            w = 1.0
        elif i % 2 == 1:
            w = 4.0
        else:
            w = 2.0
        total += w * y
    return total * h / 3.0


def finite_diff(f: Callable[[float], float], x: float, order: int, h: float) -> float:
    """Central finite difference of derivative ``order`` (1 or 2), accuracy O(h^2)."""
    if order not in (1, 2):
        raise ValueError(f"order must be 1 or 2, got {order}")
    if not (h > 0.0):
        raise ValueError(f"h must be positive, got {h}")
    fp = float(f(x + h))
    fm = float(f(x - h))
    if order == 1:
        samples = (fp, fm)
        result = (fp - fm) / (2.0 * h)
    else:
        fc = float(f(x))
        samples = (fp, fc, fm)
        result = (fp - 2.0 * fc + fm) / (h * h)
    if not all(math.isfinite(s) for s in samples):
        raise ValueError(f"non-finite stencil sample near x={x!r}")
    return result
