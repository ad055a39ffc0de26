"""Gaussian-weighted harmonic tables behind every space-time field.

All densities and moments here are lattice sums over index pairs (n, k) with
weights exp(-(pi*beta/4)[(2n+1)^2 + (2k+1)^2]) and phases built from

    G(x, t) = pi*(2*mu*x/l + 1) - (pi*t/T_mu)*(n + k + 1).

Substituting s = n + k + 1 (the momentum label of the phase-space comb) and
j = k - n (the harmonic order of the phase) factorizes the weight into
exp(-(pi*beta/2)(s^2 + j^2)) on the lattice {s + j odd}, and the index window
becomes the diamond |s| + |j| <= 2K + 1 with K from the truncation policy.
Folding the sign pairs (+-s, +-j) turns every moment into a short sum of
products cos/sin(j*u) * cos/sin(j*s*w) with u = pi*(2*mu*x/l + 1) and
w = (pi/T_mu)*t, which keeps the parity cancellations (zero flux at t = 0 and
at the walls) exact in floating point.

Weights are rescaled by the leading term exp(-pi*beta/2) throughout, matching
``wavefunction.scaled_norm_sum``, so every normalized field stays
representable for arbitrarily large beta.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .numerics import DEFAULT_TRUNCATION, Truncation, cutoff_for
from .wavefunction import (
    NATURAL_UNITS,
    QuantumState,
    SystemParams,
    derived_scales,
    scaled_norm_sum,
)

__all__ = ["TermTable", "CombRows", "build_table", "folded_sum", "comb_rows"]

# points per evaluation chunk, bounding the (terms x points) trig workspaces
_CHUNK_BUDGET = 1 << 21


@dataclass(frozen=True)
class TermTable:
    """Folded (|s|, |j|) term table for one (state, truncation) pair.

    ``w`` holds the scaled Gaussian weight including the sign-fold
    multiplicity; ``norm`` is the scaled normalization sum
    N(beta)/(l*exp(-pi*beta/2)); ``m_max`` = 2K+1 bounds |s| and |j|.
    """

    sigma: np.ndarray
    iota: np.ndarray
    w: np.ndarray
    m_max: int
    norm: float


def build_table(state: QuantumState, trunc: Truncation = DEFAULT_TRUNCATION) -> TermTable:
    return _cached_table(state, trunc)


@functools.lru_cache(maxsize=64)
def _cached_table(state: QuantumState, trunc: Truncation) -> TermTable:
    # cached per (state, truncation); the arrays are treated as immutable
    cutoff = cutoff_for(state.beta, trunc)
    m_max = 2 * cutoff + 1
    sigmas, iotas = [], []
    for sg in range(m_max + 1):
        for it in range((sg + 1) % 2, m_max - sg + 1, 2):
            sigmas.append(sg)
            iotas.append(it)
    sigma = np.array(sigmas, dtype=np.int64)
    iota = np.array(iotas, dtype=np.int64)
    order = np.argsort(sigma * sigma + iota * iota, kind="stable")  # center-out
    sigma, iota = sigma[order], iota[order]
    fold = np.where(sigma > 0, 2.0, 1.0) * np.where(iota > 0, 2.0, 1.0)
    w = fold * np.exp(
        -math.pi * state.beta / 2.0 * (sigma.astype(float) ** 2 + iota.astype(float) ** 2 - 1.0)
    )
    return TermTable(
        sigma=sigma, iota=iota, w=w, m_max=m_max, norm=scaled_norm_sum(state, trunc)
    )


def _phase_coords(x, t, state: QuantumState, sys: SystemParams):
    """Flattened u = pi*(2*mu*x/l + 1), w = (pi/T_mu)*t, and their broadcast shape."""
    scales = derived_scales(state, sys)
    xa = np.asarray(x, dtype=float)
    ta = np.asarray(t, dtype=float)
    u = math.pi * (2.0 * state.mu * xa / sys.l + 1.0)
    w = math.pi / scales.T_mu * ta
    u, w = np.broadcast_arrays(u, w)
    shape = np.shape(u)
    return np.ravel(u), np.ravel(w), shape


def folded_sum(
    table: TermTable,
    x,
    t,
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    s_power: int = 0,
    j_power: int = 0,
    trig: str = "cos",
) -> np.ndarray | float:
    """Scaled lattice sum  sum_{s,j} W(s,j) * s^a * j^b * trig(j * G_s(x, t)).

    ``trig`` is applied to the unfolded phase j*G_s; parity demands b even for
    cos sums and b odd for sin sums (the opposite combinations vanish
    identically).  Broadcasts over x and t; scalar inputs return a float.
    The result carries the exp(+pi*beta/2) rescaling of the table weights.
    """
    a, b = s_power, j_power
    if trig == "cos":
        if b % 2 != 0:
            raise ValueError("cos sums need an even j_power (odd ones vanish)")
    elif trig == "sin":
        if b % 2 != 1:
            raise ValueError("sin sums need an odd j_power (even ones vanish)")
    else:
        raise ValueError(f"trig must be 'cos' or 'sin', got {trig!r}")

    uf, wf, shape = _phase_coords(x, t, state, sys)

    sf = table.sigma.astype(float)
    jf = table.iota.astype(float)
    coeff = table.w * sf**a * jf**b
    keep = coeff != 0.0  # sigma^a kills sigma=0 rows for a >= 1
    coeff, sf_k, jf_k = coeff[keep], sf[keep], jf[keep]
    js = jf_k * sf_k

    # fold rule: which trig hits the u angle and which the time angle
    #   cos, a even: cosU*cosT   cos, a odd: sinU*sinT
    #   sin, a even: sinU*cosT   sin, a odd: -cosU*sinT
    u_is_cos = (trig == "cos") == (a % 2 == 0)
    t_is_cos = a % 2 == 0
    sign = -1.0 if (trig == "sin" and a % 2 == 1) else 1.0

    n_terms = coeff.size
    out = np.empty(uf.size, dtype=float)
    chunk = max(1, _CHUNK_BUDGET // max(1, n_terms))
    for lo in range(0, uf.size, chunk):
        hi = min(lo + chunk, uf.size)
        ang_u = np.multiply.outer(jf_k, uf[lo:hi])
        ang_t = np.multiply.outer(js, wf[lo:hi])
        fu = np.cos(ang_u, out=ang_u) if u_is_cos else np.sin(ang_u, out=ang_u)
        ft = np.cos(ang_t, out=ang_t) if t_is_cos else np.sin(ang_t, out=ang_t)
        fu *= ft
        out[lo:hi] = coeff @ fu
    if sign < 0:
        out = -out
    out = out.reshape(shape)
    if out.ndim == 0:
        return float(out)
    return out


@dataclass(frozen=True)
class CombRows:
    """Momentum-resolved rows C_s of the comb at fixed points, scaled like TermTable.

    ``plus[q]`` and ``minus[q]`` hold the rows for s = +sigmas[q] and
    s = -sigmas[q]; the sigma = 0 row appears once (in ``plus``) with
    ``minus[0]`` zeroed so moment formulas can sum both arrays uniformly.
    """

    sigmas: np.ndarray
    plus: np.ndarray
    minus: np.ndarray
    norm: float
    m_max: int


def comb_rows(
    x,
    t,
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    trunc: Truncation = DEFAULT_TRUNCATION,
) -> CombRows:
    """Evaluate every comb row C_s via the Chebyshev route.

    Each row is sum_j W(s,j) T_|j|(cos G_s) with the polynomials expanded by
    the recurrence T_{n+1} = 2c T_n - T_{n-1}; an evaluation path independent
    of the direct cos(j*G_s) sums, used for two-route consistency checks.
    """
    cutoff = cutoff_for(state.beta, trunc)
    m_max = 2 * cutoff + 1
    uf, wf, shape = _phase_coords(x, t, state, sys)
    beta = state.beta

    sigmas = np.arange(m_max + 1)
    plus = np.zeros((m_max + 1, uf.size))
    minus = np.zeros((m_max + 1, uf.size))
    for sg in range(m_max + 1):
        j_lo = (sg + 1) % 2
        j_hi = m_max - sg
        weights = {
            it: (2.0 if it > 0 else 1.0)
            * math.exp(-math.pi * beta / 2.0 * (sg * sg + it * it - 1.0))
            for it in range(j_lo, j_hi + 1, 2)
        }
        targets = (uf - sg * wf,) if sg == 0 else (uf - sg * wf, uf + sg * wf)
        for which, ang in enumerate(targets):
            c = np.cos(ang)
            t_prev = np.ones_like(c)
            t_cur = c.copy()
            acc = np.zeros_like(c)
            if 0 in weights:
                acc += weights[0] * t_prev
            if 1 in weights:
                acc += weights[1] * t_cur
            for it in range(2, j_hi + 1):
                t_prev, t_cur = t_cur, 2.0 * c * t_cur - t_prev
                if it in weights:
                    acc += weights[it] * t_cur
            (plus if which == 0 else minus)[sg] = acc
    norm = scaled_norm_sum(state, trunc)
    return CombRows(
        sigmas=sigmas,
        plus=plus.reshape((m_max + 1, *shape)),
        minus=minus.reshape((m_max + 1, *shape)),
        norm=norm,
        m_max=m_max,
    )
