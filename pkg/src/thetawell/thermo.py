"""Gibbs-distribution layer: partition sum, mean energy, entropy, quantum potential.

The Gaussian weights of the well state are exactly a Gibbs distribution over
wave-number modes kappa = (pi*mu/l)(2k+1) with mode energies
E_kappa = E_mu (2k+1)^2 at thermodynamic inverse temperature

    beta_thermo = pi*beta / (2*E_mu),

so beta_thermo * E_kappa = (pi*beta/2)(2k+1)^2 depends on the solution
parameter beta alone.  Every statistical quantity here (partition sum, mean
energy in units of E_mu, entropy) is therefore independent of the level mu and
of the system units; energies re-enter only through the factor E_mu.

Entropy is measured in units of k_B with the additive constant fixed to
-k_B ln 2, the choice that sends the entropy to zero in the frozen
(beta -> infinity) two-mode limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .density import averaged_density, density_derivatives
from .numerics import DEFAULT_TRUNCATION, FieldSample, FieldTag, Truncation, integrate
from .phase_space import DENSITY_FLOOR, kinetic_energy_density
from .series import build_table
from .theta import ThetaArgs, theta_char
from .wavefunction import (
    NATURAL_UNITS,
    QuantumState,
    SystemParams,
    _odd_harmonics,
    derived_scales,
    scaled_norm_sum,
)

__all__ = [
    "GibbsParams",
    "WaveNumberMode",
    "gibbs_params",
    "partition",
    "partition_theta_form",
    "gibbs_weights",
    "mean_energy_gibbs",
    "entropy",
    "entropy_from_factor",
    "quantum_potential",
    "quantum_potential_gradient",
    "avg_energy_profile",
    "double_avg_energy",
]


@dataclass(frozen=True)
class GibbsParams:
    """Thermodynamic inverse temperature and its reciprocal temperature.

    beta_thermo carries units 1/energy; tau_temp = 1/beta_thermo.
    """

    beta_thermo: float
    tau_temp: float

    def __post_init__(self) -> None:
        if not (self.beta_thermo > 0.0 and math.isfinite(self.beta_thermo)):
            raise ValueError(f"beta_thermo must be positive and finite, got {self.beta_thermo!r}")
        if not math.isclose(self.tau_temp * self.beta_thermo, 1.0, rel_tol=1e-12):
            raise ValueError("tau_temp must be the reciprocal of beta_thermo")


@dataclass(frozen=True)
class WaveNumberMode:
    """One Gibbs mode: index k, signed wave number kappa, mode energy E_kappa."""

    k: int
    kappa: float
    E_kappa: float


def gibbs_params(state: QuantumState, sys: SystemParams = NATURAL_UNITS) -> GibbsParams:
    """Thermodynamic parameters equivalent to the state's width beta."""
    scales = derived_scales(state, sys)
    bt = math.pi * state.beta / (2.0 * scales.E_mu)
    return GibbsParams(beta_thermo=bt, tau_temp=1.0 / bt)


def _base_energy(gp: GibbsParams, state: QuantumState) -> float:
    """E_mu recovered from (gp, state): beta_thermo * E_mu = pi*beta/2."""
    return math.pi * state.beta / (2.0 * gp.beta_thermo)


def _check_consistent(gp: GibbsParams, state: QuantumState, sys: SystemParams) -> None:
    scales = derived_scales(state, sys)
    if not math.isclose(gp.beta_thermo * scales.E_mu, math.pi * state.beta / 2.0, rel_tol=1e-9):
        raise ValueError(
            "GibbsParams inconsistent with (state, sys): "
            f"beta_thermo*E_mu={gp.beta_thermo * scales.E_mu!r} vs pi*beta/2={math.pi * state.beta / 2.0!r}"
        )


def _scaled_mode_sums(state: QuantumState, trunc: Truncation) -> tuple[float, float]:
    """(S0, S2): sums of exp(-(pi*beta/2)(m^2-1)) and m^2 * same, over odd m > 0."""
    m = _odd_harmonics(state.beta, trunc)
    w = np.exp(-math.pi * state.beta / 2.0 * (m * m - 1.0))
    return float(np.sum(w)), float(np.sum(m * m * w))


def partition(
    gp: GibbsParams,
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    trunc: Truncation = DEFAULT_TRUNCATION,
) -> float:
    """Partition sum Z = sum over modes of exp(-beta_thermo * E_kappa).

    Summed directly over the signed mode list; equals the normalization
    constant divided by the well width.  Raises ValueError if ``gp`` does not
    match the state's beta (they parametrize the same distribution).
    """
    _check_consistent(gp, state, sys)
    scales = derived_scales(state, sys)
    m = _odd_harmonics(state.beta, trunc)
    return 2.0 * float(np.sum(np.exp(-gp.beta_thermo * scales.E_mu * m * m)))


def partition_theta_form(
    gp: GibbsParams,
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    trunc: Truncation = DEFAULT_TRUNCATION,
) -> float:
    """Partition sum evaluated as the half-characteristic theta series.

    Z = theta[1/2,1/2](-1/2, tau) with tau = i*(4*E_mu/pi)*beta_thermo = 2i*beta:
    the lattice sum collapses to sum_k exp(-(pi*beta/2)(2k+1)^2), the same
    quantity by an exact rearrangement.  Note this is minus ``theta.theta1``
    under the package's sign convention.
    """
    _check_consistent(gp, state, sys)
    scales = derived_scales(state, sys)
    tau = 1j * (4.0 * scales.E_mu / math.pi) * gp.beta_thermo
    val = theta_char(ThetaArgs(a=0.5, b=0.5, z=-0.5, tau=tau), trunc)
    return float(val.real)


def gibbs_weights(
    gp: GibbsParams,
    state: QuantumState,
    trunc: Truncation = DEFAULT_TRUNCATION,
    sys: SystemParams = NATURAL_UNITS,
) -> list[tuple[WaveNumberMode, float]]:
    """Normalized Boltzmann weights over the signed mode list, center-out.

    Modes come in pairs k and -k-1 with equal weight; the weights sum to 1 by
    construction (each is scaled by the same leading factor as the partition
    sum, so the ratio is stable at any beta).  ``sys`` enters only the
    reported wave numbers kappa = (pi*mu/l)(2k+1).
    """
    e_mu = _base_energy(gp, state)
    m = _odd_harmonics(state.beta, trunc)
    w_scaled = np.exp(-math.pi * state.beta / 2.0 * (m * m - 1.0))
    norm = scaled_norm_sum(state, trunc)
    out: list[tuple[WaveNumberMode, float]] = []
    for mm, ww in zip(m, w_scaled):
        for k in (int((mm - 1) // 2), int(-(mm + 1) // 2)):
            two_k1 = 2 * k + 1
            mode = WaveNumberMode(
                k=k,
                kappa=math.pi * state.mu * two_k1 / sys.l,
                E_kappa=e_mu * float(mm * mm),
            )
            out.append((mode, float(ww) / norm))
    return out


def mean_energy_gibbs(
    gp: GibbsParams,
    state: QuantumState,
    trunc: Truncation = DEFAULT_TRUNCATION,
) -> float:
    """Gibbs-average mode energy, E_mu * sum m^2 w_m / sum w_m over odd m.

    Equals minus the beta_thermo-derivative of ln Z; always >= E_mu and tends
    to E_mu as beta grows (only the two lowest modes survive).
    """
    s0, s2 = _scaled_mode_sums(state, trunc)
    return _base_energy(gp, state) * s2 / s0


def entropy(
    gp: GibbsParams,
    state: QuantumState,
    trunc: Truncation = DEFAULT_TRUNCATION,
) -> float:
    """Entropy in units of k_B: beta_thermo * <E> + ln Z - ln 2.

    Evaluated in the rescaled form (pi*beta/2)(S2/S0 - 1) + ln(S0), whose two
    terms each vanish as beta -> infinity, so the frozen limit is an exact 0
    rather than a difference of large numbers.  Independent of mu and of the
    system units.
    """
    s0, s2 = _scaled_mode_sums(state, trunc)
    half_pi_beta = gp.beta_thermo * _base_energy(gp, state)  # pi*beta/2
    return half_pi_beta * (s2 / s0 - 1.0) + math.log(s0)


def entropy_from_factor(
    gp: GibbsParams,
    state: QuantumState,
    trunc: Truncation = DEFAULT_TRUNCATION,
) -> float:
    """Entropy as -ln of the compound Gibbs factor (2/Z) exp(-beta_thermo <E>).

    The literal composition, kept as an independent path; it loses accuracy
    once Z underflows (beta of order several hundred), where ``entropy``
    remains exact.
    """
    z = math.exp(-math.pi * state.beta / 2.0) * scaled_norm_sum(state, trunc)
    mean_e = mean_energy_gibbs(gp, state, trunc)
    factor = (2.0 / z) * math.exp(-gp.beta_thermo * mean_e)
    return -math.log(factor)


def quantum_potential(
    x: float,
    t: float,
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    trunc: Truncation = DEFAULT_TRUNCATION,
) -> FieldSample:
    """Quantum potential Q = -(hbar^2/2m) (sqrt f)'' / sqrt f, from analytic derivatives.

    Evaluated as -(hbar^2/2m)[f''/(2f) - (f')^2/(4f^2)] with term-wise series
    derivatives; tagged pole where the density is below the floor.  In the
    frozen limit Q tends to the level energy at every interior non-node point.
    """
    f, f1, f2, _ = density_derivatives(x, t, state, sys, trunc)
    if f < DENSITY_FLOOR / sys.l:
        return FieldSample(math.nan, FieldTag.POLE)
    coef = -(sys.hbar**2) / (2.0 * sys.m)
    return FieldSample(coef * (f2 / (2.0 * f) - f1 * f1 / (4.0 * f * f)))


def quantum_potential_gradient(
    x: float,
    t: float,
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    trunc: Truncation = DEFAULT_TRUNCATION,
) -> FieldSample:
    """Analytic dQ/dx; pole-tagged like ``quantum_potential``.

    Matches the pressure-gradient identity: (1/f) dP11/dx equals dQ/dx for the
    flow of this state (checked to rounding accuracy by the test-suite).
    """
    f, f1, f2, f3 = density_derivatives(x, t, state, sys, trunc)
    if f < DENSITY_FLOOR / sys.l:
        return FieldSample(math.nan, FieldTag.POLE)
    coef = -(sys.hbar**2) / (2.0 * sys.m)
    val = coef * (
        f3 / (2.0 * f) - f1 * f2 / (f * f) + f1**3 / (2.0 * f**3)
    )
    return FieldSample(val)


def avg_energy_profile(
    x: float,
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    trunc: Truncation = DEFAULT_TRUNCATION,
) -> FieldSample:
    """Period-averaged mean energy at x: (1/l) <E>_Gibbs / averaged_density(x).

    The period average of the energy-weighted density divided by the period
    average of the density; the numerator collapses to the constant Gibbs mean
    energy per unit length.  Pole-tagged at zeros of the averaged density
    (walls and, for mu > 1, the stationary nodes).
    """
    fbar = averaged_density(x, state, sys, trunc)
    if fbar < DENSITY_FLOOR / sys.l:
        return FieldSample(math.nan, FieldTag.POLE)
    gp = gibbs_params(state, sys)
    return FieldSample(mean_energy_gibbs(gp, state, trunc) / (sys.l * fbar))


def _time_panels(state: QuantumState, trunc: Truncation) -> int:
    """Simpson panel count resolving every time harmonic of a quadratic moment."""
    table = build_table(state, trunc)
    max_pair = int(np.max(table.sigma * table.iota)) if table.sigma.size else 1
    return max(16, max_pair // 2 + 8)


def double_avg_energy(
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    trunc: Truncation = DEFAULT_TRUNCATION,
) -> float:
    """Space-and-period average of the flow energy: quadrature of f-bar times
    the averaged energy profile.

    Evaluated as the nested quadrature (1/T_mu) int_0^l int_0^T f<E> dt dx of
    the everywhere-finite kinetic energy density, which is the same product
    with the averaged density cancelled analytically.  Reproduces the Gibbs
    mean mode energy exactly (up to quadrature rounding): the double average
    adds no information beyond the weights.
    """
    scales = derived_scales(state, sys)
    t_panels = _time_panels(state, trunc)

    def time_avg(x: float) -> float:
        val = integrate(
            lambda tt: kinetic_energy_density(x, tt, state, sys, trunc),
            0.0,
            scales.T_mu,
            t_panels,
        )
        return val / scales.T_mu

    return integrate(time_avg, 0.0, sys.l, 32)
