"""Phase-space picture of the well state: momentum comb, moments, conservation laws.

The phase-space distribution of the state is a Dirac comb in momentum: atoms
sit at integer multiples of the momentum quantum P_unit and carry real
coefficients that may be negative (quasi-probabilities).  Every coefficient is
transported freely, C_s(x, t) = C_s(x - (P_s/m) t, 0), so all velocity moments
are exact finite sums and the hydrodynamic conservation laws close without
approximation.

Two independent evaluation routes exist for each moment: the direct folded
harmonic series (via ``series.folded_sum``) and the per-atom Chebyshev route
(via ``series.comb_rows``).  ``velocity_field`` and ``velocity_from_vlasov``
expose one of each for cross-checking.

Fields that divide by the density carry a ``FieldTag``: below the density
floor (walls, nodes) they are node-undefined or poles instead of fake large
numbers.  Central moments, which only need the mean velocity as a center, fall
back to probing the flow just beside a node.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .density import density, density_derivatives
from .numerics import (
    DEFAULT_TRUNCATION,
    FieldSample,
    FieldTag,
    Truncation,
    finite_diff,
)
from .series import build_table, comb_rows, folded_sum
from .wavefunction import (
    NATURAL_UNITS,
    QuantumState,
    SystemParams,
    derived_scales,
)

__all__ = [
    "DENSITY_FLOOR",
    "WignerAtom",
    "WignerComb",
    "MomentSet",
    "wigner_comb",
    "flux",
    "velocity_field",
    "velocity_from_vlasov",
    "moments",
    "kinetic_energy_density",
    "pressure_gradient",
    "continuity_residual",
    "momentum_law_residual",
    "energy_law_residual",
]

# density below DENSITY_FLOOR / l counts as a node: division is refused there
DENSITY_FLOOR = 1e-12

# offset (fraction of l) used to probe the flow velocity just beside a node
_PROBE_FRACTION = 1e-6


def _floor_for(sys: SystemParams) -> float:
    return DENSITY_FLOOR / sys.l


@dataclass(frozen=True)
class WignerAtom:
    """One comb atom: momentum label s, momentum P_unit*s, and its coefficient.

    ``weight`` is C_s(x, t) / (hbar * N(beta)); the atom contributes
    weight * delta(P_s - p) to the distribution, and hbar * weight to the
    momentum marginal (each atom carries one Planck cell of momentum measure).
    """

    s: int
    momentum: float
    weight: float


@dataclass(frozen=True)
class WignerComb:
    """The full phase-space comb at one (x, t): finitely many momentum atoms."""

    x: float
    t: float
    atoms: tuple[WignerAtom, ...]

    def marginal(self, sys: SystemParams = NATURAL_UNITS) -> float:
        """Momentum marginal: hbar * sum of weights; reproduces the density.

        ``sys`` must be the system the comb was built with.
        """
        return sys.hbar * math.fsum(atom.weight for atom in self.atoms)


@dataclass(frozen=True)
class MomentSet:
    """Velocity moments of the comb at one (x, t).

    density        probability / length
    flux           density * mean velocity (finite everywhere)
    pressure       m * second central velocity moment, P11
    heat_flux      third central velocity moment, P111 (velocity^3 / length)
    energy_density mean kinetic energy per unit probability; tagged pole
                   where the density is below the floor (walls, nodes)
    """

    density: float
    flux: float
    pressure: float
    heat_flux: float
    energy_density: FieldSample


def _raw_moment_sums(x, t, state, sys, trunc, powers):
    table = build_table(state, trunc)
    den = sys.l * table.norm
    return [
        folded_sum(table, x, t, state, sys, s_power=a, j_power=0, trig="cos") / den
        for a in powers
    ]


def flux(
    x,
    t,
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    trunc: Truncation = DEFAULT_TRUNCATION,
    flow_constant: float = 0.0,
):
    """Probability flux f*<v> at (x, t); finite everywhere, no division by f.

    The continuity equation fixes the flux only up to an additive constant in
    x; the wall boundary condition sets it to zero, which is the default.
    ``flow_constant`` overrides it for experimentation.  Broadcasts over x, t.
    """
    _check_domain_scalar_or_array(x, sys)
    table = build_table(state, trunc)
    scales = derived_scales(state, sys)
    raw = folded_sum(table, x, t, state, sys, s_power=1, j_power=0, trig="cos")
    val = (scales.P_unit / sys.m) * raw / (sys.l * table.norm) + flow_constant
    return val


def _check_domain_scalar_or_array(x, sys: SystemParams) -> None:
    xa = np.asarray(x, dtype=float)
    if np.any(xa < 0.0) or np.any(xa > sys.l):
        raise ValueError(f"x outside the well domain [0, {sys.l}]")


def wigner_comb(
    x: float,
    t: float,
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    trunc: Truncation = DEFAULT_TRUNCATION,
) -> WignerComb:
    """All momentum atoms of the phase-space distribution at one point.

    Atoms are returned for every label |s| <= 2K + 1, ordered by s.  Each
    coefficient is evaluated by the Chebyshev recurrence, a route independent
    of the direct harmonic sums behind ``density`` and ``flux``.
    """
    _check_domain_scalar_or_array(x, sys)
    rows = comb_rows(x, t, state, sys, trunc)
    scales = derived_scales(state, sys)
    scale = 1.0 / (sys.hbar * sys.l * rows.norm)
    atoms = []
    for q in range(rows.m_max, 0, -1):
        atoms.append(
            WignerAtom(s=-q, momentum=-q * scales.P_unit, weight=float(rows.minus[q]) * scale)
        )
    atoms.append(WignerAtom(s=0, momentum=0.0, weight=float(rows.plus[0]) * scale))
    for q in range(1, rows.m_max + 1):
        atoms.append(
            WignerAtom(s=q, momentum=q * scales.P_unit, weight=float(rows.plus[q]) * scale)
        )
    return WignerComb(x=float(x), t=float(t), atoms=tuple(atoms))


def _probe_velocity(
    x: float,
    t: float,
    state: QuantumState,
    sys: SystemParams,
    trunc: Truncation,
) -> float:
    """Mean velocity just beside a node, as a center for central moments.

    Averages flux/density over the admissible probes x +- delta (one-sided at
    the walls).  If the whole neighborhood is below the floor there is no flow
    to resolve and 0 is returned.
    """
    delta = _PROBE_FRACTION * sys.l
    floor = _floor_for(sys)
    vals = []
    for xx in (x - delta, x + delta):
        if 0.0 < xx < sys.l:
            fp = density(xx, t, state, sys, trunc)
            if fp >= floor:
                vals.append(flux(xx, t, state, sys, trunc) / fp)
    if vals:
        return math.fsum(vals) / len(vals)
    return 0.0


def velocity_field(
    x: float,
    t: float,
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    trunc: Truncation = DEFAULT_TRUNCATION,
) -> FieldSample:
    """Mean velocity of probability flow, flux / density, via the direct series.

    Node-undefined where the density is below the floor (walls and instantaneous
    nodes); the flow limit exists there but the ratio itself does not.
    """
    f = density(x, t, state, sys, trunc)
    if f < _floor_for(sys):
        return FieldSample(math.nan, FieldTag.NODE_UNDEFINED)
    return FieldSample(flux(x, t, state, sys, trunc) / f)


def velocity_from_vlasov(
    x: float,
    t: float,
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    trunc: Truncation = DEFAULT_TRUNCATION,
) -> FieldSample:
    """Mean velocity from the transport solution: first moment of the comb atoms.

    Both the numerator and the denominator are rebuilt from the Chebyshev comb
    route, independent of ``velocity_field``'s series; the node test uses the
    same canonical density so the two paths are undefined at identical points.
    """
    f = density(x, t, state, sys, trunc)
    if f < _floor_for(sys):
        return FieldSample(math.nan, FieldTag.NODE_UNDEFINED)
    rows = comb_rows(x, t, state, sys, trunc)
    scales = derived_scales(state, sys)
    den = sys.l * rows.norm
    f_comb = float(np.sum(rows.plus) + np.sum(rows.minus)) / den
    sig = rows.sigmas.astype(float)
    phi_comb = (
        (scales.P_unit / sys.m) * float(sig @ (rows.plus - rows.minus)) / den
    )
    return FieldSample(phi_comb / f_comb)


def moments(
    x: float,
    t: float,
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    trunc: Truncation = DEFAULT_TRUNCATION,
) -> MomentSet:
    """Density, flux, pressure, heat flux, and mean energy at one point.

    The raw velocity moments M_k = sum over atoms of (P_s/m)^k C_s are exact
    finite sums; pressure and heat flux are the central combinations

        P11  = m * (M2 - f <v>^2),
        P111 = M3 - 3 <v> M2 + 3 <v>^2 M1 - <v>^3 f,

    with <v> = flux/density, replaced by the probed flow limit where the
    density is below the floor.  The mean energy (m/2) M2 / f is tagged as a
    pole there instead.
    """
    scales = derived_scales(state, sys)
    s0, s1, s2, s3 = _raw_moment_sums(x, t, state, sys, trunc, (0, 1, 2, 3))
    vu = scales.P_unit / sys.m
    f = s0
    phi = vu * s1
    m2 = vu**2 * s2
    m3 = vu**3 * s3
    floor = _floor_for(sys)
    if f >= floor:
        v = phi / f
        energy = FieldSample(0.5 * sys.m * m2 / f)
    else:
        v = _probe_velocity(x, t, state, sys, trunc)
        energy = FieldSample(math.nan, FieldTag.POLE)
    p11 = sys.m * (m2 - f * v * v)
    p111 = m3 - 3.0 * v * m2 + 3.0 * v * v * phi - v**3 * f
    return MomentSet(density=f, flux=phi, pressure=p11, heat_flux=p111, energy_density=energy)


def kinetic_energy_density(
    x,
    t,
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    trunc: Truncation = DEFAULT_TRUNCATION,
):
    """Kinetic energy per unit length, f * <E> = (m/2) M2; finite everywhere.

    The integrand of every energy average; no division by the density, so
    walls and nodes are regular points.  Broadcasts over x and t.
    """
    _check_domain_scalar_or_array(x, sys)
    table = build_table(state, trunc)
    scales = derived_scales(state, sys)
    raw = folded_sum(table, x, t, state, sys, s_power=2, j_power=0, trig="cos")
    return scales.E_mu * raw / (sys.l * table.norm)


def pressure_gradient(
    x: float,
    t: float,
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    trunc: Truncation = DEFAULT_TRUNCATION,
) -> FieldSample:
    """Analytic d P11 / dx, term-wise exact (no finite differences).

    Differentiates P11 = m (M2 - flux^2 / f) with every ingredient evaluated
    by its own term-wise derivative series.  Node-undefined below the density
    floor, where the central moment has no center.
    """
    table = build_table(state, trunc)
    scales = derived_scales(state, sys)
    den = sys.l * table.norm
    vu = scales.P_unit / sys.m
    ux = 2.0 * math.pi * state.mu / sys.l

    f, f1, _, _ = density_derivatives(x, t, state, sys, trunc)
    if f < _floor_for(sys):
        return FieldSample(math.nan, FieldTag.NODE_UNDEFINED)
    phi = vu * folded_sum(table, x, t, state, sys, s_power=1, j_power=0, trig="cos") / den
    phi1 = -vu * ux * folded_sum(table, x, t, state, sys, s_power=1, j_power=1, trig="sin") / den
    m2_1 = (
        -(vu**2) * ux * folded_sum(table, x, t, state, sys, s_power=2, j_power=1, trig="sin") / den
    )
    val = sys.m * (m2_1 - 2.0 * phi * phi1 / f + phi * phi * f1 / (f * f))
    return FieldSample(val)


def continuity_residual(
    x,
    t,
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    trunc: Truncation = DEFAULT_TRUNCATION,
):
    """|d f/dt + d flux/dx| with both derivatives term-wise analytic.

    The two series cancel term by term, so the residual measures only the
    floating-point floor of the identity (order 1e-16 of the field scale).
    Broadcasts over x and t.
    """
    _check_domain_scalar_or_array(x, sys)
    table = build_table(state, trunc)
    scales = derived_scales(state, sys)
    den = sys.l * table.norm
    ux = 2.0 * math.pi * state.mu / sys.l

    core_t = folded_sum(table, x, t, state, sys, s_power=1, j_power=1, trig="sin")
    df_dt = (math.pi / scales.T_mu) * core_t / den
    core_x = folded_sum(table, x, t, state, sys, s_power=1, j_power=1, trig="sin")
    dflux_dx = -(scales.P_unit / sys.m) * ux * core_x / den
    return np.abs(df_dt + dflux_dx)


def _stencil_defined(x, t, hx, ht, state, sys, trunc) -> bool:
    floor = _floor_for(sys)
    pts = ((x, t), (x - hx, t), (x + hx, t), (x, t - ht), (x, t + ht))
    return all(density(xx, tt, state, sys, trunc) >= floor for xx, tt in pts)


def momentum_law_residual(
    x: float,
    t: float,
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    h: float = 1e-5,
    trunc: Truncation = DEFAULT_TRUNCATION,
) -> FieldSample:
    """Residual of the flow acceleration law  dv/dt + v dv/dx + (1/(m f)) dP11/dx.

    All derivatives are central finite differences with steps h*l in x and
    h*T_mu in t; the force-free comb makes the law exact, so the residual is
    the O(h^2) scheme error.  Node-undefined when the density drops below the
    floor anywhere on the stencil.
    """
    scales = derived_scales(state, sys)
    hx, ht = h * sys.l, h * scales.T_mu
    if not (0.0 < x - hx and x + hx < sys.l):
        raise ValueError(f"x stencil [{x - hx}, {x + hx}] leaves the open well (0, {sys.l})")
    if not _stencil_defined(x, t, hx, ht, state, sys, trunc):
        return FieldSample(math.nan, FieldTag.NODE_UNDEFINED)

    def v_at(xx: float, tt: float) -> float:
        return velocity_field(xx, tt, state, sys, trunc).value

    v_c = v_at(x, t)
    dv_dt = finite_diff(lambda tt: v_at(x, tt), t, 1, ht)
    dv_dx = finite_diff(lambda xx: v_at(xx, t), x, 1, hx)
    dp_dx = finite_diff(lambda xx: moments(xx, t, state, sys, trunc).pressure, x, 1, hx)
    f_c = density(x, t, state, sys, trunc)
    return FieldSample(abs(dv_dt + v_c * dv_dx + dp_dx / (sys.m * f_c)))


def energy_law_residual(
    x: float,
    t: float,
    state: QuantumState,
    sys: SystemParams = NATURAL_UNITS,
    h: float = 1e-5,
    trunc: Truncation = DEFAULT_TRUNCATION,
) -> FieldSample:
    """Residual of the energy transport law for the flow.

    Checks d/dt [ (m f/2) v^2 + P11/2 ] + d/dx [ (m f/2) v^3 + (3/2) v P11
    + (m/2) P111 ] = 0, composing each bracket from the tabulated moments as
    written (no algebraic pre-simplification) and differencing with steps h*l
    and h*T_mu.  Node-undefined when the stencil touches sub-floor density.
    """
    scales = derived_scales(state, sys)
    hx, ht = h * sys.l, h * scales.T_mu
    if not (0.0 < x - hx and x + hx < sys.l):
        raise ValueError(f"x stencil [{x - hx}, {x + hx}] leaves the open well (0, {sys.l})")
    if not _stencil_defined(x, t, hx, ht, state, sys, trunc):
        return FieldSample(math.nan, FieldTag.NODE_UNDEFINED)

    def e_density(xx: float, tt: float) -> float:
        ms = moments(xx, tt, state, sys, trunc)
        v = ms.flux / ms.density
        return 0.5 * sys.m * ms.density * v * v + 0.5 * ms.pressure

    def e_flux(xx: float, tt: float) -> float:
        ms = moments(xx, tt, state, sys, trunc)
        v = ms.flux / ms.density
        return (
            0.5 * sys.m * ms.density * v**3
            + 1.5 * v * ms.pressure
            + 0.5 * sys.m * ms.heat_flux
        )

    dt_term = finite_diff(lambda tt: e_density(x, tt), t, 1, ht)
    dx_term = finite_diff(lambda xx: e_flux(xx, t), x, 1, hx)
    return FieldSample(abs(dt_term + dx_term))
