"""Jacobi theta evaluation: series correctness, zeros, parity, heat identity."""

import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thetawell.numerics import Truncation
from thetawell.theta import ThetaArgs, heat_identity_residual, theta1, theta_char

TIGHT = Truncation(tol=1e-16, max_index=4096)


def test_theta00_at_lattice_point():
    # sum over all integers of exp(-pi k^2), 40-digit oracle value
    value = theta_char(ThetaArgs(0.0, 0.0, 0.0, 1j), TIGHT)
    assert value.real == pytest.approx(1.0864348112133080146, abs=1e-15)
    assert abs(value.imag) < 1e-15


def test_brute_force_series_agreement():
    args = ThetaArgs(0.5, 0.5, 0.3 - 0.2j, 0.7 + 0.9j)
    brute = sum(
        cmath.exp(1j * math.pi * args.tau * (k + 0.5) ** 2 + 2j * math.pi * (args.z + 0.5) * (k + 0.5))
        for k in range(-60, 61)
    )
    assert theta_char(args, TIGHT) == pytest.approx(brute, abs=1e-14)


def test_oversummation_stability():
    # adding far more terms than the tolerance demands must not move the value
    loose = Truncation(tol=1e-10, max_index=4096)
    args = ThetaArgs(0.5, 0.5, 0.11, 0.25j)
    assert theta_char(args, loose) == pytest.approx(theta_char(args, TIGHT), abs=1e-9)


@pytest.mark.parametrize("m,n", [(0, 0), (1, 0), (0, 1), (-1, 1), (3, -1)])
def test_theta1_lattice_zeros(m, n):
    # |n| <= 1 keeps the series terms O(1); farther rows of the lattice
    # hit catastrophic cancellation and only vanish to ~1e-9 in doubles
    tau = 0.3 + 0.8j
    assert abs(theta1(m + n * tau, tau, TIGHT)) < 1e-13


@given(
    x=st.floats(min_value=-1.0, max_value=1.0),
    y=st.floats(min_value=-0.4, max_value=0.4),
)
@settings(max_examples=60, deadline=None)
def test_theta1_odd(x, y):
    tau = 1.1j
    z = complex(x, y)
    a, b = theta1(z, tau, TIGHT), theta1(-z, tau, TIGHT)
    assert abs(a + b) < 1e-12 * max(1.0, abs(a))


def test_theta1_sign_convention():
    # on a purely imaginary tau the series is real and positive just right of 0
    val = theta1(0.25, 0.5j, TIGHT)
    assert val.real > 0.0
    assert abs(val.imag) < 1e-14


def test_characteristic_shift_reduction():
    # a is only meaningful mod 1: shifting it by an integer must not change theta
    args = ThetaArgs(0.5, 0.5, 0.2, 0.9j)
    shifted = ThetaArgs(2.5, 0.5, 0.2, 0.9j)
    assert theta_char(shifted, TIGHT) == pytest.approx(theta_char(args, TIGHT), abs=1e-14)


def test_tau_domain_enforced():
    with pytest.raises(ValueError):
        ThetaArgs(0.5, 0.5, 0.0, 1.0 + 0.0j)
    with pytest.raises(ValueError):
        ThetaArgs(0.5, 0.5, 0.0, 0.3 - 0.2j)


@pytest.mark.parametrize("z,tau", [(0.13, 0.8j), (0.4 + 0.1j, 0.2 + 1.1j), (-0.7, 2.0j)])
def test_heat_identity(z, tau):
    res = heat_identity_residual(ThetaArgs(0.5, 0.5, z, tau), 1e-4, TIGHT)
    assert res < 1e-6


def test_heat_identity_second_order():
    args = ThetaArgs(0.0, 0.5, 0.21, 1.3j)
    r1 = heat_identity_residual(args, 2e-3, TIGHT)
    r2 = heat_identity_residual(args, 1e-3, TIGHT)
    assert r1 / r2 > 3.0  # central stencils: residual shrinks ~4x per halving
