#!/usr/bin/env python3
"""
Tests for L, the commutator residual and the Liouville transformation
"""

import math

import numpy as np
import pytest

from diffop import (PotentialCase, SmoothFn, apply_L, commutator_residual, liouville_forward,
                    liouville_inverse, liouville_potential)
from errors import DerivativeInconsistencyError, InvalidParameterError
from kernel_catalog import LParams, carleman, custom_kernel, finite_rank, mehler, whittaker
from quad import QuadOpts
from specfun import whittaker_w

X = np.array([0.3, 1.0, 4.0, 12.0])


def test_carleman_wave_is_eigenfunction_of_L():
    k = 1.3
    f = SmoothFn.from_function(lambda x: np.cos(k * np.log(x)) / np.sqrt(x), name='carleman_wave')
    values = f(X)
    residual = apply_L(LParams(0.0, 0.0, 0.0), f, X) - (k * k + 0.25) * values
    assert np.max(np.abs(residual)) < 1e-6 * np.max(np.abs(values))


def test_whittaker_eigenfunction_of_L():
    # x^{-1} W_{-beta,ik}(x) solves L f = (k^2 + 1/4) f for (1/4, beta, 0)
    k, beta = 0.7, 0.5
    func = lambda x: whittaker_w(beta, 1j * k, x) / x
    f = SmoothFn.from_function(func, rel_step=1e-2)
    residual = apply_L(LParams(0.25, beta, 0.0), f, X) - (k * k + 0.25) * func(X)
    assert np.max(np.abs(residual)) < 1e-6 * np.max(np.abs(func(X)))


def test_apply_L_scalar_and_domain():
    f = SmoothFn(value=lambda x: x, first_derivative=lambda x: np.ones_like(x),
                 second_derivative=lambda x: np.zeros_like(x))
    # -((x^2) * 1)' = -2x
    assert math.isclose(apply_L(LParams(0.0, 0.0, 0.0), f, 2.0), -4.0)
    with pytest.raises(InvalidParameterError):
        apply_L(LParams(0.0, 0.0, 0.0), f, 0.0)


def test_bump_derivatives_are_consistent():
    bump = SmoothFn.bump(1.0, 3.0)
    assert bump.check_consistency([1.5, 2.0, 2.5]) < 1e-5
    assert bump(0.5) == 0.0
    assert bump.support == (1.0, 3.0)


def test_inconsistent_derivatives_are_caught():
    f = SmoothFn(value=np.exp, first_derivative=np.exp, second_derivative=lambda x: 0.0 * x)
    with pytest.raises(DerivativeInconsistencyError):
        apply_L(LParams(0.0, 0.0, 0.0), f, [1.0, 2.0], check=True)


def test_commutator_vanishes_for_mehler():
    report = commutator_residual(mehler(), mehler().params, SmoothFn.bump(), [0.5, 1.0, 5.0])
    assert report.passed
    assert report.max_rel_err < 1e-6


def test_commutator_vanishes_for_finite_rank():
    spec = finite_rank(2)
    report = commutator_residual(spec, spec.params, SmoothFn.bump(), [0.5, 2.0], tolerance=1e-5)
    assert report.passed


def test_commutator_rank_one_kernel_with_vanishing_image():
    # A f is a multiple of e^{-x/2}, which L annihilates
    spec = finite_rank(1)
    grid = [0.1, 0.5, 1.0, 5.0, 20.0]
    matched = commutator_residual(spec, spec.params, SmoothFn.bump(1.0, 3.0), grid)
    assert matched.passed
    assert matched.max_rel_err < 1e-6
    for slot in ('alpha', 'beta', 'gamma'):
        perturbed = commutator_residual(spec, spec.params.perturbed(slot), SmoothFn.bump(1.0, 3.0), grid)
        assert perturbed.max_rel_err > 10 * matched.max_rel_err, slot


def test_commutator_negative_control():
    control = custom_kernel('control', lambda x: 1.0 / (x + 3.0), mehler().params)
    report = commutator_residual(control, control.params, SmoothFn.bump(), [1.0, 5.0])
    assert not report.passed
    assert report.max_rel_err >= 1e-2


def test_commutator_detects_perturbed_beta():
    spec = whittaker(0.5)
    opts = QuadOpts(rel_tol=1e-13, abs_tol=1e-16)
    matched = commutator_residual(spec, spec.params, SmoothFn.bump(), [1.0, 5.0], opts)
    perturbed = commutator_residual(spec, spec.params.perturbed('beta'), SmoothFn.bump(), [1.0, 5.0], opts)
    assert perturbed.max_rel_err > 10 * matched.max_rel_err


def test_commutator_rejects_points_near_zero():
    with pytest.raises(InvalidParameterError):
        commutator_residual(carleman(), carleman().params, SmoothFn.bump(), [0.01])


def test_liouville_round_trip_and_closed_form():
    x = np.array([1e-6, 0.1, 1.0, 50.0, 1e6])
    t = liouville_forward(x)
    assert np.allclose(liouville_inverse(t), x, rtol=1e-12)
    t = np.array([0.2, 1.0, 5.0])
    assert np.allclose(liouville_inverse(t), np.cosh(t) - 1.0, rtol=1e-12)
    assert liouville_inverse(0.0) == 0.0


def test_potentials():
    t = np.array([0.5, 1.0, 3.0])
    q = liouville_potential(PotentialCase.mehler_free(), t)
    assert np.allclose(q, -0.25 / np.sinh(t) ** 2, rtol=1e-11)
    q = liouville_potential(PotentialCase.whittaker_gamma0(-1.5), t)
    assert np.allclose(q, 0.25 * np.exp(2 * t) - 1.5 * np.exp(t))
    eta = np.cosh(t) - 1.0
    q = liouville_potential(PotentialCase.regular(0.0, 2.0), t)
    assert np.allclose(q, -0.25 / np.sinh(t) ** 2 + 2.0 * eta, rtol=1e-11)
    with pytest.raises(InvalidParameterError):
        liouville_potential(PotentialCase.mehler_free(), 0.0)


if __name__ == "__main__":
    print("\n" + "=" * 50)
    print("Testing differential operator")
    print("=" * 50 + "\n")
    for name, test in list(globals().items()):
        if name.startswith('test_') and callable(test):
            test()
            print(f"✓ {name}")
