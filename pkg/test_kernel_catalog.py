#!/usr/bin/env python3
"""
Tests for the kernel catalog: closed forms, ODE residuals, asymptotics and name parsing
"""

import math

import mpmath
import numpy as np
import pytest
from scipy import special

from errors import InvalidParameterError, KernelDomainError
from kernel_catalog import (KernelId, LParams, carleman, catalog, finite_rank, kernel_asymptotics,
                            kernel_eval, kernel_jet, kernel_jet_numeric, macdonald, mehler,
                            normalized_ode_residual, parse_kernel, regular_macdonald,
                            regular_whittaker, truncation_point, whittaker)

GRID = np.logspace(-2.0, 2.0, 30)


def test_closed_forms():
    assert math.isclose(kernel_eval(mehler(), 2.0), 0.25)
    assert math.isclose(kernel_eval(carleman(), 4.0), 0.25)
    assert math.isclose(kernel_eval(finite_rank(1), 2.0), math.exp(-1.0), rel_tol=1e-14)
    # e^{-x/2} L^1_1(x) = e^{-x/2} (2 - x)
    assert math.isclose(kernel_eval(finite_rank(2), 1.0), math.exp(-0.5), rel_tol=1e-14)
    z = math.sqrt(8.0 * 3.0)
    assert math.isclose(kernel_eval(macdonald(), 3.0), 8.0 * special.kv(1, z) / z, rel_tol=1e-13)
    z = math.sqrt(8.0 * 5.0)
    assert math.isclose(kernel_eval(regular_macdonald(), 3.0), special.kv(1, z) / math.sqrt(5.0),
                        rel_tol=1e-13)


def test_whittaker_kernel_matches_mpmath():
    for beta in [0.0, 0.5, -1.5]:
        x = 2.5
        expected = float(mpmath.gamma(1 + beta) * mpmath.whitw(-beta, 0.5, x) / x)
        assert math.isclose(kernel_eval(whittaker(beta), x), expected, rel_tol=1e-8), beta


def test_regular_whittaker_is_shifted():
    x = 1.5
    expected = float(mpmath.whitw(-0.5, 0.5, x + 2) / (x + 2))
    assert math.isclose(kernel_eval(regular_whittaker(0.5), x), expected, rel_tol=1e-8)


def test_ode_residual_vanishes_for_catalog():
    for spec in catalog():
        analytic = normalized_ode_residual(spec, GRID)
        numeric = normalized_ode_residual(spec, GRID, numeric=True)
        assert np.max(analytic) < 1e-6, spec.name
        assert np.max(numeric) < 1e-4, spec.name


def test_ode_residual_for_other_indices():
    for spec in [whittaker(1.0), whittaker(-2.3), finite_rank(3), regular_whittaker(1.0)]:
        assert np.max(normalized_ode_residual(spec, GRID)) < 1e-6, spec.name


def test_uncorrected_regular_whittaker_params_fail_ode():
    spec = regular_whittaker(0.0)
    wrong = LParams(0.25, 0.0, 2.0)
    assert np.max(normalized_ode_residual(spec, GRID, params=wrong)) > 1e-2


def test_perturbed_params_fail_ode():
    spec = mehler()
    assert np.max(normalized_ode_residual(spec, GRID, params=spec.params.perturbed('beta'))) > 1e-3


def test_analytic_and_numeric_jets_agree():
    x = np.array([0.3, 2.0, 10.0])
    for spec in [whittaker(0.5), macdonald(), finite_rank(2)]:
        a, a1, a2 = kernel_jet(spec, x)
        n, n1, n2 = kernel_jet_numeric(spec, x)
        assert np.allclose(a, n, rtol=1e-10)
        assert np.allclose(a1, n1, rtol=1e-6)
        assert np.allclose(a2, n2, rtol=1e-4)


def test_singular_kernels_reject_zero():
    with pytest.raises(KernelDomainError):
        kernel_eval(carleman(), 0.0)


def test_asymptotics():
    spec = macdonald()
    asym = kernel_asymptotics(spec)
    assert math.isclose(kernel_eval(spec, 400.0) / asym.infinity_term(400.0), 1.0, rel_tol=0.01)
    assert math.isclose(kernel_eval(spec, 1e-6) / asym.zero_term(1e-6), 1.0, rel_tol=1e-3)
    # the x + 2 shift in the exponent fades like 8 / sqrt(8x)
    spec = regular_macdonald()
    asym = kernel_asymptotics(spec)
    near = abs(kernel_eval(spec, 400.0) / asym.infinity_term(400.0) - 1.0)
    far = abs(kernel_eval(spec, 2000.0) / asym.infinity_term(2000.0) - 1.0)
    assert far < near < 0.2
    assert far < 0.1


def test_invalid_parameters():
    with pytest.raises(InvalidParameterError):
        whittaker(-2.0)
    with pytest.raises(InvalidParameterError):
        finite_rank(0)
    with pytest.raises(InvalidParameterError):
        LParams(-1.0, 0.0, 0.0)


def test_parse_kernel():
    assert parse_kernel('mehler').id == KernelId.MEHLER
    assert parse_kernel('whittaker(0.5)').name == 'whittaker(0.5)'
    assert parse_kernel('finite-rank(3)').params == LParams(0.25, -3.0, 0.0)
    assert parse_kernel('regular_whittaker(0)').params == LParams(0.25, 0.5, 2.0)
    with pytest.raises(InvalidParameterError):
        parse_kernel('bessel')
    with pytest.raises(InvalidParameterError):
        parse_kernel('mehler(2)')


def test_truncation_point():
    x = truncation_point(finite_rank(1), 1e-13)
    assert math.exp(-0.5 * x) * x < 1e-13
    with pytest.raises(InvalidParameterError):
        truncation_point(carleman(), 1e-13)


if __name__ == "__main__":
    print("\n" + "=" * 50)
    print("Testing kernel catalog")
    print("=" * 50 + "\n")
    for name, test in list(globals().items()):
        if name.startswith('test_') and callable(test):
            test()
            print(f"✓ {name}")
