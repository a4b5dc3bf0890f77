#!/usr/bin/env python3
"""
Tests for the special functions, checked against mpmath and scipy
"""

import math

import mpmath
import numpy as np
import pytest
from scipy import special

from errors import GammaPoleError, InvalidParameterError
from specfun import (central_derivatives, gamma_complex, laguerre, lambda_from_mu, legendre_conical,
                     macdonald_k, spectral_maps, whittaker_w, whittaker_w_derivative)

mpmath.mp.dps = 30


def _rel(a, b):
    return abs(a - b) / abs(b)


def test_gamma_complex_matches_mpmath():
    for z in [0.5 + 1j, 0.5 - 2.3j, 3.7 + 0.2j, -1.5 + 0.5j, -2.3, 1e-3 + 4j]:
        expected = complex(mpmath.gamma(z))
        assert _rel(gamma_complex(z), expected) < 1e-12, z


def test_gamma_complex_vectorized():
    z = np.array([1.0, 2.0, 5.0])
    assert np.allclose(gamma_complex(z).real, [1.0, 1.0, 24.0], rtol=1e-13)


def test_gamma_complex_pole():
    with pytest.raises(GammaPoleError):
        gamma_complex(-3.0)
    with pytest.raises(GammaPoleError):
        gamma_complex(0.0)


def test_legendre_conical_matches_mpmath():
    for k in [0.25, 1.0, 2.0]:
        for x in [0.1, 1.0, 5.0, 20.0]:
            expected = float(mpmath.re(mpmath.legenp(-0.5 + 1j * k, 0, 1 + x, type=3)))
            assert _rel(legendre_conical(k, x), expected) < 1e-9, (k, x)


def test_legendre_conical_at_zero_is_one():
    assert legendre_conical(1.5, 0.0) == 1.0


def test_legendre_conical_rejects_negative_x():
    with pytest.raises(InvalidParameterError):
        legendre_conical(1.0, -0.5)


def test_whittaker_w_real_index_matches_mpmath():
    for beta in [0.0, 0.5, 1.0, -1.5]:
        for x in [0.05, 1.0, 7.0, 30.0]:
            expected = float(mpmath.whitw(-beta, 0.5, x))
            assert _rel(whittaker_w(beta, 0.5, x), expected) < 1e-8, (beta, x)


def test_whittaker_w_imaginary_index_matches_mpmath():
    for k in [0.5, 2.0]:
        for x in [0.1, 2.0, 15.0]:
            expected = float(mpmath.re(mpmath.whitw(-0.5, 1j * k, x)))
            assert abs(whittaker_w(0.5, 1j * k, x) - expected) < 1e-8 * max(abs(expected), 1e-2), (k, x)


def test_whittaker_w_derivative_matches_stencil():
    x = np.array([0.5, 2.0, 9.0])
    _, derivative = whittaker_w_derivative(1.0, 0.5, x)
    _, stencil, _ = central_derivatives(lambda y: whittaker_w(1.0, 0.5, y), x)
    assert np.allclose(derivative, stencil, rtol=1e-7)


def test_macdonald_imaginary_order_matches_mpmath():
    for k in [0.25, 1.0, 2.0]:
        for z in [0.3, 2.0, 10.0]:
            expected = float(mpmath.re(mpmath.besselk(2j * k, z)))
            assert abs(macdonald_k(2j * k, z) - expected) < 1e-9 * max(abs(expected), 1e-6), (k, z)


def test_macdonald_real_order_uses_scipy():
    z = np.array([0.5, 3.0])
    assert np.allclose(macdonald_k(1, z), special.kv(1, z), rtol=1e-14)


def test_macdonald_rejects_complex_order():
    with pytest.raises(InvalidParameterError):
        macdonald_k(1 + 1j, 1.0)


def test_laguerre():
    # L^1_1(x) = 2 - x
    assert math.isclose(laguerre(1, 1.0, 0.5), 1.5, rel_tol=1e-14)
    with pytest.raises(InvalidParameterError):
        laguerre(-1, 0.0, 1.0)


def test_spectral_maps():
    mu, lam = spectral_maps(0.0)
    assert mu == 0.25
    assert math.isclose(lam, math.pi)
    mu, lam = spectral_maps(np.array([1.0, 2.0]))
    assert np.allclose(mu, [1.25, 4.25])
    assert np.allclose(lam, np.pi / np.cosh(np.pi * np.array([1.0, 2.0])))
    with pytest.raises(InvalidParameterError):
        spectral_maps(-1.0)


def test_lambda_from_mu_continues_below_quarter():
    # mu = 1/4 - p^2 with p = 1 gives pi / cos(pi) = -pi
    assert math.isclose(lambda_from_mu(-0.75), -math.pi, rel_tol=1e-14)
    assert math.isclose(lambda_from_mu(1.25), math.pi / math.cosh(math.pi), rel_tol=1e-14)


if __name__ == "__main__":
    print("\n" + "=" * 50)
    print("Testing special functions")
    print("=" * 50 + "\n")
    for name, test in list(globals().items()):
        if name.startswith('test_') and callable(test):
            test()
            print(f"✓ {name}")
