#!/usr/bin/env python3
"""
Tests for the semi-infinite quadrature and Hankel application
"""

import math

import numpy as np
import pytest
from scipy import special

from errors import KernelDomainError, QuadratureError
from kernel_catalog import carleman, finite_rank, mehler
from quad import (QuadOpts, apply_hankel, apply_hankel_grid, default_hankel_opts, inner_product,
                  integrate_interval, integrate_semi_infinite)


def test_exponential_tail():
    result = integrate_semi_infinite(lambda y: np.exp(-y))
    assert math.isclose(result.value, 1.0, rel_tol=1e-12)
    assert result.nodes_used > 0


def test_sqrt_exponential_tail():
    opts = QuadOpts(tail_decay_hint='sqrt_exponential')
    assert math.isclose(integrate_semi_infinite(lambda y: np.exp(-np.sqrt(y)), opts).value, 2.0,
                        rel_tol=1e-10)


def test_algebraic_tail():
    opts = QuadOpts(tail_decay_hint='algebraic')
    assert math.isclose(integrate_semi_infinite(lambda y: 1.0 / (1.0 + y) ** 2, opts).value, 1.0,
                        rel_tol=1e-10)


def test_zero_maps_agree_on_inverse_sqrt():
    f = lambda y: np.exp(-y) / np.sqrt(y)
    for zero_map in ('sqrt', 'log'):
        opts = QuadOpts(singular_at_zero=True, zero_map=zero_map, abs_tol=1e-16)
        assert math.isclose(integrate_semi_infinite(f, opts).value, math.sqrt(math.pi),
                            rel_tol=1e-10), zero_map


def test_oscillatory_singularity_with_log_map():
    # int_0^inf y^{-1/2+ik} e^{-y} dy = Gamma(1/2 + ik)
    k = 1.0
    opts = QuadOpts(singular_at_zero=True, zero_map='log', rel_tol=1e-12, abs_tol=1e-16)
    value = integrate_semi_infinite(lambda y: np.exp((-0.5 + 1j * k) * np.log(y) - y), opts).value
    assert abs(value - complex(special.gamma(0.5 + 1j * k))) < 1e-10


def test_complex_integrand():
    value = integrate_semi_infinite(lambda y: np.exp(-(1.0 - 1.0j) * y)).value
    assert isinstance(value, complex)
    assert abs(value - 1.0 / (1.0 - 1.0j)) < 1e-12


def test_finite_upper_and_breakpoints():
    opts = QuadOpts(upper=2.0, breakpoints=(0.5,))
    assert math.isclose(integrate_semi_infinite(lambda y: y, opts).value, 2.0, rel_tol=1e-13)
    assert math.isclose(integrate_interval(np.sin, 0.0, math.pi).value, 2.0, rel_tol=1e-13)


def test_apply_hankel_mehler_closed_form():
    # int e^{-y} / (x + y + 2) dy = e^{x+2} E1(x+2)
    x = 1.0
    opts = default_hankel_opts(mehler(), QuadOpts(rel_tol=1e-12, abs_tol=1e-16))
    value = apply_hankel(mehler(), lambda y: np.exp(-y), x, opts).value
    assert math.isclose(value, math.exp(3.0) * special.exp1(3.0), rel_tol=1e-10)


def test_apply_hankel_finite_rank_one():
    # A e^{-y/2} = e^{-x/2} for a(x) = e^{-x/2}
    xs = [0.0, 0.5, 3.0]
    values, errors = apply_hankel_grid(finite_rank(1), lambda y: np.exp(-0.5 * y), xs)
    assert np.allclose(values, np.exp(-0.5 * np.array(xs)), rtol=1e-11)
    assert np.all(errors >= 0)


def test_apply_hankel_domain():
    with pytest.raises(KernelDomainError):
        apply_hankel(carleman(), lambda y: np.exp(-y), 0.0)


def test_inner_product():
    assert math.isclose(inner_product(lambda x: np.exp(-x), lambda x: x).value, 1.0, rel_tol=1e-12)


def test_unconverged_segment_raises():
    opts = QuadOpts(max_subdivisions=1)
    with pytest.raises(QuadratureError):
        integrate_interval(lambda y: np.sin(200.0 * y), 0.0, 10.0, opts)


def test_non_finite_integrand_raises():
    with pytest.raises(QuadratureError):
        integrate_semi_infinite(lambda y: np.full_like(y, np.nan))


def test_nodes_counted_for_each_part():
    real = integrate_semi_infinite(lambda y: np.exp(-y))
    both = integrate_semi_infinite(lambda y: np.exp(-(1.0 - 1.0j) * y))
    assert both.nodes_used > real.nodes_used
    assert real.abs_err_estimate < 1e-10


def test_invalid_options():
    with pytest.raises(ValueError):
        QuadOpts(tail_decay_hint='gaussian')
    with pytest.raises(ValueError):
        QuadOpts(rel_tol=0.0)
    assert QuadOpts().with_(breakpoints=[2]).breakpoints == (2.0,)


if __name__ == "__main__":
    print("\n" + "=" * 50)
    print("Testing quadrature")
    print("=" * 50 + "\n")
    for name, test in list(globals().items()):
        if name.startswith('test_') and callable(test):
            test()
            print(f"✓ {name}")
