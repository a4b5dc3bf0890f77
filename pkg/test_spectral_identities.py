#!/usr/bin/env python3
"""
Tests for the exact eigenfunction families and the spectral identity verifiers
"""

import math

import mpmath
import numpy as np
import pytest
from scipy import special

from errors import InvalidParameterError
from quad import QuadOpts, integrate_semi_infinite
from spectral_identities import (EigenFamily, carleman_closed_form, continuum_samples, diagonalization_check,
                                 discrete_spectrum, family_from_name, finite_rank_spectrum,
                                 forward_transform, hankel_image, kernel_subspace_check,
                                 normalization_identity, parseval_defect,
                                 shanker_eigenvalue, verify_continuum_identity, verify_decay,
                                 verify_finite_rank_identity, verify_macdonald_byproduct)
from kernel_catalog import whittaker


def test_normalization_closed_forms():
    for family in [EigenFamily.mehler(), EigenFamily.whittaker(0.5), EigenFamily.whittaker(-1.5),
                   EigenFamily.macdonald()]:
        for k in [0.1, 0.5, 1.0, 2.0]:
            report = normalization_identity(family, k)
            assert report.passed, (family.name, k, report.max_rel_err)


def test_mehler_normalization_value():
    k = 0.75
    assert math.isclose(EigenFamily.mehler().normalization(k), math.sqrt(k * math.tanh(math.pi * k)),
                        rel_tol=1e-13)


def test_carleman_has_two_components_and_no_connection_coefficient():
    family = EigenFamily.carleman()
    assert family.multiplicity == 2
    assert len(family.components(1.0)) == 2
    with pytest.raises(InvalidParameterError):
        family.m(1.0)
    x = 2.0
    value = family.psi_k(1.0, x, component=1)
    assert math.isclose(value, math.sin(math.log(x)) / math.sqrt(math.pi * x), rel_tol=1e-14)


def test_whittaker_eigenfunction_matches_mpmath():
    family = EigenFamily.whittaker(0.5)
    k, x = 0.5, 3.0
    expected = family.normalization(k) * float(mpmath.re(mpmath.whitw(-0.5, 1j * k, x))) / x
    assert math.isclose(family.psi_k(k, x), expected, rel_tol=1e-8)


def test_family_names():
    assert family_from_name('whittaker(0.5)') == EigenFamily.whittaker(0.5)
    assert family_from_name('mehler').name == 'mehler'
    with pytest.raises(InvalidParameterError):
        family_from_name('bessel')


def test_discrete_spectrum_formulas():
    assert discrete_spectrum(0.5) == []
    pairs = discrete_spectrum(-1.5)
    assert [p.n for p in pairs] == [1]
    assert math.isclose(pairs[0].lambda_n, -math.pi)
    assert math.isclose(pairs[0].mu_n, -0.75)
    pairs = discrete_spectrum(-2.3)
    assert [p.n for p in pairs] == [1, 2]
    assert np.allclose([p.p for p in pairs], [1.8, 0.8])
    assert pairs[0].lambda_n == -pairs[1].lambda_n
    with pytest.raises(InvalidParameterError):
        discrete_spectrum(-2.0)


def test_discrete_eigenvalue_routes_agree():
    for beta in [-1.5, -2.3]:
        for pair in discrete_spectrum(beta):
            gamma_product = (-1) ** (pair.n - 1) * special.gamma(1.0 + beta) * special.gamma(-beta)
            continuation = math.pi / math.cos(math.pi * pair.p)
            quadrature = shanker_eigenvalue(pair)
            for value in (gamma_product, continuation, quadrature):
                assert math.isclose(value, pair.lambda_n, rel_tol=1e-8), (beta, pair.n, value)


def test_discrete_pairs_are_orthogonal():
    first, second = discrete_spectrum(-2.3)
    opts = QuadOpts(rel_tol=1e-12, abs_tol=1e-20, singular_at_zero=True)
    overlap = integrate_semi_infinite(lambda y: first.psi(y) * second.psi(y), opts).value
    assert abs(overlap) < 1e-8 * math.sqrt(first.norm_squared() * second.norm_squared())


def test_finite_rank_spectrum():
    pairs = finite_rank_spectrum(3)
    assert [p.lambda_n for p in pairs] == [1.0, -1.0, 1.0]
    assert [p.p for p in pairs] == [2.5, 1.5, 0.5]


def test_finite_rank_identity():
    for report in verify_finite_rank_identity(2, [0.5, 2.0, 6.0]):
        assert report.passed, (report.params, report.max_rel_err)


def test_kernel_subspace_annihilated():
    report = kernel_subspace_check(1, 0.5, [1.0, 4.0])
    assert report.passed, report.max_rel_err


def test_kernel_subspace_not_annihilated_by_other_kernel():
    report = kernel_subspace_check(1, 0.5, [1.0], kernel=whittaker(-1.9))
    assert report.max_rel_err > 1e-6


def test_carleman_closed_form():
    for k in [0.25, 1.0, 4.0]:
        assert carleman_closed_form(k).passed, k


def test_mehler_continuum_identity():
    report = verify_continuum_identity(EigenFamily.mehler(), 0.5, [0.0, 1.0, 5.0],
                                       QuadOpts(rel_tol=1e-12, abs_tol=1e-16), tolerance=1e-7)
    assert report.passed, report.max_rel_err


def test_continuum_samples_shape():
    x, a_psi, lambda_psi = continuum_samples(EigenFamily.whittaker(1.0), 1.0, [0.5, 2.0])
    assert x.shape == a_psi.shape == lambda_psi.shape == (2,)
    assert np.allclose(a_psi, lambda_psi, rtol=1e-5, atol=1e-6 * np.max(np.abs(lambda_psi)))


def test_forward_transform_of_mehler_exponential():
    # U(e^{-x})(k) = n(k) e sqrt(2/pi) K_ik(1)
    family = EigenFamily.mehler()
    k_grid = [0.5, 1.5]
    values = forward_transform(family, lambda x: np.exp(-x), k_grid)
    for k, value in zip(k_grid, values[:, 0]):
        expected = (family.normalization(k) * math.e * math.sqrt(2.0 / math.pi)
                    * float(mpmath.re(mpmath.besselk(1j * k, 1))))
        assert math.isclose(value, expected, rel_tol=1e-7), k


X_GRID = [0.1, 0.5, 1.0, 5.0, 20.0]


def test_whittaker_continuum_identity_on_default_grid():
    for beta in (0.0, 0.5, 1.0):
        for k in (0.25, 2.0):
            report = verify_continuum_identity(EigenFamily.whittaker(beta), k, X_GRID, tolerance=1e-6)
            assert report.passed, (beta, k, report.max_rel_err)


def test_macdonald_continuum_identity():
    for k in (0.5, 1.0):
        report = verify_continuum_identity(EigenFamily.macdonald(), k, X_GRID, tolerance=1e-6)
        assert report.passed, (k, report.max_rel_err)


def test_macdonald_byproduct_identity():
    report = verify_macdonald_byproduct(1.0, [0.5, 1.0, 5.0])
    assert report.passed, report.max_rel_err


def test_second_solution_decay():
    cases = [(EigenFamily.mehler(), (1e-6, 1e-4)), (EigenFamily.whittaker(0.5), (30.0, 40.0)),
             (EigenFamily.macdonald(), (30.0, 60.0))]
    for family, points in cases:
        report = verify_decay(family, 1.0, points)
        assert report.passed, (family.name, report.max_rel_err)


def test_hankel_image_memoizes_exact_values():
    family = EigenFamily.mehler()
    image = hankel_image(family.kernel, lambda y: np.exp(-y))
    x = np.array([0.5, 1.0, 0.5])
    values = image(x)
    assert len(image.cache) == 2
    # int e^{-y} / (x + y + 2) dy = e^{x+2} E1(x+2)
    assert np.allclose(values, np.exp(x + 2.0) * special.exp1(x + 2.0), rtol=1e-10)


def test_mehler_diagonalization():
    report = diagonalization_check(EigenFamily.mehler(), lambda x: np.exp(-x), [1.0], 'exp')
    assert report.passed, report.max_rel_err


def test_parseval_mehler():
    report = parseval_defect(EigenFamily.mehler(), lambda x: np.exp(-x), 'exp', n_points=48)
    assert report.passed, report.max_rel_err


def test_parseval_with_point_spectrum():
    family = EigenFamily.whittaker(-1.5)
    assert family.discrete
    report = parseval_defect(family, lambda x: np.exp(-x), 'exp', n_points=48)
    assert report.passed, report.max_rel_err


if __name__ == "__main__":
    print("\n" + "=" * 50)
    print("Testing spectral identities")
    print("=" * 50 + "\n")
    for name, test in list(globals().items()):
        if name.startswith('test_') and callable(test):
            test()
            print(f"✓ {name}")
