#!/usr/bin/env python3
"""
Tests for the Sturm-Liouville solver and the compact-kernel eigenvalues
"""

import math

import numpy as np
import pytest

from diffop import PotentialCase, SmoothFn, apply_L
from errors import InvalidParameterError
from kernel_catalog import LParams, regular_macdonald, regular_whittaker
from sl_solver import (BoundaryKind, SLProblem, TailLaw, compact_case_lambda, eigen_residual,
                       fit_tail_coefficient, orthonormality_defect, rayleigh_quotient, refine,
                       semiclassical_tail, solve, truncation_sensitivity, unit_tail_solution)
from spectral_identities import discrete_spectrum

WHITTAKER_DISCRETE = LParams(0.25, -1.5, 0.0)


def test_whole_line_bound_state():
    problem = SLProblem.for_params(WHITTAKER_DISCRETE)
    assert problem.left_bc == BoundaryKind.DECAYING
    pairs = solve(problem, n_eigs=3)
    assert len(pairs) == 1
    assert abs(pairs[0].mu + 0.75) < 1e-3


def test_richardson_converges_with_order_two():
    result = refine(SLProblem.for_params(WHITTAKER_DISCRETE), n_eigs=1, levels=3)
    assert abs(result.mu[0] + 0.75) < 1e-6
    assert abs(result.orders[0] - 2.0) < 0.2
    assert result.error_estimate[0] < 1e-4


def test_two_bound_states_are_orthonormal():
    problem = SLProblem.for_params(LParams(0.25, -2.3, 0.0))
    pairs = solve(problem, n_eigs=4)
    assert np.allclose([p.mu for p in pairs], [0.25 - 1.8 ** 2, 0.25 - 0.8 ** 2], atol=1e-3)
    assert orthonormality_defect(pairs) < 1e-8
    assert truncation_sensitivity(problem, 2) < 1e-8


def test_bound_state_matches_closed_form():
    pair = solve(SLProblem.for_params(WHITTAKER_DISCRETE), n_eigs=1)[0]
    x, psi, w = pair.quadrature()
    assert math.isclose(np.sum(w * psi * psi), 1.0, rel_tol=1e-4)
    exact = discrete_spectrum(-1.5)[0]
    norm = math.sqrt(exact.norm_squared())
    points = np.array([0.5, 1.0, 3.0])
    assert np.allclose(pair.psi(points), exact.psi(points) / norm, rtol=1e-3)


def test_problem_validation():
    case = PotentialCase.regular(0.25, 0.5)
    with pytest.raises(InvalidParameterError):
        SLProblem(case, 0.0, 10.0, BoundaryKind.REGULAR_SQRT, n_points=50)
    with pytest.raises(InvalidParameterError):
        SLProblem(case, 1.0, 10.0, BoundaryKind.REGULAR_SQRT)
    with pytest.raises(InvalidParameterError):
        SLProblem.for_params(LParams(0.0, 0.0, 2.0))
    with pytest.raises(InvalidParameterError):
        solve(SLProblem(case, 0.0, 10.0, BoundaryKind.REGULAR_SQRT), n_eigs=0)


def test_general_gamma_is_rescaled():
    problem = SLProblem.for_params(LParams(0.25, 1.0, 4.0), n_points=1000)
    assert problem.scale == 2.0
    assert problem.case == PotentialCase.regular(1.0, 2.0)


def test_tail_laws():
    assert semiclassical_tail(regular_whittaker(0.0)) == TailLaw(power=-1.0, stretched=False)
    assert semiclassical_tail(regular_macdonald()) == TailLaw(power=-0.75, stretched=True)


def _series(law: TailLaw, mu: float, terms: int = 12):
    coeffs = law.coefficients(mu, terms)

    def func(x):
        x = np.asarray(x, dtype=float)
        v = law.variable(x)
        powers = v[..., None] ** -np.arange(terms, dtype=float)
        return law.leading(x) * (powers @ coeffs)
    return func


def test_whittaker_tail_series_solves_L():
    mu = 3.7
    spec = regular_whittaker(0.0)
    func = _series(semiclassical_tail(spec), mu)
    x = np.array([60.0, 80.0])
    f = SmoothFn.from_function(func, rel_step=1e-4)
    residual = apply_L(spec.params, f, x) - mu * func(x)
    assert np.all(np.abs(residual) < 1e-6 * 0.25 * x * x * np.abs(func(x)))


def test_macdonald_tail_series_solves_L():
    mu = 3.7
    spec = regular_macdonald()
    func = _series(semiclassical_tail(spec), mu)
    x = np.array([400.0, 600.0])
    f = SmoothFn.from_function(func, rel_step=1e-4)
    residual = apply_L(spec.params, f, x) - mu * func(x)
    assert np.all(np.abs(residual) < 1e-6 * 2.0 * x * np.abs(func(x)))


def test_unit_tail_solution_matches_series():
    mu = 3.7
    spec = regular_whittaker(0.0)
    psi, terms = unit_tail_solution(spec, mu, x_min=20.0)
    x = np.array([40.0, 42.0])
    assert terms > 1
    assert np.allclose(psi(x), _series(semiclassical_tail(spec), mu, 30)(x), rtol=1e-8)


def test_compact_eigenvalues_agree_with_rayleigh_quotient():
    for spec in (regular_whittaker(0.0), regular_macdonald()):
        _check_compact_levels(spec)


def _check_compact_levels(spec):
    result = refine(SLProblem.for_params(spec.params, n_eigs=5), n_eigs=5, levels=3)
    assert np.all(np.diff(result.mu) > 0)
    for pair in result.pairs:
        fit = fit_tail_coefficient(spec, pair)
        assert fit.spread < 1e-2
        lam = compact_case_lambda(spec, pair, fit)
        assert math.isclose(lam, rayleigh_quotient(spec, pair), rel_tol=1e-3), pair.mu
        assert eigen_residual(spec, pair, lam) < 1e-3
        assert pair.left_boundary_defect() < 1e-3


if __name__ == "__main__":
    print("\n" + "=" * 50)
    print("Testing Sturm-Liouville solver")
    print("=" * 50 + "\n")
    for name, test in list(globals().items()):
        if name.startswith('test_') and callable(test):
            test()
            print(f"✓ {name}")
