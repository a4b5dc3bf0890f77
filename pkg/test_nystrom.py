#!/usr/bin/env python3
"""
Tests for the Nyström discretization
"""

import math

import numpy as np
import pytest

from errors import InvalidParameterError
from kernel_catalog import carleman, finite_rank, mehler, regular_macdonald, whittaker
from nystrom import (NodeMapping, build, containment_excess, default_mapping, eigenpairs,
                     eigenvalues, eigenvector_error, node_rule, rank_check)
from spectral_identities import finite_rank_spectrum


def test_default_mappings():
    assert default_mapping(mehler()) == NodeMapping.EXP
    assert default_mapping(carleman()) == NodeMapping.EXP
    assert default_mapping(finite_rank(2)) == NodeMapping.ALGEBRAIC
    assert default_mapping(regular_macdonald()) == NodeMapping.ALGEBRAIC


def test_node_rules():
    x, w = node_rule(finite_rank(1), 50, NodeMapping.ALGEBRAIC)
    assert np.all(x > 0) and np.all(w > 0)
    assert math.isclose(np.sum(w * np.exp(-x)), 1.0, rel_tol=1e-12)
    x, w = node_rule(carleman(), 100, NodeMapping.EXP)
    assert math.isclose(np.sqrt(x[0] * x[-1]), 1.0, rel_tol=1e-12)
    with pytest.raises(InvalidParameterError):
        node_rule(carleman(), 100, NodeMapping.ALGEBRAIC)
    with pytest.raises(InvalidParameterError):
        node_rule(mehler(), 1, NodeMapping.EXP)


def test_matrix_is_symmetric():
    m = build(whittaker(0.5), 60)
    assert m.size == 60
    assert m.asymmetry() == 0.0


def test_finite_rank_spectrum_recovered():
    for l in (1, 2, 3):
        m = build(finite_rank(l), 200)
        assert rank_check(m, 1e-6) == l
        top = np.sort(eigenvalues(m)[:l])
        expected = np.sort([p.lambda_n for p in finite_rank_spectrum(l)])
        assert np.allclose(top, expected, atol=1e-8), l


def test_finite_rank_eigenvectors():
    m = build(finite_rank(2), 200)
    for pair in finite_rank_spectrum(2):
        assert eigenvector_error(m, pair.psi, pair.lambda_n) < 1e-4


def test_eigenpairs_sorted_by_magnitude():
    values, vectors = eigenpairs(build(finite_rank(3), 80))
    assert np.all(np.diff(np.abs(values)) <= 0)
    assert vectors.shape == (80, 80)


def test_mehler_spectrum_contained():
    for n in (100, 200):
        assert containment_excess(eigenvalues(build(mehler(), n)), 0.0, math.pi) < 1e-3


def test_whittaker_outlier_below_continuum():
    values = eigenvalues(build(whittaker(-1.5), 400))
    assert np.min(np.abs(values + math.pi)) < 1e-2


def test_containment_excess():
    assert containment_excess([], 0.0, 1.0) == 0.0
    assert containment_excess([0.2, 0.9], 0.0, 1.0) == 0.0
    assert math.isclose(containment_excess([-0.5, 1.0, 4.0], 0.0, math.pi), 4.0 - math.pi)


def test_rank_check_threshold():
    with pytest.raises(InvalidParameterError):
        rank_check(build(finite_rank(1), 20), 0.0)


if __name__ == "__main__":
    print("\n" + "=" * 50)
    print("Testing Nyström discretization")
    print("=" * 50 + "\n")
    for name, test in list(globals().items()):
        if name.startswith('test_') and callable(test):
            test()
            print(f"✓ {name}")
