#!/usr/bin/env python3
"""
Nyström discretization M_ij = sqrt(w_i) a(x_i + x_j) sqrt(w_j) of a Hankel operator.

exp_map puts a trapezoid rule on x = e^s (x = e^s - 1 for mehler), which resolves the
1/x structure of kernels singular at 0; algebraic_map uses Gauss-Legendre on [0, X_max]
for kernels that are smooth at 0 and decay exponentially.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

import numpy as np
from numpy.linalg import LinAlgError
from scipy.linalg import eigh

from errors import EigensolverError, InvalidParameterError
from kernel_catalog import KernelId, KernelSpec, kernel_eval, truncation_point

logger = logging.getLogger(__name__)

TRUNCATION_THRESHOLD = 1e-13


class NodeMapping(str, Enum):
    EXP = 'exp_map'
    ALGEBRAIC = 'algebraic_map'


def default_mapping(spec: KernelSpec) -> NodeMapping:
    if spec.singular_at_zero or spec.id == KernelId.MEHLER:
        return NodeMapping.EXP
    return NodeMapping.ALGEBRAIC


def node_rule(spec: KernelSpec, n_nodes: int, mapping: NodeMapping):
    """Nodes and weights on (0, inf) for the given kernel"""
    if n_nodes < 2:
        raise InvalidParameterError("A Nyström rule needs at least 2 nodes")
    if mapping == NodeMapping.ALGEBRAIC:
        if spec.singular_at_zero:
            raise InvalidParameterError(f"algebraic_map cannot resolve {spec.name} at 0")
        x_max = truncation_point(spec, TRUNCATION_THRESHOLD)
        nodes, weights = np.polynomial.legendre.leggauss(n_nodes)
        return 0.5 * x_max * (nodes + 1.0), 0.5 * x_max * weights

    h = 8.0 / math.sqrt(n_nodes)
    j = np.arange(n_nodes)
    if spec.id == KernelId.CARLEMAN:
        s = (j - 0.5 * (n_nodes - 1)) * h
        return np.exp(s), h * np.exp(s)
    if spec.id == KernelId.MEHLER:
        s = (j + 0.5) * h
        return np.expm1(s), h * np.exp(s)
    if spec.singular_at_infinity:
        raise InvalidParameterError(f"exp_map needs a decaying kernel, {spec.name} is algebraic")
    s_max = math.log(truncation_point(spec, TRUNCATION_THRESHOLD))
    s = s_max - (n_nodes - 1 - j) * h
    return np.exp(s), h * np.exp(s)


@dataclass
class HankelMatrix:
    """
    Symmetrized Nyström matrix of a Hankel operator

    Args:
        spec: kernel
        nodes: quadrature nodes x_i
        weights: quadrature weights w_i
        entries: sqrt(w_i) a(x_i + x_j) sqrt(w_j)
        mapping: node rule used
    """
    spec: KernelSpec
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    entries: np.ndarray = field(repr=False)
    mapping: NodeMapping = NodeMapping.EXP

    @property
    def size(self) -> int:
        return self.nodes.size

    def asymmetry(self) -> float:
        return float(np.max(np.abs(self.entries - self.entries.T)))


def build(spec: KernelSpec, n_nodes: int, mapping: Optional[NodeMapping] = None) -> HankelMatrix:
    mapping = NodeMapping(mapping) if mapping is not None else default_mapping(spec)
    x, w = node_rule(spec, n_nodes, mapping)
    sums = x[:, None] + x[None, :]
    kernel = np.asarray(kernel_eval(spec, sums.ravel()), dtype=float).reshape(sums.shape)
    root = np.sqrt(w)
    entries = root[:, None] * kernel * root[None, :]
    # a(x_i + x_j) is symmetric in exact arithmetic; remove the last-bit noise
    entries = 0.5 * (entries + entries.T)
    logger.debug(f"Built {n_nodes}x{n_nodes} {mapping.value} matrix for {spec.name}, "
                 f"x in [{x.min():.3g}, {x.max():.3g}]")
    return HankelMatrix(spec=spec, nodes=x, weights=w, entries=entries, mapping=mapping)


def eigenpairs(m: HankelMatrix):
    """Eigenvalues and eigenvectors sorted by descending |lambda|"""
    try:
        values, vectors = eigh(m.entries)
    except (LinAlgError, ValueError) as e:
        raise EigensolverError(f"Eigensolve of the {m.spec.name} matrix failed: {e}")
    order = np.argsort(-np.abs(values), kind='stable')
    return values[order], vectors[:, order]


def eigenvalues(m: HankelMatrix) -> np.ndarray:
    """Eigenvalues sorted by descending |lambda|"""
    try:
        values = eigh(m.entries, eigvals_only=True)
    except (LinAlgError, ValueError) as e:
        raise EigensolverError(f"Eigensolve of the {m.spec.name} matrix failed: {e}")
    return values[np.argsort(-np.abs(values), kind='stable')]


def rank_check(m: HankelMatrix, threshold: float) -> int:
    """Number of eigenvalues with |lambda| > threshold"""
    if threshold <= 0:
        raise InvalidParameterError("rank_check threshold must be positive")
    return int(np.sum(np.abs(eigenvalues(m)) > threshold))


def containment_excess(values: Sequence[float], lower: float, upper: float) -> float:
    """How far the eigenvalues stick out of [lower, upper] (0 when contained)"""
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        return 0.0
    return float(max(0.0, lower - values.min(), values.max() - upper))


def eigenvector_error(m: HankelMatrix, psi, lam: float, cluster: float = 1e-6) -> float:
    """
    Relative L^2 distance of sqrt(w) psi(x) from the span of the matrix eigenvectors whose
    eigenvalues lie within cluster of lam (sign and degeneracy independent)
    """
    values, vectors = eigenpairs(m)
    chosen = np.abs(values - lam) < cluster
    if not np.any(chosen):
        raise EigensolverError(f"No matrix eigenvalue within {cluster:g} of {lam:g}")
    u = np.sqrt(m.weights) * np.asarray(psi(m.nodes), dtype=float)
    basis = vectors[:, chosen]
    projection = basis @ (basis.T @ u)
    return float(np.linalg.norm(u - projection) / np.linalg.norm(u))
