#!/usr/bin/env python3
"""
Sturm-Liouville eigensolver for L in the Liouville variable t.

L acts as -d^2/dt^2 + q(t) + 1/4 on f~(t) = p(x)^{1/4} f(x), p = x^2 + gamma x. For
gamma = 2 the half-line t > 0 is discretized by cell-centered finite volumes on
g = f~ / sqrt(t), which absorbs the -1/(4t^2) singularity and builds in the regular
boundary condition. For gamma = 0 the whole line is truncated where the bound states
below the continuum have decayed. Other gamma > 0 are rescaled to gamma = 2.

The compact regular kernels get their eigenvalues from the tail of the eigenfunctions:
psi is fitted against its asymptotic series to fix the unit tail coefficient and
lambda follows from one integral of psi.
"""

import logging
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import List, Optional, Sequence

import numpy as np
from numpy.linalg import LinAlgError
from scipy.integrate import cumulative_trapezoid, solve_ivp
from scipy.interpolate import CubicSpline
from scipy.linalg import eigh_tridiagonal

from diffop import PotentialCase, liouville_forward, liouville_inverse, liouville_potential
from errors import (AsymptoticNormalizationError, EigensolverError, InvalidParameterError,
                    TruncationDomainTooSmallError)
from kernel_catalog import KernelId, KernelSpec, LParams, kernel_eval

logger = logging.getLogger(__name__)

SQRT8 = math.sqrt(8.0)
WKB_DECAY = 25.0
POTENTIAL_MARGIN = 40.0
LEFT_DECAY_LENGTHS = 20.0
MIN_DECAY_RATE = 0.2
BOUNDARY_CELLS = 10
BOUNDARY_MASS = 1e-8
CUTOFF_STEP = 0.01


class BoundaryKind(str, Enum):
    REGULAR_SQRT = 'regular_sqrt'
    DECAYING = 'decaying'


def _right_cutoff(case: PotentialCase, energy: float, t_start: float) -> float:
    """First t where q - E >= POTENTIAL_MARGIN and the WKB decay integral reaches WKB_DECAY"""
    span = 40.0 + max(0.0, -t_start)
    t = t_start + CUTOFF_STEP * np.arange(1, int(span / CUTOFF_STEP) + 1)
    excess = liouville_potential(case, t) - energy
    decay = cumulative_trapezoid(np.sqrt(np.clip(excess, 0.0, None)), t, initial=0.0)
    hits = np.nonzero((excess >= POTENTIAL_MARGIN) & (decay >= WKB_DECAY))[0]
    if hits.size == 0:
        raise TruncationDomainTooSmallError(
            f"No right cutoff within t <= {t[-1]:.1f} for energy {energy:g}")
    return float(t[hits[0]])


def _weakest_decay(alpha: float, beta: float) -> float:
    """Smallest decay rate sqrt(1/4 - mu) at t -> -inf among the bound states of alpha e^{2t} + beta e^t"""
    if alpha <= 0:
        return 1.0
    effective = beta / (2.0 * math.sqrt(alpha))
    rates = []
    n = 1
    while n < abs(effective) + 0.5 and effective < -0.5:
        rates.append(abs(effective) + 0.5 - n)
        n += 1
    return max(min(rates), MIN_DECAY_RATE) if rates else 1.0


@dataclass(frozen=True)
class SLProblem:
    """
    Truncated eigenproblem -f~'' + q f~ = (mu - 1/4) f~

    Args:
        case: potential q
        t_min, t_max: truncated domain (t_min = 0 for regular_sqrt)
        left_bc: regular_sqrt (f~ ~ t^{1/2}) or decaying
        n_points: number of cells (regular_sqrt) or intervals (decaying)
        scale: gamma / 2; eigenfunctions map back through x = scale * eta(t)
    """
    case: PotentialCase
    t_min: float
    t_max: float
    left_bc: BoundaryKind
    n_points: int = 4000
    scale: float = 1.0

    def __post_init__(self):
        if not self.t_min < self.t_max:
            raise InvalidParameterError(f"Empty domain [{self.t_min}, {self.t_max}]")
        if self.n_points < 200:
            raise InvalidParameterError(f"n_points must be >= 200, got {self.n_points}")
        if self.left_bc == BoundaryKind.REGULAR_SQRT and self.t_min != 0:
            raise InvalidParameterError("regular_sqrt problems start at t = 0")

    @property
    def right_bc(self) -> BoundaryKind:
        return BoundaryKind.DECAYING

    @property
    def regular(self) -> bool:
        return self.left_bc == BoundaryKind.REGULAR_SQRT

    @property
    def step(self) -> float:
        return (self.t_max - self.t_min) / self.n_points

    def nodes(self) -> np.ndarray:
        h = self.step
        if self.regular:
            return self.t_min + h * (np.arange(self.n_points) + 0.5)
        return self.t_min + h * np.arange(1, self.n_points)

    def potential(self, t):
        return liouville_potential(self.case, t)

    def refined(self, factor: int = 2) -> 'SLProblem':
        return replace(self, n_points=self.n_points * factor)

    def extended(self) -> 'SLProblem':
        """Twice the right cutoff at the same step"""
        h = self.step
        target = 2.0 * self.t_max if self.t_max > 0 else self.t_max + 1.0
        extra = int(round((target - self.t_max) / h))
        return replace(self, t_max=self.t_max + extra * h, n_points=self.n_points + extra)

    @classmethod
    def for_params(cls, params: LParams, n_points: int = 4000, n_eigs: int = 5) -> 'SLProblem':
        """
        Truncated problem for L with the given (alpha, beta, gamma)

        gamma = 0 gives the whole-line problem for the bound states below mu = 1/4;
        gamma > 0 is rescaled to gamma = 2 and truncated above the n_eigs-th level.
        """
        if params.gamma == 0:
            if not (params.alpha > 0 or params.beta > 0):
                raise InvalidParameterError(f"{params} is not confining on the right")
            case = PotentialCase('gamma0', params.alpha, params.beta)
            t_min = -LEFT_DECAY_LENGTHS / _weakest_decay(params.alpha, params.beta)
            t_max = _right_cutoff(case, 0.0, t_min)
            logger.debug(f"Whole-line domain [{t_min:.3f}, {t_max:.3f}] for {params}")
            return cls(case, t_min, t_max, BoundaryKind.DECAYING, n_points)

        scale = 0.5 * params.gamma
        alpha, beta = params.alpha * scale ** 2, params.beta * scale
        if not (alpha > 0 or beta > 0):
            raise InvalidParameterError(f"{params} is not confining; the spectrum is not discrete")
        case = PotentialCase.regular(alpha, beta)
        energy = 10.0
        for _ in range(8):
            t_max = _right_cutoff(case, energy, CUTOFF_STEP)
            coarse = cls(case, 0.0, t_max, BoundaryKind.REGULAR_SQRT, 400, scale)
            top = _energies(coarse, n_eigs)[-1]
            if top <= energy:
                break
            energy = top + 10.0
        logger.debug(f"Half-line domain [0, {t_max:.3f}] for {params} (energy cut {energy:g})")
        return cls(case, 0.0, t_max, BoundaryKind.REGULAR_SQRT, n_points, scale)


def _tridiagonal(problem: SLProblem):
    t = problem.nodes()
    h = problem.step
    if problem.regular:
        right_faces = t + 0.5 * h
        diag = 2.0 / h ** 2 + problem.potential(t) + 0.25 / t ** 2
        off = -right_faces[:-1] / (h ** 2 * np.sqrt(t[:-1] * t[1:]))
    else:
        diag = 2.0 / h ** 2 + problem.potential(t)
        off = np.full(t.size - 1, -1.0 / h ** 2)
    return t, diag, off


def _eigensystem(problem: SLProblem, n_eigs: int, vectors: bool = True):
    t, diag, off = _tridiagonal(problem)
    count = min(n_eigs, diag.size)
    try:
        result = eigh_tridiagonal(diag, off, eigvals_only=not vectors, select='i',
                                  select_range=(0, count - 1))
    except (LinAlgError, ValueError) as e:
        raise EigensolverError(f"Tridiagonal eigensolve failed: {e}")
    return t, result


def _energies(problem: SLProblem, n_eigs: int) -> np.ndarray:
    _, energies = _eigensystem(problem, n_eigs, vectors=False)
    return energies


@dataclass
class SLEigenpair:
    """
    Eigenvalue mu of L and f~ sampled on the grid, normalized so that sum f~^2 h = 1

    Args:
        mu: eigenvalue of L
        t: grid nodes
        tilde_psi: f~ at the nodes
        problem: the problem solved
    """
    mu: float
    t: np.ndarray = field(repr=False)
    tilde_psi: np.ndarray = field(repr=False)
    problem: SLProblem = field(repr=False)

    @cached_property
    def _spline(self) -> CubicSpline:
        if self.problem.regular:
            return CubicSpline(self.t, self.tilde_psi / np.sqrt(self.t))
        return CubicSpline(self.t, self.tilde_psi)

    def tilde(self, t):
        """f~ at arbitrary t, zero beyond the truncated domain"""
        t = np.asarray(t, dtype=float)
        inside = (t >= self.problem.t_min) & (t <= self.problem.t_max)
        clipped = np.clip(t, self.problem.t_min, self.problem.t_max)
        values = self._spline(clipped)
        if self.problem.regular:
            values = values * np.sqrt(clipped)
        return np.where(inside, values, 0.0)

    def _to_x(self, t, dt):
        """(x, factor, weight) for t-nodes with t-weights dt, psi = factor * f~"""
        scale = self.problem.scale
        if self.problem.regular:
            eta = liouville_inverse(t)
            p = eta * eta + 2.0 * eta
            jac = np.sqrt(p)
            psi_factor = p ** -0.25
        else:
            eta = np.exp(t)
            jac = eta
            psi_factor = np.exp(-0.5 * t)
        return scale * eta, psi_factor / np.sqrt(scale), scale * jac * dt

    def samples(self):
        """(x, psi, weight) at the grid nodes; weights integrate in x"""
        x, factor, weight = self._to_x(self.t, np.full(self.t.size, self.problem.step))
        return x, self.tilde_psi * factor, weight

    def quadrature(self, n_nodes: int = 300):
        """(x, psi, weight) at Gauss-Legendre nodes in t over the support of f~"""
        significant = np.nonzero(np.abs(self.tilde_psi) > 1e-13 * np.max(np.abs(self.tilde_psi)))[0]
        h = self.problem.step
        t_hi = min(self.t[significant[-1]] + h, self.problem.t_max)
        t_lo = 0.0 if self.problem.regular else max(self.t[significant[0]] - h, self.problem.t_min)
        nodes, weights = np.polynomial.legendre.leggauss(n_nodes)
        half = 0.5 * (t_hi - t_lo)
        t = t_lo + half * (nodes + 1.0)
        x, factor, weight = self._to_x(t, half * weights)
        return x, self.tilde(t) * factor, weight

    def psi(self, x):
        """Eigenfunction of L in x, unit L^2 norm"""
        x_arr = np.asarray(x, dtype=float)
        scale = self.problem.scale
        xi = x_arr / scale
        with np.errstate(divide='ignore', invalid='ignore'):
            if self.problem.regular:
                t = liouville_forward(xi)
                p = xi * xi + 2.0 * xi
                ratio = np.where(xi > 0, np.sqrt(t) / p ** 0.25, 1.0)
                inside = t <= self.problem.t_max
                g = self._spline(np.minimum(t, self.problem.t_max))
                values = np.where(inside, ratio * g, 0.0)
            else:
                values = self.tilde(np.log(xi)) / np.sqrt(xi)
        return values / np.sqrt(scale)

    def left_boundary_defect(self, cells: int = 10) -> float:
        """Relative misfit of f~/sqrt(t) by a + b t^2 on the first cells"""
        if not self.problem.regular:
            raise InvalidParameterError("left_boundary_defect applies to regular_sqrt problems")
        t = self.t[:cells]
        g = self.tilde_psi[:cells] / np.sqrt(t)
        design = np.column_stack([np.ones_like(t), t * t])
        coef, *_ = np.linalg.lstsq(design, g, rcond=None)
        return float(np.max(np.abs(design @ coef - g)) / abs(coef[0]))


def _check_boundary_mass(problem: SLProblem, vector: np.ndarray, mu: float):
    masses = [float(np.sum(vector[-BOUNDARY_CELLS:] ** 2))]
    if not problem.regular:
        masses.append(float(np.sum(vector[:BOUNDARY_CELLS] ** 2)))
    if max(masses) > BOUNDARY_MASS:
        raise TruncationDomainTooSmallError(
            f"Eigenfunction at mu={mu:.6g} has mass {max(masses):.3g} next to the truncation "
            f"boundary of [{problem.t_min:.3g}, {problem.t_max:.3g}]")


def solve(problem: SLProblem, n_eigs: int = 5, check_boundary: bool = True) -> List[SLEigenpair]:
    """
    Lowest n_eigs eigenpairs of L, ascending. Whole-line problems only return
    eigenvalues below the continuum edge mu = 1/4.
    """
    if n_eigs < 1:
        raise InvalidParameterError("n_eigs must be positive")
    t, (energies, vectors) = _eigensystem(problem, n_eigs)
    if not problem.regular:
        below = energies < 0
        energies, vectors = energies[below], vectors[:, below]
    h = problem.step
    pairs = []
    for energy, vector in zip(energies, vectors.T):
        if check_boundary:
            _check_boundary_mass(problem, vector, energy + 0.25)
        if vector[np.argmax(np.abs(vector))] < 0:
            vector = -vector
        pairs.append(SLEigenpair(mu=float(energy + 0.25), t=t, tilde_psi=vector / np.sqrt(h),
                                 problem=problem))
    logger.debug(f"Solved {problem.case.kind} on {problem.n_points} points: "
                 f"mu = {[round(p.mu, 8) for p in pairs]}")
    return pairs


@dataclass
class RichardsonResult:
    """Eigenvalues over grids n, 2n, 4n, ... and their extrapolation"""
    mu: np.ndarray
    levels: List[np.ndarray]
    orders: np.ndarray
    pairs: List[SLEigenpair]

    @property
    def error_estimate(self) -> np.ndarray:
        return np.abs(self.mu - self.levels[-1])


def refine(problem: SLProblem, n_eigs: int = 5, levels: int = 3) -> RichardsonResult:
    """Solve on successively doubled grids; second-order Richardson extrapolation"""
    if levels < 2:
        raise InvalidParameterError("Richardson extrapolation needs at least 2 levels")
    level_mu, pairs = [], []
    for j in range(levels):
        pairs = solve(problem.refined(2 ** j) if j else problem, n_eigs)
        level_mu.append(np.array([p.mu for p in pairs]))
    count = min(m.size for m in level_mu)
    mus = [m[:count] for m in level_mu]
    orders = np.full(count, np.nan)
    if levels >= 3:
        with np.errstate(divide='ignore', invalid='ignore'):
            orders = np.log2(np.abs((mus[-3] - mus[-2]) / (mus[-2] - mus[-1])))
    extrapolated = mus[-1] + (mus[-1] - mus[-2]) / 3.0
    logger.debug(f"Richardson orders {np.round(orders, 3)}")
    return RichardsonResult(mu=extrapolated, levels=mus, orders=orders, pairs=pairs[:count])


def orthonormality_defect(pairs: Sequence[SLEigenpair]) -> float:
    """max |<f~_i, f~_j> - delta_ij| in the discrete inner product"""
    if not pairs:
        return 0.0
    h = pairs[0].problem.step
    stacked = np.array([p.tilde_psi for p in pairs])
    gram = stacked @ stacked.T * h
    return float(np.max(np.abs(gram - np.eye(len(pairs)))))


def truncation_sensitivity(problem: SLProblem, n_eigs: int = 5) -> float:
    """Largest eigenvalue shift when the right cutoff is doubled at fixed step"""
    base = np.array([p.mu for p in solve(problem, n_eigs)])
    wide = np.array([p.mu for p in solve(problem.extended(), n_eigs)])
    count = min(base.size, wide.size)
    return float(np.max(np.abs(base[:count] - wide[:count]))) if count else 0.0


# ---------------------------------------------------------------------------
# Compact cases: tail law, normalization and eigenvalues
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TailLaw:
    """
    psi(x) ~ x^power e^{-x/2} (plain) or x^power e^{-sqrt(8x)} (stretched)
    """
    power: float
    stretched: bool

    @property
    def rate(self) -> float:
        return SQRT8 if self.stretched else 0.5

    def leading(self, x):
        x = np.asarray(x, dtype=float)
        decay = np.sqrt(x) * SQRT8 if self.stretched else 0.5 * x
        return np.exp(self.power * np.log(x) - decay)

    def variable(self, x):
        """Expansion variable of the asymptotic series: sqrt(x) or x"""
        return np.sqrt(x) if self.stretched else np.asarray(x, dtype=float)

    def coefficients(self, mu: float, terms: int) -> np.ndarray:
        """
        Coefficients of psi / leading = sum_m c_m v^{-m}, c_0 = 1, from L psi = mu psi
        """
        c = np.zeros(terms)
        c[0] = 1.0
        if not self.stretched:
            rho = self.power
            for m in range(1, terms):
                value = c[m - 1] * (1.0 - mu - (rho - m + 1.0) * (rho - m))
                if m >= 2:
                    value -= 2.0 * (rho - m + 2.0) ** 2 * c[m - 2]
                c[m] = value / m
            return c
        sigma = 2.0 * self.power
        for m in range(1, terms):
            value = ((sigma - m + 1.0) * (sigma - m + 3.0) + 16.0 + 4.0 * mu) * c[m - 1]
            if m >= 2:
                value += 4.0 * SQRT8 * (m - 1.0) * c[m - 2]
            if m >= 3:
                value += 2.0 * (sigma - m + 3.0) ** 2 * c[m - 3]
            c[m] = -value / (2.0 * SQRT8 * m)
        return c

    def describe(self) -> str:
        decay = 'e^(-sqrt(8x))' if self.stretched else 'e^(-x/2)'
        return f"x^({self.power:g}) {decay}"


def semiclassical_tail(spec: KernelSpec, mu: Optional[float] = None) -> TailLaw:
    """
    Tail law q^{-1/4} exp(-int q^{1/2}) mapped back to x for the compact kernels;
    mu only enters the subleading series (TailLaw.coefficients)
    """
    if spec.id == KernelId.REGULAR_WHITTAKER:
        return TailLaw(power=-1.0 - spec.index, stretched=False)
    if spec.id == KernelId.REGULAR_MACDONALD:
        return TailLaw(power=-0.75, stretched=True)
    raise InvalidParameterError(f"{spec.name} has no confining tail law")


@dataclass(frozen=True)
class TailFit:
    coefficient: float
    spread: float
    window: tuple
    terms: int


MAX_SERIES_TERMS = 40
SERIES_TOL = 1e-15
MATCH_FLOOR = 1e-2
MATCH_MIN_X = 0.5
RESOLVED_STEP = 0.1


def _resolved(pair: SLEigenpair) -> np.ndarray:
    """Grid nodes where the local decay rate is resolved by the step"""
    excess = pair.problem.potential(pair.t) - (pair.mu - 0.25)
    return np.sqrt(np.clip(excess, 0.0, None)) * pair.problem.step <= RESOLVED_STEP


def _tail_window(pair: SLEigenpair, x: np.ndarray, min_x: float = 4.0) -> np.ndarray:
    energy = pair.mu - 0.25
    excess = pair.problem.potential(pair.t) - energy
    classical = np.nonzero(excess <= 0)[0]
    t_turn = pair.t[classical[-1]] if classical.size else pair.t[0]
    magnitude = np.abs(pair.tilde_psi)
    keep = (pair.t > t_turn) & (magnitude >= 1e-10 * magnitude.max()) & (x >= min_x) & _resolved(pair)
    return np.nonzero(keep)[0]


def _series_start(law: TailLaw, mu: float):
    """Smallest convenient x where the optimally truncated tail series reaches SERIES_TOL"""
    coeffs = law.coefficients(mu, MAX_SERIES_TERMS)
    x = 30.0 + 4.0 * abs(mu)
    for _ in range(40):
        v = float(law.variable(x))
        magnitudes = np.abs(coeffs) * v ** -np.arange(MAX_SERIES_TERMS, dtype=float)
        terms = int(np.argmin(magnitudes[1:])) + 1
        if magnitudes[terms] <= SERIES_TOL:
            return x, terms
        x *= 1.25
    raise AsymptoticNormalizationError(f"No starting point for the tail series {law.describe()} at mu={mu:.6g}")


def unit_tail_solution(spec: KernelSpec, mu: float, x_min: float = MATCH_MIN_X):
    """
    The solution of L psi = mu psi with psi ~ x^power e^{-...} (unit coefficient), integrated
    inward from where the tail series is exact to double precision.

    The unknown is u = psi / leading, which stays of moderate size on the whole range.
    Returns (callable psi on [x_min, x_far], number of series terms used at x_far).
    """
    law = semiclassical_tail(spec, mu)
    params = spec.params
    x_far, terms = _series_start(law, mu)
    coeffs = law.coefficients(mu, MAX_SERIES_TERMS)[:terms]
    orders = np.arange(terms, dtype=float)
    v = float(law.variable(x_far))
    series = float(np.sum(coeffs * v ** -orders))
    series_v = float(np.sum(-orders * coeffs * v ** (-orders - 1.0)))
    dv_dx = 0.5 / v if law.stretched else 1.0

    def g(x):
        """leading'/leading and its derivative"""
        if law.stretched:
            return law.power / x - math.sqrt(2.0 / x), -law.power / x ** 2 + math.sqrt(0.5) * x ** -1.5
        return law.power / x - 0.5, -law.power / x ** 2

    def rhs(x, y):
        u, du = y
        p = x * x + params.gamma * x
        dp = 2.0 * x + params.gamma
        q = params.alpha * x * x + params.beta * x - mu
        gx, dgx = g(x)
        return [du, ((q - p * (gx * gx + dgx) - dp * gx) * u - (2.0 * p * gx + dp) * du) / p]

    solution = solve_ivp(rhs, (x_far, x_min), [series, series_v * dv_dx], method='DOP853',
                         rtol=1e-12, atol=1e-14 * abs(series), dense_output=True)
    if not solution.success:
        raise AsymptoticNormalizationError(
            f"{spec.name} mu={mu:.6g}: inward tail integration failed: {solution.message}")
    logger.debug(f"{spec.name} mu={mu:.6g}: tail solution from x={x_far:.4g} with {terms} terms "
                 f"in {solution.t.size} steps")

    def psi(x):
        x = np.asarray(x, dtype=float)
        return law.leading(x) * solution.sol(x)[0]

    return psi, terms


def fit_tail_coefficient(spec: KernelSpec, pair: SLEigenpair) -> TailFit:
    """
    C in psi(x) ~ C x^power e^{-...}: the grid eigenfunction is matched by least squares to
    the unit-tail solution on the resolved part of the grid where |psi| >= MATCH_FLOOR max|psi|
    """
    x, psi, _ = pair.samples()
    magnitude = np.abs(psi)
    window = np.nonzero((x >= MATCH_MIN_X) & (magnitude >= MATCH_FLOOR * magnitude.max())
                        & _resolved(pair))[0]
    if window.size < 10:
        raise AsymptoticNormalizationError(
            f"{spec.name} mu={pair.mu:.6g}: only {window.size} grid points in the matching window")
    xw, psiw = x[window], psi[window]
    exact, terms = unit_tail_solution(spec, pair.mu, x_min=float(xw[0]))
    phi = exact(xw)

    def fit(rows):
        return float(np.dot(psiw[rows], phi[rows]) / np.dot(phi[rows], phi[rows]))

    everything = np.ones(window.size, dtype=bool)
    first = np.arange(window.size) < window.size // 2
    coefficient = fit(everything)
    spread = max(abs(fit(first) - coefficient), abs(fit(~first) - coefficient)) / abs(coefficient)
    if spread > 1e-2:
        raise AsymptoticNormalizationError(
            f"{spec.name} mu={pair.mu:.6g}: tail coefficient unstable across the window "
            f"(spread {spread:.3g})")
    if spread > 1e-4:
        logger.warning(f"{spec.name} mu={pair.mu:.6g}: tail fit spread {spread:.3g} "
                       f"on x in [{xw[0]:.3g}, {xw[-1]:.3g}]")
    return TailFit(coefficient=coefficient, spread=float(spread),
                   window=(float(xw[0]), float(xw[-1])), terms=terms)


def compact_case_lambda(spec: KernelSpec, pair: SLEigenpair, fit: Optional[TailFit] = None) -> float:
    """
    lambda_mu from the unit-tail normalized eigenfunction:
    e^{-1} int e^{-y/2} psi dy (regular_whittaker), 2^{-5/4} sqrt(pi) int psi dy (regular_macdonald)
    """
    fit = fit or fit_tail_coefficient(spec, pair)
    x, psi, w = pair.quadrature()
    if spec.id == KernelId.REGULAR_WHITTAKER:
        integral = np.sum(w * np.exp(-0.5 * x) * psi)
        return float(math.exp(-1.0) * integral / fit.coefficient)
    integral = np.sum(w * psi)
    return float(2.0 ** -1.25 * math.sqrt(math.pi) * integral / fit.coefficient)


def _hankel_on_nodes(spec: KernelSpec, pair: SLEigenpair, n_nodes: int):
    x, psi, w = pair.quadrature(n_nodes)
    kernel = np.asarray(kernel_eval(spec, (x[:, None] + x[None, :]).ravel())).reshape(x.size, x.size)
    return x, psi, w, kernel @ (w * psi)


def rayleigh_quotient(spec: KernelSpec, pair: SLEigenpair, n_nodes: int = 300) -> float:
    """<A psi, psi> / <psi, psi> by Gauss-Legendre quadrature in t"""
    _, psi, w, a_psi = _hankel_on_nodes(spec, pair, n_nodes)
    return float(np.sum(w * psi * a_psi) / np.sum(w * psi * psi))


def eigen_residual(spec: KernelSpec, pair: SLEigenpair, lam: float, n_nodes: int = 300) -> float:
    """||A psi - lambda psi|| / (|lambda| ||psi||)"""
    _, psi, w, a_psi = _hankel_on_nodes(spec, pair, n_nodes)
    residual = math.sqrt(np.sum(w * (a_psi - lam * psi) ** 2))
    return residual / (abs(lam) * math.sqrt(np.sum(w * psi * psi)))


def tail_rate_error(spec: KernelSpec, pair: SLEigenpair) -> float:
    """
    Relative error of the decay rate fitted to ln|psi| = a + b ln x - r v + c / v against
    the tail law's rate (v = x or sqrt(x))
    """
    law = semiclassical_tail(spec, pair.mu)
    x, psi, _ = pair.samples()
    window = _tail_window(pair, x)
    if window.size < 10:
        raise AsymptoticNormalizationError(f"{spec.name}: tail window too short for a slope fit")
    xw = x[window]
    v = law.variable(xw)
    design = np.column_stack([np.ones_like(xw), np.log(xw), -v, 1.0 / v])
    coef, *_ = np.linalg.lstsq(design, np.log(np.abs(psi[window])), rcond=None)
    return float(abs(coef[2] - law.rate) / law.rate)
