#!/usr/bin/env python3
"""
Exact eigenfunction families of the Hankel operators and verifiers of their spectral
identities.

Families: mehler (conical functions), carleman (x^{-1/2} cos / sin (k ln x), multiplicity
two), whittaker(beta) (x^{-1} W_{-beta,ik}) and macdonald (x^{-1/2} K_{2ik}(sqrt(8x))).
Continuum eigenfunctions are normalized as n(k) = (2 pi)^{-1/2} |m(k)|^{-1}, where m(k) is
the coefficient of x^{-1/2+ik} at the singular endpoint; Carleman uses 1/sqrt(pi).
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Sequence

import numpy as np
from scipy import special

from errors import InvalidParameterError
from kernel_catalog import (KernelSpec, carleman, finite_rank, format_number, kernel_eval,
                            macdonald, mehler, whittaker)
from quad import QuadOpts, apply_hankel, integrate_semi_infinite
from reports import VerificationReport, make_report
from specfun import (gamma_complex, laguerre, legendre_conical, macdonald_k, spectral_maps,
                     whittaker_w)

logger = logging.getLogger(__name__)

# k where pi / cosh(pi k) drops below 1e-8 * pi
PARSEVAL_K_MAX = math.acosh(1e8) / math.pi


class FamilyCase(str, Enum):
    MEHLER = 'mehler'
    CARLEMAN = 'carleman'
    WHITTAKER = 'whittaker'
    MACDONALD = 'macdonald'


@dataclass(frozen=True)
class DiscretePair:
    """
    Eigenpair psi_n(x) = e^{-x/2} x^{p-1/2} L^{2p}_{n-1}(x) of the whittaker(beta) kernel
    (beta < -1/2) or of the rank-l kernel (beta = -l)
    """
    n: int
    p: float
    mu_n: float
    lambda_n: float
    beta: float

    def psi(self, x):
        x = np.asarray(x, dtype=float)
        return np.exp(-0.5 * x) * x ** (self.p - 0.5) * laguerre(self.n - 1, 2.0 * self.p, x)

    def norm_squared(self) -> float:
        opts = QuadOpts(rel_tol=1e-13, abs_tol=1e-20, singular_at_zero=True)
        return integrate_semi_infinite(lambda x: self.psi(x) ** 2, opts).value


@dataclass(frozen=True)
class EigenFamily:
    """
    Continuum eigenfunctions psi_k, normalizations and point spectrum of an exact case

    Args:
        case: family
        beta: Whittaker index (whittaker family only)
    """
    case: FamilyCase
    beta: Optional[float] = None

    @classmethod
    def mehler(cls) -> 'EigenFamily':
        return cls(FamilyCase.MEHLER)

    @classmethod
    def carleman(cls) -> 'EigenFamily':
        return cls(FamilyCase.CARLEMAN)

    @classmethod
    def whittaker(cls, beta: float) -> 'EigenFamily':
        return cls(FamilyCase.WHITTAKER, float(beta))

    @classmethod
    def macdonald(cls) -> 'EigenFamily':
        return cls(FamilyCase.MACDONALD)

    @property
    def name(self) -> str:
        if self.case == FamilyCase.WHITTAKER:
            return f"whittaker({format_number(self.beta)})"
        return self.case.value

    @property
    def kernel(self) -> KernelSpec:
        return {FamilyCase.MEHLER: mehler, FamilyCase.CARLEMAN: carleman,
                FamilyCase.MACDONALD: macdonald}.get(self.case, lambda: whittaker(self.beta))()

    @property
    def multiplicity(self) -> int:
        return 2 if self.case == FamilyCase.CARLEMAN else 1

    @property
    def singular_at_zero(self) -> bool:
        return self.case != FamilyCase.MEHLER

    @property
    def discrete(self) -> List[DiscretePair]:
        if self.case == FamilyCase.WHITTAKER and self.beta < -0.5:
            return discrete_spectrum(self.beta)
        return []

    def lam(self, k):
        return spectral_maps(k)[1]

    def mu(self, k):
        return spectral_maps(k)[0]

    def m(self, k: float) -> complex:
        """Coefficient of x^{-1/2+ik} in psi_k / n(k) at the singular endpoint"""
        if self.case == FamilyCase.MEHLER:
            return (gamma_complex(1j * k) * np.exp(1j * k * np.log(2.0))
                    / (np.sqrt(2.0 * np.pi) * gamma_complex(0.5 + 1j * k)))
        if self.case == FamilyCase.WHITTAKER:
            return gamma_complex(-2j * k) / gamma_complex(0.5 - 1j * k + self.beta)
        if self.case == FamilyCase.MACDONALD:
            return (1j * np.pi * np.exp((-1.0 + 1j * k) * np.log(2.0))
                    / (gamma_complex(1.0 + 2j * k) * np.sinh(2.0 * np.pi * k)))
        raise InvalidParameterError("carleman eigenfunctions have no single connection coefficient")

    def normalization(self, k: float) -> float:
        """Closed-form n(k)"""
        if self.case == FamilyCase.MEHLER:
            return math.sqrt(k * math.tanh(math.pi * k))
        if self.case == FamilyCase.WHITTAKER:
            return (math.sqrt(k * math.sinh(2.0 * math.pi * k)) / math.pi
                    * abs(gamma_complex(0.5 - 1j * k + self.beta)))
        if self.case == FamilyCase.MACDONALD:
            return 2.0 * math.sqrt(k * math.sinh(2.0 * math.pi * k)) / math.pi
        return 1.0 / math.sqrt(math.pi)

    def psi_k(self, k: float, x, component: int = 0):
        """Normalized continuum eigenfunction; component 1 is the Carleman sine partner"""
        if k < 0:
            raise InvalidParameterError("psi_k needs k >= 0")
        x = np.asarray(x, dtype=float)
        n = self.normalization(k)
        if self.case == FamilyCase.MEHLER:
            return n * legendre_conical(k, x)
        if self.case == FamilyCase.WHITTAKER:
            return n * whittaker_w(self.beta, 1j * k, x) / x
        if self.case == FamilyCase.MACDONALD:
            return n * macdonald_k(2j * k, np.sqrt(8.0 * x)) / np.sqrt(x)
        phase = k * np.log(x)
        wave = np.sin(phase) if component else np.cos(phase)
        return n * wave / np.sqrt(x)

    def components(self, k: float) -> List[Callable]:
        return [lambda x, c=c: self.psi_k(k, x, c) for c in range(self.multiplicity)]

    def quad_opts(self, base: Optional[QuadOpts] = None, tail: Optional[str] = None) -> QuadOpts:
        """Options for integrals of psi_k against functions with the given tail class"""
        base = base or QuadOpts()
        return base.with_(singular_at_zero=self.singular_at_zero, zero_map='log',
                          tail_decay_hint=tail or self.kernel.tail_decay)


def family_from_name(text: str) -> EigenFamily:
    text = text.strip()
    if text.startswith('whittaker'):
        inner = text[len('whittaker'):].strip('() ')
        return EigenFamily.whittaker(float(inner) if inner else 0.0)
    try:
        return EigenFamily(FamilyCase(text))
    except ValueError:
        raise InvalidParameterError(f"Unknown eigenfunction family '{text}'")


# ---------------------------------------------------------------------------
# Point spectra
# ---------------------------------------------------------------------------

def discrete_spectrum(beta: float) -> List[DiscretePair]:
    """Eigenpairs of the whittaker(beta) kernel below the continuum, beta < -1/2"""
    beta = float(beta)
    if beta >= -0.5:
        return []
    if abs(beta - round(beta)) < 1e-6:
        raise InvalidParameterError(
            f"sin(pi beta) vanishes at beta={beta}; use finite_rank_spectrum({-round(beta)})")
    pairs = []
    n = 1
    while n < abs(beta) + 0.5:
        p = abs(beta) + 0.5 - n
        pairs.append(DiscretePair(n=n, p=p, mu_n=0.25 - p * p,
                                  lambda_n=(-1) ** n * math.pi / math.sin(math.pi * beta),
                                  beta=beta))
        n += 1
    return pairs


def finite_rank_spectrum(l: int) -> List[DiscretePair]:
    """Non-zero eigenpairs of the rank-l kernel e^{-x/2} L^1_{l-1}(x)"""
    if int(l) != l or l < 1:
        raise InvalidParameterError(f"finite_rank_spectrum needs an integer l >= 1, got {l}")
    pairs = []
    for n in range(1, l + 1):
        p = l + 0.5 - n
        pairs.append(DiscretePair(n=n, p=p, mu_n=0.25 - p * p,
                                  lambda_n=float((-1) ** (n - l)), beta=-float(l)))
    return pairs


def shanker_eigenvalue(pair: DiscretePair, opts: Optional[QuadOpts] = None) -> float:
    """
    lambda_n from the large-x balance of A psi_n = lambda_n psi_n:
    Gamma(1+beta) (n-1)! (-1)^(n-1) int e^{-y} y^{p-1/2} L^{2p}_{n-1}(y) dy
    """
    opts = (opts or QuadOpts(rel_tol=1e-13, abs_tol=1e-20)).with_(singular_at_zero=True,
                                                                    zero_map='sqrt')
    integral = integrate_semi_infinite(lambda y: np.exp(-0.5 * y) * pair.psi(y), opts).value
    return (special.gamma(1.0 + pair.beta) * math.factorial(pair.n - 1)
            * (-1) ** (pair.n - 1) * integral)


# ---------------------------------------------------------------------------
# Verifiers
# ---------------------------------------------------------------------------

def normalization_identity(family: EigenFamily, k: float, tolerance: float = 1e-10) -> VerificationReport:
    """(2 pi)^{-1/2} |m(k)|^{-1} against the closed-form n(k)"""
    from_m = 1.0 / (math.sqrt(2.0 * math.pi) * abs(family.m(k)))
    closed = family.normalization(k)
    diff = abs(from_m - closed)
    return make_report(family.name, 'normalization', {'k': k}, diff, diff / abs(closed), tolerance)


def continuum_samples(family: EigenFamily, k: float, x_grid: Sequence[float],
                      opts: Optional[QuadOpts] = None, component: int = 0):
    """(x, A psi_k(x), lambda(k) psi_k(x)) on x_grid"""
    spec = family.kernel
    opts = family.quad_opts(opts)
    psi = family.components(k)[component]
    x = np.asarray(x_grid, dtype=float)
    a_psi = np.array([apply_hankel(spec, psi, xi, opts).value for xi in x])
    lambda_psi = family.lam(k) * psi(x)
    return x, a_psi, lambda_psi


def verify_continuum_identity(family: EigenFamily, k: float, x_grid: Sequence[float],
                              opts: Optional[QuadOpts] = None, tolerance: float = 1e-6,
                              samples_out: Optional[list] = None) -> VerificationReport:
    """
    A psi_k = lambda(k) psi_k pointwise, with error scale |lambda psi_k(x)| + max_grid |psi_k|
    (every Carleman component is checked)
    """
    abs_errs, rel_errs = [], []
    for component in range(family.multiplicity):
        x, a_psi, lambda_psi = continuum_samples(family, k, x_grid, opts, component)
        psi_max = np.max(np.abs(lambda_psi)) / family.lam(k)
        diff = np.abs(a_psi - lambda_psi)
        abs_errs.extend(diff)
        rel_errs.extend(diff / (np.abs(lambda_psi) + psi_max))
        if samples_out is not None:
            for xi, ai, li in zip(x, a_psi, lambda_psi):
                samples_out.append({'case_id': family.name, 'k': k, 'x': xi,
                                    'a_psi': ai, 'lambda_psi': li})
    return make_report(family.name, 'continuum_identity', {'k': k, 'points': len(x_grid)},
                       abs_errs, rel_errs, tolerance)


def verify_decay(family: EigenFamily, k: float, x_points: Sequence[float],
                 opts: Optional[QuadOpts] = None, tolerance: float = 1e-6) -> VerificationReport:
    """
    A psi_k = lambda psi_k where the second solution would dominate (x -> 0 for mehler,
    the decaying tail otherwise), scaled by |lambda psi_k(x)| alone
    """
    opts = (opts or QuadOpts(rel_tol=1e-11)).with_(abs_tol=1e-25)
    abs_errs, rel_errs = [], []
    for component in range(family.multiplicity):
        _, a_psi, lambda_psi = continuum_samples(family, k, x_points, opts, component)
        diff = np.abs(a_psi - lambda_psi)
        abs_errs.extend(diff)
        rel_errs.extend(diff / np.abs(lambda_psi))
    return make_report(family.name, 'second_solution_decay',
                       {'k': k, 'x': ';'.join(format_number(x) for x in x_points)},
                       abs_errs, rel_errs, tolerance)


def carleman_closed_form(k: float, opts: Optional[QuadOpts] = None,
                         tolerance: float = 1e-10) -> VerificationReport:
    """int_0^inf (1+t)^{-1} t^{-1/2+ik} dt = pi / cosh(pi k)"""
    opts = (opts or QuadOpts(rel_tol=1e-13, abs_tol=1e-16)).with_(
        singular_at_zero=True, zero_map='log', tail_decay_hint='algebraic')
    value = integrate_semi_infinite(
        lambda t: np.exp((-0.5 + 1j * k) * np.log(t)) / (1.0 + t), opts).value
    expected = spectral_maps(k)[1]
    diff = abs(value - expected)
    return make_report('carleman', 'closed_form', {'k': k}, diff, diff / expected, tolerance)


def verify_macdonald_byproduct(k: float, x_grid: Sequence[float], opts: Optional[QuadOpts] = None,
                               tolerance: float = 1e-6) -> VerificationReport:
    """x^{1/2} int (x+y)^{-1/2} K_1(sqrt(x+y)) y^{-1/2} K_{2ik}(sqrt y) dy = lambda K_{2ik}(sqrt x)"""
    opts = (opts or QuadOpts()).with_(singular_at_zero=True, zero_map='log',
                                      tail_decay_hint='sqrt_exponential')
    lam = spectral_maps(k)[1]
    lhs, rhs = [], []
    for x in x_grid:
        def integrand(y, x=x):
            s = x + y
            return special.kv(1, np.sqrt(s)) / np.sqrt(s) * macdonald_k(2j * k, np.sqrt(y)) / np.sqrt(y)
        lhs.append(np.sqrt(x) * integrate_semi_infinite(
            integrand, opts.with_(breakpoints=(*opts.breakpoints, x))).value)
        rhs.append(lam * macdonald_k(2j * k, np.sqrt(x)))
    lhs, rhs = np.array(lhs), np.array(rhs)
    diff = np.abs(lhs - rhs)
    rel = diff / (np.abs(rhs) + np.max(np.abs(rhs)) / lam)
    return make_report('macdonald', 'byproduct_identity', {'k': k, 'points': len(x_grid)},
                       diff, rel, tolerance)


def verify_discrete_spectrum(beta: float, x_grid: Sequence[float], k_grid: Sequence[float],
                             opts: Optional[QuadOpts] = None,
                             tolerances: Optional[dict] = None) -> List[VerificationReport]:
    """
    For every discrete pair of whittaker(beta): eigenvalue formula against the Shanker
    quadrature, the continuation pi/cos(pi p) and the Gamma product; pointwise
    A psi_n = lambda_n psi_n; mutual orthogonality; orthogonality to continuum samples
    """
    tolerances = tolerances or {}
    tol_discrete = tolerances.get('discrete', 1e-8)
    tol_orth = tolerances.get('orthogonality', 1e-8)
    tol_cont = tolerances.get('continuum_orthogonality', 1e-4)
    family = EigenFamily.whittaker(beta)
    spec = family.kernel
    pairs = discrete_spectrum(beta)
    reports = []
    base = opts or QuadOpts(rel_tol=1e-12, abs_tol=1e-20)

    for pair in pairs:
        params = {'beta': beta, 'n': pair.n, 'p': round(pair.p, 12)}
        routes = {
            'shanker_quadrature': shanker_eigenvalue(pair),
            'continuation': math.pi / math.cos(math.pi * pair.p),
            'gamma_product': ((-1) ** (pair.n - 1) * special.gamma(1.0 + beta)
                              * special.gamma(abs(beta))),
        }
        for route, value in routes.items():
            diff = abs(value - pair.lambda_n)
            reports.append(make_report(family.name, f'discrete_eigenvalue_{route}', params,
                                       diff, diff / abs(pair.lambda_n), tol_discrete))

        point_opts = base.with_(singular_at_zero=True, zero_map='sqrt', tail_decay_hint='exponential')
        x = np.asarray(x_grid, dtype=float)
        a_psi = np.array([apply_hankel(spec, pair.psi, xi, point_opts).value for xi in x])
        lambda_psi = pair.lambda_n * pair.psi(x)
        diff = np.abs(a_psi - lambda_psi)
        scale = np.abs(lambda_psi) + np.max(np.abs(lambda_psi))
        reports.append(make_report(family.name, 'discrete_identity', params, diff, diff / scale,
                                   tol_discrete))

        cont_opts = family.quad_opts(base, tail='exponential')
        abs_errs, rel_errs = [], []
        for k in k_grid:
            psi = family.components(k)[0]
            overlap = integrate_semi_infinite(lambda y: pair.psi(y) * psi(y), cont_opts).value
            magnitude = integrate_semi_infinite(lambda y: np.abs(pair.psi(y) * psi(y)), cont_opts).value
            abs_errs.append(abs(overlap))
            rel_errs.append(abs(overlap) / magnitude)
        reports.append(make_report(family.name, 'continuum_orthogonality', params, abs_errs,
                                   rel_errs, tol_cont))

    orth_abs, orth_rel = [], []
    norm_opts = base.with_(singular_at_zero=True, zero_map='sqrt')
    for i, first in enumerate(pairs):
        for second in pairs[i + 1:]:
            overlap = integrate_semi_infinite(lambda y: first.psi(y) * second.psi(y), norm_opts).value
            orth_abs.append(abs(overlap))
            orth_rel.append(abs(overlap) / math.sqrt(first.norm_squared() * second.norm_squared()))
    reports.append(make_report(family.name, 'discrete_orthogonality',
                               {'beta': beta, 'pairs': len(pairs)}, orth_abs, orth_rel, tol_orth))
    return reports


def verify_finite_rank_identity(l: int, x_grid: Sequence[float], opts: Optional[QuadOpts] = None,
                                tolerance: float = 1e-8) -> List[VerificationReport]:
    """A psi_n = (-1)^(n-l) psi_n for the rank-l kernel"""
    spec = finite_rank(l)
    opts = (opts or QuadOpts(rel_tol=1e-12, abs_tol=1e-20)).with_(
        singular_at_zero=True, zero_map='sqrt', tail_decay_hint='exponential')
    x = np.asarray(x_grid, dtype=float)
    reports = []
    for pair in finite_rank_spectrum(l):
        a_psi = np.array([apply_hankel(spec, pair.psi, xi, opts).value for xi in x])
        lambda_psi = pair.lambda_n * pair.psi(x)
        diff = np.abs(a_psi - lambda_psi)
        scale = np.abs(lambda_psi) + np.max(np.abs(lambda_psi))
        reports.append(make_report(spec.name, 'finite_rank_identity',
                                   {'l': l, 'n': pair.n, 'lambda': pair.lambda_n},
                                   diff, diff / scale, tolerance))
    return reports


def kernel_subspace_check(l: int, k: float, x_grid: Sequence[float], opts: Optional[QuadOpts] = None,
                          tolerance: float = 1e-8,
                          kernel: Optional[KernelSpec] = None) -> VerificationReport:
    """
    A (x^{-1} W_{l,ik}) = 0 for the rank-l kernel; the error scale is int |a(x+y) psi(y)| dy.
    Another kernel may be passed to see the integral become non-zero.
    """
    spec = kernel or finite_rank(l)
    opts = (opts or QuadOpts(rel_tol=1e-12, abs_tol=1e-20)).with_(
        singular_at_zero=True, zero_map='log', tail_decay_hint='exponential')

    def psi(y):
        return whittaker_w(-float(l), 1j * k, y) / y

    abs_errs, rel_errs = [], []
    for x in x_grid:
        point_opts = opts.with_(breakpoints=(*opts.breakpoints, x))
        value = apply_hankel(spec, psi, x, point_opts).value
        scale = integrate_semi_infinite(
            lambda y: np.abs(kernel_eval(spec, x + y) * psi(y)), point_opts).value
        abs_errs.append(abs(value))
        rel_errs.append(abs(value) / scale)
    return make_report(spec.name, 'kernel_subspace', {'l': l, 'k': k, 'points': len(x_grid)},
                       abs_errs, rel_errs, tolerance)


# ---------------------------------------------------------------------------
# Transforms
# ---------------------------------------------------------------------------

def forward_transform(family: EigenFamily, f: Callable, k_grid: Sequence[float],
                      opts: Optional[QuadOpts] = None, tail: str = 'exponential') -> np.ndarray:
    """
    (Uf)(k) = int psi_k(x) f(x) dx on k_grid; shape (len(k_grid), multiplicity)

    Args:
        family: eigenfunction family
        f: vectorized function on (0, inf)
        k_grid: quasimomenta
        tail: decay class of f
    """
    opts = family.quad_opts(opts or QuadOpts(rel_tol=1e-9, abs_tol=1e-12), tail=tail)
    out = np.empty((len(k_grid), family.multiplicity))
    for i, k in enumerate(k_grid):
        for c, psi in enumerate(family.components(k)):
            out[i, c] = integrate_semi_infinite(lambda x: psi(x) * f(x), opts).value
    return out


def hankel_image(spec: KernelSpec, f: Callable, opts: Optional[QuadOpts] = None) -> Callable:
    """
    Af as a vectorized callable. Every value is an apply_hankel quadrature; results are
    memoized by x so repeated transforms over the same nodes reuse them.
    """
    opts = opts or QuadOpts(rel_tol=1e-11, abs_tol=1e-16, tail_decay_hint=spec.tail_decay,
                            singular_at_zero=spec.singular_at_zero, zero_map='log')
    cache = {}

    def image(x):
        x = np.asarray(x, dtype=float)
        flat = x.reshape(-1)
        out = np.empty(flat.shape)
        for i, xi in enumerate(flat):
            key = float(xi)
            if key not in cache:
                cache[key] = apply_hankel(spec, f, key, opts).value
            out[i] = cache[key]
        return out.reshape(x.shape)

    image.cache = cache
    return image


def diagonalization_check(family: EigenFamily, f: Callable, k_grid: Sequence[float],
                          f_name: str, opts: Optional[QuadOpts] = None, tail: str = 'exponential',
                          tolerance: float = 1e-3) -> VerificationReport:
    """U(Af)(k) = lambda(k) (Uf)(k) on k_grid, scaled by max |lambda Uf|"""
    spec = family.kernel
    uf = forward_transform(family, f, k_grid, opts, tail=tail)
    image = hankel_image(spec, f)
    uaf = forward_transform(family, image, k_grid, opts, tail=spec.tail_decay)
    lam = np.asarray(spectral_maps(np.asarray(k_grid, dtype=float))[1])[:, None]
    diff = np.abs(uaf - lam * uf)
    scale = np.max(np.abs(lam * uf))
    return make_report(family.name, 'diagonalization', {'f': f_name, 'points': len(k_grid)},
                       diff.ravel(), diff.ravel() / scale, tolerance)


def parseval_defect(family: EigenFamily, f: Callable, f_name: str, n_points: int = 200,
                    k_max: float = PARSEVAL_K_MAX, opts: Optional[QuadOpts] = None,
                    tail: str = 'exponential', tolerance: float = 1e-3) -> VerificationReport:
    """
    int_0^kmax |Uf|^2 dk + sum_n <psi_n, f>^2 / ||psi_n||^2 against ||f||^2

    The k integral uses n_points Gauss-Legendre nodes on (0, k_max). The nodes are
    interior, so k = 0 is never sampled. There n(k) has only a limit (Gamma(1/2 + beta)
    sits on a pole for beta = -3/2, -5/2, ...), while the integrand stays smooth.
    Beyond k_max the continuum contribution is dropped.
    """
    nodes, weights = np.polynomial.legendre.leggauss(n_points)
    k = 0.5 * k_max * (nodes + 1.0)
    uf = forward_transform(family, f, k, opts, tail=tail)
    continuum = 0.5 * k_max * float(np.sum(weights * np.sum(uf ** 2, axis=1)))
    point = 0.0
    pair_opts = QuadOpts(rel_tol=1e-12, abs_tol=1e-20, singular_at_zero=True, zero_map='sqrt')
    for pair in family.discrete:
        overlap = integrate_semi_infinite(lambda x: pair.psi(x) * f(x), pair_opts).value
        point += overlap ** 2 / pair.norm_squared()
    norm = integrate_semi_infinite(lambda x: f(x) ** 2,
                                   QuadOpts(rel_tol=1e-12, abs_tol=1e-20, tail_decay_hint=tail)).value
    diff = abs(continuum + point - norm)
    logger.debug(f"Parseval {family.name} {f_name}: continuum={continuum:.10g} point={point:.10g} "
                 f"norm={norm:.10g}")
    return make_report(family.name, 'parseval', {'f': f_name, 'points': n_points,
                                                 'k_max': round(k_max, 6)},
                       diff, diff / norm, tolerance)
