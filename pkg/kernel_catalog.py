#!/usr/bin/env python3
"""
Catalog of Hankel kernels a(x) together with the parameters (alpha, beta, gamma) of the
differential operator L = -((x^2 + gamma x) f')' + (alpha x^2 + beta x) f they commute with.

Every kernel satisfies -(x + gamma) a'' - 2a' + (alpha x + beta) a = 0; ode_residual
evaluates the left-hand side with analytic or stencil derivatives.
"""

import logging
import math
import re
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Callable, List, Optional

import numpy as np
from scipy import special

from errors import InvalidParameterError, KernelDomainError
from specfun import central_derivatives, whittaker_w_derivative

logger = logging.getLogger(__name__)

NEGATIVE_INTEGER_RADIUS = 1e-6


class KernelId(str, Enum):
    MEHLER = 'mehler'
    CARLEMAN = 'carleman'
    WHITTAKER = 'whittaker'
    MACDONALD = 'macdonald'
    REGULAR_WHITTAKER = 'regular_whittaker'
    REGULAR_MACDONALD = 'regular_macdonald'
    FINITE_RANK = 'finite_rank'
    CUSTOM = 'custom'


@dataclass(frozen=True)
class LParams:
    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.alpha, self.beta, self.gamma)):
            raise InvalidParameterError(f"LParams must be finite: {self}")
        if self.alpha < 0:
            raise InvalidParameterError(f"alpha must be >= 0, got {self.alpha}")
        if self.gamma < 0:
            raise InvalidParameterError(f"gamma must be >= 0, got {self.gamma}")

    def perturbed(self, name: str, delta: float = 0.1) -> 'LParams':
        return replace(self, **{name: getattr(self, name) + delta})

    def as_dict(self) -> dict:
        return {'alpha': self.alpha, 'beta': self.beta, 'gamma': self.gamma}


@dataclass(frozen=True)
class KernelSpec:
    """
    A Hankel kernel and its commuting operator

    Args:
        id: kernel family
        params: (alpha, beta, gamma) of the commuting operator
        singular_at_zero: a(x) ~ 1/x as x -> 0
        singular_at_infinity: a(x) decays only algebraically
        index: beta of the Whittaker families, l of finite_rank
        func: evaluator for custom kernels
        label: display name for custom kernels
    """
    id: KernelId
    params: LParams
    singular_at_zero: bool
    singular_at_infinity: bool
    index: Optional[float] = None
    func: Optional[Callable] = field(default=None, compare=False, repr=False)
    label: Optional[str] = None

    @property
    def name(self) -> str:
        if self.label:
            return self.label
        if self.id in (KernelId.WHITTAKER, KernelId.REGULAR_WHITTAKER):
            return f"{self.id.value}({format_number(self.index)})"
        if self.id == KernelId.FINITE_RANK:
            return f"finite_rank({int(self.index)})"
        return self.id.value

    @property
    def tail_decay(self) -> str:
        """Quadrature tail class of a(x + y) in y"""
        if self.id in (KernelId.WHITTAKER, KernelId.REGULAR_WHITTAKER, KernelId.FINITE_RANK):
            return 'exponential'
        if self.id in (KernelId.MACDONALD, KernelId.REGULAR_MACDONALD):
            return 'sqrt_exponential'
        return 'algebraic'


@dataclass(frozen=True)
class KernelAsymptotics:
    """Leading behaviour of a kernel at 0 and at infinity"""
    at_zero: str
    at_infinity: str
    zero_term: Callable = field(repr=False)
    infinity_term: Callable = field(repr=False)


def format_number(value) -> str:
    return f"{float(value):g}"


def _check_whittaker_index(beta: float):
    nearest = round(beta)
    if nearest <= -1 and abs(beta - nearest) < NEGATIVE_INTEGER_RADIUS:
        raise InvalidParameterError(
            f"whittaker kernel needs beta away from negative integers (Gamma(1+beta) pole), got {beta}")


def mehler() -> KernelSpec:
    return KernelSpec(KernelId.MEHLER, LParams(0.0, 0.0, 2.0), False, True)


def carleman() -> KernelSpec:
    return KernelSpec(KernelId.CARLEMAN, LParams(0.0, 0.0, 0.0), True, True)


def whittaker(beta: float) -> KernelSpec:
    beta = float(beta)
    _check_whittaker_index(beta)
    return KernelSpec(KernelId.WHITTAKER, LParams(0.25, beta, 0.0), True, False, index=beta)


def macdonald() -> KernelSpec:
    return KernelSpec(KernelId.MACDONALD, LParams(0.0, 2.0, 0.0), True, False)


def regular_whittaker(beta: float) -> KernelSpec:
    # b = (x+2) a solves b'' = (1/4 + (beta_L - 1/2)/(x+2)) b, so W_{-beta,1/2} needs beta_L = beta + 1/2
    beta = float(beta)
    return KernelSpec(KernelId.REGULAR_WHITTAKER, LParams(0.25, beta + 0.5, 2.0), False, False,
                      index=beta)


def regular_macdonald() -> KernelSpec:
    return KernelSpec(KernelId.REGULAR_MACDONALD, LParams(0.0, 2.0, 2.0), False, False)


def finite_rank(l: int) -> KernelSpec:
    if int(l) != l or l < 1:
        raise InvalidParameterError(f"finite_rank needs an integer l >= 1, got {l}")
    return KernelSpec(KernelId.FINITE_RANK, LParams(0.25, -float(l), 0.0), False, False,
                      index=int(l))


def custom_kernel(label: str, func: Callable, params: LParams,
                  singular_at_zero: bool = False, singular_at_infinity: bool = True) -> KernelSpec:
    """User-supplied kernel; only the ODE and commutator checks accept it"""
    return KernelSpec(KernelId.CUSTOM, params, singular_at_zero, singular_at_infinity,
                      func=func, label=label)


def catalog(whittaker_beta: float = 0.5, regular_beta: float = 0.0, l: int = 2) -> List[KernelSpec]:
    """One representative of each of the seven kernel families"""
    return [mehler(), carleman(), whittaker(whittaker_beta), macdonald(),
            regular_whittaker(regular_beta), regular_macdonald(), finite_rank(l)]


_NAME_PATTERN = re.compile(r'^\s*([a-z_]+)\s*(?:\(\s*([-+0-9.eE]+)\s*\))?\s*$')


def parse_kernel(text: str) -> KernelSpec:
    """Build a KernelSpec from names such as 'mehler', 'whittaker(0.5)', 'finite_rank(3)'"""
    match = _NAME_PATTERN.match(text.replace('-', '_', 1) if text.startswith('finite-') else text)
    if not match:
        raise InvalidParameterError(f"Cannot parse kernel name '{text}'")
    name, arg = match.group(1), match.group(2)
    simple = {'mehler': mehler, 'carleman': carleman, 'macdonald': macdonald,
              'regular_macdonald': regular_macdonald}
    indexed = {'whittaker': whittaker, 'regular_whittaker': regular_whittaker}
    if name in simple:
        if arg is not None:
            raise InvalidParameterError(f"Kernel '{name}' takes no parameter")
        return simple[name]()
    if name in indexed:
        return indexed[name](float(arg) if arg is not None else 0.0)
    if name == 'finite_rank':
        return finite_rank(int(float(arg)) if arg is not None else 1)
    raise InvalidParameterError(f"Unknown kernel '{name}'")


def _laguerre_or_zero(n: int, alpha: float, x: np.ndarray) -> np.ndarray:
    if n < 0:
        return np.zeros_like(x)
    return special.eval_genlaguerre(n, alpha, x)


def _check_domain(spec: KernelSpec, x: np.ndarray):
    if not np.all(np.isfinite(x)):
        raise KernelDomainError(f"{spec.name}: non-finite argument")
    if spec.singular_at_zero and np.any(x <= 0):
        raise KernelDomainError(f"{spec.name} is singular at 0; needs x > 0")
    if np.any(x < 0):
        raise KernelDomainError(f"{spec.name} is defined for x >= 0")


def _whittaker_jet(beta: float, r: np.ndarray, factor: float):
    """Jet of factor * W_{-beta,1/2}(r) / r; W'' from Whittaker's equation"""
    w, w1 = whittaker_w_derivative(beta, 0.5, r)
    w2 = (0.25 + beta / r) * w
    a = factor * w / r
    a1 = factor * (w1 / r - w / r ** 2)
    a2 = factor * (w2 / r - 2.0 * w1 / r ** 2 + 2.0 * w / r ** 3)
    return a, a1, a2


def _macdonald_jet(r: np.ndarray, factor: float):
    """Jet of factor * sqrt(8/r) K_1(sqrt(8 r)) using (z^-n K_n)' = -z^-n K_{n+1}"""
    z = np.sqrt(8.0 * r)
    a = factor * 8.0 * special.kv(1, z) / z
    a1 = -factor * 32.0 * special.kv(2, z) / z ** 2
    a2 = factor * 128.0 * special.kv(3, z) / z ** 3
    return a, a1, a2


def kernel_jet(spec: KernelSpec, x):
    """
    a, a' and a'' at x, analytic for every catalog kernel (stencils for custom kernels)
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    _check_domain(spec, x)
    kid = spec.id
    if kid in (KernelId.MEHLER, KernelId.CARLEMAN):
        r = x + spec.params.gamma
        return 1.0 / r, -1.0 / r ** 2, 2.0 / r ** 3
    if kid == KernelId.WHITTAKER:
        return _whittaker_jet(spec.index, x, special.gamma(1.0 + spec.index))
    if kid == KernelId.REGULAR_WHITTAKER:
        return _whittaker_jet(spec.index, x + 2.0, 1.0)
    if kid == KernelId.MACDONALD:
        return _macdonald_jet(x, 1.0)
    if kid == KernelId.REGULAR_MACDONALD:
        return _macdonald_jet(x + 2.0, 1.0 / np.sqrt(8.0))
    if kid == KernelId.FINITE_RANK:
        l = int(spec.index)
        damping = np.exp(-0.5 * x)
        lag = special.eval_genlaguerre(l - 1, 1.0, x)
        lag1 = -_laguerre_or_zero(l - 2, 2.0, x)
        lag2 = _laguerre_or_zero(l - 3, 3.0, x)
        return (damping * lag,
                damping * (lag1 - 0.5 * lag),
                damping * (lag2 - lag1 + 0.25 * lag))
    return central_derivatives(spec.func, x)


def kernel_eval(spec: KernelSpec, x):
    """a(x) for scalar or array x"""
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if spec.id == KernelId.CUSTOM:
        _check_domain(spec, x_arr)
        values = np.asarray(spec.func(x_arr), dtype=float)
    elif spec.id in (KernelId.MEHLER, KernelId.CARLEMAN):
        _check_domain(spec, x_arr)
        values = 1.0 / (x_arr + spec.params.gamma)
    elif spec.id == KernelId.MACDONALD:
        _check_domain(spec, x_arr)
        z = np.sqrt(8.0 * x_arr)
        values = 8.0 * special.kv(1, z) / z
    elif spec.id == KernelId.REGULAR_MACDONALD:
        _check_domain(spec, x_arr)
        values = special.kv(1, np.sqrt(8.0 * (x_arr + 2.0))) / np.sqrt(x_arr + 2.0)
    else:
        values = kernel_jet(spec, x_arr)[0]
    if np.ndim(x) == 0:
        return float(values[0])
    return values


def kernel_jet_numeric(spec: KernelSpec, x):
    """a, a', a'' by five-point stencils on kernel_eval"""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    _check_domain(spec, x)
    return central_derivatives(lambda y: kernel_eval(spec, y), x)


def ode_residual(spec: KernelSpec, x, params: Optional[LParams] = None, numeric: bool = False):
    """
    -(x + gamma) a'' - 2a' + (alpha x + beta) a at x

    Args:
        spec: kernel
        x: evaluation points (> 0)
        params: operator parameters to test against (defaults to the kernel's own)
        numeric: use stencil derivatives instead of analytic ones
    """
    params = params or spec.params
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x <= 0):
        raise KernelDomainError("ode_residual needs x > 0")
    a, a1, a2 = (kernel_jet_numeric if numeric else kernel_jet)(spec, x)
    return -(x + params.gamma) * a2 - 2.0 * a1 + (params.alpha * x + params.beta) * a


def normalized_ode_residual(spec: KernelSpec, x, params: Optional[LParams] = None,
                            numeric: bool = False):
    """|residual| / (|a| + |a'| + |a''| + 1e-300)"""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    jet = (kernel_jet_numeric if numeric else kernel_jet)(spec, x)
    residual = ode_residual(spec, x, params=params, numeric=numeric)
    scale = np.abs(jet[0]) + np.abs(jet[1]) + np.abs(jet[2]) + 1e-300
    return np.abs(residual) / scale


def kernel_asymptotics(spec: KernelSpec) -> KernelAsymptotics:
    """Leading terms of a(x) as x -> 0 and x -> infinity"""
    kid = spec.id
    sqrt_pi = np.sqrt(np.pi)
    if kid == KernelId.MEHLER:
        return KernelAsymptotics('1/2', 'x^-1', lambda x: np.full_like(np.asarray(x, float), 0.5),
                                 lambda x: 1.0 / np.asarray(x, float))
    if kid == KernelId.CARLEMAN:
        return KernelAsymptotics('x^-1', 'x^-1', lambda x: 1.0 / np.asarray(x, float),
                                 lambda x: 1.0 / np.asarray(x, float))
    if kid == KernelId.WHITTAKER:
        beta = spec.index
        gamma_factor = special.gamma(1.0 + beta)
        return KernelAsymptotics(
            'x^-1', f'Gamma(1+beta) x^(-1-beta) e^(-x/2)',
            lambda x: 1.0 / np.asarray(x, float),
            lambda x: gamma_factor * np.asarray(x, float) ** (-1.0 - beta) * np.exp(-0.5 * np.asarray(x, float)))
    if kid == KernelId.MACDONALD:
        constant = 2.0 ** 0.25 * sqrt_pi
        return KernelAsymptotics(
            'x^-1', '2^(1/4) sqrt(pi) x^(-3/4) e^(-sqrt(8x))',
            lambda x: 1.0 / np.asarray(x, float),
            lambda x: constant * np.asarray(x, float) ** -0.75 * np.exp(-np.sqrt(8.0 * np.asarray(x, float))))
    if kid == KernelId.REGULAR_WHITTAKER:
        beta = spec.index
        a0 = kernel_eval(spec, 0.0)
        return KernelAsymptotics(
            'a(0)', 'e^-1 x^(-1-beta) e^(-x/2)',
            lambda x: np.full_like(np.asarray(x, float), a0),
            lambda x: np.exp(-1.0) * np.asarray(x, float) ** (-1.0 - beta) * np.exp(-0.5 * np.asarray(x, float)))
    if kid == KernelId.REGULAR_MACDONALD:
        constant = 2.0 ** -1.25 * sqrt_pi
        a0 = kernel_eval(spec, 0.0)
        return KernelAsymptotics(
            'a(0)', '2^(-5/4) sqrt(pi) x^(-3/4) e^(-sqrt(8x))',
            lambda x: np.full_like(np.asarray(x, float), a0),
            lambda x: constant * np.asarray(x, float) ** -0.75 * np.exp(-np.sqrt(8.0 * np.asarray(x, float))))
    if kid == KernelId.FINITE_RANK:
        l = int(spec.index)
        lead = (-1.0) ** (l - 1) / math.factorial(l - 1)
        return KernelAsymptotics(
            'l', '(-1)^(l-1)/(l-1)! x^(l-1) e^(-x/2)',
            lambda x: np.full_like(np.asarray(x, float), float(l)),
            lambda x: lead * np.asarray(x, float) ** (l - 1) * np.exp(-0.5 * np.asarray(x, float)))
    raise InvalidParameterError(f"No asymptotics recorded for custom kernel {spec.name}")


def truncation_point(spec: KernelSpec, threshold: float = 1e-13, start: float = 10.0) -> float:
    """Smallest X (grown by 1.25x) with |a(X)| * max(X, 1) below threshold"""
    x = start
    for _ in range(400):
        if abs(kernel_eval(spec, x)) * max(x, 1.0) < threshold:
            return x
        x *= 1.25
    raise InvalidParameterError(f"{spec.name} does not decay below {threshold}")
