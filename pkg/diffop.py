#!/usr/bin/env python3
"""
The differential operator L = -((x^2 + gamma x) f')' + (alpha x^2 + beta x) f, the
commutator residual L(Af) - A(Lf), and the Liouville change of variables
t = omega(x) = 2 asinh(sqrt(x/2)) that turns L (gamma = 2) into -d^2/dt^2 + q(t) + 1/4.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import newton

from errors import DerivativeInconsistencyError, InversionError, InvalidParameterError
from kernel_catalog import KernelSpec, LParams
from quad import QuadOpts, apply_hankel
from reports import VerificationReport, make_report
from specfun import STENCIL_STEP, central_derivatives

logger = logging.getLogger(__name__)


@dataclass
class SmoothFn:
    """
    A C^2 test function with its first two derivatives

    Args:
        value: f(x), vectorized
        first_derivative: f'(x)
        second_derivative: f''(x)
        name: label used in reports
        support: (left, right) when f vanishes outside a compact interval
    """
    value: Callable
    first_derivative: Callable
    second_derivative: Callable
    name: str = 'f'
    support: Optional[Tuple[float, float]] = None

    def __call__(self, x):
        return self.value(x)

    @classmethod
    def from_function(cls, func: Callable, name: str = 'f', rel_step: float = STENCIL_STEP) -> 'SmoothFn':
        """Derivatives by five-point stencils"""
        return cls(value=func,
                   first_derivative=lambda x: central_derivatives(func, x, rel_step)[1],
                   second_derivative=lambda x: central_derivatives(func, x, rel_step)[2],
                   name=name)

    @classmethod
    def bump(cls, left: float = 1.0, right: float = 3.0) -> 'SmoothFn':
        """exp(-1/((y-left)(right-y))) on (left, right), zero elsewhere"""
        if not 0 < left < right:
            raise InvalidParameterError("bump needs 0 < left < right")

        def parts(y):
            y = np.asarray(y, dtype=float)
            g = (y - left) * (right - y)
            inside = g > 0.01
            gs = np.where(inside, g, 1.0)
            f = np.where(inside, np.exp(-1.0 / gs), 0.0)
            g1 = right + left - 2.0 * y
            phi1 = g1 / gs ** 2
            phi2 = -2.0 / gs ** 2 - 2.0 * g1 ** 2 / gs ** 3
            return f, f * phi1, f * (phi2 + phi1 ** 2)

        return cls(value=lambda y: parts(y)[0],
                   first_derivative=lambda y: parts(y)[1],
                   second_derivative=lambda y: parts(y)[2],
                   name=f'bump[{left:g},{right:g}]',
                   support=(left, right))

    def check_consistency(self, x, rtol: float = 1e-5):
        """Compare the supplied derivatives with stencils of the value"""
        x = np.atleast_1d(np.asarray(x, dtype=float))
        _, d1, d2 = central_derivatives(self.value, x)
        f1 = np.asarray(self.first_derivative(x))
        f2 = np.asarray(self.second_derivative(x))
        scale = np.abs(self.value(x)) + np.abs(f1) + np.abs(f2) + 1e-300
        worst = max(np.max(np.abs(d1 - f1) / scale), np.max(np.abs(d2 - f2) / scale))
        if worst > rtol:
            raise DerivativeInconsistencyError(
                f"{self.name}: derivatives disagree with finite differences (rel {worst:.3g})")
        return worst


def apply_L(params: LParams, f: SmoothFn, x, check: bool = False):
    """
    -((x^2 + gamma x) f')' + (alpha x^2 + beta x) f

    Args:
        params: (alpha, beta, gamma)
        f: SmoothFn
        x: points > 0
        check: cross-check f's derivatives against stencils first
    """
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x_arr <= 0):
        raise InvalidParameterError("apply_L needs x > 0")
    if check:
        f.check_consistency(x_arr)
    p = x_arr ** 2 + params.gamma * x_arr
    dp = 2.0 * x_arr + params.gamma
    result = (-p * np.asarray(f.second_derivative(x_arr)) - dp * np.asarray(f.first_derivative(x_arr))
              + (params.alpha * x_arr ** 2 + params.beta * x_arr) * np.asarray(f.value(x_arr)))
    if np.ndim(x) == 0:
        return float(result[0])
    return result


def _bump_opts(f: SmoothFn, opts: Optional[QuadOpts]) -> QuadOpts:
    opts = opts or QuadOpts(rel_tol=1e-13, abs_tol=1e-16)
    if f.support is not None:
        left, right = f.support
        opts = opts.with_(breakpoints=(left,), upper=right)
    return opts


def commutator_residual(spec: KernelSpec, params: LParams, f: SmoothFn, x_grid: Sequence[float],
                        opts: Optional[QuadOpts] = None, tolerance: float = 1e-6,
                        step: float = 1e-2) -> VerificationReport:
    """
    r(x) = L(Af)(x) - A(Lf)(x) on x_grid; A by quadrature, the outer L by five-point
    stencils with h = step * max(x, 1). The report's relative error is
    ||r|| / (||L(Af)|| + ||A(Lf)|| + ||Af||), discrete L2 norms over x_grid.
    The sum keeps the scale away from zero when L(Af) cancels (finite-rank kernels).
    """
    opts = _bump_opts(f, opts)

    def lf(y):
        y = np.asarray(y, dtype=float)
        out = np.zeros_like(y)
        positive = y > 0
        out[positive] = apply_L(params, f, y[positive])
        return out

    offsets = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
    residuals, laf_values, alf_values, af_values = [], [], [], []
    for x in x_grid:
        h = step * max(x, 1.0)
        if x - 2.0 * h <= 0:
            raise InvalidParameterError(f"commutator stencil at x={x} leaves the half-line")
        af = np.array([apply_hankel(spec, f.value, x + o * h, opts).value for o in offsets])
        d1 = (af[0] - 8.0 * af[1] + 8.0 * af[3] - af[4]) / (12.0 * h)
        d2 = (-af[0] + 16.0 * af[1] - 30.0 * af[2] + 16.0 * af[3] - af[4]) / (12.0 * h ** 2)
        laf = (-(x ** 2 + params.gamma * x) * d2 - (2.0 * x + params.gamma) * d1
               + (params.alpha * x ** 2 + params.beta * x) * af[2])
        alf = apply_hankel(spec, lf, x, opts).value
        residuals.append(laf - alf)
        laf_values.append(laf)
        alf_values.append(alf)
        af_values.append(af[2])
        logger.debug(f"{spec.name} x={x}: L(Af)={laf:.6e} A(Lf)={alf:.6e}")

    residuals = np.array(residuals)
    norm = np.linalg.norm(laf_values) + np.linalg.norm(alf_values) + np.linalg.norm(af_values)
    relative = np.linalg.norm(residuals) / norm if norm > 0 else np.inf
    report_params = dict(params.as_dict(), f=f.name, points=len(x_grid))
    return make_report(spec.name, 'commutator', report_params, np.abs(residuals), relative, tolerance)


# ---------------------------------------------------------------------------
# Liouville transformation (gamma = 2)
# ---------------------------------------------------------------------------

def liouville_forward(x):
    """omega(x) = 2 ln(sqrt x + sqrt(x+2)) - ln 2 = 2 asinh(sqrt(x/2))"""
    x_arr = np.asarray(x, dtype=float)
    if np.any(x_arr < 0):
        raise InvalidParameterError("liouville_forward needs x >= 0")
    result = 2.0 * np.arcsinh(np.sqrt(0.5 * x_arr))
    return float(result) if np.ndim(x) == 0 else result


def liouville_inverse(t, tol: float = 1e-14, maxiter: int = 100):
    """
    eta(t) with omega(eta) = t, by Newton iteration on sigma = ln sqrt(eta).
    In sigma the residual 2 asinh(e^sigma / sqrt 2) - t is convex and increasing, and
    the start max(ln t, t/2) + 1 lies right of the root, so the iterates decrease
    monotonically.
    """
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(t_arr < 0) or not np.all(np.isfinite(t_arr)):
        raise InvalidParameterError("liouville_inverse needs finite t >= 0")
    eta = np.zeros_like(t_arr)
    positive = t_arr > 0
    if np.any(positive):
        tp = t_arr[positive]
        start = np.maximum(np.log(tp), 0.5 * tp) + 1.0

        def residual(sigma, target):
            return 2.0 * np.arcsinh(np.exp(sigma) / np.sqrt(2.0)) - target

        def slope(sigma, target):
            return 2.0 / np.sqrt(1.0 + 2.0 * np.exp(-2.0 * sigma))

        root, converged, _ = newton(residual, start, fprime=slope, args=(tp,),
                                    tol=tol, maxiter=maxiter, full_output=True)
        if not np.all(converged):
            raise InversionError(f"Liouville inversion failed at t = {tp[~converged][0]:g}")
        eta[positive] = np.exp(2.0 * root)
    return float(eta[0]) if np.ndim(t) == 0 else eta


@dataclass(frozen=True)
class PotentialCase:
    """
    Liouville-variable potential q(t)

    Args:
        kind: 'mehler_free', 'gamma0' (alpha e^{2t} + beta e^t) or 'regular'
        alpha, beta: operator parameters
    """
    kind: str
    alpha: float = 0.0
    beta: float = 0.0

    @classmethod
    def mehler_free(cls) -> 'PotentialCase':
        return cls('mehler_free')

    @classmethod
    def whittaker_gamma0(cls, beta: float) -> 'PotentialCase':
        return cls('gamma0', 0.25, float(beta))

    @classmethod
    def macdonald_gamma0(cls) -> 'PotentialCase':
        return cls('gamma0', 0.0, 2.0)

    @classmethod
    def regular(cls, alpha: float, beta: float) -> 'PotentialCase':
        return cls('regular', float(alpha), float(beta))

    @property
    def whole_line(self) -> bool:
        return self.kind == 'gamma0'


def liouville_potential(case: PotentialCase, t):
    """q(t) for the given case, L ~ -d^2/dt^2 + q(t) + 1/4; gamma = 2 cases need t > 0"""
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    if case.kind == 'gamma0':
        q = case.alpha * np.exp(2.0 * t_arr) + case.beta * np.exp(t_arr)
    elif case.kind in ('mehler_free', 'regular'):
        if np.any(t_arr <= 0):
            raise InvalidParameterError("gamma = 2 potentials are defined for t > 0")
        eta = liouville_inverse(t_arr)
        q = -0.25 / (eta * (eta + 2.0))
        if case.kind == 'regular':
            q = q + case.alpha * eta ** 2 + case.beta * eta
    else:
        raise InvalidParameterError(f"Unknown potential case '{case.kind}'")
    return float(q[0]) if np.ndim(t) == 0 else q
