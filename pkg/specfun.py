#!/usr/bin/env python3
"""
Special functions behind the Hankel kernels and their eigenfunctions.

- complex gamma (Lanczos g=7, reflection for Re z < 1/2)
- conical Legendre functions P_{-1/2+ik}(x+1) from the Mehler-Dirichlet integral
- Whittaker W_{-beta,nu}(x) for real or imaginary nu, by inward integration of the
  Whittaker equation seeded from the large-x asymptotic series
- MacDonald functions K of real or imaginary order
- generalized Laguerre polynomials and the quasimomentum maps mu(k), lambda(k)

All functions accept numpy arrays for their spatial argument and return arrays of the
same shape (plain floats for scalar input).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import special
from scipy.integrate import solve_ivp

from errors import AccuracyNotReachedError, GammaPoleError, InvalidParameterError

logger = logging.getLogger(__name__)

EPS = np.finfo(float).eps


@dataclass(frozen=True)
class SpecFunAccuracy:
    target_rel_err: float = 1e-10
    max_nodes: int = 1024

    def __post_init__(self):
        if not self.target_rel_err > 10 * EPS:
            raise InvalidParameterError(
                f"target_rel_err must exceed 10*eps, got {self.target_rel_err}")
        if self.max_nodes < 64:
            raise InvalidParameterError(f"max_nodes must be >= 64, got {self.max_nodes}")


DEFAULT_ACCURACY = SpecFunAccuracy()


def _as_output(values, like):
    """Return a float/complex for scalar input, the array otherwise"""
    if np.ndim(like) == 0:
        return values.reshape(()).item()
    return values


# ---------------------------------------------------------------------------
# Gamma
# ---------------------------------------------------------------------------

_LANCZOS_G = 7.0
_LANCZOS_COEFFS = np.array([
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
])


def _lanczos(z: np.ndarray) -> np.ndarray:
    # valid for Re z >= 1/2
    z = z - 1.0
    series = np.full_like(z, _LANCZOS_COEFFS[0])
    for i in range(1, len(_LANCZOS_COEFFS)):
        series = series + _LANCZOS_COEFFS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return np.sqrt(2.0 * np.pi) * np.exp((z + 0.5) * np.log(t) - t) * series


def gamma_complex(z):
    """
    Gamma function of a complex argument

    Args:
        z: complex scalar or array

    Raises:
        GammaPoleError: if any z is a non-positive integer
    """
    z_arr = np.atleast_1d(np.asarray(z, dtype=complex))
    if not np.all(np.isfinite(z_arr)):
        raise InvalidParameterError("gamma_complex received a non-finite argument")
    poles = (z_arr.imag == 0) & (z_arr.real <= 0) & (z_arr.real == np.round(z_arr.real))
    if np.any(poles):
        raise GammaPoleError(f"Gamma has a pole at z = {z_arr[poles][0].real:g}")

    result = np.empty_like(z_arr)
    left = z_arr.real < 0.5
    result[~left] = _lanczos(z_arr[~left])
    if np.any(left):
        zl = z_arr[left]
        result[left] = np.pi / (np.sin(np.pi * zl) * _lanczos(1.0 - zl))
    return _as_output(result, z)


# ---------------------------------------------------------------------------
# Conical Legendre functions
# ---------------------------------------------------------------------------

@lru_cache(maxsize=32)
def _unit_gauss_legendre(n: int):
    nodes, weights = np.polynomial.legendre.leggauss(n)
    return 0.5 * (nodes + 1.0), 0.5 * weights


def _mehler_dirichlet(k: float, theta: np.ndarray, n: int):
    """
    (sqrt 2/pi) int_0^theta cos(kt) (cosh theta - cosh t)^{-1/2} dt with t = theta(1 - v^2)
    Returns (value, integral of |integrand|).
    """
    v, w = _unit_gauss_legendre(n)
    th = theta[:, None]
    vv = v[None, :]
    a = th * (1.0 - 0.5 * vv ** 2)
    b = 0.5 * th * vv ** 2
    # sqrt(2 sinh a sinh b) without overflow for large theta
    log_denominator = 0.5 * (a + np.log(-np.expm1(-2.0 * a)) + np.log(np.sinh(b)))
    integrand = np.cos(k * th * (1.0 - vv ** 2)) * 2.0 * th * vv * np.exp(-log_denominator)
    scale = np.sqrt(2.0) / np.pi
    return scale * (integrand @ w), scale * (np.abs(integrand) @ w)


def legendre_conical(k: float, x, accuracy: SpecFunAccuracy = DEFAULT_ACCURACY):
    """
    Conical function P_{-1/2+ik}(x+1) for x >= 0

    Gauss-Legendre nodes are doubled from 64 until two successive rules agree to
    accuracy.target_rel_err.
    """
    k = float(k)
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if not np.isfinite(k) or not np.all(np.isfinite(x_arr)):
        raise InvalidParameterError("legendre_conical needs finite k and x")
    if np.any(x_arr < 0):
        raise InvalidParameterError("legendre_conical is defined for x >= 0")

    theta = 2.0 * np.arcsinh(np.sqrt(0.5 * x_arr))
    result = np.ones_like(theta)
    todo = np.nonzero(theta > 0)[0]
    n = 64
    previous, _ = _mehler_dirichlet(k, theta[todo], n)
    while todo.size:
        n *= 2
        if n > accuracy.max_nodes:
            raise AccuracyNotReachedError(
                f"P_(-1/2+{k}i) did not converge with {accuracy.max_nodes} nodes "
                f"at x = {x_arr[todo][0]:g}")
        current, resabs = _mehler_dirichlet(k, theta[todo], n)
        tolerance = accuracy.target_rel_err * np.abs(current) + 100 * EPS * resabs
        done = np.abs(current - previous) <= tolerance
        result[todo[done]] = current[done]
        todo = todo[~done]
        previous = current[~done]
    return _as_output(result, x)


# ---------------------------------------------------------------------------
# Whittaker W
# ---------------------------------------------------------------------------

_SERIES_TOL = 1e-17
_MAX_SERIES_TERMS = 500
# integration floors in t = ln x; each query uses the first floor below its smallest t
_T_FLOORS = (-10.0, -20.0, -40.0, -80.0, -160.0, -320.0, -745.0)


def _nu_squared(nu) -> float:
    nu = complex(nu)
    if nu.real != 0 and nu.imag != 0:
        raise InvalidParameterError(f"Second Whittaker index must be real or imaginary, got {nu}")
    return nu.real ** 2 - nu.imag ** 2


def _series_converges(a: float, nu2: float, x: float) -> bool:
    term, total = 1.0, 1.0
    for n in range(_MAX_SERIES_TERMS):
        factor = ((a + n) ** 2 - nu2) / ((n + 1) * x)
        if abs(factor) >= 1.0:
            return False
        term *= -factor
        total += term
        if abs(term) <= _SERIES_TOL * abs(total):
            return True
    return False


@lru_cache(maxsize=1024)
def _series_start(beta: float, nu2: float) -> float:
    """Smallest convenient x where the asymptotic series reaches full precision"""
    a = 0.5 + beta
    x_start = 30.0 + 2.0 * (abs(nu2) + a * a)
    for _ in range(40):
        if _series_converges(a, nu2, x_start):
            return x_start
        x_start *= 1.5
    raise AccuracyNotReachedError(f"No asymptotic starting point for W(-{beta}, nu^2={nu2})")


def _whittaker_series(beta: float, nu2: float, x: np.ndarray):
    """S(x) = W e^{x/2} x^beta and x S'(x) from the asymptotic series"""
    a = 0.5 + beta
    term = np.ones_like(x)
    total = np.ones_like(x)
    x_derivative = np.zeros_like(x)
    for n in range(_MAX_SERIES_TERMS):
        term = -term * ((a + n) ** 2 - nu2) / ((n + 1) * x)
        total += term
        x_derivative -= (n + 1) * term
        if np.all(np.abs(term) <= _SERIES_TOL * np.abs(total)):
            break
    return total, x_derivative


class _WhittakerSolution:
    """
    Dense solution of w'' = e^t w' + ((beta + 1/2) e^t + nu^2) w in t = ln x,
    where W(x) = e^{-x/2} x^{1/2} w(ln x).
    """

    def __init__(self, beta: float, nu2: float, t_floor: float):
        self.beta = beta
        self.nu2 = nu2
        self.x_start = _series_start(beta, nu2)
        t_start = np.log(self.x_start)

        s, xs1 = _whittaker_series(beta, nu2, np.array([self.x_start]))
        power = self.x_start ** (-beta - 0.5)
        w0 = power * s[0]
        wt0 = power * ((-beta - 0.5) * s[0] + xs1[0])
        self.scale = abs(w0)

        drive = beta + 0.5

        def rhs(t, y):
            et = np.exp(t)
            return [y[1], et * y[1] + (drive * et + nu2) * y[0]]

        solution = solve_ivp(rhs, (t_start, t_floor), [w0 / self.scale, wt0 / self.scale],
                             method='DOP853', rtol=1e-12, atol=1e-14, dense_output=True)
        if not solution.success:
            raise AccuracyNotReachedError(
                f"Whittaker ODE failed for beta={beta}, nu^2={nu2}: {solution.message}")
        logger.debug(f"W(-{beta}, nu^2={nu2}) integrated to t={t_floor} in {solution.t.size} steps")
        self.dense = solution.sol

    def state(self, t: np.ndarray):
        y = self.dense(t)
        return self.scale * y[0], self.scale * y[1]


@lru_cache(maxsize=512)
def _whittaker_solution(beta: float, nu2: float, t_floor: float) -> _WhittakerSolution:
    return _WhittakerSolution(beta, nu2, t_floor)


def _whittaker_eval(beta: float, nu, x):
    beta = float(beta)
    nu2 = _nu_squared(nu)
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if not np.all(np.isfinite(x_arr)):
        raise InvalidParameterError("whittaker_w received a non-finite x")
    if np.any(x_arr <= 0):
        raise InvalidParameterError("whittaker_w is defined for x > 0")

    values = np.empty_like(x_arr)
    derivs = np.empty_like(x_arr)
    x_start = _series_start(beta, nu2)

    far = x_arr >= x_start
    if np.any(far):
        xf = x_arr[far]
        s, xs1 = _whittaker_series(beta, nu2, xf)
        envelope = np.exp(-0.5 * xf - beta * np.log(xf))
        values[far] = envelope * s
        derivs[far] = envelope * ((-0.5 - beta / xf) * s + xs1 / xf)

    near = ~far
    if np.any(near):
        xn = x_arr[near]
        t = np.log(xn)
        t_floor = next(f for f in _T_FLOORS if f <= t.min() - 1.0)
        w, wt = _whittaker_solution(beta, nu2, t_floor).state(t)
        envelope = np.exp(-0.5 * xn + 0.5 * t)
        values[near] = envelope * w
        derivs[near] = envelope * (-0.5 * w + (0.5 * w + wt) / xn)
    return values, derivs


def whittaker_w(beta: float, nu, x):
    """
    Whittaker function W_{-beta,nu}(x) for x > 0

    Args:
        beta: real; the first index is -beta
        nu: real p >= 0 or purely imaginary ik (only nu^2 enters)
        x: positive scalar or array
    """
    values, _ = _whittaker_eval(beta, nu, x)
    return _as_output(values, x)


def whittaker_w_derivative(beta: float, nu, x):
    """W_{-beta,nu}(x) and its x-derivative"""
    values, derivs = _whittaker_eval(beta, nu, x)
    return _as_output(values, x), _as_output(derivs, x)


# ---------------------------------------------------------------------------
# MacDonald K
# ---------------------------------------------------------------------------

_K_CUTOFF = np.log(1e18)


def _macdonald_imaginary(nu: float, z: np.ndarray, accuracy: SpecFunAccuracy) -> np.ndarray:
    """K_{i nu}(z) = int_0^inf exp(-z cosh t) cos(nu t) dt by the trapezoidal rule"""
    t_max = np.arccosh(1.0 + _K_CUTOFF / z)
    result = np.empty_like(z)
    todo = np.arange(z.size)
    n = 64
    node_limit = 16 * accuracy.max_nodes

    def trapezoid(indices, n_nodes):
        u = np.linspace(0.0, 1.0, n_nodes + 1)
        t = t_max[indices, None] * u[None, :]
        integrand = np.exp(-z[indices, None] * (np.cosh(t) - 1.0)) * np.cos(nu * t)
        integrand[:, 0] *= 0.5
        integrand[:, -1] *= 0.5
        h = t_max[indices] / n_nodes
        damping = np.exp(-z[indices])
        return h * damping * integrand.sum(axis=1), h * damping * np.abs(integrand).sum(axis=1)

    previous, _ = trapezoid(todo, n)
    while todo.size:
        n *= 2
        if n > node_limit:
            raise AccuracyNotReachedError(
                f"K_(i{nu}) did not converge at z = {z[todo][0]:g}")
        current, resabs = trapezoid(todo, n)
        tolerance = accuracy.target_rel_err * np.abs(current) + 100 * EPS * resabs
        done = np.abs(current - previous) <= tolerance
        result[todo[done]] = current[done]
        todo = todo[~done]
        previous = current[~done]
    return result


def macdonald_k(order, z, accuracy: SpecFunAccuracy = DEFAULT_ACCURACY):
    """
    MacDonald function K_order(z), z > 0, for real or purely imaginary order
    """
    order = complex(order)
    z_arr = np.atleast_1d(np.asarray(z, dtype=float))
    if not np.all(np.isfinite(z_arr)) or np.any(z_arr <= 0):
        raise InvalidParameterError("macdonald_k is defined for finite z > 0")
    if order.imag == 0:
        values = special.kv(order.real, z_arr)
    elif order.real == 0:
        values = _macdonald_imaginary(abs(order.imag), z_arr, accuracy)
    else:
        raise InvalidParameterError(f"Order must be real or purely imaginary, got {order}")
    return _as_output(values, z)


# ---------------------------------------------------------------------------
# Laguerre, spectral maps, numerical derivatives
# ---------------------------------------------------------------------------

def laguerre(n: int, alpha: float, x):
    """Generalized Laguerre polynomial L^alpha_n(x)"""
    if int(n) != n or n < 0:
        raise InvalidParameterError(f"Laguerre degree must be a non-negative integer, got {n}")
    if alpha <= -1:
        raise InvalidParameterError(f"Laguerre parameter must exceed -1, got {alpha}")
    values = special.eval_genlaguerre(int(n), alpha, np.asarray(x, dtype=float))
    return _as_output(np.atleast_1d(values), x)


def spectral_maps(k):
    """mu = k^2 + 1/4 and lambda = pi / cosh(pi k)"""
    k_arr = np.atleast_1d(np.asarray(k, dtype=float))
    if np.any(k_arr < 0) or not np.all(np.isfinite(k_arr)):
        raise InvalidParameterError("Quasimomentum must be finite and non-negative")
    mu = k_arr ** 2 + 0.25
    with np.errstate(over='ignore'):
        lam = np.pi / np.cosh(np.pi * k_arr)
    return _as_output(mu, k), _as_output(lam, k)


def lambda_from_mu(mu):
    """
    Hankel eigenvalue attached to an L eigenvalue: pi/cosh(pi sqrt(mu - 1/4)),
    continued as pi/cos(pi sqrt(1/4 - mu)) below 1/4
    """
    mu = float(mu)
    if mu >= 0.25:
        return float(spectral_maps(np.sqrt(mu - 0.25))[1])
    return float(np.pi / np.cos(np.pi * np.sqrt(0.25 - mu)))


STENCIL_STEP = EPS ** (1.0 / 6.0)


def central_derivatives(func, x, rel_step: float = STENCIL_STEP):
    """
    Value, first and second derivative of func by five-point central stencils with
    step rel_step*|x| (rel_step at x = 0)
    """
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    h = rel_step * np.where(x_arr != 0, np.abs(x_arr), 1.0)
    offsets = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
    points = x_arr[None, :] + offsets[:, None] * h[None, :]
    samples = np.asarray(func(points.ravel())).reshape(points.shape)
    fm2, fm1, f0, fp1, fp2 = samples
    first = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h)
    second = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h ** 2)
    return _as_output(f0, x), _as_output(first, x), _as_output(second, x)
