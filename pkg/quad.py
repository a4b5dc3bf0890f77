#!/usr/bin/env python3
"""
Quadrature on (0, infinity) and application of a Hankel operator
(Af)(x) = int_0^inf a(x+y) f(y) dy.

The half-line is split at 1 and at any extra breakpoints. The piece next to 0 is either
integrated directly, through y = u^2 (integrands ~ y^{-1/2} smooth) or through
y = b e^{-s} (integrands ~ y^{-1/2 +- ik}). The tail is mapped according to its decay
class and cut where sampled integrand values fall below abs_tol * 1e-3. Each finite
mapped segment goes to scipy.integrate.quad (QUADPACK QAGS) with an equal share of abs_tol.
"""

import logging
from dataclasses import dataclass, replace
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import integrate

from errors import KernelDomainError, QuadratureError
from kernel_catalog import KernelSpec, kernel_eval

logger = logging.getLogger(__name__)

TAIL_HINTS = ('exponential', 'sqrt_exponential', 'algebraic')
ZERO_MAPS = ('sqrt', 'log')


@dataclass(frozen=True)
class QuadOpts:
    """
    Quadrature options

    Args:
        rel_tol: relative error target
        abs_tol: absolute error target (also sets the tail cut)
        max_subdivisions: subinterval limit per segment (quad limit=)
        singular_at_zero: integrable singularity at y = 0
        tail_decay_hint: 'exponential', 'sqrt_exponential' or 'algebraic'
        zero_map: 'sqrt' (y = u^2) or 'log' (y = b e^-s) for singular_at_zero
        breakpoints: extra split points in (0, upper)
        upper: finite upper limit instead of infinity
    """
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_subdivisions: int = 2000
    singular_at_zero: bool = False
    tail_decay_hint: str = 'exponential'
    zero_map: str = 'sqrt'
    breakpoints: Tuple[float, ...] = ()
    upper: Optional[float] = None

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("rel_tol and abs_tol must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be positive")
        if self.tail_decay_hint not in TAIL_HINTS:
            raise ValueError(f"Unknown tail_decay_hint '{self.tail_decay_hint}'")
        if self.zero_map not in ZERO_MAPS:
            raise ValueError(f"Unknown zero_map '{self.zero_map}'")
        if self.upper is not None and not self.upper > 0:
            raise ValueError("upper must be positive")

    def with_(self, **changes) -> 'QuadOpts':
        if 'breakpoints' in changes:
            changes['breakpoints'] = tuple(float(b) for b in changes['breakpoints'])
        return replace(self, **changes)


@dataclass
class QuadResult:
    value: object
    abs_err_estimate: float
    nodes_used: int


@dataclass
class _Segment:
    func: Callable[[np.ndarray], np.ndarray]
    a: float
    b: float


def _quad_part(func: Callable, seg: _Segment, part: Callable, opts: QuadOpts, abs_tol: float):
    def scalar(y):
        return float(part(np.asarray(func(np.array([y]))).reshape(-1)[0]))

    out = integrate.quad(scalar, seg.a, seg.b, epsabs=abs_tol, epsrel=opts.rel_tol,
                         limit=opts.max_subdivisions, full_output=1)
    value, error, info = out[0], out[1], out[2]
    if len(out) > 3:
        message = str(out[3])
        if 'roundoff' not in message.lower():
            raise QuadratureError(f"quad on [{seg.a:g}, {seg.b:g}]: {message.strip()}")
        logger.warning(f"Quadrature limited by roundoff on [{seg.a:g}, {seg.b:g}]: error {error:.3g}")
    if not (np.isfinite(value) and np.isfinite(error)):
        raise QuadratureError(f"Non-finite quadrature result on [{seg.a:g}, {seg.b:g}]")
    return value, error, int(info['neval'])


def _integrate_segments(segments: List[_Segment], opts: QuadOpts) -> QuadResult:
    share = opts.abs_tol / len(segments)
    parts = [np.real]
    for seg in segments:
        sample = np.asarray(seg.func(np.array([0.5 * (seg.a + seg.b)])))
        if not np.all(np.isfinite(sample)):
            raise QuadratureError(f"Integrand returned a non-finite value at mapped node {0.5 * (seg.a + seg.b):g}")
        if np.iscomplexobj(sample):
            parts = [np.real, np.imag]
    totals = [0.0] * len(parts)
    err, nodes = 0.0, 0
    for seg in segments:
        for i, part in enumerate(parts):
            value, error, neval = _quad_part(seg.func, seg, part, opts, share)
            totals[i] += value
            err += error
            nodes += neval
    logger.debug(f"Quadrature over {len(segments)} segments used {nodes} nodes")
    value = complex(totals[0], totals[1]) if len(parts) == 2 else float(totals[0])
    return QuadResult(value=value, abs_err_estimate=float(err), nodes_used=nodes)


def _mapped_extent(func: Callable, abs_tol: float) -> float:
    """Upper limit in the mapped variable where the integrand has become negligible"""
    extent = 1.0
    for _ in range(24):
        s = np.linspace(extent, 2.0 * extent, 33)
        values = np.abs(np.asarray(func(s)))
        if not np.all(np.isfinite(values)):
            raise QuadratureError(f"Non-finite integrand while sizing the tail near s={extent:g}")
        if values.max() * extent < abs_tol * 1e-3:
            return 2.0 * extent
        extent *= 2.0
    raise QuadratureError("Integrand does not decay in the mapped tail variable")


def _tail_segment(f: Callable, start: float, hint: str, abs_tol: float) -> _Segment:
    if hint == 'exponential':
        def g(s):
            return f(start + s)
    elif hint == 'sqrt_exponential':
        root = np.sqrt(start)

        def g(s):
            return f((root + s) ** 2) * 2.0 * (root + s)
    else:
        def g(s):
            y = start * np.exp(s)
            return f(y) * y
    return _Segment(g, 0.0, _mapped_extent(g, abs_tol))


def _zero_segment(f: Callable, end: float, opts: QuadOpts) -> _Segment:
    if not opts.singular_at_zero:
        return _Segment(f, 0.0, end)
    if opts.zero_map == 'sqrt':
        def g(u):
            return f(u * u) * 2.0 * u
        return _Segment(g, 0.0, float(np.sqrt(end)))

    def g(s):
        y = end * np.exp(-s)
        return f(y) * y
    return _Segment(g, 0.0, _mapped_extent(g, opts.abs_tol))


def integrate_semi_infinite(f: Callable, opts: Optional[QuadOpts] = None) -> QuadResult:
    """
    int_0^inf f(y) dy (or int_0^upper when opts.upper is set)

    Args:
        f: vectorized integrand, real or complex
        opts: QuadOpts
    """
    opts = opts or QuadOpts()
    limit = opts.upper if opts.upper is not None else np.inf
    points = sorted({p for p in (1.0, *opts.breakpoints) if 0 < p < limit})
    if not points:
        points = [0.5 * limit]

    segments = [_zero_segment(f, points[0], opts)]
    for left, right in zip(points[:-1], points[1:]):
        segments.append(_Segment(f, left, right))
    if opts.upper is None:
        segments.append(_tail_segment(f, points[-1], opts.tail_decay_hint, opts.abs_tol))
    else:
        segments.append(_Segment(f, points[-1], opts.upper))
    return _integrate_segments(segments, opts)


def integrate_interval(f: Callable, a: float, b: float, opts: Optional[QuadOpts] = None) -> QuadResult:
    """int_a^b f(y) dy for finite a < b"""
    opts = opts or QuadOpts()
    inner = [p for p in opts.breakpoints if a < p < b]
    edges = [a, *sorted(inner), b]
    segments = [_Segment(f, left, right) for left, right in zip(edges[:-1], edges[1:])]
    return _integrate_segments(segments, opts)


def default_hankel_opts(spec: KernelSpec, base: Optional[QuadOpts] = None, **changes) -> QuadOpts:
    """QuadOpts whose tail class follows the kernel"""
    base = base or QuadOpts()
    return base.with_(tail_decay_hint=spec.tail_decay, **changes)


def apply_hankel(spec: KernelSpec, f: Callable, x: float, opts: Optional[QuadOpts] = None) -> QuadResult:
    """
    (Af)(x) = int_0^inf a(x+y) f(y) dy

    Args:
        spec: kernel
        f: vectorized integrand factor f(y)
        x: evaluation point (> 0 for kernels singular at 0)
        opts: QuadOpts; the point x is added to the breakpoints
    """
    opts = opts or default_hankel_opts(spec)
    x = float(x)
    if x < 0 or (x == 0 and spec.singular_at_zero):
        raise KernelDomainError(f"apply_hankel: x={x} outside the domain of {spec.name}")
    if x > 0:
        opts = opts.with_(breakpoints=(*opts.breakpoints, x))

    def integrand(y):
        return kernel_eval(spec, x + y) * f(y)

    return integrate_semi_infinite(integrand, opts)


def apply_hankel_grid(spec: KernelSpec, f: Callable, xs: Sequence[float],
                      opts: Optional[QuadOpts] = None):
    """apply_hankel at each x; returns (values, error estimates) arrays"""
    results = [apply_hankel(spec, f, x, opts) for x in xs]
    values = np.array([r.value for r in results])
    errors = np.array([r.abs_err_estimate for r in results])
    return values, errors


def inner_product(f: Callable, g: Callable, opts: Optional[QuadOpts] = None) -> QuadResult:
    """int_0^inf f(x) g(x) dx"""
    return integrate_semi_infinite(lambda x: f(x) * g(x), opts)
