#!/usr/bin/env python3
"""
Hankel Operator Verification Suites
Runs the commutator-method checks over the kernel catalog and collects one
VerificationReport per (case, check, parameter point).
"""

import logging
import math
import time
from typing import Callable, Dict, List, Optional

import numpy as np

from config import Config, load_config, log_level
from diffop import SmoothFn, apply_L, commutator_residual
from errors import HankelVerificationError
from kernel_catalog import (KernelId, KernelSpec, LParams, carleman, custom_kernel, finite_rank, kernel_eval,
                            macdonald, mehler, normalized_ode_residual, regular_macdonald,
                            regular_whittaker, whittaker)
from nystrom import build, containment_excess, eigenvalues, eigenvector_error, rank_check
from reports import (VerificationReport, detection_report, failed_report, make_report,
                     sort_reports)
from sl_solver import (SLProblem, compact_case_lambda, eigen_residual, fit_tail_coefficient,
                       orthonormality_defect, rayleigh_quotient, refine, tail_rate_error,
                       truncation_sensitivity)
from spectral_identities import (EigenFamily, carleman_closed_form, diagonalization_check,
                                 discrete_spectrum, finite_rank_spectrum, kernel_subspace_check,
                                 normalization_identity, parseval_defect, verify_continuum_identity,
                                 verify_decay, verify_discrete_spectrum,
                                 verify_finite_rank_identity, verify_macdonald_byproduct)
from specfun import spectral_maps, whittaker_w

# Configure logging
logging.basicConfig(
    level=log_level(),
    format='%(asctime)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

SUITES = ('ode', 'commutator', 'eigen', 'discrete', 'finite_rank', 'compact', 'transform')
ODE_GRID = np.logspace(-3.0, np.log10(50.0), 30)
STENCIL_REL_STEP = 1e-2
DECAY_POINTS = {'mehler': (1e-6, 1e-4), 'whittaker': (30.0, 40.0), 'macdonald': (30.0, 60.0)}
TEST_FUNCTIONS = {
    'exp': lambda x: np.exp(-np.asarray(x, dtype=float)),
    'x_exp': lambda x: np.asarray(x, dtype=float) * np.exp(-np.asarray(x, dtype=float)),
}


class HankelVerifier:
    """Runs verification suites and collects their reports"""

    def __init__(self, config: Optional[Config] = None, case: Optional[str] = None):
        """
        Initialize the verifier

        Args:
            config: Config (defaults when omitted)
            case: restrict suites to cases whose name equals or starts with this
        """
        self.config = config or Config().validate()
        self.case = case
        self.reports: List[VerificationReport] = []
        self.plot_rows: List[dict] = []

    # ------------------------------------------------------------------
    # plumbing
    # ------------------------------------------------------------------

    def _selected(self, name: str) -> bool:
        if not self.case:
            return True
        return name == self.case or name.startswith(self.case + '(') or \
            name.replace('_', '-') == self.case

    def _tol(self, family: str) -> float:
        return self.config.tolerance(family)

    def _quad(self, **overrides):
        return self.config.quad.to_opts(**overrides)

    def _run_check(self, case_id: str, check_id: str, params: dict, tolerance: float,
                   check: Callable) -> List[VerificationReport]:
        """Run one check; exceptions become failed reports"""
        started = time.perf_counter()
        try:
            result = check()
            reports = result if isinstance(result, list) else [result]
        except (HankelVerificationError, ArithmeticError, ValueError, RuntimeError) as e:
            logger.error(f"{case_id} {check_id} {params}: {type(e).__name__}: {e}")
            reports = [failed_report(case_id, check_id, params, tolerance, f"{type(e).__name__}: {e}")]
        elapsed_ms = int(round(1000.0 * (time.perf_counter() - started)))
        for report in reports:
            if self.config.record_runtime:
                report.runtime_ms = elapsed_ms
            status = 'pass' if report.passed else 'FAIL'
            logger.info(f"[{status}] {report.case_id} {report.check_id} "
                        f"rel={report.max_rel_err} tol={report.tolerance:g} ({elapsed_ms} ms)")
        self.reports.extend(reports)
        return reports

    # ------------------------------------------------------------------
    # catalogs
    # ------------------------------------------------------------------

    def _kernels(self) -> List[KernelSpec]:
        kernels = [mehler(), carleman()]
        kernels += [whittaker(b) for b in [*self.config.whittaker_betas, *self.config.discrete_betas]]
        kernels += [macdonald()]
        kernels += [regular_whittaker(b) for b in self.config.regular_betas]
        kernels += [regular_macdonald()]
        kernels += [finite_rank(l) for l in self.config.finite_rank_l]
        return [k for k in kernels if self._selected(k.name)]

    def _families(self) -> List[EigenFamily]:
        families = [EigenFamily.mehler(), EigenFamily.carleman()]
        families += [EigenFamily.whittaker(b) for b in self.config.whittaker_betas]
        families += [EigenFamily.macdonald()]
        return [f for f in families if self._selected(f.name)]

    def _x_grid(self, spec: KernelSpec) -> List[float]:
        grid = [x for x in self.config.x_grid if x > 0]
        return grid if spec.singular_at_zero else [0.0, *grid]

    # ------------------------------------------------------------------
    # suites
    # ------------------------------------------------------------------

    def run_ode_suite(self):
        """Kernel ODE residuals, analytic and numeric, plus the finite-rank closed form"""
        logger.info("Starting ode suite...")
        for spec in self._kernels():
            for numeric, family in ((False, 'ode_analytic'), (True, 'ode_numeric')):
                check_id = 'ode_numeric' if numeric else 'ode_analytic'
                params = dict(spec.params.as_dict(), points=ODE_GRID.size)

                def check(spec=spec, numeric=numeric, check_id=check_id, params=params, family=family):
                    residual = normalized_ode_residual(spec, ODE_GRID, numeric=numeric)
                    return make_report(spec.name, check_id, params, residual, residual, self._tol(family))

                self._run_check(spec.name, check_id, params, self._tol(family), check)

            if spec.id == KernelId.REGULAR_WHITTAKER:
                wrong = LParams(0.25, spec.index, 2.0)
                params = dict(wrong.as_dict(), points=ODE_GRID.size)
                def uncorrected(spec=spec, wrong=wrong, params=params):
                    observed = float(np.max(normalized_ode_residual(spec, ODE_GRID, params=wrong)))
                    return detection_report(spec.name, 'ode_uncorrected_params', params, observed,
                                            self._tol('negative_control'))

                self._run_check(spec.name, 'ode_uncorrected_params', params, 1.0, uncorrected)

            if spec.id == KernelId.FINITE_RANK:
                l = int(spec.index)
                params = {'l': l, 'points': ODE_GRID.size}

                def closed_form(spec=spec, l=l, params=params):
                    a = kernel_eval(spec, ODE_GRID)
                    w = (-1.0) ** (l - 1) / math.factorial(l - 1) * whittaker_w(-float(l), 0.5, ODE_GRID) / ODE_GRID
                    diff = np.abs(a - w)
                    return make_report(spec.name, 'whittaker_closed_form', params, diff,
                                       diff / np.max(np.abs(a)), self._tol('ode_cross_check'))

                self._run_check(spec.name, 'whittaker_closed_form', params, self._tol('ode_cross_check'), closed_form)

    def run_commutator_suite(self):
        """(LA - AL) f for a bump in [1, 3]; negative control and parameter perturbations"""
        logger.info("Starting commutator suite...")
        bump = SmoothFn.bump(1.0, 3.0)
        grid = [x for x in self.config.x_grid if x > 0]
        opts = self._quad(rel_tol=1e-13, abs_tol=1e-16)
        for spec in self._kernels():
            elementary = spec.id.value in ('mehler', 'carleman')
            tol = self._tol('commutator' if elementary else 'commutator_special')
            params = dict(spec.params.as_dict(), f=bump.name, points=len(grid))
            matched = self._run_check(
                spec.name, 'commutator', params, tol,
                lambda spec=spec, tol=tol: commutator_residual(spec, spec.params, bump, grid, opts, tol))
            base = matched[0].max_rel_err
            if base is None:
                continue
            for name in ('alpha', 'beta', 'gamma'):
                perturbed = spec.params.perturbed(name, 0.1)
                p_params = dict(perturbed.as_dict(), perturbed=name)

                def check(spec=spec, perturbed=perturbed, p_params=p_params, base=base):
                    residual = commutator_residual(spec, perturbed, bump, grid, opts, tol).max_rel_err
                    return detection_report(spec.name, 'commutator_perturbed', p_params,
                                            residual / max(base, 1e-300), 10.0)

                self._run_check(spec.name, 'commutator_perturbed', p_params, 1.0, check)

        if self._selected('mehler'):
            control = custom_kernel('negative_control(x+3)^-1', lambda x: 1.0 / (x + 3.0),
                                    mehler().params, singular_at_zero=False, singular_at_infinity=True)
            params = dict(control.params.as_dict(), f=bump.name, points=1)
            self._run_check(control.name, 'commutator_negative_control', params, 1.0,
                            lambda: detection_report(
                                control.name, 'commutator_negative_control', params,
                                commutator_residual(control, control.params, bump, [1.0], opts).max_rel_err,
                                self._tol('negative_control')))

    def _eigenfunction_L_check(self, case_id: str, params_l: LParams, func: Callable, mu: float,
                               grid, params: dict):
        def check():
            f = SmoothFn.from_function(func, name=case_id, rel_step=STENCIL_REL_STEP)
            x = np.asarray(grid, dtype=float)
            values = np.asarray(func(x), dtype=float)
            diff = np.abs(apply_L(params_l, f, x) - mu * values)
            scale = max(abs(mu), 1.0) * (np.abs(values) + np.max(np.abs(values)))
            return make_report(case_id, 'eigenfunction_L', params, diff, diff / scale,
                               self._tol('eigenfunction_L'))

        self._run_check(case_id, 'eigenfunction_L', params, self._tol('eigenfunction_L'), check)

    def run_eigen_suite(self):
        """Continuum identities, normalizations, decay, closed forms and spectrum containment"""
        logger.info("Starting eigen suite...")
        cfg = self.config
        for family in self._families():
            spec = family.kernel
            elementary = family.name in ('mehler', 'carleman')
            tol = self._tol('eigen_elementary' if elementary else 'eigen_special')
            opts = self._quad(rel_tol=1e-12 if elementary else cfg.quad.rel_tol)
            grid = self._x_grid(spec)
            positive = [x for x in grid if x > 0]

            if family.name != 'carleman':
                for k in cfg.normalization_k:
                    self._run_check(family.name, 'normalization', {'k': k}, self._tol('normalization'),
                                    lambda family=family, k=k: normalization_identity(family, k, self._tol('normalization')))

            for k in cfg.k_grid:
                self._run_check(family.name, 'continuum_identity', {'k': k, 'points': len(grid)}, tol,
                                lambda family=family, k=k: verify_continuum_identity(
                                    family, k, grid, opts, tol, samples_out=self.plot_rows))
                for component, psi in enumerate(family.components(k)):
                    self._eigenfunction_L_check(family.name, spec.params, psi, float(spectral_maps(k)[0]),
                                                positive, {'k': k, 'component': component})

                kind = family.case.value
                if kind in DECAY_POINTS:
                    points = DECAY_POINTS[kind]
                    self._run_check(family.name, 'second_solution_decay', {'k': k}, self._tol('decay'),
                                    lambda family=family, k=k, points=points: verify_decay(
                                        family, k, points, tolerance=self._tol('decay')))
                if kind == 'macdonald':
                    self._run_check('macdonald', 'byproduct_identity', {'k': k}, self._tol('eigen_special'),
                                    lambda k=k: verify_macdonald_byproduct(
                                        k, positive, self._quad(), self._tol('eigen_special')))

            if family.name == 'carleman':
                for k in cfg.carleman_k:
                    self._run_check('carleman', 'closed_form', {'k': k}, self._tol('carleman_closed_form'),
                                    lambda k=k: carleman_closed_form(k, tolerance=self._tol('carleman_closed_form')))
                self._run_check('carleman', 'nystrom_count_growth', {}, 1.0, self._carleman_count_growth)

            for n in cfg.nystrom.node_counts:
                params = {'nodes': n}
                self._run_check(family.name, 'nystrom_containment', params, self._tol('containment'),
                                lambda spec=spec, params=params, n=n: make_report(
                                    spec.name, 'nystrom_containment', params,
                                    containment_excess(eigenvalues(build(spec, n)), 0.0, math.pi),
                                    None, self._tol('containment'), absolute=True))

    def _carleman_count_growth(self) -> VerificationReport:
        counts = [rank_check(build(carleman(), n), math.pi - 0.1) for n in self.config.nystrom.node_counts]
        monotone = all(b >= a for a, b in zip(counts, counts[1:]))
        growth = counts[-1] - counts[0] if monotone else 0
        params = {'nodes': ';'.join(str(n) for n in self.config.nystrom.node_counts),
                  'counts': ';'.join(str(c) for c in counts)}
        return detection_report('carleman', 'nystrom_count_growth', params, growth, 1.0)

    def run_discrete_suite(self):
        """Point spectrum for beta < -1/2: formulas, identities, SL cross-check, Nyström outliers"""
        logger.info("Starting discrete suite...")
        cfg = self.config
        for beta in cfg.discrete_betas:
            family = EigenFamily.whittaker(beta)
            if not self._selected(family.name):
                continue
            case_id = family.name
            grid = [x for x in cfg.x_grid if x > 0]
            self._run_check(case_id, 'discrete_spectrum', {'beta': beta}, self._tol('discrete'),
                            lambda beta=beta, grid=grid: verify_discrete_spectrum(
                                beta, grid, cfg.k_grid, tolerances=cfg.tolerances))

            pairs = discrete_spectrum(beta)
            for pair in pairs:
                self._eigenfunction_L_check(case_id, family.kernel.params, pair.psi, pair.mu_n, grid,
                                            {'n': pair.n, 'p': round(pair.p, 12)})

            self._run_check(case_id, 'sl_discrete', {'beta': beta}, self._tol('sl_eigenvalue'),
                            lambda beta=beta, pairs=pairs: self._sl_discrete(beta, pairs))
            self._run_check(case_id, 'nystrom_outliers', {'beta': beta}, self._tol('nystrom_outlier'),
                            lambda family=family, pairs=pairs: self._nystrom_outliers(family, pairs))

    def _sl_discrete(self, beta: float, pairs) -> List[VerificationReport]:
        case_id = f"whittaker({beta:g})"
        params_l = LParams(0.25, beta, 0.0)
        solver = self.config.solver
        problem = SLProblem.for_params(params_l, solver.n_points)
        result = refine(problem, len(pairs), solver.levels)
        expected = np.array([p.mu_n for p in pairs])
        count = min(expected.size, result.mu.size)
        reports = []
        diff = np.abs(result.mu[:count] - expected[:count]) if count == expected.size else np.array([math.inf])
        reports.append(make_report(case_id, 'sl_discrete_eigenvalues',
                                   {'beta': beta, 'found': int(result.mu.size), 'expected': int(expected.size)},
                                   diff, diff / np.maximum(np.abs(expected[:max(count, 1)]), 1e-300),
                                   self._tol('sl_eigenvalue')))
        order = result.orders[0] if result.orders.size else math.nan
        reports.append(make_report(case_id, 'sl_richardson_order', {'beta': beta, 'order': round(float(order), 6)},
                                   abs(order - 2.0), abs(order - 2.0), self._tol('richardson_order')))
        reports.append(make_report(case_id, 'sl_orthonormality', {'beta': beta},
                                   orthonormality_defect(result.pairs), orthonormality_defect(result.pairs),
                                   self._tol('orthogonality'), absolute=True))
        shift = truncation_sensitivity(problem, len(pairs))
        reports.append(make_report(case_id, 'sl_truncation', {'beta': beta}, shift, shift,
                                   self._tol('truncation'), absolute=True))
        return reports

    def _nystrom_outliers(self, family: EigenFamily, pairs) -> List[VerificationReport]:
        n = max(self.config.nystrom.node_counts)
        values = eigenvalues(build(family.kernel, n))
        eps = self._tol('containment')
        predicted = np.array([p.lambda_n for p in pairs])
        outside = int(np.sum((values < -eps) | (values > math.pi + eps)))
        reports = []
        for pair in pairs:
            nearest = float(np.min(np.abs(values - pair.lambda_n)))
            reports.append(make_report(family.name, 'nystrom_outlier',
                                       {'n': pair.n, 'lambda': pair.lambda_n, 'nodes': n},
                                       nearest, nearest / abs(pair.lambda_n), self._tol('nystrom_outlier')))
        reports.append(make_report(family.name, 'nystrom_outlier_count',
                                   {'nodes': n, 'outside': outside, 'expected': len(pairs)},
                                   abs(outside - len(pairs)), None, self._tol('count'), absolute=True))
        lower = min(0.0, predicted.min()) if predicted.size else 0.0
        upper = max(math.pi, predicted.max()) if predicted.size else math.pi
        reports.append(make_report(family.name, 'nystrom_containment', {'nodes': n},
                                   containment_excess(values, lower - eps, upper + eps), None,
                                   eps, absolute=True))
        return reports

    def run_finite_rank_suite(self):
        """Rank-l kernels: Nyström rank and eigenvalues, eigenpairs, kernel subspace"""
        logger.info("Starting finite_rank suite...")
        cfg = self.config
        for l in cfg.finite_rank_l:
            spec = finite_rank(l)
            if not self._selected(spec.name):
                continue
            grid = [x for x in cfg.x_grid if x > 0]
            self._run_check(spec.name, 'nystrom_finite_rank', {'l': l}, self._tol('finite_rank'),
                            lambda l=l: self._nystrom_finite_rank(l))
            self._run_check(spec.name, 'finite_rank_identity', {'l': l}, self._tol('finite_rank'),
                            lambda l=l, grid=grid: verify_finite_rank_identity(
                                l, grid, tolerance=self._tol('finite_rank')))
            for pair in finite_rank_spectrum(l):
                self._eigenfunction_L_check(spec.name, spec.params, pair.psi, pair.mu_n, grid,
                                            {'l': l, 'n': pair.n})
            for k in cfg.subspace_k:
                self._run_check(spec.name, 'kernel_subspace', {'l': l, 'k': k}, self._tol('kernel_subspace'),
                                lambda l=l, k=k, grid=grid: kernel_subspace_check(
                                    l, k, grid, tolerance=self._tol('kernel_subspace')))
            control = whittaker(-1.9)
            k = cfg.subspace_k[0]
            params = {'l': l, 'k': k, 'kernel': control.name}
            self._run_check(spec.name, 'kernel_subspace_control', params, 1.0,
                            lambda l=l, k=k, params=params, grid=grid: detection_report(
                                spec.name, 'kernel_subspace_control', params,
                                kernel_subspace_check(l, k, grid, kernel=control).max_rel_err,
                                self._tol('negative_control')))

    def _nystrom_finite_rank(self, l: int) -> List[VerificationReport]:
        spec = finite_rank(l)
        n = self.config.nystrom.finite_rank_nodes
        matrix = build(spec, n)
        values = eigenvalues(matrix)
        threshold = self._tol('rank_threshold')
        rank = rank_check(matrix, threshold)
        pairs = finite_rank_spectrum(l)
        expected = np.sort([p.lambda_n for p in pairs])
        top = np.sort(values[:l])
        diff = np.abs(top - expected)
        rest = np.abs(values[l:])
        reports = [
            make_report(spec.name, 'nystrom_rank', {'l': l, 'nodes': n, 'rank': rank},
                        abs(rank - l), None, self._tol('count'), absolute=True),
            make_report(spec.name, 'nystrom_eigenvalues', {'l': l, 'nodes': n},
                        np.concatenate([diff, rest]), np.concatenate([diff, rest]),
                        self._tol('finite_rank')),
        ]
        doubled = eigenvalues(build(spec, 2 * n))
        shift = abs(float(np.max(doubled[:l])) - float(np.max(values[:l])))
        reports.append(make_report(spec.name, 'nystrom_refinement', {'l': l, 'nodes': 2 * n},
                                   shift, shift, self._tol('nystrom_refinement'), absolute=True))
        for pair in pairs:
            error = eigenvector_error(matrix, pair.psi, pair.lambda_n)
            reports.append(make_report(spec.name, 'nystrom_eigenvector', {'l': l, 'n': pair.n},
                                       error, error, self._tol('eigenvector')))
        return reports

    def run_compact_suite(self):
        """Regular kernels: SL eigenpairs, tail-normalized eigenvalues, Nyström cross-check"""
        logger.info("Starting compact suite...")
        kernels = [regular_whittaker(b) for b in self.config.regular_betas] + [regular_macdonald()]
        for spec in kernels:
            if self._selected(spec.name):
                self._run_check(spec.name, 'compact', spec.params.as_dict(), self._tol('compact'),
                                lambda spec=spec: self._compact(spec))

    def _compact(self, spec: KernelSpec) -> List[VerificationReport]:
        solver = self.config.solver
        tol = self._tol('compact')
        problem = SLProblem.for_params(spec.params, solver.n_points, solver.n_eigs)
        result = refine(problem, solver.n_eigs, solver.levels)
        pairs = result.pairs
        reports = []
        mus = np.array([p.mu for p in pairs])
        gaps = np.diff(mus)
        reports.append(make_report(spec.name, 'sl_simple_increasing', {'eigs': mus.size},
                                   int(np.sum(gaps <= 0)), None, self._tol('count'), absolute=True))
        order = float(result.orders[0])
        reports.append(make_report(spec.name, 'sl_richardson_order', {'order': round(order, 6)},
                                   abs(order - 2.0), abs(order - 2.0), self._tol('richardson_order')))
        defect = orthonormality_defect(pairs)
        reports.append(make_report(spec.name, 'sl_orthonormality', {}, defect, defect,
                                   self._tol('orthogonality'), absolute=True))
        shift = truncation_sensitivity(problem, solver.n_eigs)
        reports.append(make_report(spec.name, 'sl_truncation', {}, shift, shift,
                                   self._tol('truncation'), absolute=True))
        boundary = max(p.left_boundary_defect() for p in pairs)
        reports.append(make_report(spec.name, 'sl_left_boundary', {}, boundary, boundary,
                                   self._tol('left_boundary')))

        nystrom_values = eigenvalues(build(spec, self.config.nystrom.compact_nodes))
        for n, pair in enumerate(pairs, start=1):
            params = {'n': n, 'mu': round(pair.mu, 10)}
            fit = fit_tail_coefficient(spec, pair)
            lam = compact_case_lambda(spec, pair, fit)
            quotient = rayleigh_quotient(spec, pair)
            residual = eigen_residual(spec, pair, lam)
            nearest = float(np.min(np.abs(nystrom_values - lam)))
            rate = tail_rate_error(spec, pair)
            reports += [
                make_report(spec.name, 'compact_residual', dict(params, lam=lam), None, residual, tol),
                make_report(spec.name, 'compact_rayleigh', dict(params, rayleigh=quotient),
                            abs(lam - quotient), abs(lam - quotient) / abs(quotient), tol),
                make_report(spec.name, 'compact_nystrom', params, nearest, nearest / abs(lam), tol),
                make_report(spec.name, 'compact_tail_rate', dict(params, terms=fit.terms), rate, rate,
                            self._tol('tail_rate')),
            ]
        return reports

    def run_transform_suite(self):
        """Diagonalization U(Af) = lambda Uf and Parseval for two test functions per family"""
        logger.info("Starting transform suite...")
        cfg = self.config
        families = self._families()
        families += [EigenFamily.whittaker(b) for b in cfg.discrete_betas[:1]
                     if self._selected(f"whittaker({b:g})")]
        for family in families:
            for f_name, f in TEST_FUNCTIONS.items():
                params = {'f': f_name, 'points': len(cfg.k_grid)}
                self._run_check(family.name, 'diagonalization', params, self._tol('transform'),
                                lambda family=family, f=f, f_name=f_name: diagonalization_check(
                                    family, f, cfg.k_grid, f_name, tolerance=self._tol('transform')))
                params = {'f': f_name, 'points': cfg.parseval_points}
                self._run_check(family.name, 'parseval', params, self._tol('parseval'),
                                lambda family=family, f=f, f_name=f_name: parseval_defect(
                                    family, f, f_name, n_points=cfg.parseval_points,
                                    tolerance=self._tol('parseval')))

    def run_suite(self, name: str) -> List[VerificationReport]:
        """
        Run one suite ('all' runs every suite) and return its reports in canonical order
        """
        name = name.replace('-', '_')
        suites: Dict[str, Callable] = {
            'ode': self.run_ode_suite,
            'commutator': self.run_commutator_suite,
            'eigen': self.run_eigen_suite,
            'discrete': self.run_discrete_suite,
            'finite_rank': self.run_finite_rank_suite,
            'compact': self.run_compact_suite,
            'transform': self.run_transform_suite,
        }
        if name == 'all':
            selected = list(SUITES)
        elif name in suites:
            selected = [name]
        else:
            raise ValueError(f"Unknown suite '{name}'")
        start = len(self.reports)
        for suite in selected:
            suites[suite]()
        reports = sort_reports(self.reports[start:])
        failed = sum(1 for r in reports if not r.passed)
        logger.info(f"Suite {name} finished: {len(reports)} reports, {failed} failed")
        return reports


def run_suite(suite: str, config: Optional[Config] = None, case: Optional[str] = None) -> List[VerificationReport]:
    return HankelVerifier(config, case).run_suite(suite)


if __name__ == "__main__":
    verifier = HankelVerifier(load_config())
    results = verifier.run_suite('all')
    print(f"\n{sum(r.passed for r in results)}/{len(results)} checks passed")
