#!/usr/bin/env python3
"""
Configuration for the verification suites.

Defaults are compiled in. A JSON file may override any subset of fields; its path comes
from the --config flag or, failing that, from the HANKEL_VERIFY_CONFIG environment
variable (a .env file in the working directory is honoured).
"""

import json
import logging
import os
from dataclasses import asdict, dataclass, field, fields, replace
from typing import Dict, List, Optional

from dotenv import load_dotenv

from errors import ConfigError
from quad import QuadOpts

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = 'HANKEL_VERIFY_CONFIG'
LOG_LEVEL_ENV_VAR = 'HANKEL_VERIFY_LOG_LEVEL'

DEFAULT_TOLERANCES = {
    'ode_analytic': 1e-6,
    'ode_numeric': 1e-4,
    'ode_cross_check': 1e-8,
    'commutator': 1e-6,
    'commutator_special': 1e-5,
    'negative_control': 1e-2,
    'eigen_elementary': 1e-8,
    'eigen_special': 1e-6,
    'eigenfunction_L': 1e-6,
    'carleman_closed_form': 1e-10,
    'normalization': 1e-10,
    'decay': 1e-6,
    'discrete': 1e-8,
    'orthogonality': 1e-8,
    'continuum_orthogonality': 1e-4,
    'finite_rank': 1e-8,
    'kernel_subspace': 1e-8,
    'rank_threshold': 1e-6,
    'nystrom_outlier': 1e-2,
    'sl_eigenvalue': 1e-6,
    'richardson_order': 0.2,
    'compact': 1e-3,
    'transform': 1e-3,
    'parseval': 1e-3,
    'containment': 1e-3,
    'truncation': 1e-8,
    'tail_rate': 0.02,
    'left_boundary': 1e-3,
    'eigenvector': 1e-4,
    'nystrom_refinement': 1e-10,
    'count': 0.5,
}


@dataclass
class QuadSettings:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_subdivisions: int = 2000

    def to_opts(self, **overrides) -> QuadOpts:
        """Build QuadOpts from these settings, applying per-call overrides"""
        return QuadOpts(rel_tol=self.rel_tol, abs_tol=self.abs_tol,
                        max_subdivisions=self.max_subdivisions).with_(**overrides)


@dataclass
class SolverSettings:
    n_points: int = 4000
    n_eigs: int = 5
    levels: int = 3


@dataclass
class NystromSettings:
    node_counts: List[int] = field(default_factory=lambda: [100, 200, 400])
    finite_rank_nodes: int = 200
    compact_nodes: int = 200


@dataclass
class OutputSettings:
    out: str = 'verification_report.json'
    format: str = 'json'
    plot_data: Optional[str] = None


@dataclass
class Config:
    """
    Settings consumed by HankelVerifier

    Args:
        tolerances: tolerance per check family
        k_grid: quasimomenta for continuum identities
        x_grid: evaluation points for pointwise identities (0 added for kernels regular at 0)
        normalization_k: quasimomenta for the normalization identities
        carleman_k: quasimomenta for the Carleman closed form
        whittaker_betas: Whittaker kernel indices for the eigen suite
        discrete_betas: indices with point spectrum
        regular_betas: indices of the compact regular_whittaker kernels
        finite_rank_l: ranks for the finite-rank suite
        subspace_k: quasimomenta for the finite-rank kernel-subspace check
        parseval_points: Gauss-Legendre nodes for the Parseval k integral
        record_runtime: store wall-clock runtimes in reports (breaks byte-identical output)
    """
    tolerances: Dict[str, float] = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    k_grid: List[float] = field(default_factory=lambda: [0.25, 0.5, 1.0, 2.0])
    x_grid: List[float] = field(default_factory=lambda: [0.1, 0.5, 1.0, 5.0, 20.0])
    normalization_k: List[float] = field(default_factory=lambda: [0.1, 0.5, 1.0, 2.0])
    carleman_k: List[float] = field(default_factory=lambda: [0.25, 0.5, 1.0, 2.0, 4.0])
    whittaker_betas: List[float] = field(default_factory=lambda: [0.0, 0.5, 1.0])
    discrete_betas: List[float] = field(default_factory=lambda: [-1.5, -2.3])
    regular_betas: List[float] = field(default_factory=lambda: [0.0])
    finite_rank_l: List[int] = field(default_factory=lambda: [1, 2, 3])
    subspace_k: List[float] = field(default_factory=lambda: [0.5, 1.0])
    parseval_points: int = 200
    quad: QuadSettings = field(default_factory=QuadSettings)
    solver: SolverSettings = field(default_factory=SolverSettings)
    nystrom: NystromSettings = field(default_factory=NystromSettings)
    output: OutputSettings = field(default_factory=OutputSettings)
    record_runtime: bool = False

    def tolerance(self, family: str) -> float:
        try:
            return self.tolerances[family]
        except KeyError:
            raise ConfigError(f"No tolerance configured for check family '{family}'")

    def validate(self):
        for name, value in self.tolerances.items():
            if not isinstance(value, (int, float)) or value <= 0:
                raise ConfigError(f"Tolerance '{name}' must be positive, got {value!r}")
        if self.quad.rel_tol <= 0 or self.quad.abs_tol <= 0:
            raise ConfigError("Quadrature tolerances must be positive")
        if self.solver.n_points < 200:
            raise ConfigError("solver.n_points must be at least 200")
        betas = [*self.whittaker_betas, *self.discrete_betas, *self.regular_betas]
        integral = [b for b in betas if b < 0 and float(b).is_integer()]
        if integral:
            raise ConfigError(f"beta at a negative integer {integral} is a finite-rank kernel; use finite_rank_l")
        if any(b >= -0.5 for b in self.discrete_betas):
            raise ConfigError("discrete_betas must be below -1/2")
        if self.parseval_points < 10:
            raise ConfigError("parseval_points must be at least 10")
        if self.output.format not in ('json', 'csv', 'xlsx'):
            raise ConfigError(f"Unknown output format '{self.output.format}'")
        return self

    def to_dict(self) -> dict:
        return asdict(self)


_SECTIONS = {'quad': QuadSettings, 'solver': SolverSettings,
             'nystrom': NystromSettings, 'output': OutputSettings}


def config_from_dict(data: dict, base: Optional[Config] = None) -> Config:
    """Overlay a (possibly partial) mapping onto base or the defaults"""
    if not isinstance(data, dict):
        raise ConfigError("Configuration root must be a JSON object")
    config = base or Config()
    known = {f.name for f in fields(Config)}
    updates = {}
    for key, value in data.items():
        if key not in known:
            raise ConfigError(f"Unknown configuration key '{key}'")
        if key in _SECTIONS:
            section_cls = _SECTIONS[key]
            section_known = {f.name for f in fields(section_cls)}
            if not isinstance(value, dict):
                raise ConfigError(f"Section '{key}' must be an object")
            unknown = set(value) - section_known
            if unknown:
                raise ConfigError(f"Unknown keys in section '{key}': {sorted(unknown)}")
            updates[key] = replace(getattr(config, key), **value)
        elif key == 'tolerances':
            if not isinstance(value, dict):
                raise ConfigError("'tolerances' must be an object")
            merged = dict(config.tolerances)
            merged.update(value)
            updates[key] = merged
        else:
            updates[key] = value
    return replace(config, **updates).validate()


def load_config(path: Optional[str] = None) -> Config:
    """
    Load configuration with precedence: explicit path, environment variable, defaults

    Args:
        path: JSON config path from the command line (optional)
    """
    load_dotenv()
    path = path or os.getenv(CONFIG_ENV_VAR)
    if not path:
        logger.info("Using compiled-in default configuration")
        return Config().validate()

    logger.info(f"Loading configuration from {path}")
    try:
        with open(path, 'r', encoding='utf-8') as handle:
            data = json.load(handle)
    except FileNotFoundError:
        raise ConfigError(f"Config file not found: {path}")
    except json.JSONDecodeError as e:
        raise ConfigError(f"Config file {path} is not valid JSON: {e}")
    return config_from_dict(data)


def log_level() -> int:
    load_dotenv()
    name = os.getenv(LOG_LEVEL_ENV_VAR, 'INFO').upper()
    return getattr(logging, name, logging.INFO)
