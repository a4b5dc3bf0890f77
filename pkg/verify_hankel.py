#!/usr/bin/env python3
"""
Command-line driver for the Hankel operator verification suites.

Usage:
  python verify_hankel.py verify <suite> [--case NAME] [--beta B ...] [--l L ...] [--k K ...]
                                         [--config PATH] [--out PATH] [--format json|csv|xlsx]
                                         [--plot-data PATH]

Suites: ode, commutator, eigen, discrete, finite-rank, compact, transform, all.
Exit codes: 0 every report passes, 1 some report fails, 2 usage or configuration error.
"""

import argparse
import logging
import sys
from dataclasses import replace
from typing import List, Optional

from config import Config, load_config, log_level
from errors import ConfigError
from reports import emit_plot_data, emit_report
from verifier import SUITES, HankelVerifier

# Configure logging
logging.basicConfig(
    level=log_level(),
    format='%(asctime)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

SUITE_CHOICES = [s.replace('_', '-') for s in SUITES] + ['finite_rank', 'all']


class UsageError(Exception):
    """Raised by the parser instead of exiting, so main() owns the exit code"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='verify_hankel', description='Verify the commutator method for Hankel operators')
    commands = parser.add_subparsers(dest='command')
    verify = commands.add_parser('verify', help='run a verification suite')
    verify.add_argument('suite', choices=SUITE_CHOICES)
    verify.add_argument('--case', help="restrict to one case, e.g. 'mehler' or 'whittaker(0.5)'")
    verify.add_argument('--beta', type=float, nargs='+', help='Whittaker indices to use')
    verify.add_argument('--l', type=int, nargs='+', help='finite-rank kernel ranks to use')
    verify.add_argument('--k', type=float, nargs='+', help='quasimomenta to use')
    verify.add_argument('--config', help='JSON configuration file')
    verify.add_argument('--out', help='report path')
    verify.add_argument('--format', choices=['json', 'csv', 'xlsx'], help='report format')
    verify.add_argument('--plot-data', dest='plot_data', help='CSV path for continuum identity samples')
    return parser


def apply_overrides(config: Config, args) -> Config:
    """
    Fold command-line flags into the configuration

    Args:
        config: loaded configuration
        args: parsed arguments of the verify command
    """
    if args.beta:
        discrete = [b for b in args.beta if b < -0.5]
        continuous = [b for b in args.beta if b >= -0.5]
        config = replace(config, whittaker_betas=continuous, discrete_betas=discrete,
                         regular_betas=continuous)
    if args.l:
        if any(l < 1 for l in args.l):
            raise ConfigError("--l values must be at least 1")
        config = replace(config, finite_rank_l=list(args.l))
    if args.k:
        if any(k <= 0 for k in args.k):
            raise ConfigError("--k values must be positive")
        ks = list(args.k)
        config = replace(config, k_grid=ks, normalization_k=ks, carleman_k=ks, subspace_k=ks)
    output = config.output
    if args.out:
        output = replace(output, out=args.out)
    if args.format:
        output = replace(output, format=args.format)
    if args.plot_data:
        output = replace(output, plot_data=args.plot_data)
    return replace(config, output=output).validate()


def main(argv: Optional[List[str]] = None) -> int:
    """Main function for the verification CLI"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command != 'verify':
            raise UsageError("expected the 'verify' command")
        config = apply_overrides(load_config(args.config), args)
    except UsageError as e:
        print(f"❌ Usage error: {e}")
        parser.print_usage()
        return 2
    except ConfigError as e:
        print(f"❌ Configuration error: {e}")
        return 2

    print(f"\n=== Hankel Operator Verification: {args.suite} ===\n")
    verifier = HankelVerifier(config, case=args.case)
    reports = verifier.run_suite(args.suite)

    try:
        emit_report(reports, config.output.format, config.output.out)
        if config.output.plot_data:
            emit_plot_data(verifier.plot_rows, config.output.plot_data)
    except OSError as e:
        print(f"❌ Could not write output: {e}")
        return 2

    failed = [r for r in reports if not r.passed]
    for report in failed:
        print(f"   ✗ {report.case_id} {report.check_id} {report.params}")
    if failed:
        print(f"\n❌ {len(failed)} of {len(reports)} checks failed")
        print(f"📄 Report: {config.output.out}")
        return 1
    print(f"\n✅ All {len(reports)} checks passed")
    print(f"📄 Report: {config.output.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
