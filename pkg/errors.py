#!/usr/bin/env python3
"""
Exception hierarchy shared by the numerical modules and the verification driver
"""


class HankelVerificationError(Exception):
    """Base class for every error raised by the verification library"""


class InvalidParameterError(HankelVerificationError, ValueError):
    """A parameter lies outside the domain an operation supports"""


class GammaPoleError(InvalidParameterError):
    """Gamma function evaluated at a non-positive integer"""


class KernelDomainError(InvalidParameterError):
    """Kernel evaluated outside its domain (e.g. x <= 0 for kernels singular at 0)"""


class AccuracyNotReachedError(HankelVerificationError):
    """A special-function evaluation could not meet its accuracy target"""


class QuadratureError(HankelVerificationError):
    """Adaptive quadrature failed to converge or met a non-finite integrand value"""


class InversionError(HankelVerificationError):
    """Numerical inversion of the Liouville map did not converge"""


class DerivativeInconsistencyError(HankelVerificationError):
    """Supplied derivatives of a SmoothFn disagree with finite differences of its value"""


class TruncationDomainTooSmallError(HankelVerificationError):
    """An eigenfunction carries too much mass near an artificial boundary"""


class AsymptoticNormalizationError(HankelVerificationError):
    """The tail fit of a computed eigenfunction did not stabilize"""


class EigensolverError(HankelVerificationError):
    """Dense or tridiagonal eigensolver failure"""


class ConfigError(HankelVerificationError):
    """Malformed or invalid configuration"""
