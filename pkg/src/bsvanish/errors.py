"""Exception hierarchy.

Every error raised for invalid mathematical input derives from
:class:`DomainError`; the command line maps those to exit code 3.
"""


class BSVError(Exception):
    """Base class for all package errors."""


class DomainError(BSVError, ValueError):
    """Input outside the domain where a construction is defined."""


class NotUpperHalfPlane(DomainError):
    """A prescribed point does not have positive imaginary part."""


class DependentKernels(DomainError):
    """The two reproducing kernels are (numerically) linearly dependent."""


class ThresholdViolated(DomainError):
    """The multiplicative minorant would not stay below the indicator."""


class ModeArity(DomainError):
    """Wrong number of points for the requested construction mode."""


class PoleError(DomainError):
    """Evaluation requested at a pole."""


class BracketError(DomainError):
    """Root-finding interval does not bracket a sign change."""


class ZeroArgument(DomainError):
    """Circle evaluation requested at z = 0."""


class QuadratureError(BSVError, RuntimeError):
    """Adaptive quadrature exhausted its panel budget."""
