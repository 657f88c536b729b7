"""Band-limited majorants and minorants with prescribed zeros in the upper half-plane."""
from . import _backend
from .errors import (
    BracketError,
    BSVError,
    DependentKernels,
    DomainError,
    ModeArity,
    NotUpperHalfPlane,
    PoleError,
    QuadratureError,
    ThresholdViolated,
    ZeroArgument,
)
from .numerics import QuadratureResult, csinc, find_root, integrate_line, spectrum_probe, trigamma
from .paley_wiener import (
    PWExtremal,
    PWKernel,
    SpectrumForm,
    build_extremal,
    eval_F,
    eval_U,
    kappa_value,
    kernel_eval,
    transform_closed_form,
    verify_bandlimited,
)
from .rkhs_core import TwoPointProblem, TwoPointSolution, solve_two_point, verify_two_point
from .selberg import SelbergPair, beurling_B, build_selberg, lipschitz_zero_bound, zero_scan
from .trig_circle import TrigExtremal, build_trig_extremal, circle_kernel, eval_trig_F
from .vanishing import (
    VanishingMajorant,
    VanishingMinorant,
    build_majorant,
    build_minorant,
    minorant_threshold_ok,
    multipoint_integral_bound,
    rho_scan,
    rho_upper_value,
    threshold_root,
)

BACKEND = _backend.NAME
__version__ = "0.1.0"
