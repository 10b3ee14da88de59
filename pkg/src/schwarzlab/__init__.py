"""Pre-Schwarzian and Schwarzian derivatives, hyperbolic sup-norms, and
sharp-bound verification for Robertson-class maps of the unit disk."""

from .errors import OutsideDisk, SchwarzlabError
from .power_series import DEFAULT_ORDER, NonvanishingInner, TaylorSeries, ZeroConstantTerm
from .grids import GridConfig
from .disk_functions import (
    BadParameter,
    Blaschke2,
    BlaschkeFix0,
    CertReport,
    DiskFunction,
    MobiusFunction,
    Rotation,
    SchwarzFunction,
    SeriesFunction,
    identity_map,
    schwarz_certify,
)
from .robertson import (
    ConditionViolation,
    DieudonneReport,
    RobertsonFunction,
    SpiralAlpha,
    VanishingDerivative,
    ZeroPoint,
    delta,
    dieudonne_report,
    extremal_b,
    extremal_f0,
    extremal_fz0p,
    extremal_fz0p_aligned,
    extremal_p,
    extremal_value,
    g_profile,
    h_poly,
    membership_min,
    pointwise_bound,
    pre_schwarzian,
    pre_schwarzian_norm_bound,
    pre_schwarzian_via_omega,
    robertson_from_omega,
    s0,
    schwarzian,
    schwarzian_norm_bound,
    schwarzian_via_omega,
)
from .norm_estimator import EvaluationFailure, NormResult, norm_pre_schwarzian, norm_schwarzian, weighted_sup

__version__ = "0.1.0"

__all__ = [
    "BadParameter",
    "Blaschke2",
    "BlaschkeFix0",
    "CertReport",
    "ConditionViolation",
    "DEFAULT_ORDER",
    "DieudonneReport",
    "DiskFunction",
    "EvaluationFailure",
    "GridConfig",
    "MobiusFunction",
    "NonvanishingInner",
    "NormResult",
    "OutsideDisk",
    "RobertsonFunction",
    "Rotation",
    "SchwarzFunction",
    "SchwarzlabError",
    "SeriesFunction",
    "SpiralAlpha",
    "TaylorSeries",
    "VanishingDerivative",
    "ZeroConstantTerm",
    "ZeroPoint",
    "delta",
    "dieudonne_report",
    "extremal_b",
    "extremal_f0",
    "extremal_fz0p",
    "extremal_fz0p_aligned",
    "extremal_p",
    "extremal_value",
    "g_profile",
    "h_poly",
    "identity_map",
    "membership_min",
    "norm_pre_schwarzian",
    "norm_schwarzian",
    "pointwise_bound",
    "pre_schwarzian",
    "pre_schwarzian_norm_bound",
    "pre_schwarzian_via_omega",
    "robertson_from_omega",
    "s0",
    "schwarz_certify",
    "schwarzian",
    "schwarzian_norm_bound",
    "schwarzian_via_omega",
    "weighted_sup",
]
