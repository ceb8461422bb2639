"""Exact Hardy and Dedekind sums, theta multiplier systems, and
equidistribution sweeps over parity-restricted Farey fractions.

Hot loops run through a compiled extension when it was built at install
time; a numpy fallback is selected automatically otherwise (see
`hardysums.kernels.BACKEND`).
"""
from .arith import (
    SieveTables,
    ThetaFraction,
    build_sieves,
    enumerate_fractions,
    mobius,
    phi_theta,
    phi_theta_count,
    totient,
)
from .equidist import (
    DistTable,
    WeylSeries,
    character_sum,
    distribution_table,
    lambda_split,
    ramanujan_direct,
    ramanujan_von_sterneck,
    uniformity_stats,
    weyl_sum,
)
from .errors import DomainError, ResourceBudgetError
from .kernels import BACKEND
from .modular import (
    GroupElement,
    cocycle_check,
    nu_r,
    random_group_element,
    theta,
    theta4,
    verify_theta_transform,
)
from .spectral import (
    EisensteinParams,
    EisensteinValue,
    PerronCheck,
    SpectralPoint,
    eisenstein_direct,
    eisenstein_fourier,
    gamma_complex,
    perron_partial,
    whittaker_W,
    z_partial,
)
from .sums import HardyRecord, batch_row, dedekind_sum, hardy_S, hardy_S4

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DistTable",
    "DomainError",
    "EisensteinParams",
    "EisensteinValue",
    "GroupElement",
    "HardyRecord",
    "PerronCheck",
    "ResourceBudgetError",
    "SieveTables",
    "SpectralPoint",
    "ThetaFraction",
    "WeylSeries",
    "batch_row",
    "build_sieves",
    "character_sum",
    "cocycle_check",
    "dedekind_sum",
    "distribution_table",
    "eisenstein_direct",
    "eisenstein_fourier",
    "enumerate_fractions",
    "gamma_complex",
    "hardy_S",
    "hardy_S4",
    "lambda_split",
    "mobius",
    "nu_r",
    "perron_partial",
    "phi_theta",
    "phi_theta_count",
    "ramanujan_direct",
    "ramanujan_von_sterneck",
    "random_group_element",
    "theta",
    "theta4",
    "totient",
    "uniformity_stats",
    "verify_theta_transform",
    "weyl_sum",
    "whittaker_W",
    "z_partial",
]
