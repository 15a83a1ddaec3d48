"""Exact p-adic arithmetic, q-Volkenborn integrals and a weighted q-maximal operator."""

from .analytic import QParameter, geometric_sum, pexp, plog, ppow, proot, qbracket
from .functions import (
    BallIndicator,
    Dilate,
    Evaluator,
    ExpWeight,
    NormBound,
    Polynomial,
    Product,
    Scale,
    Sum,
    UDFunction,
    constant,
    difference_quotient,
    evaluate,
    lipschitz_norm,
    supnorm,
)
from .integral import (
    Ball,
    IntegralResult,
    WeightedMeasureValue,
    ball_measure,
    integrate,
    invariance_residual,
    riemann_sum,
    thm1_closed_form,
    thm1_direct_sum,
    thm1_lhs,
    thm1_rhs,
    weighted_measure,
)
from .maximal import (
    BoundReport,
    DegenerateDenominator,
    MaximalResult,
    check_bound,
    level_value,
    level_value_thm2,
    maximal_operator,
    weight_l1_norm,
)
from .padic import (
    DivisionByZero,
    DomainError,
    PadicError,
    PadicNumber,
    PrecisionContext,
    PrecisionExhausted,
    from_rational,
    pnorm,
    residual_exponent,
)
from .ring import jit_enabled, make_ring
from .verify import SUITES, VerificationReport, run_suite

__version__ = "0.1.0"
