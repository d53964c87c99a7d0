"""Exact-arithmetic toolkit for extremal set families with bounded matching
number: constructions and their closed-form sizes, exact matching/cover
solvers, desk-scale brute-force oracles, a constructive decomposition of
complete uniform hypergraphs into perfect matchings, and a verifier that
certifies the explicit formulas, constants, and inequalities the analysis
uses, with zero floating-point error."""

from .combinatorics import binom, binom_geq, certify_identity, h3, parse_poly
from .constructions import Params, build_P, build_Pprime, size_P, size_Pprime
from .errors import (
    BadParameter,
    BudgetExceeded,
    CapacityExceeded,
    EkpError,
    IncompatibleRadicand,
    InvariantViolation,
    UnsupportedExpression,
)
from .exactnum import BigInt, BigRat, QuadSurd, surd_add, surd_cmp, surd_mul
from .families import (
    GroundSet,
    SetFamily,
    is_up_set,
    layer,
    minimal_elements,
    missing_layer,
    normalize_remove_empty,
    up_closure,
)
from .baranyai import (
    Decomposition,
    blocker_bound_check,
    decompose,
    residual_blocker_eval,
    verify_decomposition,
)
from .oracles import OracleResult, e_ns, e_uniform
from .report import CheckReport
from .solver import CoverWitness, MatchingWitness, has_s_matching, nu, tau
from .thresholds import (
    Constants,
    compare_ell_to_t,
    constants,
    dominance,
    in_m3_range,
    in_main_range,
    t_of_s,
)
from .verifier import (
    M3Quantities,
    badness_profile,
    check_A3_gt_Lambda3,
    check_TL_table,
    check_appendixA,
    check_appendixB,
    check_case3_bounds,
    check_gap,
    check_window,
    fk_sum_bound,
    quantities_m3,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
