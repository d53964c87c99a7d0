"""The crossover threshold t(s), exact constants, and range predicates.

t(s) = (17 - 18s + sqrt(1284 s^2 - 852 s + 49)) / 20 is the positive root
of 10 t^2 + (18s - 17) t - 24 s^2 + 6s + 6 = 0 and marks where the sizes
of the two candidate families cross for m = 3: the difference
|P| - |Pprime| equals ((ell-1)/3) * (24 s^2 - 6s - 6 - (18s-17) ell -
10 ell^2), so Pprime is strictly larger exactly when ell > t(s) (and
ell >= 2; at ell = 1 both families coincide).

Every predicate here is decided in exact integer or surd arithmetic.  The
m-th root beta_m is never materialized: its defining inequalities are
raised to the m-th power first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .constructions import Params, size_P, size_Pprime
from .errors import BadParameter, InvariantViolation
from .exactnum import QuadSurd

Dominance = Literal["P", "Pprime", "tie"]


def t_of_s(s: int) -> QuadSurd:
    """The crossover threshold as an exact surd; asserts its root identity."""
    if s < 2:
        raise BadParameter("t(s) requires s >= 2")
    disc = 1284 * s * s - 852 * s + 49
    t = QuadSurd(17 - 18 * s, 1, disc, 20)
    residue = (
        QuadSurd.from_rational(10) * t * t
        + (18 * s - 17) * t
        + (-24 * s * s + 6 * s + 6)
    )
    if not residue.is_zero:
        raise InvariantViolation("t(s) fails its defining quadratic")
    return t


def compare_ell_to_t(s: int, ell: int) -> int:
    """Exact sign of ell - t(s), via the defining quadratic.

    The quadratic 10x^2 + (18s-17)x - 24s^2 + 6s + 6 opens upward and its
    second root is negative for s >= 2, so for ell >= 1 the sign of the
    quadratic at ell equals the sign of ell - t(s).  Pure integer
    arithmetic, so it works for s far beyond what surd canonicalization
    (square-free splitting of the discriminant) can certify.
    """
    if s < 2 or ell < 1:
        raise BadParameter("requires s >= 2 and ell >= 1")
    value = 10 * ell * ell + (18 * s - 17) * ell - 24 * s * s + 6 * s + 6
    return (value > 0) - (value < 0)


@dataclass(frozen=True)
class Constants:
    """The explicit constants for one m, all exact.

    beta itself is an m-th root, so it is stored as its m-th power (an
    integer); eta, delta, kappa are rationals.  kappa is the residual
    blocker constant for (m+1)-uniform families.
    """

    m: int
    eta: Fraction
    delta: Fraction
    kappa: Fraction
    beta_pow_m: int


def eta_k(k: int) -> Fraction:
    """1 / (2 k^(2k+1))."""
    if k < 3:
        raise BadParameter("eta_k requires k >= 3")
    return Fraction(1, 2 * k ** (2 * k + 1))


def kappa_k(k: int) -> Fraction:
    """1 / (2 k! (4 k^(2k+1) + 1)^(k-1))."""
    if k < 3:
        raise BadParameter("kappa_k requires k >= 3")
    return Fraction(1, 2 * math.factorial(k) * (4 * k ** (2 * k + 1) + 1) ** (k - 1))


def constants(m: int) -> Constants:
    if m < 3:
        raise BadParameter("constants require m >= 3")
    eta = eta_k(m)
    delta = eta / (m + 1 + 2 * eta)
    closed_form = Fraction(1, 2 * (m + 1) * m ** (2 * m + 1) + 2)
    if delta != closed_form:
        raise InvariantViolation("the two closed forms of delta_m disagree")
    kappa = kappa_k(m + 1)
    beta_pow_m = (
        8 * m * m * (m + 1) ** m * (4 * (m + 1) ** (2 * m + 3) + 1) ** m
    )
    return Constants(m=m, eta=eta, delta=delta, kappa=kappa, beta_pow_m=beta_pow_m)


def in_main_range(m: int, s: int, c: int) -> bool:
    """True iff beta_m s^((m-1)/m) <= c <= delta_m s, decided exactly.

    The left inequality is raised to the m-th power (both sides are
    non-negative); the right uses delta_m = 1 / (2(m+1)m^(2m+1) + 2).
    """
    if m < 3 or s < 2 or c < 0:
        raise BadParameter("requires m >= 3, s >= 2, c >= 0")
    cst = constants(m)
    lower_ok = c**m >= cst.beta_pow_m * s ** (m - 1)
    upper_ok = c * (2 * (m + 1) * m ** (2 * m + 1) + 2) <= s
    return lower_ok and upper_ok


def in_m3_range(s: int, ell: int) -> bool:
    """True iff t(s) < ell < s - (159/100) s^(2/3), decided exactly.

    The upper bound is cubed: ell < s - (159/100) s^(2/3) iff
    10^6 (s - ell)^3 > 159^3 s^2.
    """
    if s < 2 or not 1 <= ell <= s:
        raise BadParameter("requires s >= 2 and 1 <= ell <= s")
    if compare_ell_to_t(s, ell) <= 0:
        return False
    c = s - ell
    return 10**6 * c**3 > 159**3 * s * s


def dominance(s: int, ell: int) -> Dominance:
    """Which of the two families is larger at (m=3, s, ell), exactly."""
    if s < 2 or not 1 <= ell <= s:
        raise BadParameter("requires s >= 2 and 1 <= ell <= s")
    params = Params.from_msl(3, s, ell)
    p, pp = size_P(params), size_Pprime(params)
    if p > pp:
        return "P"
    if pp > p:
        return "Pprime"
    return "tie"
