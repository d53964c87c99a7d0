"""Exact numeric substrate: big integers, rationals, and quadratic surds.

Integers are plain Python ``int`` (arbitrary precision) and rationals are
``fractions.Fraction``; both already satisfy the exactness contract, so this
module only adds the quadratic-surd type ``QuadSurd`` representing
``(p + q*sqrt(d)) / r`` with integer components, plus decimal parsing and
printing helpers.

All values are immutable and all operations are pure functions, so every
type here is safe to share between threads without synchronization.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import BadParameter, IncompatibleRadicand

# Aliases making the intended exact types explicit at call sites.
BigInt = int
BigRat = Fraction

# Trial-factorization bound for square-free reduction of radicands.  Every
# radicand this package produces is either tiny or a perfect square; inputs
# whose square part has a prime factor beyond this bound are rejected as
# out of scope rather than silently mishandled.
SQUAREFREE_TRIAL_BOUND = 10**6

RationalLike = Union[int, Fraction]


def parse_bigint(text: str) -> int:
    """Parse a decimal integer string (underscores not accepted)."""
    text = text.strip()
    if not text or not (text.lstrip("+-").isdigit()):
        raise BadParameter(f"not a decimal integer: {text!r}")
    return int(text)


def parse_bigrat(text: str) -> Fraction:
    """Parse 'a' or 'a/b' with decimal integer components."""
    text = text.strip()
    if "/" in text:
        num_s, _, den_s = text.partition("/")
        num, den = parse_bigint(num_s), parse_bigint(den_s)
        if den == 0:
            raise BadParameter("zero denominator")
        return Fraction(num, den)
    return Fraction(parse_bigint(text))


def format_bigrat(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def square_free_split(d: int) -> tuple[int, int]:
    """Split d >= 0 as s**2 * d0 with d0 square-free; return (s, d0).

    Uses trial division up to SQUAREFREE_TRIAL_BOUND and then a perfect
    square test on the cofactor.  A cofactor that still hides a square of a
    prime above the bound cannot be certified; such inputs are rejected.
    """
    if d < 0:
        raise BadParameter("radicand must be non-negative")
    if d in (0, 1):
        return 1, d
    s, rest = 1, d
    p = 2
    while p * p <= rest and p <= SQUAREFREE_TRIAL_BOUND:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            # p**(e % 2) stays under the radical; d // (s*s) recovers it.
            s *= p ** (e // 2)
        p += 1 if p == 2 else 2
    # Reassemble the square-free part found so far.
    d0 = d // (s * s)
    root = math.isqrt(d0)
    if root * root == d0:
        return s * root, 1
    if d0 > SQUAREFREE_TRIAL_BOUND**2:
        # d0 could still be p**2 * q with p above the trial bound; isqrt
        # ruled out a plain square only.  p**2 > 10**12 forces d0 > 10**12.
        raise BadParameter(
            f"cannot certify square-free part of radicand {d} "
            f"(cofactor {d0} exceeds the factorization bound)"
        )
    return s, d0


class QuadSurd:
    """Exact number (p + q*sqrt(d)) / r over the integers.

    Canonical form: r > 0, d square-free, gcd(p, q, r) == 1, and a rational
    value is stored with q == 0 and d == 0.  Arithmetic stays inside a
    single quadratic field: combining surds over distinct radicands raises
    IncompatibleRadicand (a rational operand is compatible with anything).
    """

    __slots__ = ("p", "q", "d", "r")

    def __init__(self, p: int, q: int = 0, d: int = 0, r: int = 1) -> None:
        if r == 0:
            raise BadParameter("zero denominator")
        if d < 0:
            raise BadParameter("negative radicand")
        if r < 0:
            p, q, r = -p, -q, -r
        if q != 0 and d > 1:
            s, d0 = square_free_split(d)
            q *= s
            d = d0
        if d <= 1 or q == 0:
            # sqrt(0) = 0 and sqrt(1) = 1 both collapse to a rational.
            if d == 1:
                p += q
            q, d = 0, 0
        g = math.gcd(math.gcd(abs(p), abs(q)), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "r", r)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QuadSurd is immutable")

    @classmethod
    def from_rational(cls, value: RationalLike) -> "QuadSurd":
        f = Fraction(value)
        return cls(f.numerator, 0, 0, f.denominator)

    @classmethod
    def sqrt_of(cls, d: int) -> "QuadSurd":
        return cls(0, 1, d, 1)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    @property
    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise BadParameter(f"{self} is irrational")
        return Fraction(self.p, self.r)

    def _coerce(self, other: object) -> "QuadSurd":
        if isinstance(other, QuadSurd):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadSurd.from_rational(other)
        raise TypeError(f"cannot combine QuadSurd with {type(other).__name__}")

    def _common_radicand(self, other: "QuadSurd") -> int:
        if self.q == 0:
            return other.d
        if other.q == 0:
            return self.d
        if self.d != other.d:
            raise IncompatibleRadicand(
                f"distinct radicands: sqrt({self.d}) vs sqrt({other.d})"
            )
        return self.d

    def __add__(self, other: object) -> "QuadSurd":
        o = self._coerce(other)
        d = self._common_radicand(o)
        p = self.p * o.r + o.p * self.r
        q = self.q * o.r + o.q * self.r
        return QuadSurd(p, q, d, self.r * o.r)

    __radd__ = __add__

    def __neg__(self) -> "QuadSurd":
        return QuadSurd(-self.p, -self.q, self.d, self.r)

    def __sub__(self, other: object) -> "QuadSurd":
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "QuadSurd":
        return self._coerce(other) - self

    def __mul__(self, other: object) -> "QuadSurd":
        o = self._coerce(other)
        d = self._common_radicand(o)
        p = self.p * o.p + self.q * o.q * d
        q = self.p * o.q + self.q * o.p
        return QuadSurd(p, q, d, self.r * o.r)

    __rmul__ = __mul__

    def inverse(self) -> "QuadSurd":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero surd")
        # 1 / ((p + q sqrt(d)) / r) = r (p - q sqrt(d)) / (p^2 - q^2 d)
        norm = self.p * self.p - self.q * self.q * self.d
        if norm == 0:
            raise ZeroDivisionError("zero field norm")
        if norm < 0:
            return QuadSurd(-self.r * self.p, self.r * self.q, self.d, -norm)
        return QuadSurd(self.r * self.p, -self.r * self.q, self.d, norm)

    def __truediv__(self, other: object) -> "QuadSurd":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: object) -> "QuadSurd":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "QuadSurd":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadSurd(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sign(self) -> int:
        """Exact sign of the value: -1, 0, or +1."""
        p, q, d = self.p, self.q, self.d
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return (q > 0) - (q < 0)
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # Opposite signs: the side with larger square dominates.  Squaring
        # is valid because both p and q*sqrt(d) are nonzero here.
        rational_sq, surd_sq = p * p, q * q * d
        if rational_sq == surd_sq:
            return 0
        if rational_sq > surd_sq:
            return 1 if p > 0 else -1
        return 1 if q > 0 else -1

    def cmp(self, other: object) -> int:
        return (self - self._coerce(other)).sign()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (QuadSurd, int, Fraction)):
            return NotImplemented
        return self.cmp(other) == 0

    def __lt__(self, other: object) -> bool:
        return self.cmp(other) < 0

    def __le__(self, other: object) -> bool:
        return self.cmp(other) <= 0

    def __gt__(self, other: object) -> bool:
        return self.cmp(other) > 0

    def __ge__(self, other: object) -> bool:
        return self.cmp(other) >= 0

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.d, self.r))

    def floor(self) -> int:
        """Exact floor, via integer square roots and sign-checked adjustment."""
        if self.is_rational:
            return self.p // self.r
        # q*sqrt(d) lies in [z, z+1) for q > 0 and (-z-1, -z] for q < 0,
        # where z = isqrt(q^2 d); that brackets the floor within one unit.
        z = math.isqrt(self.q * self.q * self.d)
        num_lo = self.p + (z if self.q > 0 else -z - 1)
        k = num_lo // self.r
        while self.cmp(k + 1) >= 0:
            k += 1
        while self.cmp(k) < 0:
            k -= 1
        return k

    def approx_str(self, digits: int = 15) -> str:
        """Decimal rendering with `digits` fractional digits (rounded down).

        Diagnostic only; every verdict in this package is exact.
        """
        scale = 10 ** (digits + 5)
        approx_sqrt = math.isqrt(self.d * scale * scale) if self.d else 0
        num = self.p * scale + self.q * approx_sqrt
        f = Fraction(num, self.r * scale)
        sign = "-" if f < 0 else ""
        f = abs(f)
        whole, rem = divmod(f.numerator, f.denominator)
        frac_digits = (rem * 10**digits) // f.denominator
        return f"{sign}{whole}.{frac_digits:0{digits}d}"

    def __str__(self) -> str:
        if self.is_rational:
            return format_bigrat(Fraction(self.p, self.r))
        return f"({self.p} + {self.q}*sqrt({self.d}))/{self.r}"

    def __repr__(self) -> str:
        return f"QuadSurd(p={self.p}, q={self.q}, d={self.d}, r={self.r})"


def surd_add(a: QuadSurd, b: QuadSurd) -> QuadSurd:
    """Exact sum inside one quadratic field."""
    return a + b


def surd_mul(a: QuadSurd, b: QuadSurd) -> QuadSurd:
    """Exact product inside one quadratic field."""
    return a * b


def surd_cmp(a: QuadSurd, b: object) -> int:
    """Total order: -1, 0, or +1 according to the exact sign of a - b."""
    return a.cmp(b)
