"""Binomial machinery and an evaluation-grid polynomial-identity certifier.

Two binomial semantics coexist deliberately:

* :func:`binom` is the combinatorial count with the zero convention
  (out-of-range arguments give 0, never an error), which keeps every
  counting formula in the package total.
* Inside :class:`PolyExpr`, a binomial node ``C(x, k)`` is the degree-k
  polynomial ``x (x-1) ... (x-k+1) / k!`` (nonzero for negative x), which
  is the reading under which the certified identities are polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence, Union

from .errors import BadParameter, UnsupportedExpression
from .report import CheckReport


def binom(n: int, k: int) -> int:
    """Binomial coefficient with the zero convention for out-of-range args."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def binom_geq(n: int, k: int) -> int:
    """Number of subsets of an n-set with at least k elements.

    Computed as 2**n minus the lower partial sum when k is small, else by
    direct summation of the upper tail.
    """
    if n < 0:
        raise BadParameter("binom_geq requires n >= 0")
    if k <= 0:
        return 1 << n
    if k > n:
        return 0
    if k <= n // 2:
        return (1 << n) - sum(math.comb(n, i) for i in range(k))
    return sum(math.comb(n, i) for i in range(k, n + 1))


def h3(big_n: int, u: int) -> int:
    """The cover-structure bound C(N,3) - C(N-u,3) + 1 - C(N-u-3,2)."""
    return binom(big_n, 3) - binom(big_n - u, 3) + 1 - binom(big_n - u - 3, 2)


def falling_binom(x: Fraction, k: int) -> Fraction:
    """Polynomial binomial x(x-1)...(x-k+1)/k!, exact over the rationals."""
    if k < 0:
        raise BadParameter("falling_binom requires k >= 0")
    num = Fraction(1)
    for i in range(k):
        num *= x - i
    return num / math.factorial(k)


# ---------------------------------------------------------------------------
# Expression trees


PolyLike = Union["PolyExpr", int, Fraction]


class PolyExpr:
    """Arithmetic expression over named integer variables, evaluated exactly.

    Supported nodes: rational constants, variables, +, -, *, integer powers,
    and binomials C(e, k) with constant k (expanded as falling factorials).
    Division is only a notation for multiplying by a constant reciprocal.
    """

    def _wrap(self, other: PolyLike) -> "PolyExpr":
        if isinstance(other, PolyExpr):
            return other
        if isinstance(other, (int, Fraction)):
            return Const(Fraction(other))
        raise TypeError(f"cannot use {type(other).__name__} in a PolyExpr")

    def __add__(self, other: PolyLike) -> "PolyExpr":
        return Add(self, self._wrap(other))

    def __radd__(self, other: PolyLike) -> "PolyExpr":
        return Add(self._wrap(other), self)

    def __sub__(self, other: PolyLike) -> "PolyExpr":
        return Sub(self, self._wrap(other))

    def __rsub__(self, other: PolyLike) -> "PolyExpr":
        return Sub(self._wrap(other), self)

    def __mul__(self, other: PolyLike) -> "PolyExpr":
        return Mul(self, self._wrap(other))

    def __rmul__(self, other: PolyLike) -> "PolyExpr":
        return Mul(self._wrap(other), self)

    def __pow__(self, k: int) -> "PolyExpr":
        if not isinstance(k, int) or k < 0:
            raise UnsupportedExpression("powers must be non-negative integers")
        return Pow(self, k)

    def __truediv__(self, other: PolyLike) -> "PolyExpr":
        wrapped = self._wrap(other)
        if not isinstance(wrapped, Const):
            raise UnsupportedExpression("division only by a constant")
        if wrapped.value == 0:
            raise ZeroDivisionError("division by zero constant")
        return Mul(self, Const(1 / wrapped.value))

    def __neg__(self) -> "PolyExpr":
        return Sub(Const(Fraction(0)), self)

    # Subclasses implement these three.
    def eval(self, env: Mapping[str, Fraction]) -> Fraction:
        raise NotImplementedError

    def degree(self, var: str) -> int:
        """Upper bound on the degree in `var` (exact for non-cancelling trees)."""
        raise NotImplementedError

    def variables(self) -> frozenset[str]:
        raise NotImplementedError


@dataclass(frozen=True)
class Const(PolyExpr):
    value: Fraction

    def eval(self, env: Mapping[str, Fraction]) -> Fraction:
        return self.value

    def degree(self, var: str) -> int:
        return 0

    def variables(self) -> frozenset[str]:
        return frozenset()

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Var(PolyExpr):
    name: str

    def eval(self, env: Mapping[str, Fraction]) -> Fraction:
        if self.name not in env:
            raise BadParameter(f"unbound variable {self.name!r}")
        return env[self.name]

    def degree(self, var: str) -> int:
        return 1 if var == self.name else 0

    def variables(self) -> frozenset[str]:
        return frozenset({self.name})

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Add(PolyExpr):
    left: PolyExpr
    right: PolyExpr

    def eval(self, env: Mapping[str, Fraction]) -> Fraction:
        return self.left.eval(env) + self.right.eval(env)

    def degree(self, var: str) -> int:
        return max(self.left.degree(var), self.right.degree(var))

    def variables(self) -> frozenset[str]:
        return self.left.variables() | self.right.variables()

    def __str__(self) -> str:
        return f"({self.left} + {self.right})"


@dataclass(frozen=True)
class Sub(PolyExpr):
    left: PolyExpr
    right: PolyExpr

    def eval(self, env: Mapping[str, Fraction]) -> Fraction:
        return self.left.eval(env) - self.right.eval(env)

    def degree(self, var: str) -> int:
        return max(self.left.degree(var), self.right.degree(var))

    def variables(self) -> frozenset[str]:
        return self.left.variables() | self.right.variables()

    def __str__(self) -> str:
        return f"({self.left} - {self.right})"


@dataclass(frozen=True)
class Mul(PolyExpr):
    left: PolyExpr
    right: PolyExpr

    def eval(self, env: Mapping[str, Fraction]) -> Fraction:
        return self.left.eval(env) * self.right.eval(env)

    def degree(self, var: str) -> int:
        return self.left.degree(var) + self.right.degree(var)

    def variables(self) -> frozenset[str]:
        return self.left.variables() | self.right.variables()

    def __str__(self) -> str:
        return f"({self.left} * {self.right})"


@dataclass(frozen=True)
class Pow(PolyExpr):
    base: PolyExpr
    exponent: int

    def eval(self, env: Mapping[str, Fraction]) -> Fraction:
        return self.base.eval(env) ** self.exponent

    def degree(self, var: str) -> int:
        return self.base.degree(var) * self.exponent

    def variables(self) -> frozenset[str]:
        return self.base.variables()

    def __str__(self) -> str:
        return f"{self.base}^{self.exponent}"


@dataclass(frozen=True)
class Binom(PolyExpr):
    """C(arg, k) with constant k, read as the falling-factorial polynomial."""

    arg: PolyExpr
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise UnsupportedExpression("binomial lower index must be >= 0")

    def eval(self, env: Mapping[str, Fraction]) -> Fraction:
        return falling_binom(self.arg.eval(env), self.k)

    def degree(self, var: str) -> int:
        return self.arg.degree(var) * self.k

    def variables(self) -> frozenset[str]:
        return self.arg.variables()

    def __str__(self) -> str:
        return f"C({self.arg}, {self.k})"


def var(name: str) -> Var:
    return Var(name)


def const(value: Union[int, Fraction]) -> Const:
    return Const(Fraction(value))


def C(arg: PolyLike, k: int) -> Binom:
    """Binomial node helper; `arg` may be an expression, `k` is a literal."""
    if isinstance(arg, (int, Fraction)):
        arg = Const(Fraction(arg))
    return Binom(arg, k)


# ---------------------------------------------------------------------------
# Text syntax: variables, integer/rational literals, + - * / ^, C(expr, int)


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, message: str) -> UnsupportedExpression:
        return UnsupportedExpression(f"{message} at position {self.pos}: {self.text!r}")

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self) -> PolyExpr:
        expr = self.parse_sum()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing input")
        return expr

    def parse_sum(self) -> PolyExpr:
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            expr: PolyExpr = -self.parse_term()
        else:
            if ch == "+":
                self.pos += 1
            expr = self.parse_term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                expr = expr + self.parse_term()
            elif ch == "-":
                self.pos += 1
                expr = expr - self.parse_term()
            else:
                return expr

    def parse_term(self) -> PolyExpr:
        expr = self.parse_power()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                expr = expr * self.parse_power()
            elif ch == "/":
                self.pos += 1
                expr = expr / self.parse_power()
            else:
                return expr

    def parse_power(self) -> PolyExpr:
        base = self.parse_atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            k = self.parse_int_literal()
            return base ** k
        return base

    def parse_int_literal(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected integer literal")
        return int(self.text[start : self.pos])

    def parse_atom(self) -> PolyExpr:
        ch = self.peek()
        if ch == "(":
            self.take("(")
            expr = self.parse_sum()
            self.take(")")
            return expr
        if ch.isdigit():
            return Const(Fraction(self.parse_int_literal()))
        if ch.isalpha() or ch == "_":
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            name = self.text[start : self.pos]
            if name == "C" and self.peek() == "(":
                self.take("(")
                arg = self.parse_sum()
                self.take(",")
                k = self.parse_int_literal()
                self.take(")")
                return Binom(arg, k)
            return Var(name)
        raise self.error("unexpected character")


def parse_poly(text: str) -> PolyExpr:
    """Parse the parenthesized text syntax into an expression tree."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Identity certification by grid evaluation


def certify_identity(
    lhs: PolyExpr,
    rhs: PolyExpr,
    variables: Sequence[str],
    degree_bound: int,
    *,
    name: str = "identity",
    claim: str = "",
) -> CheckReport:
    """Certify lhs == rhs as polynomials by evaluating on an integer grid.

    The grid takes the points 0..degree_bound in every variable.  A nonzero
    polynomial of per-variable degree <= degree_bound cannot vanish on all
    (degree_bound+1)**k grid points, so all-zero evaluations prove the
    identity; the per-variable degrees of both sides are checked against
    the bound first.
    """
    if degree_bound < 0:
        raise BadParameter("degree_bound must be >= 0")
    names = list(variables)
    free = (lhs.variables() | rhs.variables()) - set(names)
    if free:
        raise UnsupportedExpression(f"unbound variables: {sorted(free)}")
    for v in names:
        dl, dr = lhs.degree(v), rhs.degree(v)
        if max(dl, dr) > degree_bound:
            raise BadParameter(
                f"degree in {v} is {max(dl, dr)}, above the bound {degree_bound}"
            )
    diff = lhs - rhs
    points = range(degree_bound + 1)
    for assignment in product(points, repeat=len(names)):
        env = {v: Fraction(x) for v, x in zip(names, assignment)}
        value = diff.eval(env)
        if value != 0:
            witness = ", ".join(f"{v}={x}" for v, x in zip(names, assignment))
            return CheckReport(
                name=name,
                claim=claim or f"{lhs} == {rhs}",
                passed=False,
                inputs={"variables": " ".join(names), "degree_bound": degree_bound},
                lhs=str(lhs),
                rhs=str(rhs),
                relation="==",
                detail=f"differs at ({witness}): difference {value}",
            )
    return CheckReport(
        name=name,
        claim=claim or f"{lhs} == {rhs}",
        passed=True,
        inputs={"variables": " ".join(names), "degree_bound": degree_bound},
        lhs=str(lhs),
        rhs=str(rhs),
        relation="==",
        detail=f"zero on the {degree_bound + 1}^{len(names)} point grid",
    )


def eval_at_ints(expr: PolyExpr, **values: int) -> Fraction:
    """Evaluate an expression at an integer point, exactly."""
    return expr.eval({k: Fraction(v) for k, v in values.items()})
