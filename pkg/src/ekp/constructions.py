"""The two candidate extremal families and their sizes.

For parameters n = m*s + c = (m+1)*s - ell with ell = s - c:

* ``P`` consists of every A with |A| + |A ∩ L| >= m+1, where |L| = ell-1.
  No s of its members are pairwise disjoint, because summing the defining
  weight over s disjoint sets cannot exceed n + |L| = (m+1)s - 1.
* ``Pprime`` is all m-subsets of a fixed (m*ell-1)-set together with every
  set of size at least m+1.  An s-matching drawing q sets from the m-layer
  would need total size (m+1)s - q <= n, forcing q >= ell, more disjoint
  m-sets than the (m*ell-1)-point clique can hold.

Explicit construction enumerates subsets and needs n <= 24; the size
formulas are closed forms valid for every admissible parameter tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .combinatorics import binom, binom_geq
from .errors import BadParameter
from .families import GroundSet, SetFamily, mask_of


@dataclass(frozen=True)
class Params:
    """Parameter tuple (m, s, ell, c, n) with its defining identities."""

    m: int
    s: int
    ell: int
    c: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 3:
            raise BadParameter("m must be >= 3")
        if self.s < 2:
            raise BadParameter("s must be >= 2")
        if not 1 <= self.ell <= self.s:
            raise BadParameter("ell must satisfy 1 <= ell <= s")
        if self.c != self.s - self.ell:
            raise BadParameter("c must equal s - ell")
        if self.n != self.m * self.s + self.c:
            raise BadParameter("n must equal m*s + c")
        if self.n != (self.m + 1) * self.s - self.ell:
            raise BadParameter("n must equal (m+1)*s - ell")

    @classmethod
    def from_msl(cls, m: int, s: int, ell: int) -> "Params":
        c = s - ell
        return cls(m=m, s=s, ell=ell, c=c, n=m * s + c)


def default_L(params: Params) -> tuple[int, ...]:
    """The canonical choice {1, ..., ell-1}; sizes do not depend on it."""
    return tuple(range(1, params.ell))


def default_Lprime(params: Params) -> tuple[int, ...]:
    """The canonical choice {1, ..., m*ell-1}."""
    return tuple(range(1, params.m * params.ell))


def _as_mask(params: Params, chosen: Iterable[int], wanted: int) -> int:
    elements = tuple(chosen)
    if len(set(elements)) != len(elements) or len(elements) != wanted:
        raise BadParameter(f"need exactly {wanted} distinct elements")
    return mask_of(elements, params.n)


def build_P(params: Params, L: Optional[Iterable[int]] = None) -> SetFamily:
    """All subsets A of [n] with |A| + |A ∩ L| >= m+1; |L| = ell-1."""
    ground = GroundSet(params.n)
    ground.require_enumerable()
    lmask = _as_mask(params, L if L is not None else default_L(params), params.ell - 1)
    threshold = params.m + 1
    masks = [
        a
        for a in range(ground.full_mask + 1)
        if a.bit_count() + (a & lmask).bit_count() >= threshold
    ]
    return SetFamily(ground, masks)


def build_Pprime(params: Params, Lprime: Optional[Iterable[int]] = None) -> SetFamily:
    """m-subsets of L' plus every set of size >= m+1; |L'| = m*ell-1."""
    ground = GroundSet(params.n)
    ground.require_enumerable()
    lmask = _as_mask(
        params,
        Lprime if Lprime is not None else default_Lprime(params),
        params.m * params.ell - 1,
    )
    masks = []
    for a in range(ground.full_mask + 1):
        size = a.bit_count()
        if size >= params.m + 1 or (size == params.m and not a & ~lmask):
            masks.append(a)
    return SetFamily(ground, masks)


def size_P(params: Params) -> int:
    """|P|, by conditioning on j = |A ∩ L|.

    The part of A outside L needs at least m+1-2j further elements from the
    n-ell+1 points off L, so each j contributes
    C(ell-1, j) * binom_geq(n-ell+1, max(0, m+1-2j)); once 2j > m the tail
    is the full power set and the remaining j sum in closed form.
    """
    ell, m, outside = params.ell, params.m, params.n - params.ell + 1
    j_cut = (m + 1 + 1) // 2  # smallest j with m+1-2j <= 0
    total = 0
    for j in range(min(j_cut, ell)):
        total += binom(ell - 1, j) * binom_geq(outside, m + 1 - 2 * j)
    total += binom_geq(ell - 1, j_cut) * (1 << outside)
    return total


def size_Pprime(params: Params) -> int:
    """|P'| = C(m*ell-1, m) + binom_geq(n, m+1)."""
    return binom(params.m * params.ell - 1, params.m) + binom_geq(
        params.n, params.m + 1
    )
