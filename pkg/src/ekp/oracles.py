"""Ground-truth brute-force oracles for e(n,s) and e_k(N,t) at desk scale.

Both oracles run the same complement search.  A family F avoids an
s-matching exactly when its complement Y (within the searched universe of
candidate members) intersects every s-matching of that universe, so
maximizing |F| is minimizing |Y| over hitting sets: find an s-matching
disjoint from Y, branch on which of its s members joins Y, and mark the
members skipped by earlier siblings as permanently kept so the subtrees
partition the search space.  A packing of member-disjoint s-matchings
among undeleted members lower-bounds the deletions still needed, and the
explicit candidate families (a point star, the weight-threshold family,
and the clique-plus-upper-layers family) seed the incumbent.

Up-set reduction, recorded here because the non-uniform oracle's search
space rests on it: if A is a member and A is a subset of B, adding B to
the family preserves nu < s, since disjoint members shrink to disjoint
minimal members (nonempty disjoint sets have distinct subsets).  Some
maximum family is therefore an up-set, and the search over arbitrary
complements loses nothing; the n <= 4 regression tests re-verify the
oracle against exhaustion over unrestricted families.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from importlib import resources
from itertools import combinations
from typing import Optional, Sequence

from .combinatorics import binom
from .errors import BadParameter, BudgetExceeded, CapacityExceeded
from .families import SetFamily
from . import solver

DEFAULT_ORACLE_BUDGET = 10**8

_ALIVE, _DELETED, _KEPT = 0, 1, 2


@dataclass(frozen=True)
class OracleResult:
    """Outcome of one oracle run.

    When exact is True, `value` is the true maximum, the witness achieves
    it, and lower == value == upper.  Budget exhaustion flips exact to
    False and reports the best bracketing bounds found.
    """

    value: int
    optimal_witness: SetFamily
    nodes: int
    seconds: float
    exact: bool
    lower: int
    upper: int


class _HittingSearch:
    """Minimum members to delete so no s of the rest are pairwise disjoint."""

    def __init__(self, members: Sequence[int], s: int, budget: int) -> None:
        self.members = sorted(members)
        self.s = s
        self.budget = budget
        self.nodes = 0
        self.status = bytearray(len(self.members))
        self.best: Optional[int] = None
        self.best_members: tuple[int, ...] = ()

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded("oracle budget exhausted", lower=0, upper=0)

    def _find_matching(self, banned: set[int]) -> Optional[list[int]]:
        """First s pairwise disjoint undeleted members, lexicographically."""
        chosen: list[int] = []

        def dfs(start: int, used: int) -> bool:
            self._tick()
            if len(chosen) == self.s:
                return True
            for i in range(start, len(self.members)):
                if self.status[i] == _DELETED or i in banned:
                    continue
                m = self.members[i]
                if m & used:
                    continue
                chosen.append(i)
                if dfs(i + 1, used | m):
                    return True
                chosen.pop()
            return False

        return chosen if dfs(0, 0) else None

    def _packing_bound(self) -> int:
        """Member-disjoint s-matchings among undeleted members; each needs
        one deletion, so the count is a valid lower bound."""
        banned: set[int] = set()
        count = 0
        while True:
            matching = self._find_matching(banned)
            if matching is None:
                return count
            banned.update(matching)
            count += 1

    def _search(self, deleted: int) -> None:
        self._tick()
        assert self.best is not None
        if deleted + self._packing_bound() >= self.best:
            return
        matching = self._find_matching(set())
        if matching is None:
            if deleted < self.best:
                self.best = deleted
                self.best_members = tuple(
                    self.members[i]
                    for i in range(len(self.members))
                    if self.status[i] != _DELETED
                )
            return
        newly_kept: list[int] = []
        for i in matching:
            if self.status[i] == _KEPT:
                continue
            self.status[i] = _DELETED
            self._search(deleted + 1)
            self.status[i] = _KEPT
            newly_kept.append(i)
        for i in newly_kept:
            self.status[i] = _ALIVE

    def run(self, incumbent_deletions: int, incumbent_members: tuple[int, ...]):
        """Returns (deletions, members, nodes, exact, root_lb)."""
        self.best = incumbent_deletions
        self.best_members = incumbent_members
        root_lb = 0
        exact = True
        try:
            root_lb = self._packing_bound()
            self._search(0)
        except BudgetExceeded:
            exact = False
        return self.best, self.best_members, self.nodes, exact, root_lb


def _star_masks(n: int) -> list[int]:
    return [m for m in range(1 << n) if m & 1]


def _threshold_family_masks(n: int, s: int) -> Optional[list[int]]:
    """Members A with |A| + |A ∩ L| >= m+1 for m = n // s, |L| = ell - 1."""
    m = n // s
    c = n - m * s
    ell = s - c
    if m < 1 or ell < 1:
        return None
    lmask = (1 << (ell - 1)) - 1
    return [
        a
        for a in range(1 << n)
        if a.bit_count() + (a & lmask).bit_count() >= m + 1
    ]


def _clique_plus_upper_masks(n: int, s: int) -> Optional[list[int]]:
    """m-sets inside a (m*ell-1)-point core plus all larger sets."""
    m = n // s
    c = n - m * s
    ell = s - c
    if m < 1 or ell < 1:
        return None
    core = (1 << (m * ell - 1)) - 1
    out = []
    for a in range(1 << n):
        size = a.bit_count()
        if size >= m + 1 or (size == m and not a & ~core):
            out.append(a)
    return out


def _best_incumbent(universe: Sequence[int], candidates: list[list[int]]):
    pool = set(universe)
    best: Optional[tuple[int, tuple[int, ...]]] = None
    for masks in candidates:
        inside = tuple(sorted(set(masks) & pool))
        deletions = len(pool) - len(inside)
        if best is None or deletions < best[0]:
            best = (deletions, inside)
    assert best is not None
    return best


def _run_complement_search(
    n: int,
    universe: Sequence[int],
    s: int,
    candidates: list[list[int]],
    node_budget: int,
) -> OracleResult:
    started = time.monotonic()
    incumbent_deletions, incumbent_members = _best_incumbent(universe, candidates)
    search = _HittingSearch(universe, s, node_budget)
    deletions, members, nodes, exact, root_lb = search.run(
        incumbent_deletions, incumbent_members
    )
    witness = SetFamily.from_masks(n, members)
    found, _ = solver.has_s_matching(witness, s)
    if found:
        raise BadParameter(f"oracle witness admits an {s}-matching; search bug")
    value = len(universe) - deletions
    upper = len(universe) - root_lb if not exact else value
    return OracleResult(
        value=value,
        optimal_witness=witness,
        nodes=nodes,
        seconds=time.monotonic() - started,
        exact=exact,
        lower=value,
        upper=max(upper, value),
    )


def e_ns(n: int, s: int, *, node_budget: int = DEFAULT_ORACLE_BUDGET) -> OracleResult:
    """Maximum size of a family on [n] with no s pairwise disjoint members.

    Exact for n <= 6; n = 7 runs best-effort under the node budget; larger
    ground sets are out of scope.
    """
    if not 2 <= s <= n:
        raise BadParameter("requires 2 <= s <= n")
    if n > 7:
        raise CapacityExceeded("e(n,s) oracle supports n <= 7")
    universe = list(range(1 << n))
    candidates = [_star_masks(n)]
    for maker in (_threshold_family_masks, _clique_plus_upper_masks):
        masks = maker(n, s)
        if masks is not None:
            candidates.append(masks)
    return _run_complement_search(n, universe, s, candidates, node_budget)


def e_uniform(
    big_n: int, k: int, t: int, *, node_budget: int = DEFAULT_ORACLE_BUDGET
) -> OracleResult:
    """Maximum size of a k-uniform family on [N] with no t disjoint members.

    Exactness is guaranteed at the scale of the shipped tests (k <= 3,
    N <= 8, t <= 3); larger instances run best-effort under the budget.
    """
    if k < 1 or t < 1 or big_n < k:
        raise BadParameter("requires N >= k >= 1 and t >= 1")
    if binom(big_n, k) > 10**5:
        raise CapacityExceeded("k-uniform oracle needs C(N,k) <= 100000")
    universe = []
    for combo in combinations(range(big_n), k):
        m = 0
        for b in combo:
            m |= 1 << b
        universe.append(m)
    star_core = (1 << (t - 1)) - 1
    star = [m for m in universe if m & star_core]
    clique_core = (1 << min(k * t - 1, big_n)) - 1
    clique = [m for m in universe if not m & ~clique_core]
    return _run_complement_search(big_n, universe, t, [star, clique], node_budget)


def load_e_ns_goldens() -> dict[tuple[int, int], int]:
    """The recorded oracle values for all 2 <= s <= n <= 6."""
    text = resources.files("ekp.data").joinpath("e_ns_goldens.csv").read_text()
    out: dict[tuple[int, int], int] = {}
    for row in csv.DictReader(text.splitlines()):
        out[(int(row["n"]), int(row["s"]))] = int(row["value"])
    return out
