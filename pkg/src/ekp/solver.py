"""Exact matching number, cover number, and s-matching witnesses.

Deterministic branch and bound over bit-vector members.  Key facts the
solver relies on:

* The empty set is disjoint from everything, so nu(F) = nu(F - {0}) + 1
  when the empty set is a member; it is stripped up front.
* Supersets never help a matching: if B in F is a proper superset of a
  member A, any matching through B maps to one through A, so members with
  a one-element-smaller member present are dropped before searching.
* Branching follows the lowest point of the free universe: either some
  chosen member covers it or no member does, which enumerates every
  matching exactly once (members in ascending mask order, then the
  skip-point branch).
* Pruning uses lowest-point size profiles: members of a matching have
  pairwise distinct lowest points, so k further members need the k
  smallest per-lowest-point member sizes to fit inside the free set.

Each solve call owns its private mutable state; the SetFamily inputs are
immutable, so concurrent solves on shared families are safe, and results
are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BadParameter, BudgetExceeded, InvariantViolation
from .families import SetFamily, set_of

DEFAULT_NODE_BUDGET = 10**9
MAX_MEMBERS_NU = 10**7
MAX_MEMBERS_TAU = 10**6


@dataclass(frozen=True)
class MatchingWitness:
    """Pairwise disjoint members achieving the reported matching size."""

    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def members_as_sets(self) -> list[tuple[int, ...]]:
        return [set_of(m) for m in self.members]


@dataclass(frozen=True)
class CoverWitness:
    """Vertex set (as a bit mask) meeting every member of the family."""

    vertices: int

    @property
    def size(self) -> int:
        return self.vertices.bit_count()

    def vertices_as_set(self) -> tuple[int, ...]:
        return set_of(self.vertices)


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int) -> None:
        self.limit = limit
        self.used = 0

    def tick(self) -> bool:
        self.used += 1
        return self.used > self.limit


def _check_matching(family: SetFamily, members: Sequence[int]) -> None:
    """Independent validity re-check of a matching witness."""
    seen = 0
    for m in members:
        if m not in family:
            raise InvariantViolation("witness member not in family")
        if m & seen:
            raise InvariantViolation("witness members not pairwise disjoint")
        seen |= m
    if len(set(members)) != len(members):
        raise InvariantViolation("witness repeats a member")


def _check_cover(family: SetFamily, vertices: int) -> None:
    for m in family:
        if m and not (m & vertices):
            raise InvariantViolation("witness does not cover some member")


def _reduced_masks(family: SetFamily) -> list[int]:
    """Nonempty members with no one-element-smaller member present.

    Every dropped member contains a kept member (chains of one-element
    deletions strictly shrink and stop at a kept nonempty member), so the
    maximum matching size is unchanged.
    """
    masks = [m for m in family.masks if m]
    if not masks:
        return []
    if family.n <= 24 and len(masks) > 1024:
        present = bytearray(family.ground.full_mask + 1)
        for m in masks:
            present[m] = 1

        def has(x: int) -> bool:
            return bool(present[x])

    else:
        table = set(masks)

        def has(x: int) -> bool:
            return x in table

    kept = []
    for m in masks:
        probe = m
        dominated = False
        while probe:
            bit = probe & -probe
            if has(m ^ bit):
                dominated = True
                break
            probe ^= bit
        if not dominated:
            kept.append(m)
    return kept


class _MatchingSearch:
    """Branch and bound for maximum matchings among nonempty bit masks.

    The pruning bound: distinct members of a matching have distinct lowest
    points, and a member whose lowest point is v has at least low_size[v]
    elements, so k members need the k smallest low_size values inside the
    free set to fit within its population.
    """

    class _Done(Exception):
        pass

    def __init__(self, masks: Sequence[int], n: int, budget: _Budget) -> None:
        self.masks = sorted(masks)
        self.n = n
        self.budget = budget
        self.full = (1 << n) - 1
        self.by_point: list[list[int]] = [[] for _ in range(n)]
        self.low_size = [n + 1] * n  # sentinel: no member has this lowest point
        spans: dict[int, int] = {}
        for m in self.masks:
            v = (m & -m).bit_length() - 1
            self.by_point[v].append(m)
            size = m.bit_count()
            if size < self.low_size[v]:
                self.low_size[v] = size
            spans[size] = spans.get(size, 0) | m
        # Cumulative spans: members of the j smallest sizes live inside the
        # union of their spans, giving nested room constraints.
        self.size_classes: list[tuple[int, int]] = []
        cumulative = 0
        for size in sorted(spans):
            cumulative |= spans[size]
            self.size_classes.append((size, cumulative))
        self.best = 0
        self.best_stack: tuple[int, ...] = ()
        self._stack: list[int] = []
        self._target: Optional[int] = None

    def _bound(self, universe: int) -> int:
        """Admissible cap on the matching size inside `universe`.

        Combines two counts: (a) members have pairwise distinct lowest
        points, so k members need the k smallest low_size values in U to
        fit within the coverable part of U; (b) members of the j smallest
        sizes all lie inside the union of those size classes' spans, so
        greedy smallest-first filling of the nested rooms caps the count.
        """
        sizes = []
        probe = universe
        while probe:
            bit = probe & -probe
            v = bit.bit_length() - 1
            if self.low_size[v] <= self.n:
                sizes.append(self.low_size[v])
            probe ^= bit
        sizes.sort()
        if self.size_classes:
            room = (universe & self.size_classes[-1][1]).bit_count()
        else:
            room = 0
        low_bound = 0
        for size in sizes:
            room -= size
            if room < 0:
                break
            low_bound += 1
        class_bound = 0
        used = 0
        for size, span in self.size_classes:
            take = ((universe & span).bit_count() - used) // size
            if take > 0:
                class_bound += take
                used += take * size
        return min(low_bound, class_bound)

    def trivial_upper(self) -> int:
        return self._bound(self.full)

    def run(self, universe: int, target: Optional[int] = None) -> int:
        """Maximum matching inside `universe`; stops early at `target`."""
        self.best = 0
        self.best_stack = ()
        self._stack = []
        self._target = target
        try:
            self._dfs(universe, 0)
        except self._Done:
            pass
        return self.best

    def _dfs(self, universe: int, count: int) -> None:
        if self.budget.tick():
            raise BudgetExceeded(
                "matching search budget exhausted",
                lower=self.best,
                upper=self.trivial_upper(),
            )
        if count > self.best:
            self.best = count
            self.best_stack = tuple(self._stack)
            if self._target is not None and self.best >= self._target:
                raise self._Done
        if universe == 0:
            return
        cap = count + self._bound(universe)
        limit = self._target if self._target is not None else self.best + 1
        if cap < limit:
            return
        v = (universe & -universe).bit_length() - 1
        for m in self.by_point[v]:
            if not m & ~universe:
                self._stack.append(m)
                self._dfs(universe & ~m, count + 1)
                self._stack.pop()
        self._dfs(universe & (universe - 1), count)

    def lex_min_witness(self, universe: int, size: int) -> tuple[int, ...]:
        """Lexicographically least matching of the given size (member order)."""
        chosen: list[int] = []
        remaining = size
        for m in self.masks:
            if remaining == 0:
                break
            if m & ~universe:
                continue
            if remaining == 1 or self.run(universe & ~m, remaining - 1) >= remaining - 1:
                chosen.append(m)
                universe &= ~m
                remaining -= 1
        if remaining:
            raise InvariantViolation("failed to reconstruct an optimal matching")
        return tuple(chosen)


def _prepare(family: SetFamily, node_budget: int) -> tuple[bool, _MatchingSearch]:
    if len(family) > MAX_MEMBERS_NU:
        raise BadParameter(f"family too large for nu (> {MAX_MEMBERS_NU} members)")
    has_empty = 0 in family
    search = _MatchingSearch(_reduced_masks(family), family.n, _Budget(node_budget))
    return has_empty, search


def nu(
    family: SetFamily, *, node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[int, MatchingWitness]:
    """Exact maximum matching size with a lexicographically least witness."""
    has_empty, search = _prepare(family, node_budget)
    value = search.run(search.full)
    first_found = search.best_stack
    try:
        members = search.lex_min_witness(search.full, value)
    except BudgetExceeded:
        members = first_found
        if len(members) != value:
            raise
    if has_empty:
        members = (0,) + members
        value += 1
    witness = MatchingWitness(members)
    _check_matching(family, witness.members)
    return value, witness


def has_s_matching(
    family: SetFamily, s: int, *, node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[bool, Optional[MatchingWitness]]:
    """True iff nu(family) >= s; early-exits on the first witness found."""
    if s <= 0:
        return True, MatchingWitness(())
    has_empty, search = _prepare(family, node_budget)
    need = s - 1 if has_empty else s
    if need == 0:
        return True, MatchingWitness((0,))
    try:
        found = search.run(search.full, target=need) >= need
    except BudgetExceeded as exc:
        if exc.lower >= need:
            found = True
        else:
            raise
    if not found:
        return False, None
    members = ((0,) if has_empty else ()) + search.best_stack[:need]
    witness = MatchingWitness(members)
    _check_matching(family, witness.members)
    return True, witness


# ---------------------------------------------------------------------------
# Vertex cover


def _greedy_cover(masks: list[int], n: int) -> int:
    cover = 0
    alive = masks
    while alive:
        counts = [0] * n
        for m in alive:
            probe = m
            while probe:
                bit = probe & -probe
                counts[bit.bit_length() - 1] += 1
                probe ^= bit
        v = max(range(n), key=lambda b: (counts[b], -b))
        bit = 1 << v
        cover |= bit
        alive = [m for m in alive if not m & bit]
    return cover


def _greedy_disjoint(masks: list[int]) -> int:
    used = 0
    count = 0
    for m in masks:
        if not m & used:
            used |= m
            count += 1
    return count


def tau(
    family: SetFamily, *, node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[int, CoverWitness]:
    """Exact minimum vertex cover size with a witness; tau of empty is 0."""
    if len(family) > MAX_MEMBERS_TAU:
        raise BadParameter(f"family too large for tau (> {MAX_MEMBERS_TAU} members)")
    if 0 in family:
        raise BadParameter("the empty set cannot be covered by vertices")
    masks = sorted(_reduced_masks(family))
    if not masks:
        return 0, CoverWitness(0)
    n = family.n
    budget = _Budget(node_budget)
    best_mask = _greedy_cover(masks, n)
    best_size = best_mask.bit_count()
    root_lb = _greedy_disjoint(masks)

    def dfs(alive: list[int], cover: int, size: int) -> None:
        nonlocal best_mask, best_size
        if budget.tick():
            raise BudgetExceeded(
                "cover search budget exhausted", lower=root_lb, upper=best_size
            )
        if not alive:
            if size < best_size:
                best_size, best_mask = size, cover
            return
        if size + _greedy_disjoint(alive) >= best_size:
            return
        pick = alive[0]
        probe = pick
        while probe:
            bit = probe & -probe
            dfs([m for m in alive if not m & bit], cover | bit, size + 1)
            probe ^= bit

    dfs(masks, 0, 0)
    witness = CoverWitness(best_mask)
    _check_cover(family, witness.vertices)
    return best_size, witness
