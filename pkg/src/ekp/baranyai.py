"""Decomposition of the complete q-uniform hypergraph on q*t vertices into
perfect matchings, and the blocker bounds that rest on it.

The construction inserts vertices one at a time.  After l insertions every
class (future perfect matching) holds t disjoint partial edges covering
[l], and each subset S of [l] occurs as a partial edge in exactly
C(qt-l, q-|S|) classes counted with multiplicity.  Inserting the next
vertex assigns it to exactly one incomplete partial edge per class so that
exactly C(qt-l-1, q-|S|-1) copies of each type S receive it; the counting
identity sum_S C(l,|S|) C(qt-l-1, q-|S|-1) = C(qt-1, q-1) makes the
fractional assignment x(S) = C(qt-l-1, q-|S|-1)/C(qt-l, q-|S|) per copy
sum to one in every class, so an integral assignment exists and a
bipartite augmenting-path search finds one.  For q = 2 the classical
round-robin one-factorization is used directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .combinatorics import binom
from .errors import BadParameter, CapacityExceeded, InvariantViolation
from .families import SetFamily, set_of
from .report import CheckReport, exact_str
from .solver import has_s_matching
from .thresholds import kappa_k

MAX_EDGES = 10**6


@dataclass(frozen=True)
class Decomposition:
    """binom(qt-1, q-1) perfect matchings partitioning all q-sets of [qt]."""

    q: int
    t: int
    matchings: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.q * self.t

    def matchings_as_sets(self) -> list[list[tuple[int, ...]]]:
        return [[set_of(e) for e in matching] for matching in self.matchings]


def _round_robin(t: int) -> list[list[int]]:
    """One-factorization of the complete graph on 2t vertices (circle method)."""
    n = 2 * t
    rounds = []
    if t == 1:
        return [[0b11]]
    mod = n - 1
    for r in range(mod):
        edges = [(1 << mod) | (1 << r)]
        for i in range(1, t):
            a = (r + i) % mod
            b = (r - i) % mod
            edges.append((1 << a) | (1 << b))
        rounds.append(edges)
    return rounds


def _assign_vertex(
    class_edges: list[list[int]], demand: dict[int, int], q: int
) -> list[int]:
    """Pick one incomplete partial edge per class meeting the type demands.

    Bipartite b-matching via augmenting paths (classes on the left, edge
    types on the right with capacity demand[S]).  Feasibility is guaranteed
    by the fractional assignment, so failure to saturate is an error.
    """
    match: list[int] = [-1] * len(class_edges)
    used: dict[int, int] = {s: 0 for s in demand}
    holders: dict[int, list[int]] = {s: [] for s in demand}
    class_types = [
        sorted({s for s in edges if s.bit_count() < q}) for edges in class_edges
    ]

    def try_assign(j: int, visited: set[int]) -> bool:
        for s in class_types[j]:
            if s in visited or demand.get(s, 0) == 0:
                continue
            visited.add(s)
            if used[s] < demand[s]:
                match[j] = s
                used[s] += 1
                holders[s].append(j)
                return True
            for j2 in list(holders[s]):
                holders[s].remove(j2)
                used[s] -= 1
                match[j2] = -1
                if try_assign(j2, visited):
                    match[j] = s
                    used[s] += 1
                    holders[s].append(j)
                    return True
                match[j2] = s
                used[s] += 1
                holders[s].append(j2)
        return False

    for j in range(len(class_edges)):
        if not try_assign(j, set()):
            raise InvariantViolation("vertex assignment infeasible")
    return match


def _insertion_decomposition(q: int, t: int) -> list[list[int]]:
    n = q * t
    num_classes = binom(n - 1, q - 1)
    class_edges: list[list[int]] = [[0] * t for _ in range(num_classes)]
    for v in range(n):
        types = {s for edges in class_edges for s in edges if s.bit_count() < q}
        demand = {s: binom(n - v - 1, q - s.bit_count() - 1) for s in sorted(types)}
        match = _assign_vertex(class_edges, demand, q)
        bit = 1 << v
        for j, s in enumerate(match):
            class_edges[j][class_edges[j].index(s)] = s | bit
    return class_edges


def decompose(q: int, t: int) -> Decomposition:
    """Constructive decomposition; matchings sorted lexicographically."""
    if q < 2 or t < 1:
        raise BadParameter("requires q >= 2 and t >= 1")
    if binom(q * t, q) > MAX_EDGES:
        raise CapacityExceeded(f"binom(qt, q) exceeds {MAX_EDGES}")
    raw = _round_robin(t) if q == 2 else _insertion_decomposition(q, t)
    matchings = tuple(sorted(tuple(sorted(m)) for m in raw))
    result = Decomposition(q=q, t=t, matchings=matchings)
    report = verify_decomposition(result)
    if not report.passed:
        raise InvariantViolation(f"construction failed verification: {report.detail}")
    return result


def verify_decomposition(d: Decomposition) -> CheckReport:
    """Check count, per-matching partitions, and the exact-once union."""
    n = d.q * d.t
    full = (1 << n) - 1
    expected = binom(n - 1, d.q - 1)
    problems: list[str] = []
    if len(d.matchings) != expected:
        problems.append(f"{len(d.matchings)} matchings, expected {expected}")
    for idx, matching in enumerate(d.matchings):
        union = 0
        overlap = False
        for e in matching:
            if e.bit_count() != d.q:
                problems.append(f"matching {idx}: edge {set_of(e)} is not a {d.q}-set")
            if union & e:
                overlap = True
            union |= e
        if overlap:
            problems.append(f"matching {idx}: edges overlap")
        if union != full or len(matching) != d.t:
            problems.append(f"matching {idx}: not a perfect matching")
    counts: dict[int, int] = {}
    for matching in d.matchings:
        for e in matching:
            counts[e] = counts.get(e, 0) + 1
    for e, c in sorted(counts.items()):
        if c != 1:
            problems.append(f"edge {set_of(e)} appears {c} times")
    for combo in combinations(range(n), d.q):
        mask = 0
        for b in combo:
            mask |= 1 << b
        if mask not in counts:
            problems.append(f"edge {set_of(mask)} missing")
    passed = not problems
    return CheckReport(
        name=f"baranyai.decomposition.q{d.q}.t{d.t}",
        claim=(
            f"C({n},{d.q}) edges split into C({n - 1},{d.q - 1}) perfect matchings"
        ),
        passed=passed,
        inputs={"q": d.q, "t": d.t},
        lhs=str(len(d.matchings)),
        rhs=str(expected),
        relation="==",
        detail="; ".join(problems[:5]) if problems else "multiset union exact",
    )


def blocker_bound_check(
    family: SetFamily, q: int, t: int, d: int
) -> CheckReport:
    """Check |Z| >= max{(1/t) C(qt+d, q), C(d+q, q)} for the missing q-sets.

    Requires the family to be q-uniform on exactly qt+d points with no
    t pairwise disjoint members (verified exactly via the solver).
    """
    if q < 2 or t < 1 or d < 0:
        raise BadParameter("requires q >= 2, t >= 1, d >= 0")
    if family.n != q * t + d:
        raise BadParameter(f"ground set must have exactly {q * t + d} points")
    if any(m.bit_count() != q for m in family):
        raise BadParameter("family must be q-uniform")
    found, _ = has_s_matching(family, t)
    if found:
        raise BadParameter("precondition nu < t fails")
    total = binom(family.n, q)
    missing = total - len(family)
    per_matching = Fraction(total, t)
    residual = binom(d + q, q)
    bound = max(per_matching, Fraction(residual))
    passed = Fraction(missing) >= bound
    return CheckReport(
        name=f"blocker.bound.q{q}.t{t}.d{d}",
        claim="missing q-sets >= max{C(qt+d,q)/t, C(d+q,q)}",
        passed=passed,
        inputs={"q": q, "t": t, "d": d, "members": len(family)},
        lhs=str(missing),
        rhs=exact_str(bound),
        relation=">=",
        margin=exact_str(Fraction(missing) - bound),
    )


def residual_blocker_eval(k: int, tau: int, rho: int) -> Fraction:
    """The residual blocker lower bound kappa_k (rho+1) (tau+rho)^(k-1)."""
    if k < 3 or tau < 1 or rho < 0:
        raise BadParameter("requires k >= 3, tau >= 1, rho >= 0")
    gamma = tau + rho
    return kappa_k(k) * (rho + 1) * gamma ** (k - 1)
