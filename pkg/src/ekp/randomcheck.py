"""Seeded randomized property suites, shared by the CLI and the tests.

Instances are generated so the checked preconditions hold by construction
(matching numbers are capped by building members around a small cover),
and every verdict is still decided exactly.  A fixed seed reproduces the
identical instance stream.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterable

from .baranyai import blocker_bound_check
from .families import SetFamily, normalize_remove_empty
from .report import CheckReport
from .solver import has_s_matching
from .verifier import badness_profile


def _k_subsets_meeting(n: int, k: int, cover_mask: int) -> list[int]:
    out = []
    for combo in combinations(range(n), k):
        m = 0
        for b in combo:
            m |= 1 << b
        if m & cover_mask:
            out.append(m)
    return out


def random_blocker_instance(
    rng: random.Random,
) -> tuple[SetFamily, int, int, int]:
    """A q-uniform family with nu < t on qt+d points, built around a cover."""
    q = rng.choice([2, 2, 3])
    t = rng.choice([2, 3])
    d = rng.randrange(0, 3)
    n = q * t + d
    cover_points = rng.sample(range(n), t - 1)
    cover_mask = 0
    for b in cover_points:
        cover_mask |= 1 << b
    pool = _k_subsets_meeting(n, q, cover_mask)
    keep_prob = rng.uniform(0.3, 0.9)
    members = [m for m in pool if rng.random() < keep_prob]
    return SetFamily.from_masks(n, members), q, t, d


def run_blocker_suite(count: int, seed: int) -> list[CheckReport]:
    rng = random.Random(seed)
    reports = []
    for idx in range(count):
        family, q, t, d = random_blocker_instance(rng)
        rep = blocker_bound_check(family, q, t, d)
        reports.append(
            CheckReport(
                name=f"prop.blocker.{idx:03d}",
                claim=rep.claim,
                passed=rep.passed,
                inputs=rep.inputs,
                lhs=rep.lhs,
                rhs=rep.rhs,
                relation=rep.relation,
                margin=rep.margin,
            )
        )
    return reports


def random_capped_family(
    rng: random.Random, *, allow_empty_member: bool = True
) -> tuple[SetFamily, int]:
    """A family with nu < s, possibly containing the empty set."""
    n = rng.randrange(4, 9)
    s = rng.randrange(2, min(n, 5))
    add_empty = allow_empty_member and rng.random() < 0.5
    cover_size = s - 2 if add_empty else s - 1
    cover_mask = 0
    if cover_size > 0:
        for b in rng.sample(range(n), cover_size):
            cover_mask |= 1 << b
    members = []
    if cover_mask:
        pool = [m for m in range(1, 1 << n) if m & cover_mask]
        keep_prob = rng.uniform(0.1, 0.6)
        members = [m for m in pool if rng.random() < keep_prob]
    if add_empty:
        members.append(0)
    return SetFamily.from_masks(n, members), s


def run_normalization_suite(count: int, seed: int) -> list[CheckReport]:
    rng = random.Random(seed)
    reports = []
    for idx in range(count):
        family, s = random_capped_family(rng)
        normalized = normalize_remove_empty(family, s)
        still_bounded, _ = has_s_matching(normalized, s)
        ok = (
            len(normalized) == len(family)
            and 0 not in normalized
            and not still_bounded
        )
        reports.append(
            CheckReport(
                name=f"prop.normalize.{idx:03d}",
                claim="empty-set swap preserves size and keeps nu < s",
                passed=ok,
                inputs={"n": family.n, "s": s, "members": len(family)},
                lhs=str(len(normalized)),
                rhs=str(len(family)),
                relation="==",
            )
        )
    return reports


def random_badness_instance(
    rng: random.Random,
) -> tuple[SetFamily, tuple[int, ...]]:
    """A 3-uniform missing-triple family containing all triples off a cover."""
    n, a = rng.choice([(10, 1), (11, 1), (12, 2), (12, 3), (13, 2), (14, 2), (14, 3)])
    cover = tuple(sorted(rng.sample(range(1, n + 1), a)))
    cover_mask = 0
    for e in cover:
        cover_mask |= 1 << (e - 1)
    members = []
    for combo in combinations(range(n), 3):
        m = (1 << combo[0]) | (1 << combo[1]) | (1 << combo[2])
        if not m & cover_mask:
            members.append(m)
    extra_prob = rng.uniform(0.0, 0.7)
    for combo in combinations(range(n), 3):
        m = (1 << combo[0]) | (1 << combo[1]) | (1 << combo[2])
        if m & cover_mask and rng.random() < extra_prob:
            members.append(m)
    return SetFamily.from_masks(n, members), cover


def run_badness_suite(count: int, seed: int) -> list[CheckReport]:
    rng = random.Random(seed)
    reports = []
    for idx in range(count):
        family, cover = random_badness_instance(rng)
        _, _, _, rep = badness_profile(family, cover)
        reports.append(
            CheckReport(
                name=f"prop.badness.{idx:03d}",
                claim=rep.claim,
                passed=rep.passed,
                inputs=rep.inputs,
                lhs=rep.lhs,
                rhs=rep.rhs,
                relation=rep.relation,
                margin=rep.margin,
            )
        )
    return reports
