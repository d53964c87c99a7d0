"""Set families over a ground set [n], stored as integer bit masks.

Element i of [n] = {1, ..., n} maps to bit i-1.  A family is a deduplicated,
ascending tuple of masks, so iteration order is deterministic.  Ground sets
are capped at 64 elements (one machine word per set in spirit; Python ints
carry no real limit but the solver contracts assume desk scale), and any
operation that walks the full subset lattice additionally requires n <= 24.

SetFamily values are immutable after construction and all operations here
are pure, so families can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import BadParameter, CapacityExceeded, InvariantViolation

MAX_GROUND = 64
MAX_ENUMERATION_GROUND = 24


@dataclass(frozen=True)
class GroundSet:
    """The ground set [n]."""

    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_GROUND:
            raise BadParameter(f"ground set size must be in [1, {MAX_GROUND}]")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def require_enumerable(self) -> None:
        if self.n > MAX_ENUMERATION_GROUND:
            raise CapacityExceeded(
                f"operation enumerates the full lattice; needs n <= "
                f"{MAX_ENUMERATION_GROUND}, got n = {self.n}"
            )


def mask_of(elements: Iterable[int], n: int) -> int:
    mask = 0
    for e in elements:
        if not 1 <= e <= n:
            raise BadParameter(f"element {e} outside [1, {n}]")
        mask |= 1 << (e - 1)
    return mask


def set_of(mask: int) -> tuple[int, ...]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


class SetFamily:
    """An immutable family of subsets of [n]."""

    __slots__ = ("ground", "masks", "_mask_set")

    def __init__(self, ground: GroundSet, masks: Iterable[int]) -> None:
        unique = sorted(set(masks))
        if unique and not 0 <= unique[0] <= unique[-1] <= ground.full_mask:
            raise BadParameter("member outside the ground set")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "masks", tuple(unique))
        object.__setattr__(self, "_mask_set", frozenset(unique))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("SetFamily is immutable")

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SetFamily":
        return cls(GroundSet(n), masks)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        return cls(GroundSet(n), (mask_of(s, n) for s in sets))

    @property
    def n(self) -> int:
        return self.ground.n

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.masks)

    def __contains__(self, mask: int) -> bool:
        return mask in self._mask_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"SetFamily(n={self.n}, members={len(self.masks)})"

    def members_as_sets(self) -> list[tuple[int, ...]]:
        return [set_of(m) for m in self.masks]

    def replace_masks(self, masks: Iterable[int]) -> "SetFamily":
        return SetFamily(self.ground, masks)


def full_layer(n: int, i: int) -> SetFamily:
    """All i-subsets of [n]; requires n <= 24."""
    ground = GroundSet(n)
    ground.require_enumerable()
    if not 0 <= i <= n:
        raise BadParameter(f"layer index {i} outside [0, {n}]")
    from itertools import combinations

    masks = []
    for combo in combinations(range(n), i):
        mask = 0
        for b in combo:
            mask |= 1 << b
        masks.append(mask)
    return SetFamily(ground, masks)


def layer(family: SetFamily, i: int) -> SetFamily:
    """The members of size exactly i."""
    if not 0 <= i <= family.n:
        raise BadParameter(f"layer index {i} outside [0, {family.n}]")
    return family.replace_masks(m for m in family if m.bit_count() == i)


def missing_layer(family: SetFamily, i: int) -> SetFamily:
    """The i-subsets of [n] absent from the family; requires n <= 24."""
    family.ground.require_enumerable()
    whole = full_layer(family.n, i)
    return family.replace_masks(m for m in whole if m not in family)


def is_up_set(family: SetFamily) -> bool:
    """True iff the family is closed under taking supersets."""
    members = family._mask_set
    n = family.n
    for m in family:
        free = family.ground.full_mask & ~m
        while free:
            bit = free & -free
            if (m | bit) not in members:
                return False
            free ^= bit
    return True


def up_closure(family: SetFamily) -> SetFamily:
    """Smallest up-set containing the family; requires n <= 24."""
    family.ground.require_enumerable()
    full = family.ground.full_mask
    present = bytearray(full + 1)
    frontier = list(family.masks)
    for m in frontier:
        present[m] = 1
    while frontier:
        m = frontier.pop()
        free = full & ~m
        while free:
            bit = free & -free
            child = m | bit
            if not present[child]:
                present[child] = 1
                frontier.append(child)
            free ^= bit
    return family.replace_masks(i for i in range(full + 1) if present[i])


def minimal_elements(family: SetFamily) -> SetFamily:
    """The antichain of inclusion-minimal members."""
    if is_up_set(family):
        # In an up-set, a member is minimal iff removing any single element
        # leaves the family, so one-step checks suffice.
        members = family._mask_set
        out = []
        for m in family:
            probe = m
            minimal = True
            while probe:
                bit = probe & -probe
                if (m ^ bit) in members:
                    minimal = False
                    break
                probe ^= bit
            if minimal:
                out.append(m)
        return family.replace_masks(out)
    by_size = sorted(family.masks, key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in by_size:
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return family.replace_masks(kept)


def normalize_remove_empty(family: SetFamily, s: int) -> SetFamily:
    """Swap the empty set for the smallest missing singleton.

    Preserves the family size and, given nu(family) < s <= n, keeps the
    matching number below s: a matching through the new singleton maps to
    one through the empty set it replaced.
    """
    from . import solver

    if family.n < s:
        raise BadParameter("requires n >= s")
    has_matching, _ = solver.has_s_matching(family, s)
    if has_matching:
        raise BadParameter("precondition nu(family) < s fails")
    if 0 not in family:
        return family
    for e in range(1, family.n + 1):
        singleton = 1 << (e - 1)
        if singleton not in family:
            masks = [m for m in family if m != 0]
            masks.append(singleton)
            return family.replace_masks(masks)
    raise InvariantViolation(
        "empty set plus all singletons present, contradicting nu < s <= n"
    )


# ---------------------------------------------------------------------------
# Text formats.  Element-list format: one set per line, comma-separated
# elements, `{}` for the empty set.  Hex format: one lowercase hex mask per
# line.  Writers emit a `# n=<int>` header; readers honor it unless an
# explicit n is given.


def to_text(family: SetFamily) -> str:
    lines = [f"# n={family.n}"]
    for m in family:
        lines.append(",".join(str(e) for e in set_of(m)) if m else "{}")
    return "\n".join(lines) + "\n"


def to_hex(family: SetFamily) -> str:
    lines = [f"# n={family.n}"]
    lines.extend(f"{m:x}" for m in family)
    return "\n".join(lines) + "\n"


def _split_lines(text: str) -> tuple[int | None, list[str]]:
    header_n: int | None = None
    body = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comment = line[1:].strip()
            if comment.startswith("n="):
                header_n = int(comment[2:])
            continue
        body.append(line)
    return header_n, body


def from_text(text: str, n: int | None = None) -> SetFamily:
    header_n, body = _split_lines(text)
    sets: list[tuple[int, ...]] = []
    for line in body:
        if line == "{}":
            sets.append(())
            continue
        try:
            sets.append(tuple(int(tok) for tok in line.split(",")))
        except ValueError as exc:
            raise BadParameter(f"bad family line: {line!r}") from exc
    size = n if n is not None else header_n
    if size is None:
        size = max((max(s) for s in sets if s), default=0)
        if size == 0:
            raise BadParameter("cannot infer ground set size; pass n")
    return SetFamily.from_sets(size, sets)


def from_hex(text: str, n: int | None = None) -> SetFamily:
    header_n, body = _split_lines(text)
    size = n if n is not None else header_n
    try:
        masks = [int(line, 16) for line in body]
    except ValueError as exc:
        raise BadParameter("bad hex mask line") from exc
    if size is None:
        size = max((m.bit_length() for m in masks), default=0)
        if size == 0:
            raise BadParameter("cannot infer ground set size; pass n")
    return SetFamily.from_masks(size, masks)
