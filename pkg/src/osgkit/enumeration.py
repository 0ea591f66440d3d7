"""Exhaustive enumeration of downward-closed subsets and ideals.

Candidates are the downward-closed subsets of the structure, walked in
ascending bit-vector order; every ideal notion requires (B] = B, so
filtering those candidates through is_ideal is both sound and complete
against the unpruned scan of all nonempty subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .ideals import IdealKind, is_ideal
from .structures import OrderedSemigroup, Subset, _check_potency, iter_downward_closed_bits


@dataclass(frozen=True)
class IdealList:
    structure: str
    kind: IdealKind
    m: int
    subsets: tuple[Subset, ...]


def enumerate_downward_closed(s: OrderedSemigroup) -> Iterator[Subset]:
    """Yield every nonempty downward-closed subset of s in ascending bit order."""
    for bits in iter_downward_closed_bits(s):
        if bits:
            yield Subset(bits, s.size)


def _iter_ideals(
    s: OrderedSemigroup, kind: IdealKind, m: int, *, strict_bi_interior: bool = False
) -> Iterator[Subset]:
    for cand in enumerate_downward_closed(s):
        if is_ideal(s, cand, kind, m, strict_bi_interior=strict_bi_interior):
            yield cand


def enumerate_ideals(
    s: OrderedSemigroup, kind: IdealKind, m: int, *, strict_bi_interior: bool = False
) -> IdealList:
    """All ideals of the given kind at potency m, in ascending bit order.

    The universe is always included, so the list is never empty.
    """
    _check_potency(m)
    subsets = tuple(_iter_ideals(s, kind, m, strict_bi_interior=strict_bi_interior))
    return IdealList(s.name, kind, m, subsets)


def count_ideals(
    s: OrderedSemigroup, kind: IdealKind, m: int, *, strict_bi_interior: bool = False
) -> int:
    _check_potency(m)
    return sum(1 for _ in _iter_ideals(s, kind, m, strict_bi_interior=strict_bi_interior))
