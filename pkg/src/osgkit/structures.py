"""Finite ordered semigroups and their subset algebra.

An ordered semigroup is a finite set {0..n-1} with an associative
multiplication table and a partial order that is compatible with
multiplication on both sides: a <= b implies x*a <= x*b and a*x <= b*x.

Subsets are bit vectors bound to a structure size.  All operations are
pure; OrderedSemigroup instances are immutable once validated and carry
two derived caches: per-element principal down-sets and the element sets
S^1..S^POTENCY_CAP of m-fold products.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    BindingMismatch,
    IndexOutOfRange,
    NotAssociative,
    NotCompatible,
    NotPartialOrder,
    PotencyOutOfRange,
    SizeOutOfRange,
)

SIZE_CAP = 12
POTENCY_CAP = 8


@dataclass(frozen=True)
class Subset:
    """A subset of {0..size-1} stored as a bit vector.

    bits has element i present iff bit i is set.  size is the size of the
    owning structure; operations on subsets bound to different sizes raise
    BindingMismatch.
    """

    bits: int
    size: int

    def __post_init__(self):
        if not 1 <= self.size <= SIZE_CAP:
            raise SizeOutOfRange(f"subset width {self.size} outside 1..{SIZE_CAP}")
        if self.bits < 0 or self.bits >> self.size:
            raise ValueError(f"bits {self.bits:#x} exceed width {self.size}")

    @classmethod
    def from_elements(cls, size: int, elements: Iterable[int]) -> "Subset":
        bits = 0
        for e in elements:
            if not isinstance(e, int) or isinstance(e, bool) or not 0 <= e < size:
                raise IndexOutOfRange(f"element {e!r} outside 0..{size - 1}")
            bits |= 1 << e
        return cls(bits, size)

    def elements(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.size) if self.bits >> i & 1)

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, e: int) -> bool:
        return 0 <= e < self.size and bool(self.bits >> e & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements())

    def _check_mate(self, other: "Subset") -> None:
        if not isinstance(other, Subset):
            raise TypeError(f"expected Subset, got {type(other).__name__}")
        if other.size != self.size:
            raise BindingMismatch(f"subset widths differ: {self.size} vs {other.size}")

    def __and__(self, other: "Subset") -> "Subset":
        self._check_mate(other)
        return Subset(self.bits & other.bits, self.size)

    def __or__(self, other: "Subset") -> "Subset":
        self._check_mate(other)
        return Subset(self.bits | other.bits, self.size)

    def issubset(self, other: "Subset") -> bool:
        self._check_mate(other)
        return self.bits & ~other.bits == 0

    def __repr__(self) -> str:
        return f"Subset({list(self.elements())}, size={self.size})"


@dataclass(frozen=True)
class OrderedSemigroup:
    """A validated finite ordered semigroup.

    Build instances through validate_structure; the constructor trusts its
    caches.  mul[i][j] is the product i*j, leq[i][j] says i <= j.
    down_masks[h] is the bit vector of {t : t <= h}; power_masks[k-1] is
    the bit vector of S^k for k = 1..POTENCY_CAP.
    """

    name: str
    size: int
    mul: tuple[tuple[int, ...], ...]
    leq: tuple[tuple[bool, ...], ...]
    down_masks: tuple[int, ...]
    power_masks: tuple[int, ...]

    @property
    def universe(self) -> Subset:
        return Subset((1 << self.size) - 1, self.size)

    @property
    def empty(self) -> Subset:
        return Subset(0, self.size)

    def subset(self, elements: Iterable[int]) -> Subset:
        return Subset.from_elements(self.size, elements)

    def __repr__(self) -> str:
        return f"OrderedSemigroup({self.name!r}, n={self.size})"


def _check_potency(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or not 1 <= m <= POTENCY_CAP:
        raise PotencyOutOfRange(f"potency {m!r} outside 1..{POTENCY_CAP}")


def _check_bound(s: OrderedSemigroup, a: Subset) -> None:
    if a.size != s.size:
        raise BindingMismatch(f"subset of width {a.size} used with structure of size {s.size}")


def _product_bits(s: OrderedSemigroup, abits: int, bbits: int) -> int:
    out = 0
    mul = s.mul
    for i in range(s.size):
        if abits >> i & 1:
            row = mul[i]
            for j in range(s.size):
                if bbits >> j & 1:
                    out |= 1 << row[j]
    return out


def _closure_bits(s: OrderedSemigroup, hbits: int) -> int:
    out = 0
    down = s.down_masks
    for h in range(s.size):
        if hbits >> h & 1:
            out |= down[h]
    return out


def subset_product(s: OrderedSemigroup, a: Subset, b: Subset) -> Subset:
    """Elementwise product {x*y : x in a, y in b}.  Empty operands give the empty set."""
    _check_bound(s, a)
    _check_bound(s, b)
    return Subset(_product_bits(s, a.bits, b.bits), s.size)


def universe_power(s: OrderedSemigroup, m: int) -> Subset:
    """The set S^m of all products of exactly m elements of s."""
    _check_potency(m)
    return Subset(s.power_masks[m - 1], s.size)


def downward_closure(s: OrderedSemigroup, h: Subset) -> Subset:
    """The down-set {t in S : t <= x for some x in h}."""
    _check_bound(s, h)
    return Subset(_closure_bits(s, h.bits), s.size)


def is_downward_closed(s: OrderedSemigroup, a: Subset) -> bool:
    _check_bound(s, a)
    return _closure_bits(s, a.bits) == a.bits


def is_subsemigroup(s: OrderedSemigroup, a: Subset) -> bool:
    """True when a is nonempty and closed under multiplication."""
    _check_bound(s, a)
    if a.bits == 0:
        return False
    return _product_bits(s, a.bits, a.bits) & ~a.bits == 0


def iter_downward_closed_bits(s: OrderedSemigroup) -> Iterator[int]:
    """All downward-closed bit vectors of s, the empty one included, ascending.

    Every down-set is the union of the principal down-sets of its members,
    so the family is generated by closing {0} under union with each
    down_masks[h].
    """
    family = {0}
    for gen in s.down_masks:
        family |= {bits | gen for bits in family}
    return iter(sorted(family))


def _as_mul_table(table: Sequence[Sequence[int]], n: int) -> tuple[tuple[int, ...], ...]:
    rows = []
    for i, row in enumerate(table):
        row = tuple(row)
        if len(row) != n:
            raise ValueError(f"mul row {i} has {len(row)} entries, expected {n}")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise ValueError(f"mul entry {v!r} in row {i} outside 0..{n - 1}")
        rows.append(row)
    return tuple(rows)


def _as_leq_matrix(relation: Sequence[Sequence[object]], n: int) -> tuple[tuple[bool, ...], ...]:
    if len(relation) != n:
        raise ValueError(f"relation has {len(relation)} rows, expected {n}")
    rows = []
    for i, row in enumerate(relation):
        row = tuple(bool(v) for v in row)
        if len(row) != n:
            raise ValueError(f"relation row {i} has {len(row)} entries, expected {n}")
        rows.append(row)
    return tuple(rows)


def validate_structure(
    table: Sequence[Sequence[int]],
    relation: Sequence[Sequence[object]],
    *,
    name: str = "S",
) -> OrderedSemigroup:
    """Validate a multiplication table and order relation into an OrderedSemigroup.

    Checks, in order: size bounds, table shape and entry range, associativity,
    partial-order axioms (reflexivity, antisymmetry, transitivity), and
    two-sided compatibility of the order with multiplication.  On success the
    down-set and power caches are computed eagerly.
    """
    n = len(table)
    if not 1 <= n <= SIZE_CAP:
        raise SizeOutOfRange(f"size {n} outside 1..{SIZE_CAP}")
    mul = _as_mul_table(table, n)

    for a in range(n):
        for b in range(n):
            ab = mul[a][b]
            for c in range(n):
                if mul[ab][c] != mul[a][mul[b][c]]:
                    raise NotAssociative((a, b, c))

    leq = _as_leq_matrix(relation, n)
    for i in range(n):
        if not leq[i][i]:
            raise NotPartialOrder("reflexivity", (i,))
    for i in range(n):
        for j in range(n):
            if i != j and leq[i][j] and leq[j][i]:
                raise NotPartialOrder("antisymmetry", (i, j))
    for i in range(n):
        for j in range(n):
            if not leq[i][j]:
                continue
            for k in range(n):
                if leq[j][k] and not leq[i][k]:
                    raise NotPartialOrder("transitivity", (i, j, k))

    for a in range(n):
        for b in range(n):
            if a == b or not leq[a][b]:
                continue
            for x in range(n):
                if not leq[mul[x][a]][mul[x][b]]:
                    raise NotCompatible((a, b, x), "left")
                if not leq[mul[a][x]][mul[b][x]]:
                    raise NotCompatible((a, b, x), "right")

    down = tuple(
        sum(1 << t for t in range(n) if leq[t][h])
        for h in range(n)
    )
    full = (1 << n) - 1
    powers = [full]
    probe = OrderedSemigroup(name, n, mul, leq, down, (full,))
    for _ in range(POTENCY_CAP - 1):
        powers.append(_product_bits(probe, powers[-1], full))
    return OrderedSemigroup(name, n, mul, leq, down, tuple(powers))
