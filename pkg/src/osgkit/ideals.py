"""Ideal notions of a finite ordered semigroup, parameterized by potency m.

Writing (H] for the downward closure of H and S^m for the set of m-fold
products, a nonempty subset B qualifies as:

  m_left         subsemigroup, S^m*B <= B, (B] = B
  m_right        subsemigroup, B*S^m <= B, (B] = B
  m_two_sided    subsemigroup, S^m*B <= B, B*S^m <= B, (B] = B
  m_quasi        subsemigroup, (S^m*B] & (B*S^m] <= B, (B] = B
  m_bi           subsemigroup, B*S^m*B <= B, (B] = B
  m_interior     subsemigroup, S^m*B*S^m <= B, (B] = B
  m_bi_interior  (B*S^m*B] & (S^m*B*S^m] <= B, (B] = B

m_bi_interior deliberately has no subsemigroup requirement; pass
strict_bi_interior=True to add it for side-by-side experiments.

Every predicate recomputes from its definition; there are no algebraic
shortcuts, so these functions double as the oracle layer for the pruned
enumerators and the verifier.
"""

from __future__ import annotations

import enum

from .errors import EmptySubset
from .structures import (
    OrderedSemigroup,
    Subset,
    _check_bound,
    _check_potency,
    downward_closure,
    is_downward_closed,
    is_subsemigroup,
    iter_downward_closed_bits,
    subset_product,
    universe_power,
)


class IdealKind(enum.Enum):
    M_LEFT = "m_left"
    M_RIGHT = "m_right"
    M_TWO_SIDED = "m_two_sided"
    M_QUASI = "m_quasi"
    M_BI = "m_bi"
    M_INTERIOR = "m_interior"
    M_BI_INTERIOR = "m_bi_interior"


class SimplicityKind(enum.Enum):
    LEFT_SIMPLE = "left_simple"
    RIGHT_SIMPLE = "right_simple"
    SIMPLE = "simple"
    BI_INTERIOR_SIMPLE = "biint_simple"


class PrincipalPattern(enum.Enum):
    A_SM_A = "aSma"
    SM_A_SM = "SmaSm"
    SM_A = "Sma"
    A_SM = "aSm"


def is_ideal(
    s: OrderedSemigroup,
    b: Subset,
    kind: IdealKind,
    m: int,
    *,
    strict_bi_interior: bool = False,
) -> bool:
    """Decide whether nonempty subset b is an ideal of the given kind at potency m."""
    _check_bound(s, b)
    _check_potency(m)
    if b.is_empty:
        raise EmptySubset(f"{kind.value} ideal test requires a nonempty subset")
    if not is_downward_closed(s, b):
        return False
    sm = universe_power(s, m)
    if kind is IdealKind.M_BI_INTERIOR:
        if strict_bi_interior and not is_subsemigroup(s, b):
            return False
        bsb = downward_closure(s, subset_product(s, subset_product(s, b, sm), b))
        sbs = downward_closure(s, subset_product(s, subset_product(s, sm, b), sm))
        return (bsb & sbs).issubset(b)
    if not is_subsemigroup(s, b):
        return False
    if kind is IdealKind.M_LEFT:
        return subset_product(s, sm, b).issubset(b)
    if kind is IdealKind.M_RIGHT:
        return subset_product(s, b, sm).issubset(b)
    if kind is IdealKind.M_TWO_SIDED:
        return subset_product(s, sm, b).issubset(b) and subset_product(s, b, sm).issubset(b)
    if kind is IdealKind.M_QUASI:
        left = downward_closure(s, subset_product(s, sm, b))
        right = downward_closure(s, subset_product(s, b, sm))
        return (left & right).issubset(b)
    if kind is IdealKind.M_BI:
        return subset_product(s, subset_product(s, b, sm), b).issubset(b)
    if kind is IdealKind.M_INTERIOR:
        return subset_product(s, subset_product(s, sm, b), sm).issubset(b)
    raise TypeError(f"unknown ideal kind {kind!r}")


def principal_set(s: OrderedSemigroup, a: int, pattern: PrincipalPattern, m: int) -> Subset:
    """The closed principal set of element a: ({a}S^m{a}], (S^m{a}S^m], (S^m{a}], or ({a}S^m]."""
    _check_potency(m)
    one = s.subset([a])
    sm = universe_power(s, m)
    if pattern is PrincipalPattern.A_SM_A:
        core = subset_product(s, subset_product(s, one, sm), one)
    elif pattern is PrincipalPattern.SM_A_SM:
        core = subset_product(s, subset_product(s, sm, one), sm)
    elif pattern is PrincipalPattern.SM_A:
        core = subset_product(s, sm, one)
    elif pattern is PrincipalPattern.A_SM:
        core = subset_product(s, one, sm)
    else:
        raise TypeError(f"unknown principal pattern {pattern!r}")
    return downward_closure(s, core)


def is_m_regular_element(s: OrderedSemigroup, a: int, m: int) -> bool:
    """True when a <= a*x*a for some x in S^m; equivalently a in ({a}S^m{a}]."""
    _check_potency(m)
    s.subset([a])  # index check
    mul = s.mul
    leq = s.leq
    for x in universe_power(s, m):
        if leq[a][mul[mul[a][x]][a]]:
            return True
    return False


def is_m_regular(s: OrderedSemigroup, m: int) -> bool:
    """True when every element of s is m-regular."""
    return all(is_m_regular_element(s, a, m) for a in range(s.size))


_SIMPLICITY_KIND = {
    SimplicityKind.LEFT_SIMPLE: IdealKind.M_LEFT,
    SimplicityKind.RIGHT_SIMPLE: IdealKind.M_RIGHT,
    SimplicityKind.BI_INTERIOR_SIMPLE: IdealKind.M_BI_INTERIOR,
}


def simplicity(s: OrderedSemigroup, kind: SimplicityKind, m: int) -> bool:
    """True when s has no ideal of the governing kind other than S itself.

    Any ideal different from S counts as proper, singletons included.
    Decided by enumerating downward-closed subsets, which is sound because
    every ideal notion requires (B] = B.
    """
    _check_potency(m)
    if kind is SimplicityKind.SIMPLE:
        return simplicity(s, SimplicityKind.LEFT_SIMPLE, m) and simplicity(
            s, SimplicityKind.RIGHT_SIMPLE, m
        )
    ideal_kind = _SIMPLICITY_KIND[kind]
    full = (1 << s.size) - 1
    for bits in iter_downward_closed_bits(s):
        if bits == 0 or bits == full:
            continue
        if is_ideal(s, Subset(bits, s.size), ideal_kind, m):
            return False
    return True
