"""Generation of all small ordered semigroups.

Associative tables are produced by a depth-first cell fill in row-major
order with incremental associativity propagation: assigning cell (i, j)
can only newly determine triples whose evaluation reads (i, j), so only
those are rechecked.  Compatible partial orders are enumerated over the
strict-pair bit space and filtered by the order axioms plus two-sided
compatibility.  Both enumerations are deterministic: tables come out in
lexicographic row-major order, orders in ascending strict-pair masks
(the discrete order first).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

from .errors import NotAssociative, SizeOutOfRange
from .structures import OrderedSemigroup, validate_structure

GENERATION_CAP = 4

Table = tuple[tuple[int, ...], ...]
LeqMatrix = tuple[tuple[bool, ...], ...]


@dataclass
class GenerationSpec:
    max_order: int = 3
    up_to_iso: bool = False
    sink: Optional[Callable[[OrderedSemigroup], None]] = field(default=None, repr=False)


def _triple_ok(t: list[list[Optional[int]]], a: int, b: int, c: int) -> bool:
    # True unless the triple is fully determined and violated.
    ab = t[a][b]
    if ab is None:
        return True
    bc = t[b][c]
    if bc is None:
        return True
    left = t[ab][c]
    if left is None:
        return True
    right = t[a][bc]
    return right is None or left == right


def _cell_consistent(t: list[list[Optional[int]]], i: int, j: int, n: int) -> bool:
    # Check every triple whose evaluation reads cell (i, j).
    for c in range(n):
        if not _triple_ok(t, i, j, c):
            return False
    for a in range(n):
        if not _triple_ok(t, a, i, j):
            return False
    for a in range(n):
        row = t[a]
        for b in range(n):
            if row[b] == i and not _triple_ok(t, a, b, j):
                return False
    for b in range(n):
        row = t[b]
        for c in range(n):
            if row[c] == j and not _triple_ok(t, i, b, c):
                return False
    return True


def enumerate_associative_tables(n: int) -> Iterator[Table]:
    """Yield every associative n-by-n table in lexicographic row-major order."""
    if not 1 <= n <= GENERATION_CAP:
        raise SizeOutOfRange(f"generation size {n} outside 1..{GENERATION_CAP}")
    cells = [(i, j) for i in range(n) for j in range(n)]
    t: list[list[Optional[int]]] = [[None] * n for _ in range(n)]

    def fill(k: int) -> Iterator[Table]:
        if k == len(cells):
            yield tuple(tuple(v for v in row) for row in t)  # type: ignore[misc]
            return
        i, j = cells[k]
        for v in range(n):
            t[i][j] = v
            if _cell_consistent(t, i, j, n):
                yield from fill(k + 1)
        t[i][j] = None

    yield from fill(0)


def _check_associative(table: Table) -> None:
    n = len(table)
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise NotAssociative((a, b, c))


def enumerate_compatible_orders(table: Sequence[Sequence[int]]) -> Iterator[LeqMatrix]:
    """Yield every partial order compatible with an associative table.

    Orders are emitted as full reflexive leq matrices in ascending order of
    their strict-pair bit mask, so the discrete order always comes first.
    """
    table = tuple(tuple(row) for row in table)
    n = len(table)
    if not 1 <= n <= GENERATION_CAP:
        raise SizeOutOfRange(f"generation size {n} outside 1..{GENERATION_CAP}")
    _check_associative(table)
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    index = {p: k for k, p in enumerate(pairs)}
    for mask in range(1 << len(pairs)):
        chosen = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        ok = True
        for i, j in chosen:
            if mask >> index[(j, i)] & 1:  # antisymmetry
                ok = False
                break
        if not ok:
            continue
        for i, j in chosen:
            for j2, k in chosen:
                if j2 == j and not (i == k or mask >> index[(i, k)] & 1):  # transitivity
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        leq = [[i == j for j in range(n)] for i in range(n)]
        for i, j in chosen:
            leq[i][j] = True
        for a, b in chosen:
            for x in range(n):
                if not leq[table[x][a]][table[x][b]] or not leq[table[a][x]][table[b][x]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield tuple(tuple(row) for row in leq)


def canonical_form(s: OrderedSemigroup) -> bytes:
    """Minimum over all relabelings of the serialized (table, order) pair.

    Two structures get equal forms exactly when they are isomorphic as
    ordered semigroups; anti-isomorphic pairs are not identified.
    """
    n = s.size
    best = None
    perm = list(range(n))
    for g in itertools.permutations(range(n)):
        # g maps new labels to old labels; inv maps old to new.
        inv = perm[:]
        for new, old in enumerate(g):
            inv[old] = new
        buf = bytearray([n])
        for i in range(n):
            row = s.mul[g[i]]
            for j in range(n):
                buf.append(inv[row[g[j]]])
        for i in range(n):
            row = s.leq[g[i]]
            for j in range(n):
                buf.append(1 if row[g[j]] else 0)
        cand = bytes(buf)
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


def generate_corpus(spec: GenerationSpec) -> Iterator[OrderedSemigroup]:
    """Generate every ordered semigroup of order <= spec.max_order.

    Names are deterministic: n{order}t{table_index}p{order_index}, where the
    indices follow the enumeration orders above.  With up_to_iso=True only
    the first representative of each isomorphism class is emitted, so names
    are stable whether or not the filter is on.  spec.sink, when set, is
    called with each structure as it is emitted.
    """
    if not 1 <= spec.max_order <= GENERATION_CAP:
        raise SizeOutOfRange(f"max_order {spec.max_order} outside 1..{GENERATION_CAP}")
    seen: set[bytes] = set()
    for n in range(1, spec.max_order + 1):
        for ti, table in enumerate(enumerate_associative_tables(n)):
            for oi, leq in enumerate(enumerate_compatible_orders(table)):
                s = validate_structure(table, leq, name=f"n{n}t{ti}p{oi}")
                if spec.up_to_iso:
                    key = canonical_form(s)
                    if key in seen:
                        continue
                    seen.add(key)
                if spec.sink is not None:
                    spec.sink(s)
                yield s
