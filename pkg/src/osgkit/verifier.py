"""Registry of named checks and the suite runner.

Each check evaluates one statement about a structure at a potency and
returns holds/fails/skipped with a replayable witness on failure.  Ids
are fixed: L1-L7 are closure laws, T1-T16 (with the variants T1' and
T11') are structural statements, R1/R2 are representation statements,
and E1/E2 are experimental statements.  Expected status separates them:

  theorem  L1-L7, T1, T1', T2-T9: a failure means a toolkit bug;
  claim    the rest: a failure is a finding, recorded with its witness.

Statements quantified by universal subset variables are expressed in the
conjecture language where possible; the others (existential witnesses,
subsemigroup ranges, two-sided equivalences) are evaluated natively.
Two-sided checks report which half failed in the result's direction
field: "forward"/"converse", or the hypothesis variants of T11'.

validate_witness re-evaluates a failure through the same definitional
predicates, so a report row can always be checked independently of the
search that produced it.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional, Sequence

from . import __version__
from .conjecture import (
    CheckResult,
    Conjecture,
    parse_conjecture,
    revalidate_conjecture,
)
from .enumeration import enumerate_downward_closed, enumerate_ideals
from .errors import (
    ConjectureSyntaxError,
    MalformedWitness,
    PotencyOutOfRange,
    UnknownCheckId,
)
from .ideals import (
    IdealKind,
    SimplicityKind,
    is_ideal,
    is_m_regular,
    is_m_regular_element,
    simplicity,
)
from .structures import (
    POTENCY_CAP,
    OrderedSemigroup,
    Subset,
    _check_potency,
    downward_closure,
    is_subsemigroup,
    subset_product,
    universe_power,
)

THEOREM = "theorem"
CLAIM = "claim"


@dataclass(frozen=True)
class CheckDef:
    id: str
    statement: str
    expected: str  # THEOREM or CLAIM


# --------------------------------------------------------------- conjectures

_BIINT_BODY = "cl({x}*S^M*{x}) & cl(S^M*{x}*S^M) <= {x}"


def _biint_of(x: str) -> str:
    return _BIINT_BODY.format(x=x)


_CONJ_TEXT = {
    "T1": f"forall B in kind(m_left): {_biint_of('B')}",
    "T1'": f"forall B in kind(m_right): {_biint_of('B')}",
    "T2": f"forall B in kind(m_two_sided): {_biint_of('B')}",
    "T3": "forall A in kind(m_bi_interior) forall B in kind(m_bi_interior): "
    f"cl(A&B) = A&B and {_biint_of('(A&B)')}",
    "T4": "forall R in kind(m_right) forall L in kind(m_left): "
    f"cl(R&L) = R&L and {_biint_of('(R&L)')}",
    "T5": f"forall Q in kind(m_quasi): {_biint_of('Q')}",
    "T6": f"forall B in kind(m_bi): {_biint_of('B')}",
    "T7": f"forall I in kind(m_interior): {_biint_of('I')}",
    "T8": "forall B in kind(m_bi_interior): "
    f"{_biint_of('cl(B*S)')} and {_biint_of('cl(S*B)')}",
    "T9": "forall B in kind(m_bi_interior) forall T in kind(m_right): "
    f"cl(B&T) = B&T and {_biint_of('(B&T)')}",
    "T10": "forall B in kind(m_bi_interior) where simple: B*B <= B and B*S^M*B <= B",
}

_SIDE_TEXT = {
    "T12": "forall a in elements: cl(S^M*{a}*S^M) & cl({a}*S^M*{a}) = S",
    "T13": "forall B in kind(m_bi_interior) forall I in kind(m_two_sided) "
    "forall L in kind(m_left): B&I&L <= cl(B*I*L)",
    "T14f": "forall I in kind(m_two_sided): S^M*I*S^M <= I",
    "T14c": "forall I in kind(m_interior): S^M*I <= I and I*S^M <= I",
    "T15": "forall B in kind(m_bi_interior): cl(B*S^M*B) & cl(S^M*B*S^M) = B",
    "R1": "forall R in kind(m_right) forall L in kind(m_left): cl(R*L) = R&L",
}

_CONJ: dict[str, Conjecture] = {k: parse_conjecture(v) for k, v in _CONJ_TEXT.items()}
_SIDE: dict[str, Conjecture] = {k: parse_conjecture(v) for k, v in _SIDE_TEXT.items()}


# ------------------------------------------------------------- closure laws


def _law_eval(s: OrderedSemigroup, law: str, a: Subset, b: Subset) -> bool:
    cl = lambda x: downward_closure(s, x)  # noqa: E731
    mul = lambda x, y: subset_product(s, x, y)  # noqa: E731
    if law == "L1":
        return a.issubset(cl(a))
    if law == "L2":
        return cl(cl(a)) == cl(a)
    if law == "L3":
        return not a.issubset(b) or cl(a).issubset(cl(b))
    if law == "L4":
        return cl(a & b).issubset(cl(a) & cl(b))
    if law == "L5":
        return cl(a | b) == cl(a) | cl(b)
    if law == "L6":
        return mul(cl(a), cl(b)).issubset(cl(mul(a, b)))
    if law == "L7":
        return cl(mul(cl(a), cl(b))) == cl(mul(a, b))
    raise UnknownCheckId(law)


_UNARY_LAWS = {"L1", "L2"}


def _run_law(law: str, s: OrderedSemigroup, m: int) -> CheckResult:
    # The potency is irrelevant to the closure laws; it is kept in the
    # result row so suite output stays rectangular.
    n = s.size
    empty = Subset(0, n)
    for abits in range(1 << n):
        a = Subset(abits, n)
        if law in _UNARY_LAWS:
            if not _law_eval(s, law, a, empty):
                return CheckResult(s.name, law, m, "fails", {"A": list(a.elements())})
            continue
        for bbits in range(1 << n):
            b = Subset(bbits, n)
            if not _law_eval(s, law, a, b):
                return CheckResult(
                    s.name, law, m, "fails",
                    {"A": list(a.elements()), "B": list(b.elements())},
                )
    return CheckResult(s.name, law, m, "holds")


# ------------------------------------------------------------- native checks


def _iter_subsemigroups(s: OrderedSemigroup) -> Iterable[Subset]:
    for bits in range(1, 1 << s.size):
        cand = Subset(bits, s.size)
        if is_subsemigroup(s, cand):
            yield cand


def _first_proper_ideal(s: OrderedSemigroup, kind: IdealKind, m: int) -> Optional[Subset]:
    full = (1 << s.size) - 1
    for cand in enumerate_ideals(s, kind, m).subsets:
        if cand.bits != full:
            return cand
    return None


def _elems(sub: Subset) -> list[int]:
    return list(sub.elements())


def _run_T11(s: OrderedSemigroup, m: int) -> CheckResult:
    subs = list(_iter_subsemigroups(s))
    for a in subs:
        if not is_ideal(s, a, IdealKind.M_LEFT, m):
            continue
        for c in subs:
            b = downward_closure(s, subset_product(s, a, c))
            if not is_ideal(s, b, IdealKind.M_BI_INTERIOR, m):
                return CheckResult(
                    s.name, "T11", m, "fails", {"A": _elems(a), "C": _elems(c)}
                )
    return CheckResult(s.name, "T11", m, "holds")


def _run_T11p(s: OrderedSemigroup, m: int) -> CheckResult:
    subs = list(_iter_subsemigroups(s))
    for a in subs:
        if not is_ideal(s, a, IdealKind.M_RIGHT, m):
            continue
        for c in subs:
            b = downward_closure(s, subset_product(s, c, a))
            if not is_ideal(s, b, IdealKind.M_BI_INTERIOR, m):
                return CheckResult(
                    s.name, "T11'", m, "fails",
                    {"A": _elems(a), "C": _elems(c)}, direction="a_m_right",
                )
    for c in subs:
        if not is_ideal(s, c, IdealKind.M_RIGHT, m):
            continue
        for a in subs:
            b = downward_closure(s, subset_product(s, c, a))
            if not is_ideal(s, b, IdealKind.M_BI_INTERIOR, m):
                return CheckResult(
                    s.name, "T11'", m, "fails",
                    {"A": _elems(a), "C": _elems(c)}, direction="c_m_right",
                )
    return CheckResult(s.name, "T11'", m, "holds")


def _run_T12(s: OrderedSemigroup, m: int) -> CheckResult:
    from .conjecture import check_conjecture

    eq = check_conjecture(s, _SIDE["T12"], m)
    simple = simplicity(s, SimplicityKind.BI_INTERIOR_SIMPLE, m)
    if simple and eq.status == "fails":
        return CheckResult(s.name, "T12", m, "fails", eq.witness, direction="forward")
    if eq.status == "holds" and not simple:
        b = _first_proper_ideal(s, IdealKind.M_BI_INTERIOR, m)
        assert b is not None
        return CheckResult(
            s.name, "T12", m, "fails", {"B": _elems(b)}, direction="converse"
        )
    return CheckResult(s.name, "T12", m, "holds")


def _regularity_iff(
    cid: str, side: Conjecture
) -> Callable[[OrderedSemigroup, int], CheckResult]:
    # S is m-regular iff the side conjecture holds on S at m.
    def run(s: OrderedSemigroup, m: int) -> CheckResult:
        from .conjecture import check_conjecture

        regular = is_m_regular(s, m)
        cond = check_conjecture(s, side, m)
        if regular and cond.status == "fails":
            return CheckResult(s.name, cid, m, "fails", cond.witness, direction="forward")
        if cond.status == "holds" and not regular:
            a = next(i for i in range(s.size) if not is_m_regular_element(s, i, m))
            return CheckResult(s.name, cid, m, "fails", {"a": a}, direction="converse")
        return CheckResult(s.name, cid, m, "holds")

    return run


_run_T13 = _regularity_iff("T13", _SIDE["T13"])
_run_T15 = _regularity_iff("T15", _SIDE["T15"])
_run_R1 = _regularity_iff("R1", _SIDE["R1"])


def _run_T14(s: OrderedSemigroup, m: int) -> CheckResult:
    from .conjecture import check_conjecture

    if not is_m_regular(s, m):
        return CheckResult(s.name, "T14", m, "skipped")
    fwd = check_conjecture(s, _SIDE["T14f"], m)
    if fwd.status == "fails":
        return CheckResult(s.name, "T14", m, "fails", fwd.witness, direction="forward")
    conv = check_conjecture(s, _SIDE["T14c"], m)
    if conv.status == "fails":
        return CheckResult(s.name, "T14", m, "fails", conv.witness, direction="converse")
    return CheckResult(s.name, "T14", m, "holds")


def _representation_map(
    s: OrderedSemigroup, m: int
) -> dict[int, tuple[Subset, Subset]]:
    # bits of cl(R*L) -> first (R, L) pair producing it, in enumeration order.
    rep: dict[int, tuple[Subset, Subset]] = {}
    rights = enumerate_ideals(s, IdealKind.M_RIGHT, m).subsets
    lefts = enumerate_ideals(s, IdealKind.M_LEFT, m).subsets
    for r in rights:
        for l in lefts:
            bits = downward_closure(s, subset_product(s, r, l)).bits
            rep.setdefault(bits, (r, l))
    return rep


def _run_T16(s: OrderedSemigroup, m: int) -> CheckResult:
    if not is_m_regular(s, m):
        return CheckResult(s.name, "T16", m, "skipped")
    rep = _representation_map(s, m)
    for b in _iter_subsemigroups(s):
        biint = is_ideal(s, b, IdealKind.M_BI_INTERIOR, m)
        pair = rep.get(b.bits)
        if pair is not None and not biint:
            r, l = pair
            return CheckResult(
                s.name, "T16", m, "fails",
                {"B": _elems(b), "R": _elems(r), "L": _elems(l)}, direction="forward",
            )
        if biint and pair is None:
            return CheckResult(
                s.name, "T16", m, "fails", {"B": _elems(b)}, direction="converse"
            )
    return CheckResult(s.name, "T16", m, "holds")


def _run_R2(s: OrderedSemigroup, m: int) -> CheckResult:
    if not is_m_regular(s, m):
        return CheckResult(s.name, "R2", m, "skipped")
    rep = _representation_map(s, m)
    for bits in range(1, 1 << s.size):
        b = Subset(bits, s.size)
        bi = is_ideal(s, b, IdealKind.M_BI, m)
        pair = rep.get(bits)
        if bi and pair is None:
            return CheckResult(
                s.name, "R2", m, "fails", {"B": _elems(b)}, direction="forward"
            )
        if pair is not None and not bi:
            r, l = pair
            return CheckResult(
                s.name, "R2", m, "fails",
                {"B": _elems(b), "R": _elems(r), "L": _elems(l)}, direction="converse",
            )
    return CheckResult(s.name, "R2", m, "holds")


def _run_E1(s: OrderedSemigroup, m: int) -> CheckResult:
    sm = universe_power(s, m)
    for b in enumerate_ideals(s, IdealKind.M_BI_INTERIOR, m).subsets:
        x = downward_closure(s, subset_product(s, subset_product(s, sm, b), sm))
        if not is_ideal(s, x, IdealKind.M_TWO_SIDED, m):
            return CheckResult(s.name, "E1", m, "fails", {"B": _elems(b)})
    return CheckResult(s.name, "E1", m, "holds")


def _run_E2(s: OrderedSemigroup, m: int) -> CheckResult:
    if m < 2:
        return CheckResult(s.name, "E2", m, "skipped")
    for m1 in range(1, m + 1):
        for m2 in range(1, m + 1):
            if m1 == m2 or max(m1, m2) != m:
                continue
            for a in enumerate_ideals(s, IdealKind.M_BI_INTERIOR, m1).subsets:
                for b in enumerate_ideals(s, IdealKind.M_BI_INTERIOR, m2).subsets:
                    c = a & b
                    if c.is_empty:
                        continue
                    if not is_ideal(s, c, IdealKind.M_BI_INTERIOR, m):
                        return CheckResult(
                            s.name, "E2", m, "fails",
                            {"A": _elems(a), "B": _elems(b), "m1": m1, "m2": m2},
                        )
    return CheckResult(s.name, "E2", m, "holds")


# ----------------------------------------------------------------- registry

_STATEMENTS: list[tuple[str, str, str]] = [
    ("L1", "A <= cl(A) for every subset A", THEOREM),
    ("L2", "cl(cl(A)) = cl(A) for every subset A", THEOREM),
    ("L3", "A <= B implies cl(A) <= cl(B)", THEOREM),
    ("L4", "cl(A & B) <= cl(A) & cl(B)", THEOREM),
    ("L5", "cl(A | B) = cl(A) | cl(B)", THEOREM),
    ("L6", "cl(A) * cl(B) <= cl(A * B)", THEOREM),
    ("L7", "cl(cl(A) * cl(B)) = cl(A * B)", THEOREM),
    ("T1", "every m_left ideal satisfies the bi-interior containment", THEOREM),
    ("T1'", "every m_right ideal satisfies the bi-interior containment", THEOREM),
    ("T2", "every m_two_sided ideal satisfies the bi-interior containment", THEOREM),
    ("T3", "the intersection of two m_bi_interior ideals is one when nonempty", THEOREM),
    ("T4", "the intersection of an m_right and an m_left ideal is m_bi_interior", THEOREM),
    ("T5", "every m_quasi ideal satisfies the bi-interior containment", THEOREM),
    ("T6", "every m_bi ideal satisfies the bi-interior containment", THEOREM),
    ("T7", "every m_interior ideal satisfies the bi-interior containment", THEOREM),
    ("T8", "cl(B*S) and cl(S*B) are m_bi_interior for every m_bi_interior B", THEOREM),
    ("T9", "the intersection of an m_bi_interior ideal and an m_right ideal is m_bi_interior", THEOREM),
    ("T10", "on an m-simple structure every m_bi_interior ideal is an m_bi ideal", CLAIM),
    ("T11", "cl(A*C) is m_bi_interior for subsemigroups A, C with A an m_left ideal", CLAIM),
    ("T11'", "cl(C*A) is m_bi_interior for subsemigroups A, C; variants: A m_right (a_m_right) or C m_right (c_m_right)", CLAIM),
    ("T12", "biint-simple iff cl(S^M*{a}*S^M) & cl({a}*S^M*{a}) = S for every element a", CLAIM),
    ("T13", "m-regular iff B&I&L <= cl(B*I*L) for every m_bi_interior B, m_two_sided I, m_left L", CLAIM),
    ("T14", "on an m-regular structure m_two_sided and m_interior ideals coincide", CLAIM),
    ("T15", "m-regular iff cl(B*S^M*B) & cl(S^M*B*S^M) = B for every m_bi_interior ideal B", CLAIM),
    ("T16", "on an m-regular structure a subsemigroup is m_bi_interior iff it is cl(R*L) for some m_right R and m_left L", CLAIM),
    ("R1", "m-regular iff cl(R*L) = R & L for every m_right ideal R and m_left ideal L", CLAIM),
    ("R2", "on an m-regular structure a nonempty subset is an m_bi ideal iff it is cl(R*L) for some m_right R and m_left L", CLAIM),
    ("E1", "cl(S^M*B*S^M) is an m_two_sided ideal for every m_bi_interior ideal B", CLAIM),
    ("E2", "an m1- and an m2-bi-interior ideal (m1 != m2, max = m) intersect, when nonempty, in an m-bi-interior ideal", CLAIM),
]

REGISTRY: dict[str, CheckDef] = {
    cid: CheckDef(cid, stmt, expected) for cid, stmt, expected in _STATEMENTS
}

CHECK_IDS: tuple[str, ...] = tuple(REGISTRY)
THEOREM_IDS: tuple[str, ...] = tuple(c for c in REGISTRY if REGISTRY[c].expected == THEOREM)
CLAIM_IDS: tuple[str, ...] = tuple(c for c in REGISTRY if REGISTRY[c].expected == CLAIM)

_ALIASES = {"T1p": "T1'", "T11p": "T11'"}

_NATIVE_RUNNERS: dict[str, Callable[[OrderedSemigroup, int], CheckResult]] = {
    "T11": _run_T11,
    "T11'": _run_T11p,
    "T12": _run_T12,
    "T13": _run_T13,
    "T14": _run_T14,
    "T15": _run_T15,
    "T16": _run_T16,
    "R1": _run_R1,
    "R2": _run_R2,
    "E1": _run_E1,
    "E2": _run_E2,
}


def normalize_check_id(cid: str) -> str:
    cid = _ALIASES.get(cid, cid)
    if cid not in REGISTRY:
        raise UnknownCheckId(f"unknown check id {cid!r}")
    return cid


def resolve_check_ids(spec) -> tuple[str, ...]:
    """Expand a check selection: 'all', 'theorems', 'claims', or an id list."""
    if spec is None or spec == "all":
        return CHECK_IDS
    if spec == "theorems":
        return THEOREM_IDS
    if spec == "claims":
        return CLAIM_IDS
    if isinstance(spec, str):
        spec = [part.strip() for part in spec.split(",") if part.strip()]
    ids = tuple(normalize_check_id(c) for c in spec)
    if not ids:
        raise UnknownCheckId("empty check selection")
    return ids


def run_check(s: OrderedSemigroup, check_id: str, m: int) -> CheckResult:
    """Run one registry check on one structure at potency m."""
    cid = normalize_check_id(check_id)
    _check_potency(m)
    if cid.startswith("L"):
        return _run_law(cid, s, m)
    if cid in _CONJ:
        from .conjecture import check_conjecture

        return check_conjecture(s, _CONJ[cid], m, check_id=cid)
    return _NATIVE_RUNNERS[cid](s, m)


# -------------------------------------------------------------------- suite


@dataclass(frozen=True)
class VerificationReport:
    corpus_id: str
    potencies: tuple[int, ...]
    checks: tuple[str, ...]
    results: tuple[CheckResult, ...]
    version: str

    def summary(self) -> dict[str, dict[str, int]]:
        out = {
            cid: {"holds": 0, "fails": 0, "skipped": 0, "error": 0} for cid in self.checks
        }
        for r in self.results:
            out[r.check][r.status] += 1
        return out


def _run_cell(args: tuple[OrderedSemigroup, int, tuple[str, ...]]) -> list[CheckResult]:
    s, m, check_ids = args
    out = []
    for cid in check_ids:
        try:
            out.append(run_check(s, cid, m))
        except Exception as exc:  # propagate into the report, never abort
            out.append(
                CheckResult(s.name, cid, m, "error", error=f"{type(exc).__name__}: {exc}")
            )
    return out


def run_suite(
    corpus: Sequence[OrderedSemigroup],
    potencies: Sequence[int],
    checks=None,
    *,
    jobs: int = 1,
    corpus_id: str = "<memory>",
) -> VerificationReport:
    """Run checks over corpus x potencies x checks in deterministic order.

    With jobs > 1 the (structure, potency) cells are evaluated in a process
    pool; the result order is identical to the sequential run.
    """
    check_ids = resolve_check_ids(checks)
    pots = tuple(potencies)
    if not pots:
        raise PotencyOutOfRange("empty potency selection")
    for m in pots:
        _check_potency(m)
    tasks = [(s, m, check_ids) for s in corpus for m in pots]
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(jobs) as pool:
            cell_rows = pool.map(_run_cell, tasks, chunksize=16)
    else:
        cell_rows = [_run_cell(t) for t in tasks]
    results = tuple(r for rows in cell_rows for r in rows)
    return VerificationReport(corpus_id, pots, check_ids, results, __version__)


# ------------------------------------------------------ witness revalidation


def _need(witness: Mapping[str, object], keys: set[str]) -> None:
    if set(witness) != keys:
        raise MalformedWitness(
            f"witness names {sorted(witness)} do not match expected {sorted(keys)}"
        )


def _subset_w(s: OrderedSemigroup, witness: Mapping[str, object], key: str) -> Subset:
    v = witness.get(key)
    if not isinstance(v, (list, tuple)):
        raise MalformedWitness(f"witness {key!r} must be a list of element indices")
    try:
        return Subset.from_elements(s.size, v)
    except Exception as exc:
        raise MalformedWitness(f"witness {key!r}: {exc}") from exc


def _element_w(s: OrderedSemigroup, witness: Mapping[str, object], key: str) -> int:
    v = witness.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < s.size:
        raise MalformedWitness(f"witness {key!r} must be an element index")
    return v


def _int_w(witness: Mapping[str, object], key: str) -> int:
    v = witness.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= POTENCY_CAP:
        raise MalformedWitness(f"witness {key!r} must be a potency in 1..{POTENCY_CAP}")
    return v


def _try_ideal(s: OrderedSemigroup, b: Subset, kind: IdealKind, m: int) -> bool:
    return not b.is_empty and is_ideal(s, b, kind, m)


def _revalidate_law(s: OrderedSemigroup, result: CheckResult) -> bool:
    law = result.check
    if law in _UNARY_LAWS:
        _need(result.witness, {"A"})
        a = _subset_w(s, result.witness, "A")
        b = Subset(0, s.size)
    else:
        _need(result.witness, {"A", "B"})
        a = _subset_w(s, result.witness, "A")
        b = _subset_w(s, result.witness, "B")
    return not _law_eval(s, law, a, b)


def _revalidate_T11(s: OrderedSemigroup, result: CheckResult) -> bool:
    _need(result.witness, {"A", "C"})
    a = _subset_w(s, result.witness, "A")
    c = _subset_w(s, result.witness, "C")
    if not (is_subsemigroup(s, a) and is_subsemigroup(s, c)):
        return False
    if not _try_ideal(s, a, IdealKind.M_LEFT, result.m):
        return False
    b = downward_closure(s, subset_product(s, a, c))
    return not is_ideal(s, b, IdealKind.M_BI_INTERIOR, result.m)


def _revalidate_T11p(s: OrderedSemigroup, result: CheckResult) -> bool:
    _need(result.witness, {"A", "C"})
    a = _subset_w(s, result.witness, "A")
    c = _subset_w(s, result.witness, "C")
    if not (is_subsemigroup(s, a) and is_subsemigroup(s, c)):
        return False
    if result.direction == "a_m_right":
        hyp = _try_ideal(s, a, IdealKind.M_RIGHT, result.m)
    elif result.direction == "c_m_right":
        hyp = _try_ideal(s, c, IdealKind.M_RIGHT, result.m)
    else:
        raise MalformedWitness(f"T11' requires a variant direction, got {result.direction!r}")
    if not hyp:
        return False
    b = downward_closure(s, subset_product(s, c, a))
    return not is_ideal(s, b, IdealKind.M_BI_INTERIOR, result.m)


def _principal_equality_at(s: OrderedSemigroup, a: int, m: int) -> bool:
    one = s.subset([a])
    sm = universe_power(s, m)
    sas = downward_closure(s, subset_product(s, subset_product(s, sm, one), sm))
    asa = downward_closure(s, subset_product(s, subset_product(s, one, sm), one))
    return (sas & asa) == s.universe


def _revalidate_T12(s: OrderedSemigroup, result: CheckResult) -> bool:
    m = result.m
    if result.direction == "forward":
        _need(result.witness, {"a"})
        a = _element_w(s, result.witness, "a")
        if not simplicity(s, SimplicityKind.BI_INTERIOR_SIMPLE, m):
            return False
        return not _principal_equality_at(s, a, m)
    if result.direction == "converse":
        _need(result.witness, {"B"})
        b = _subset_w(s, result.witness, "B")
        if not all(_principal_equality_at(s, a, m) for a in range(s.size)):
            return False
        return (
            b.bits != s.universe.bits
            and _try_ideal(s, b, IdealKind.M_BI_INTERIOR, m)
        )
    raise MalformedWitness(f"T12 requires a direction, got {result.direction!r}")


def _revalidate_regularity_iff(side_id: str):
    side = _SIDE[side_id]

    def revalidate(s: OrderedSemigroup, result: CheckResult) -> bool:
        m = result.m
        if result.direction == "forward":
            if not is_m_regular(s, m):
                return False
            return revalidate_conjecture(s, side, m, result.witness)
        if result.direction == "converse":
            _need(result.witness, {"a"})
            a = _element_w(s, result.witness, "a")
            from .conjecture import check_conjecture

            if check_conjecture(s, side, m).status != "holds":
                return False
            return not is_m_regular_element(s, a, m)
        raise MalformedWitness(
            f"{result.check} requires a direction, got {result.direction!r}"
        )

    return revalidate


def _revalidate_T14(s: OrderedSemigroup, result: CheckResult) -> bool:
    if not is_m_regular(s, result.m):
        return False
    if result.direction == "forward":
        return revalidate_conjecture(s, _SIDE["T14f"], result.m, result.witness)
    if result.direction == "converse":
        return revalidate_conjecture(s, _SIDE["T14c"], result.m, result.witness)
    raise MalformedWitness(f"T14 requires a direction, got {result.direction!r}")


def _revalidate_T16(s: OrderedSemigroup, result: CheckResult) -> bool:
    m = result.m
    if not is_m_regular(s, m):
        return False
    if result.direction == "forward":
        _need(result.witness, {"B", "R", "L"})
        b = _subset_w(s, result.witness, "B")
        r = _subset_w(s, result.witness, "R")
        l = _subset_w(s, result.witness, "L")
        if not is_subsemigroup(s, b):
            return False
        if not (_try_ideal(s, r, IdealKind.M_RIGHT, m) and _try_ideal(s, l, IdealKind.M_LEFT, m)):
            return False
        if downward_closure(s, subset_product(s, r, l)).bits != b.bits:
            return False
        return not is_ideal(s, b, IdealKind.M_BI_INTERIOR, m)
    if result.direction == "converse":
        _need(result.witness, {"B"})
        b = _subset_w(s, result.witness, "B")
        if not (is_subsemigroup(s, b) and _try_ideal(s, b, IdealKind.M_BI_INTERIOR, m)):
            return False
        return b.bits not in _representation_map(s, m)
    raise MalformedWitness(f"T16 requires a direction, got {result.direction!r}")


def _revalidate_R2(s: OrderedSemigroup, result: CheckResult) -> bool:
    m = result.m
    if not is_m_regular(s, m):
        return False
    if result.direction == "forward":
        _need(result.witness, {"B"})
        b = _subset_w(s, result.witness, "B")
        if not _try_ideal(s, b, IdealKind.M_BI, m):
            return False
        return b.bits not in _representation_map(s, m)
    if result.direction == "converse":
        _need(result.witness, {"B", "R", "L"})
        b = _subset_w(s, result.witness, "B")
        r = _subset_w(s, result.witness, "R")
        l = _subset_w(s, result.witness, "L")
        if not (_try_ideal(s, r, IdealKind.M_RIGHT, m) and _try_ideal(s, l, IdealKind.M_LEFT, m)):
            return False
        if downward_closure(s, subset_product(s, r, l)).bits != b.bits:
            return False
        return b.is_empty or not is_ideal(s, b, IdealKind.M_BI, m)
    raise MalformedWitness(f"R2 requires a direction, got {result.direction!r}")


def _revalidate_E1(s: OrderedSemigroup, result: CheckResult) -> bool:
    _need(result.witness, {"B"})
    b = _subset_w(s, result.witness, "B")
    m = result.m
    if not _try_ideal(s, b, IdealKind.M_BI_INTERIOR, m):
        return False
    sm = universe_power(s, m)
    x = downward_closure(s, subset_product(s, subset_product(s, sm, b), sm))
    return not is_ideal(s, x, IdealKind.M_TWO_SIDED, m)


def _revalidate_E2(s: OrderedSemigroup, result: CheckResult) -> bool:
    _need(result.witness, {"A", "B", "m1", "m2"})
    a = _subset_w(s, result.witness, "A")
    b = _subset_w(s, result.witness, "B")
    m1 = _int_w(result.witness, "m1")
    m2 = _int_w(result.witness, "m2")
    if m1 == m2 or max(m1, m2) != result.m:
        return False
    if not (_try_ideal(s, a, IdealKind.M_BI_INTERIOR, m1) and _try_ideal(s, b, IdealKind.M_BI_INTERIOR, m2)):
        return False
    c = a & b
    if c.is_empty:
        return False
    return not is_ideal(s, c, IdealKind.M_BI_INTERIOR, result.m)


_NATIVE_REVALIDATORS: dict[str, Callable[[OrderedSemigroup, CheckResult], bool]] = {
    "T11": _revalidate_T11,
    "T11'": _revalidate_T11p,
    "T12": _revalidate_T12,
    "T13": _revalidate_regularity_iff("T13"),
    "T14": _revalidate_T14,
    "T15": _revalidate_regularity_iff("T15"),
    "T16": _revalidate_T16,
    "R1": _revalidate_regularity_iff("R1"),
    "R2": _revalidate_R2,
    "E1": _revalidate_E1,
    "E2": _revalidate_E2,
}


def validate_witness(s: OrderedSemigroup, result: CheckResult) -> bool:
    """Re-evaluate a fails row through the definitional code path.

    True means the recorded witness still demonstrates the failure on s.
    Unknown check ids are treated as conjecture text, so ad-hoc conjecture
    rows replay through the same interface.
    """
    if result.status != "fails":
        raise MalformedWitness(f"cannot replay a {result.status!r} row")
    if result.witness is None:
        raise MalformedWitness("fails row carries no witness")
    if s.name != result.structure:
        raise MalformedWitness(
            f"row names structure {result.structure!r}, got {s.name!r}"
        )
    _check_potency(result.m)
    cid = result.check
    if cid in _ALIASES:
        cid = _ALIASES[cid]
    if cid in REGISTRY:
        if cid.startswith("L"):
            return _revalidate_law(s, result)
        if cid in _CONJ:
            return revalidate_conjecture(s, _CONJ[cid], result.m, result.witness)
        return _NATIVE_REVALIDATORS[cid](s, result)
    try:
        conj = parse_conjecture(cid)
    except ConjectureSyntaxError as exc:
        raise UnknownCheckId(
            f"check {cid!r} is neither a registry id nor conjecture text"
        ) from exc
    return revalidate_conjecture(s, conj, result.m, result.witness)
