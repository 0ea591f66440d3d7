"""A small universally quantified language over subsets of a structure.

    conjecture := binder+ [guard] ":" body
    binder     := "forall" IDENT "in" range
    range      := "all" | "downclosed" | "elements" | "kind" "(" kindname ")"
    guard      := "where" ("regular" | "simple" | "left_simple"
                           | "right_simple" | "biint_simple")
    body       := relation ("and" relation)*
    relation   := expr ("<=" | "=") expr
    expr       := term ("|" term)*
    term       := factor ("&" factor)*
    factor     := atom ("*" atom)*
    atom       := "S" | IDENT | "{" IDENT "}" | "cl" "(" expr ")"
                | "(" expr ")" | atom "^" (INT | "M")
    kindname   := m_left | m_right | m_two_sided | m_quasi | m_bi
                | m_interior | m_bi_interior

Set operators bind as Power > Product (*) > Intersection (&) > Union (|).
"S" is the universe, "S^M" the m-fold product set at the ambient potency,
"{a}" the singleton of an element variable, "cl( )" downward closure.
Subset variables range over all nonempty subsets, the downward-closed
ones, or the ideals of a kind; element variables range over elements.
A guard restricts evaluation to structures with the named property and
makes the check report "skipped" elsewhere.

format_conjecture prints a canonical, fully parenthesized form;
parse_conjecture(format_conjecture(c)) reproduces c exactly.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Union as TUnion

from .enumeration import enumerate_downward_closed, enumerate_ideals
from .errors import (
    ConjectureSyntaxError,
    DuplicateBinder,
    IndexOutOfRange,
    MalformedWitness,
    UnboundVariable,
)
from .ideals import IdealKind, SimplicityKind, is_ideal, is_m_regular, simplicity
from .structures import (
    OrderedSemigroup,
    Subset,
    _check_potency,
    downward_closure,
    is_downward_closed,
    subset_product,
)

# ---------------------------------------------------------------- AST types


class SetExpr:
    __slots__ = ()


@dataclass(frozen=True)
class Universe(SetExpr):
    pass


@dataclass(frozen=True)
class Var(SetExpr):
    name: str


@dataclass(frozen=True)
class Singleton(SetExpr):
    name: str


@dataclass(frozen=True)
class Product(SetExpr):
    left: SetExpr
    right: SetExpr


@dataclass(frozen=True)
class Power(SetExpr):
    base: SetExpr
    exponent: Optional[int]  # None stands for the ambient potency M


@dataclass(frozen=True)
class Closure(SetExpr):
    inner: SetExpr


@dataclass(frozen=True)
class Intersection(SetExpr):
    left: SetExpr
    right: SetExpr


@dataclass(frozen=True)
class UnionExpr(SetExpr):
    left: SetExpr
    right: SetExpr


class RangeSort(enum.Enum):
    ALL = "all"
    DOWNCLOSED = "downclosed"
    ELEMENTS = "elements"
    KIND = "kind"


@dataclass(frozen=True)
class BinderRange:
    sort: RangeSort
    kind: Optional[IdealKind] = None

    def __str__(self) -> str:
        if self.sort is RangeSort.KIND:
            return f"kind({self.kind.value})"
        return self.sort.value


@dataclass(frozen=True)
class Binder:
    name: str
    range: BinderRange

    @property
    def is_element(self) -> bool:
        return self.range.sort is RangeSort.ELEMENTS


class StructureGuard(enum.Enum):
    REGULAR = "regular"
    SIMPLE = "simple"
    LEFT_SIMPLE = "left_simple"
    RIGHT_SIMPLE = "right_simple"
    BIINT_SIMPLE = "biint_simple"


@dataclass(frozen=True)
class Relation:
    left: SetExpr
    op: str  # "<=" or "="
    right: SetExpr


@dataclass(frozen=True)
class Conjecture:
    binders: tuple[Binder, ...]
    guard: Optional[StructureGuard]
    body: tuple[Relation, ...]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check on one structure at one potency.

    status is "holds", "fails", or "skipped" (guard false); run_suite may
    also record "error" rows.  witness maps quantified variable names to
    element indices or sorted element lists and is present iff status is
    "fails"; direction distinguishes the failing half of two-sided checks.
    """

    structure: str
    check: str
    m: int
    status: str
    witness: Optional[Mapping[str, object]] = None
    direction: Optional[str] = None
    error: Optional[str] = None


# ---------------------------------------------------------------- tokenizer

_KEYWORDS = {
    "forall",
    "in",
    "where",
    "and",
    "cl",
    "kind",
    "all",
    "downclosed",
    "elements",
    "S",
    "M",
}
_GUARDS = {g.value for g in StructureGuard}
_KINDS = {k.value: k for k in IdealKind}
_RESERVED = _KEYWORDS | _GUARDS | set(_KINDS)


@dataclass(frozen=True)
class _Token:
    type: str  # word | int | sym | eof
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    toks = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Token("word", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch == "<" and i + 1 < n and text[i + 1] == "=":
            toks.append(_Token("sym", "<=", line, col))
            i += 2
            col += 2
            continue
        if ch in "(){}*&|^=:":
            toks.append(_Token("sym", ch, line, col))
            i += 1
            col += 1
            continue
        raise ConjectureSyntaxError(
            f"unexpected character {ch!r}", line, col, {"token"}
        )
    toks.append(_Token("eof", "", line, col))
    return toks


# ------------------------------------------------------------------- parser


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0
        self.binders: list[Binder] = []
        self.sorts: dict[str, bool] = {}  # name -> is_element

    def peek(self) -> _Token:
        return self.toks[self.pos]

    def advance(self) -> _Token:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: set[str]) -> None:
        tok = self.peek()
        got = tok.text if tok.type != "eof" else "end of input"
        wanted = " or ".join(sorted(expected))
        raise ConjectureSyntaxError(
            f"expected {wanted}, got {got!r}", tok.line, tok.col, expected
        )

    def expect_word(self, word: str) -> _Token:
        tok = self.peek()
        if tok.type != "word" or tok.text != word:
            self.fail({f"'{word}'"})
        return self.advance()

    def expect_sym(self, sym: str) -> _Token:
        tok = self.peek()
        if tok.type != "sym" or tok.text != sym:
            self.fail({f"'{sym}'"})
        return self.advance()

    def at_word(self, word: str) -> bool:
        tok = self.peek()
        return tok.type == "word" and tok.text == word

    def at_sym(self, sym: str) -> bool:
        tok = self.peek()
        return tok.type == "sym" and tok.text == sym

    def expect_ident(self) -> _Token:
        tok = self.peek()
        if tok.type != "word" or tok.text in _RESERVED:
            self.fail({"identifier"})
        return self.advance()

    # grammar rules

    def conjecture(self) -> Conjecture:
        self.binder()
        while self.at_word("forall"):
            self.binder()
        guard = None
        if self.at_word("where"):
            self.advance()
            guard = self.guard()
        self.expect_sym(":")
        body = [self.relation()]
        while self.at_word("and"):
            self.advance()
            body.append(self.relation())
        tok = self.peek()
        if tok.type != "eof":
            self.fail({"'and'", "end of input"})
        return Conjecture(tuple(self.binders), guard, tuple(body))

    def binder(self) -> None:
        self.expect_word("forall")
        name_tok = self.expect_ident()
        if name_tok.text in self.sorts:
            raise DuplicateBinder(
                f"variable {name_tok.text!r} bound twice", name_tok.line, name_tok.col
            )
        self.expect_word("in")
        rng = self.range()
        self.binders.append(Binder(name_tok.text, rng))
        self.sorts[name_tok.text] = rng.sort is RangeSort.ELEMENTS

    def range(self) -> BinderRange:
        tok = self.peek()
        if tok.type == "word" and tok.text in ("all", "downclosed", "elements"):
            self.advance()
            return BinderRange(RangeSort(tok.text))
        if tok.type == "word" and tok.text == "kind":
            self.advance()
            self.expect_sym("(")
            ktok = self.peek()
            if ktok.type != "word" or ktok.text not in _KINDS:
                self.fail({f"'{k}'" for k in _KINDS})
            self.advance()
            self.expect_sym(")")
            return BinderRange(RangeSort.KIND, _KINDS[ktok.text])
        self.fail({"'all'", "'downclosed'", "'elements'", "'kind'"})
        raise AssertionError  # unreachable

    def guard(self) -> StructureGuard:
        tok = self.peek()
        if tok.type != "word" or tok.text not in _GUARDS:
            self.fail({f"'{g}'" for g in sorted(_GUARDS)})
        self.advance()
        return StructureGuard(tok.text)

    def relation(self) -> Relation:
        left = self.expr()
        tok = self.peek()
        if tok.type == "sym" and tok.text in ("<=", "="):
            self.advance()
            right = self.expr()
            return Relation(left, tok.text, right)
        self.fail({"'<='", "'='"})
        raise AssertionError

    def expr(self) -> SetExpr:
        e = self.term()
        while self.at_sym("|"):
            self.advance()
            e = UnionExpr(e, self.term())
        return e

    def term(self) -> SetExpr:
        e = self.factor()
        while self.at_sym("&"):
            self.advance()
            e = Intersection(e, self.factor())
        return e

    def factor(self) -> SetExpr:
        e = self.atom()
        while self.at_sym("*"):
            self.advance()
            e = Product(e, self.atom())
        return e

    def atom(self) -> SetExpr:
        e = self.primary()
        while self.at_sym("^"):
            self.advance()
            tok = self.peek()
            if tok.type == "int":
                value = int(tok.text)
                if value < 1:
                    raise ConjectureSyntaxError(
                        "exponent must be at least 1", tok.line, tok.col, {"integer"}
                    )
                self.advance()
                e = Power(e, value)
            elif tok.type == "word" and tok.text == "M":
                self.advance()
                e = Power(e, None)
            else:
                self.fail({"integer", "'M'"})
        return e

    def primary(self) -> SetExpr:
        tok = self.peek()
        if tok.type == "word":
            if tok.text == "S":
                self.advance()
                return Universe()
            if tok.text == "cl":
                self.advance()
                self.expect_sym("(")
                inner = self.expr()
                self.expect_sym(")")
                return Closure(inner)
            if tok.text in _RESERVED:
                self.fail({"'S'", "'cl'", "identifier", "'('", "'{'"})
            self.advance()
            if tok.text not in self.sorts:
                raise UnboundVariable(
                    f"variable {tok.text!r} is not bound by any quantifier",
                    tok.line,
                    tok.col,
                )
            if self.sorts[tok.text]:
                raise UnboundVariable(
                    f"variable {tok.text!r} is element-bound; write {{{tok.text}}}",
                    tok.line,
                    tok.col,
                )
            return Var(tok.text)
        if tok.type == "sym" and tok.text == "{":
            self.advance()
            name_tok = self.expect_ident()
            self.expect_sym("}")
            if name_tok.text not in self.sorts:
                raise UnboundVariable(
                    f"variable {name_tok.text!r} is not bound by any quantifier",
                    name_tok.line,
                    name_tok.col,
                )
            if not self.sorts[name_tok.text]:
                raise UnboundVariable(
                    f"variable {name_tok.text!r} is subset-bound; write {name_tok.text}",
                    name_tok.line,
                    name_tok.col,
                )
            return Singleton(name_tok.text)
        if tok.type == "sym" and tok.text == "(":
            self.advance()
            inner = self.expr()
            self.expect_sym(")")
            return inner
        self.fail({"'S'", "'cl'", "identifier", "'('", "'{'"})
        raise AssertionError


def parse_conjecture(text: str) -> Conjecture:
    """Parse conjecture text; errors carry 1-based line and column."""
    return _Parser(text).conjecture()


# ------------------------------------------------------------------ printer


def format_set_expr(e: SetExpr) -> str:
    if isinstance(e, Universe):
        return "S"
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Singleton):
        return "{" + e.name + "}"
    if isinstance(e, Closure):
        return f"cl({format_set_expr(e.inner)})"
    if isinstance(e, Power):
        exp = "M" if e.exponent is None else str(e.exponent)
        return f"{format_set_expr(e.base)}^{exp}"
    if isinstance(e, Product):
        return f"({format_set_expr(e.left)} * {format_set_expr(e.right)})"
    if isinstance(e, Intersection):
        return f"({format_set_expr(e.left)} & {format_set_expr(e.right)})"
    if isinstance(e, UnionExpr):
        return f"({format_set_expr(e.left)} | {format_set_expr(e.right)})"
    raise TypeError(f"unknown expression node {e!r}")


def format_conjecture(c: Conjecture) -> str:
    """Canonical text form; reparsing it reproduces the same AST."""
    head = " ".join(f"forall {b.name} in {b.range}" for b in c.binders)
    if c.guard is not None:
        head += f" where {c.guard.value}"
    body = " and ".join(
        f"{format_set_expr(r.left)} {r.op} {format_set_expr(r.right)}" for r in c.body
    )
    return f"{head}: {body}"


# ---------------------------------------------------------------- evaluator


def eval_set_expr(
    s: OrderedSemigroup,
    env: Mapping[str, TUnion[Subset, int]],
    m: int,
    e: SetExpr,
) -> Subset:
    """Evaluate a set expression under an assignment of bound variables."""
    _check_potency(m)
    if isinstance(e, Universe):
        return s.universe
    if isinstance(e, Var):
        v = env.get(e.name)
        if not isinstance(v, Subset):
            raise UnboundVariable(f"variable {e.name!r} has no subset binding")
        return v
    if isinstance(e, Singleton):
        v = env.get(e.name)
        if not isinstance(v, int) or isinstance(v, bool):
            raise UnboundVariable(f"variable {e.name!r} has no element binding")
        return s.subset([v])
    if isinstance(e, Closure):
        return downward_closure(s, eval_set_expr(s, env, m, e.inner))
    if isinstance(e, Power):
        base = eval_set_expr(s, env, m, e.base)
        k = m if e.exponent is None else e.exponent
        out = base
        for _ in range(k - 1):
            out = subset_product(s, out, base)
        return out
    if isinstance(e, Product):
        return subset_product(
            s, eval_set_expr(s, env, m, e.left), eval_set_expr(s, env, m, e.right)
        )
    if isinstance(e, Intersection):
        return eval_set_expr(s, env, m, e.left) & eval_set_expr(s, env, m, e.right)
    if isinstance(e, UnionExpr):
        return eval_set_expr(s, env, m, e.left) | eval_set_expr(s, env, m, e.right)
    raise TypeError(f"unknown expression node {e!r}")


def _relation_holds(s: OrderedSemigroup, env, m: int, r: Relation) -> bool:
    left = eval_set_expr(s, env, m, r.left)
    right = eval_set_expr(s, env, m, r.right)
    if r.op == "<=":
        return left.issubset(right)
    return left == right


def _body_holds(s: OrderedSemigroup, env, m: int, body: tuple[Relation, ...]) -> bool:
    return all(_relation_holds(s, env, m, r) for r in body)


def guard_holds(s: OrderedSemigroup, guard: StructureGuard, m: int) -> bool:
    if guard is StructureGuard.REGULAR:
        return is_m_regular(s, m)
    kind = {
        StructureGuard.SIMPLE: SimplicityKind.SIMPLE,
        StructureGuard.LEFT_SIMPLE: SimplicityKind.LEFT_SIMPLE,
        StructureGuard.RIGHT_SIMPLE: SimplicityKind.RIGHT_SIMPLE,
        StructureGuard.BIINT_SIMPLE: SimplicityKind.BI_INTERIOR_SIMPLE,
    }[guard]
    return simplicity(s, kind, m)


def _binder_domain(s: OrderedSemigroup, rng: BinderRange, m: int):
    if rng.sort is RangeSort.ELEMENTS:
        return list(range(s.size))
    if rng.sort is RangeSort.ALL:
        return [Subset(bits, s.size) for bits in range(1, 1 << s.size)]
    if rng.sort is RangeSort.DOWNCLOSED:
        return list(enumerate_downward_closed(s))
    return list(enumerate_ideals(s, rng.kind, m).subsets)


def _encode_value(v: TUnion[Subset, int]):
    if isinstance(v, Subset):
        return list(v.elements())
    return v


def check_conjecture(
    s: OrderedSemigroup, c: Conjecture, m: int, *, check_id: Optional[str] = None
) -> CheckResult:
    """Evaluate a conjecture on one structure at one potency.

    Returns the first falsifying assignment as a witness, iterating binder
    domains in ascending order with the leftmost binder outermost.
    """
    _check_potency(m)
    cid = check_id if check_id is not None else format_conjecture(c)
    if c.guard is not None and not guard_holds(s, c.guard, m):
        return CheckResult(s.name, cid, m, "skipped")
    domains = [_binder_domain(s, b.range, m) for b in c.binders]
    names = [b.name for b in c.binders]
    for values in itertools.product(*domains):
        env = dict(zip(names, values))
        if not _body_holds(s, env, m, c.body):
            witness = {name: _encode_value(env[name]) for name in names}
            return CheckResult(s.name, cid, m, "fails", witness)
    return CheckResult(s.name, cid, m, "holds")


# ------------------------------------------------------- witness revalidation


def _in_range(s: OrderedSemigroup, value, rng: BinderRange, m: int) -> bool:
    if rng.sort is RangeSort.ELEMENTS:
        return True  # shape already validated
    assert isinstance(value, Subset)
    if value.is_empty:
        return False
    if rng.sort is RangeSort.ALL:
        return True
    if rng.sort is RangeSort.DOWNCLOSED:
        return is_downward_closed(s, value)
    return is_ideal(s, value, rng.kind, m)


def witness_env(
    s: OrderedSemigroup, c: Conjecture, witness: Mapping[str, object]
) -> dict[str, TUnion[Subset, int]]:
    """Decode a serialized witness against a conjecture's binders.

    Raises MalformedWitness when names or value shapes do not line up.
    """
    if witness is None:
        raise MalformedWitness("missing witness payload")
    names = {b.name for b in c.binders}
    if set(witness) != names:
        raise MalformedWitness(
            f"witness names {sorted(witness)} do not match binders {sorted(names)}"
        )
    env: dict[str, TUnion[Subset, int]] = {}
    for b in c.binders:
        v = witness[b.name]
        if b.is_element:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < s.size:
                raise MalformedWitness(f"witness {b.name!r} must be an element index")
            env[b.name] = v
        else:
            if not isinstance(v, (list, tuple)):
                raise MalformedWitness(f"witness {b.name!r} must be a list of elements")
            try:
                env[b.name] = Subset.from_elements(s.size, v)
            except IndexOutOfRange as exc:
                raise MalformedWitness(f"witness {b.name!r}: {exc}") from exc
    return env


def revalidate_conjecture(
    s: OrderedSemigroup, c: Conjecture, m: int, witness: Mapping[str, object]
) -> bool:
    """True when the witness assignment still falsifies the conjecture.

    The guard must hold, every value must lie in its binder's range, and the
    body must evaluate to false; any shortfall means the failure does not
    reproduce.
    """
    env = witness_env(s, c, witness)
    if c.guard is not None and not guard_holds(s, c.guard, m):
        return False
    for b in c.binders:
        if not _in_range(s, env[b.name], b.range, m):
            return False
    return not _body_holds(s, env, m, c.body)
