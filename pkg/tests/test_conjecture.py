"""Conjecture language: parser, printer, evaluator, checker, revalidation."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import osgkit as og
from osgkit.conjecture import (
    Binder,
    BinderRange,
    Closure,
    Power,
    Product,
    RangeSort,
    Relation,
    Singleton,
    StructureGuard,
    Universe,
    UnionExpr,
    Var,
    _binder_domain,
    check_conjecture,
    eval_set_expr,
    format_conjecture,
    format_set_expr,
    guard_holds,
    parse_conjecture,
    revalidate_conjecture,
    witness_env,
)
from osgkit.ideals import IdealKind
from osgkit.structures import Subset

from conftest import random_conjecture

TAUTOLOGY = "forall B in kind(m_bi_interior): cl(B*S^M*B) & cl(S^M*B*S^M) <= B"
PRINCIPAL_EQ = "forall a in elements: cl(S^M*{a}*S^M) & cl({a}*S^M*{a}) = S"


class TestParse:
    def test_subset_binder_example(self):
        c = parse_conjecture(TAUTOLOGY)
        assert len(c.binders) == 1
        assert c.binders[0].name == "B"
        assert c.binders[0].range == BinderRange(RangeSort.KIND, IdealKind.M_BI_INTERIOR)
        assert c.guard is None
        assert len(c.body) == 1
        assert c.body[0].op == "<="

    def test_element_binder_example(self):
        c = parse_conjecture(PRINCIPAL_EQ)
        assert c.binders[0].is_element
        assert c.body[0].op == "="

    def test_guard(self):
        c = parse_conjecture("forall B in downclosed where regular: B <= S")
        assert c.guard is StructureGuard.REGULAR

    def test_duplicate_binder(self):
        text = "forall B in kind(m_bi_interior) forall B in all: B <= B"
        with pytest.raises(og.DuplicateBinder) as ei:
            parse_conjecture(text)
        assert ei.value.line == 1
        assert ei.value.col == text.rindex("B in all") + 1

    def test_missing_colon_position(self):
        text = "forall B in kind(m_left) B <= B"
        with pytest.raises(og.ConjectureSyntaxError) as ei:
            parse_conjecture(text)
        assert ei.value.line == 1
        assert ei.value.col == text.index("B <= B") + 1
        assert "':'" in ei.value.expected

    def test_unbound_variable_position(self):
        text = "forall B in all: B <= C"
        with pytest.raises(og.UnboundVariable) as ei:
            parse_conjecture(text)
        assert (ei.value.line, ei.value.col) == (1, text.index("C") + 1)

    def test_unbound_on_second_line(self):
        with pytest.raises(og.UnboundVariable) as ei:
            parse_conjecture("forall B in all:\nB <= C")
        assert (ei.value.line, ei.value.col) == (2, 6)

    def test_sort_mismatch_element_used_as_subset(self):
        with pytest.raises(og.UnboundVariable) as ei:
            parse_conjecture("forall a in elements: a <= S")
        assert "write {a}" in str(ei.value)

    def test_sort_mismatch_subset_used_as_singleton(self):
        with pytest.raises(og.UnboundVariable) as ei:
            parse_conjecture("forall B in all: {B} <= S")
        assert "write B" in str(ei.value)

    def test_exponent_must_be_positive(self):
        text = "forall B in all: B^0 <= S"
        with pytest.raises(og.ConjectureSyntaxError) as ei:
            parse_conjecture(text)
        assert ei.value.col == text.index("0") + 1

    def test_reserved_word_is_not_an_identifier(self):
        with pytest.raises(og.ConjectureSyntaxError):
            parse_conjecture("forall S in all: S <= S")
        with pytest.raises(og.ConjectureSyntaxError):
            parse_conjecture("forall m_left in all: m_left <= S")

    def test_unexpected_character(self):
        text = "forall B in all: B <= B;"
        with pytest.raises(og.ConjectureSyntaxError) as ei:
            parse_conjecture(text)
        assert ei.value.col == text.index(";") + 1

    def test_truncated_input(self):
        with pytest.raises(og.ConjectureSyntaxError) as ei:
            parse_conjecture("forall B in all: B <=")
        assert "end of input" in str(ei.value)

    def test_bad_kind_name(self):
        with pytest.raises(og.ConjectureSyntaxError):
            parse_conjecture("forall B in kind(m_weird): B <= S")

    def test_precedence(self):
        c = parse_conjecture("forall B in all: B | B & B * B^2 <= S")
        (rel,) = c.body
        assert isinstance(rel.left, UnionExpr)
        assert rel.left.left == Var("B")
        inter = rel.left.right
        assert inter.left == Var("B")
        prod = inter.right
        assert isinstance(prod, Product)
        assert prod.right == Power(Var("B"), 2)


class TestFormat:
    def test_symbolic_power(self):
        assert format_set_expr(Power(Universe(), None)) == "S^M"

    def test_nested_product_parenthesized(self):
        e = Product(Var("B"), Product(Universe(), Var("B")))
        assert format_set_expr(e) == "(B * (S * B))"

    def test_full_conjecture(self):
        c = parse_conjecture("forall B in kind(m_left) where simple: B <= S and S <= S")
        assert (
            format_conjecture(c)
            == "forall B in kind(m_left) where simple: B <= S and S <= S"
        )

    def test_format_is_canonical_fixed_point(self):
        for text in (TAUTOLOGY, PRINCIPAL_EQ):
            once = format_conjecture(parse_conjecture(text))
            assert format_conjecture(parse_conjecture(once)) == once


class TestRoundTrip:
    @settings(max_examples=300)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_parse_format_identity(self, seed):
        c = random_conjecture(random.Random(seed))
        assert parse_conjecture(format_conjecture(c)) == c


class TestEval:
    def test_closure_of_sandwich_chain(self, ch2):
        c = parse_conjecture("forall B in all: cl(B*S^M*B) <= S")
        expr = c.body[0].left
        got = eval_set_expr(ch2, {"B": ch2.subset([0])}, 1, expr)
        assert got.elements() == (0,)

    def test_closure_of_sandwich_left_zero(self, lz2):
        c = parse_conjecture("forall B in all: cl(S^M*B*S^M) <= S")
        expr = c.body[0].left
        got = eval_set_expr(lz2, {"B": lz2.subset([0])}, 1, expr)
        assert got.elements() == (0, 1)

    def test_empty_annihilates(self, g2):
        got = eval_set_expr(g2, {"B": g2.empty}, 1, Product(Var("B"), Universe()))
        assert got.is_empty

    def test_power_semantics(self, n2, fixture_structures):
        assert eval_set_expr(n2, {}, 1, Power(Universe(), 2)).elements() == (0,)
        for s in fixture_structures.values():
            for m in (1, 2, 3):
                sym = eval_set_expr(s, {}, m, Power(Universe(), None))
                assert sym == og.universe_power(s, m)

    def test_unbound_variable(self, ch2):
        with pytest.raises(og.UnboundVariable):
            eval_set_expr(ch2, {}, 1, Var("B"))
        with pytest.raises(og.UnboundVariable):
            eval_set_expr(ch2, {"a": ch2.subset([0])}, 1, Singleton("a"))

    def test_singleton(self, ch2):
        assert eval_set_expr(ch2, {"a": 1}, 1, Singleton("a")).elements() == (1,)


class TestCheck:
    def test_tautology_holds_everywhere(self, fixture_structures):
        c = parse_conjecture(TAUTOLOGY)
        for s in fixture_structures.values():
            for m in (1, 2, 3):
                assert check_conjecture(s, c, m).status == "holds"

    def test_principal_equality_split(self, g2, ch2):
        c = parse_conjecture(PRINCIPAL_EQ)
        assert check_conjecture(g2, c, 1).status == "holds"
        res = check_conjecture(ch2, c, 1)
        assert res.status == "fails"
        assert res.witness == {"a": 0}

    def test_guard_skips(self, n2):
        c = parse_conjecture("forall B in all where regular: B <= S")
        res = check_conjecture(n2, c, 1)
        assert res.status == "skipped"
        assert res.witness is None

    def test_first_falsifier_is_reported(self, lz2):
        c = parse_conjecture("forall B in all: S*B <= B")
        res = check_conjecture(lz2, c, 1)
        assert res.status == "fails"
        assert res.witness == {"B": [0]}

    def test_check_id_defaults_to_canonical_text(self, ch2):
        c = parse_conjecture(TAUTOLOGY)
        res = check_conjecture(ch2, c, 1)
        assert res.check == format_conjecture(c)
        res2 = check_conjecture(ch2, c, 1, check_id="T-taut")
        assert res2.check == "T-taut"

    def test_multi_binder_witness_keys(self, g2):
        c = parse_conjecture("forall A in all forall b in elements: A <= A*{b}")
        res = check_conjecture(g2, c, 1)
        assert res.status == "fails"
        assert set(res.witness) == {"A", "b"}


class TestDomains:
    def test_all_means_nonempty(self, ch2):
        dom = _binder_domain(ch2, BinderRange(RangeSort.ALL), 1)
        assert [d.bits for d in dom] == [1, 2, 3]

    def test_downclosed_matches_enumeration(self, ch3):
        dom = _binder_domain(ch3, BinderRange(RangeSort.DOWNCLOSED), 1)
        assert dom == list(og.enumerate_downward_closed(ch3))

    def test_kind_equals_all_plus_filter(self, fixture_structures):
        for s in fixture_structures.values():
            for kind in IdealKind:
                for m in (1, 2):
                    via_kind = _binder_domain(s, BinderRange(RangeSort.KIND, kind), m)
                    via_all = [
                        b
                        for b in _binder_domain(s, BinderRange(RangeSort.ALL), m)
                        if og.is_ideal(s, b, kind, m)
                    ]
                    assert via_kind == via_all

    def test_guard_matches_predicates(self, fixture_structures):
        from osgkit.ideals import SimplicityKind, is_m_regular, simplicity

        pairs = {
            StructureGuard.REGULAR: lambda s, m: is_m_regular(s, m),
            StructureGuard.SIMPLE: lambda s, m: simplicity(s, SimplicityKind.SIMPLE, m),
            StructureGuard.BIINT_SIMPLE: lambda s, m: simplicity(
                s, SimplicityKind.BI_INTERIOR_SIMPLE, m
            ),
        }
        for s in fixture_structures.values():
            for m in (1, 2):
                for guard, oracle in pairs.items():
                    assert guard_holds(s, guard, m) == oracle(s, m)


class TestRevalidate:
    def test_real_witness_reproduces(self, ch2):
        c = parse_conjecture(PRINCIPAL_EQ)
        res = check_conjecture(ch2, c, 1)
        assert revalidate_conjecture(ch2, c, 1, res.witness) is True

    def test_tampered_witness_does_not(self, lz2):
        c = parse_conjecture("forall B in all: S*B <= B")
        res = check_conjecture(lz2, c, 1)
        assert res.witness == {"B": [0]}
        assert revalidate_conjecture(lz2, c, 1, {"B": [0, 1]}) is False

    def test_out_of_range_value_is_rejected_not_reproduced(self, ch2):
        # {1} is not downward closed, so it is outside the binder's range
        c = parse_conjecture("forall B in downclosed: S*B <= B")
        assert revalidate_conjecture(ch2, c, 1, {"B": [1]}) is False

    def test_kind_range_checked(self, lz2):
        c = parse_conjecture("forall B in kind(m_left): cl(B*S) <= B")
        # {0} is not an m-left ideal of the left-zero structure
        assert revalidate_conjecture(lz2, c, 1, {"B": [0]}) is False

    def test_guard_must_hold(self, n2):
        c = parse_conjecture("forall B in all where regular: S*B <= B")
        assert revalidate_conjecture(n2, c, 1, {"B": [1]}) is False

    def test_malformed_shapes(self, ch2):
        c = parse_conjecture("forall B in all: S*B <= B")
        with pytest.raises(og.MalformedWitness):
            witness_env(ch2, c, {"C": [0]})
        with pytest.raises(og.MalformedWitness):
            witness_env(ch2, c, {"B": 0})
        with pytest.raises(og.MalformedWitness):
            witness_env(ch2, c, {"B": [5]})
        with pytest.raises(og.MalformedWitness):
            witness_env(ch2, c, None)
        e = parse_conjecture("forall a in elements: {a} <= S")
        with pytest.raises(og.MalformedWitness):
            witness_env(ch2, e, {"a": [0]})
        with pytest.raises(og.MalformedWitness):
            witness_env(ch2, e, {"a": 7})

    def test_empty_subset_witness_is_out_of_range(self, ch2):
        c = parse_conjecture("forall B in all: S*B <= B")
        assert revalidate_conjecture(ch2, c, 1, {"B": []}) is False
