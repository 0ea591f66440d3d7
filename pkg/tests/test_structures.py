"""Validation, subset algebra, closure operator, and power caches."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

import osgkit as og
from osgkit.structures import Subset

from conftest import build, chain, discrete


class TestValidation:
    def test_left_zero_valid(self, lz2):
        assert lz2.size == 2
        assert lz2.mul == ((0, 0), (1, 1))
        assert lz2.name == "LZ2"

    def test_max_table_valid(self, max2):
        assert max2.mul == ((0, 1), (1, 1))

    def test_xor_with_chain_not_compatible(self):
        with pytest.raises(og.NotCompatible) as ei:
            build("bad", [[0, 1], [1, 0]], chain(2))
        assert ei.value.witness == (0, 1, 1)
        assert ei.value.side == "left"

    def test_not_associative_witness(self):
        with pytest.raises(og.NotAssociative) as ei:
            build("bad", [[0, 1], [0, 0]], discrete(2))
        assert ei.value.witness == (1, 0, 1)

    def test_reflexivity_checked(self):
        with pytest.raises(og.NotPartialOrder) as ei:
            build("bad", [[0, 0], [0, 0]], [[False, False], [False, True]])
        assert ei.value.axiom == "reflexivity"
        assert ei.value.witness == (0,)

    def test_antisymmetry_checked(self):
        with pytest.raises(og.NotPartialOrder) as ei:
            build("bad", [[0, 0], [0, 0]], [[True, True], [True, True]])
        assert ei.value.axiom == "antisymmetry"
        assert ei.value.witness == (0, 1)

    def test_transitivity_checked(self):
        leq = [[True, True, False], [False, True, True], [False, False, True]]
        with pytest.raises(og.NotPartialOrder) as ei:
            build("bad", [[0] * 3] * 3, leq)
        assert ei.value.axiom == "transitivity"
        assert ei.value.witness == (0, 1, 2)

    def test_size_bounds(self):
        with pytest.raises(og.SizeOutOfRange):
            build("bad", [], [])
        n = og.SIZE_CAP + 1
        with pytest.raises(og.SizeOutOfRange):
            build("bad", [[0] * n] * n, discrete(n))

    def test_shape_and_range_are_value_errors(self):
        with pytest.raises(ValueError):
            build("bad", [[0, 0], [0]], discrete(2))
        with pytest.raises(ValueError):
            build("bad", [[0, 2], [0, 0]], discrete(2))
        with pytest.raises(ValueError):
            build("bad", [[0, 0], [0, 0]], [[True, True]])

    def test_size_cap_accepts_twelve(self):
        s = build("LZ12", [[i] * 12 for i in range(12)], discrete(12))
        assert s.size == 12


class TestSubset:
    def test_from_elements_and_accessors(self):
        a = Subset.from_elements(4, [2, 0, 2])
        assert a.bits == 0b0101
        assert a.elements() == (0, 2)
        assert len(a) == 2
        assert 2 in a and 1 not in a and 9 not in a
        assert list(a) == [0, 2]
        assert not a.is_empty
        assert Subset(0, 4).is_empty

    def test_element_range_checked(self):
        with pytest.raises(og.IndexOutOfRange):
            Subset.from_elements(3, [3])
        with pytest.raises(og.IndexOutOfRange):
            Subset.from_elements(3, [-1])

    def test_bits_must_fit_width(self):
        with pytest.raises(ValueError):
            Subset(1 << 3, 3)

    def test_set_operations(self):
        a = Subset.from_elements(3, [0, 1])
        b = Subset.from_elements(3, [1, 2])
        assert (a & b).elements() == (1,)
        assert (a | b).elements() == (0, 1, 2)
        assert a.issubset(a | b)
        assert not a.issubset(b)

    def test_binding_mismatch(self):
        a = Subset.from_elements(3, [0])
        b = Subset.from_elements(4, [0])
        with pytest.raises(og.BindingMismatch):
            a & b
        with pytest.raises(og.BindingMismatch):
            a.issubset(b)

    def test_repr(self):
        assert repr(Subset.from_elements(3, [0, 2])) == "Subset([0, 2], size=3)"


class TestSubsetProduct:
    def test_left_zero(self, lz2):
        assert og.subset_product(lz2, lz2.subset([0]), lz2.universe).elements() == (0,)

    def test_min_chain(self, ch2):
        assert og.subset_product(ch2, ch2.subset([1]), ch2.subset([1])).elements() == (1,)

    def test_xor(self, g2):
        assert og.subset_product(g2, g2.universe, g2.subset([1])).elements() == (0, 1)

    def test_empty_annihilates(self, ch2):
        assert og.subset_product(ch2, ch2.empty, ch2.universe).is_empty
        assert og.subset_product(ch2, ch2.universe, ch2.empty).is_empty

    def test_binding_checked(self, ch2, ch3):
        with pytest.raises(og.BindingMismatch):
            og.subset_product(ch2, ch3.universe, ch2.universe)


class TestUniversePower:
    def test_first_power_is_universe(self, ch2):
        assert og.universe_power(ch2, 1) == ch2.universe

    def test_null_square_collapses(self, n2):
        assert og.universe_power(n2, 2).elements() == (0,)

    def test_left_zero_powers_cover(self, lz2):
        assert og.universe_power(lz2, 3) == lz2.universe

    def test_chain_rule(self, fixture_structures):
        for s in fixture_structures.values():
            for m in range(1, og.POTENCY_CAP):
                stepped = og.subset_product(s, og.universe_power(s, m), s.universe)
                assert og.universe_power(s, m + 1) == stepped
                assert og.universe_power(s, m).issubset(s.universe)

    def test_potency_range(self, ch2):
        for bad in (0, -1, 9, "2", 1.0, True):
            with pytest.raises(og.PotencyOutOfRange):
                og.universe_power(ch2, bad)


class TestDownwardClosure:
    def test_chain_examples(self, ch2):
        assert og.downward_closure(ch2, ch2.subset([1])).elements() == (0, 1)
        assert og.downward_closure(ch2, ch2.subset([0])).elements() == (0,)

    def test_discrete_fixes_everything(self, lz2):
        assert og.downward_closure(lz2, lz2.subset([0])).elements() == (0,)

    def test_empty(self, ch2):
        assert og.downward_closure(ch2, ch2.empty).is_empty

    def test_is_downward_closed(self, ch2, lz2):
        assert not og.is_downward_closed(ch2, ch2.subset([1]))
        assert og.is_downward_closed(ch2, ch2.universe)
        assert og.is_downward_closed(lz2, lz2.subset([1]))


class TestSubsemigroup:
    def test_examples(self, ch2, g2, lz2):
        assert og.is_subsemigroup(ch2, ch2.subset([0]))
        assert not og.is_subsemigroup(g2, g2.subset([1]))
        assert og.is_subsemigroup(lz2, lz2.universe)

    def test_empty_is_not(self, ch2):
        assert not og.is_subsemigroup(ch2, ch2.empty)


class TestDowncloseFamily:
    def test_family_on_chain(self, ch3):
        fam = list(og.iter_downward_closed_bits(ch3))
        assert fam == [0b000, 0b001, 0b011, 0b111]

    def test_family_on_discrete(self, g2):
        assert list(og.iter_downward_closed_bits(g2)) == [0, 1, 2, 3]

    def test_family_matches_predicate(self, fixture_structures):
        for s in fixture_structures.values():
            fam = set(og.iter_downward_closed_bits(s))
            brute = {
                bits
                for bits in range(1 << s.size)
                if og.is_downward_closed(s, Subset(bits, s.size))
            }
            assert fam == brute


def _closure_laws_hold(s, a, b):
    cl = lambda x: og.downward_closure(s, x)  # noqa: E731
    mul = lambda x, y: og.subset_product(s, x, y)  # noqa: E731
    assert a.issubset(cl(a))
    assert cl(cl(a)) == cl(a)
    if a.issubset(b):
        assert cl(a).issubset(cl(b))
    assert cl(a & b).issubset(cl(a) & cl(b))
    assert cl(a | b) == cl(a) | cl(b)
    assert mul(cl(a), cl(b)).issubset(cl(mul(a, b)))
    assert cl(mul(cl(a), cl(b))) == cl(mul(a, b))


class TestClosureLaws:
    def test_exhaustive_small(self, fixture_structures):
        for s in fixture_structures.values():
            for abits in range(1 << s.size):
                for bbits in range(1 << s.size):
                    _closure_laws_hold(s, Subset(abits, s.size), Subset(bbits, s.size))


CH12 = build("CH12", [[min(i, j) for j in range(12)] for i in range(12)], chain(12))
LZ12 = build("LZ12", [[i] * 12 for i in range(12)], discrete(12))

bits12 = st.integers(min_value=0, max_value=(1 << 12) - 1)


@given(a=bits12, b=bits12)
def test_closure_laws_random_chain(a, b):
    _closure_laws_hold(CH12, Subset(a, 12), Subset(b, 12))


@given(a=bits12, b=bits12)
def test_closure_laws_random_discrete(a, b):
    _closure_laws_hold(LZ12, Subset(a, 12), Subset(b, 12))


@given(a=bits12, b=bits12, c=bits12)
def test_product_associative_as_set_operation(a, b, c):
    sa, sb, sc = Subset(a, 12), Subset(b, 12), Subset(c, 12)
    left = og.subset_product(CH12, og.subset_product(CH12, sa, sb), sc)
    right = og.subset_product(CH12, sa, og.subset_product(CH12, sb, sc))
    assert left == right
