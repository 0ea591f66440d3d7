"""Shared fixtures: small reference structures, corpora, AST generator."""

import pytest
from hypothesis import settings

from osgkit import validate_structure
from osgkit.conjecture import (
    Binder,
    BinderRange,
    Closure,
    Conjecture,
    Intersection,
    Power,
    Product,
    RangeSort,
    Relation,
    Singleton,
    StructureGuard,
    Universe,
    UnionExpr,
    Var,
)
from osgkit.generation import GenerationSpec, generate_corpus
from osgkit.ideals import IdealKind

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


def discrete(n):
    return [[i == j for j in range(n)] for i in range(n)]


def chain(n):
    return [[i <= j for j in range(n)] for i in range(n)]


def build(name, mul, leq):
    return validate_structure(mul, leq, name=name)


@pytest.fixture(scope="session")
def lz2():
    """Left-zero semigroup x*y = x, discrete order."""
    return build("LZ2", [[0, 0], [1, 1]], discrete(2))


@pytest.fixture(scope="session")
def rz2():
    """Right-zero semigroup x*y = y, discrete order."""
    return build("RZ2", [[0, 1], [0, 1]], discrete(2))


@pytest.fixture(scope="session")
def ch2():
    """Two-chain under min, 0 <= 1."""
    return build("CH2", [[0, 0], [0, 1]], chain(2))


@pytest.fixture(scope="session")
def ch3():
    """Three-chain under min, 0 <= 1 <= 2."""
    return build("CH3", [[min(i, j) for j in range(3)] for i in range(3)], chain(3))


@pytest.fixture(scope="session")
def g2():
    """Two-element group (xor), discrete order."""
    return build("G2", [[0, 1], [1, 0]], discrete(2))


@pytest.fixture(scope="session")
def n2():
    """Null semigroup x*y = 0, discrete order."""
    return build("N2", [[0, 0], [0, 0]], discrete(2))


@pytest.fixture(scope="session")
def max2():
    """Two-chain under max, 0 <= 1."""
    return build("MAX2", [[0, 1], [1, 1]], chain(2))


@pytest.fixture(scope="session")
def strict3():
    """Three elements where {0,2} is 1-bi-interior but not a subsemigroup."""
    return build("STRICT3", [[0, 0, 0], [0, 0, 0], [0, 0, 1]], discrete(3))


@pytest.fixture(scope="session")
def fixture_structures(lz2, rz2, ch2, ch3, g2, n2, max2):
    return {s.name: s for s in (lz2, rz2, ch2, ch3, g2, n2, max2)}


@pytest.fixture(scope="session")
def order3_corpus():
    """Every labeled ordered semigroup of order at most 3."""
    return list(generate_corpus(GenerationSpec(max_order=3)))


@pytest.fixture(scope="session")
def order3_corpus_file(order3_corpus, tmp_path_factory):
    from osgkit.corpus import write_corpus

    path = tmp_path_factory.mktemp("corpus") / "order3.osg"
    with open(path, "w", encoding="utf-8") as fh:
        write_corpus(order3_corpus, fh)
    return path


_VAR_NAMES = ["A", "B", "C", "Q", "R", "T", "X", "Y", "Z", "L", "I", "J"]


def random_conjecture(rng):
    """A random well-formed conjecture AST, for round-trip testing."""
    binders = []
    for name in rng.sample(_VAR_NAMES, rng.randint(1, 3)):
        sort = rng.choice(["all", "downclosed", "elements", "kind"])
        if sort == "kind":
            binders.append(
                Binder(name, BinderRange(RangeSort.KIND, rng.choice(list(IdealKind))))
            )
        else:
            binders.append(Binder(name, BinderRange(RangeSort(sort))))
    subset_vars = [b.name for b in binders if not b.is_element]
    element_vars = [b.name for b in binders if b.is_element]
    guard = rng.choice([None, None, None, *StructureGuard])

    def leaf():
        options = ["S"]
        if subset_vars:
            options += ["var", "var"]
        if element_vars:
            options += ["single", "single"]
        pick = rng.choice(options)
        if pick == "S":
            return Universe()
        if pick == "var":
            return Var(rng.choice(subset_vars))
        return Singleton(rng.choice(element_vars))

    def expr(depth):
        if depth <= 0:
            return leaf()
        pick = rng.randrange(7)
        if pick == 0:
            return leaf()
        if pick == 1:
            return Product(expr(depth - 1), expr(depth - 1))
        if pick == 2:
            return Power(expr(depth - 1), rng.choice([None, 1, 2, 3]))
        if pick == 3:
            return Closure(expr(depth - 1))
        if pick == 4:
            return Intersection(expr(depth - 1), expr(depth - 1))
        if pick == 5:
            return UnionExpr(expr(depth - 1), expr(depth - 1))
        return Product(leaf(), expr(depth - 1))

    body = tuple(
        Relation(expr(rng.randint(1, 3)), rng.choice(["<=", "="]), expr(rng.randint(1, 3)))
        for _ in range(rng.randint(1, 2))
    )
    return Conjecture(tuple(binders), guard, body)


@pytest.fixture(scope="session")
def conjecture_gen():
    return random_conjecture
