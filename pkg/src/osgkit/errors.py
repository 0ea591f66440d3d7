"""Exception types shared across the toolkit.

Every error raised by osgkit on bad domain input derives from OsgkitError,
so callers can catch one type at API boundaries.  Malformed Python-level
arguments (ragged tables, wrong types) raise plain ValueError instead.
"""


class OsgkitError(Exception):
    """Base class for all osgkit domain errors."""


class SizeOutOfRange(OsgkitError):
    """Structure size outside the supported range."""


class PotencyOutOfRange(OsgkitError):
    """Potency m outside the supported range."""


class NotAssociative(OsgkitError):
    """Multiplication table violates associativity.

    witness is a triple (a, b, c) with (a*b)*c != a*(b*c).
    """

    def __init__(self, witness):
        self.witness = witness
        a, b, c = witness
        super().__init__(f"not associative at ({a},{b},{c}): ({a}*{b})*{c} != {a}*({b}*{c})")


class NotPartialOrder(OsgkitError):
    """Relation violates a partial-order axiom.

    axiom is one of 'reflexivity', 'antisymmetry', 'transitivity';
    witness is the offending element tuple.
    """

    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"not a partial order: {axiom} fails at {witness}")


class NotCompatible(OsgkitError):
    """Order is not compatible with multiplication.

    witness is a triple (a, b, x) with a <= b but x*a <= x*b or a*x <= b*x failing;
    side is 'left' or 'right' for the failing multiplication.
    """

    def __init__(self, witness, side):
        self.witness = witness
        self.side = side
        a, b, x = witness
        super().__init__(f"order incompatible with {side} multiplication at (a={a}, b={b}, x={x})")


class BindingMismatch(OsgkitError):
    """Subset is bound to a structure of a different size."""


class EmptySubset(OsgkitError):
    """Operation requires a nonempty subset."""


class IndexOutOfRange(OsgkitError):
    """Element index outside 0..n-1."""


class FormatError(OsgkitError):
    """Malformed corpus text.  line is the 1-based offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConjectureSyntaxError(OsgkitError):
    """Parse error in conjecture text.

    Carries the 1-based line and column of the offending token and the
    set of token descriptions that would have been accepted there.
    """

    def __init__(self, message, line, col, expected=frozenset()):
        self.line = line
        self.col = col
        self.expected = frozenset(expected)
        super().__init__(f"{message} at line {line}, column {col}")


class UnboundVariable(OsgkitError):
    """Variable used in a conjecture body without a matching binder."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        super().__init__(message)


class DuplicateBinder(OsgkitError):
    """Two binders in one conjecture introduce the same variable."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        super().__init__(message)


class UnknownCheckId(OsgkitError):
    """Check id not present in the registry."""


class MalformedWitness(OsgkitError):
    """Witness payload has the wrong shape or out-of-range values."""
