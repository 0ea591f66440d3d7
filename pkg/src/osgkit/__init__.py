"""Toolkit for finite ordered semigroups.

Core objects: validated structures (multiplication table plus compatible
partial order), bitmask subsets, the downward-closure operator, the
ideal notions parameterized by a potency m, exhaustive enumeration and
generation of small structures, a small conjecture language, and a
registry of named checks runnable over corpora with replayable failure
witnesses.
"""

__version__ = "0.1.0"

from .conjecture import (
    Binder,
    BinderRange,
    CheckResult,
    Conjecture,
    RangeSort,
    Relation,
    StructureGuard,
    check_conjecture,
    eval_set_expr,
    format_conjecture,
    format_set_expr,
    parse_conjecture,
    revalidate_conjecture,
    witness_env,
)
from .corpus import format_record, parse_corpus, write_corpus
from .enumeration import (
    IdealList,
    count_ideals,
    enumerate_downward_closed,
    enumerate_ideals,
)
from .errors import (
    BindingMismatch,
    ConjectureSyntaxError,
    DuplicateBinder,
    EmptySubset,
    FormatError,
    IndexOutOfRange,
    MalformedWitness,
    NotAssociative,
    NotCompatible,
    NotPartialOrder,
    OsgkitError,
    PotencyOutOfRange,
    SizeOutOfRange,
    UnboundVariable,
    UnknownCheckId,
)
from .generation import (
    GENERATION_CAP,
    GenerationSpec,
    canonical_form,
    enumerate_associative_tables,
    enumerate_compatible_orders,
    generate_corpus,
)
from .ideals import (
    IdealKind,
    PrincipalPattern,
    SimplicityKind,
    is_ideal,
    is_m_regular,
    is_m_regular_element,
    principal_set,
    simplicity,
)
from .structures import (
    POTENCY_CAP,
    SIZE_CAP,
    OrderedSemigroup,
    Subset,
    downward_closure,
    is_downward_closed,
    is_subsemigroup,
    iter_downward_closed_bits,
    subset_product,
    universe_power,
    validate_structure,
)
from .verifier import (
    CHECK_IDS,
    CLAIM_IDS,
    REGISTRY,
    THEOREM_IDS,
    CheckDef,
    VerificationReport,
    normalize_check_id,
    resolve_check_ids,
    run_check,
    run_suite,
    validate_witness,
)

__all__ = [
    "__version__",
    "Binder",
    "BinderRange",
    "BindingMismatch",
    "CHECK_IDS",
    "CLAIM_IDS",
    "CheckDef",
    "CheckResult",
    "Conjecture",
    "ConjectureSyntaxError",
    "DuplicateBinder",
    "EmptySubset",
    "FormatError",
    "GENERATION_CAP",
    "GenerationSpec",
    "IdealKind",
    "IdealList",
    "IndexOutOfRange",
    "MalformedWitness",
    "NotAssociative",
    "NotCompatible",
    "NotPartialOrder",
    "OrderedSemigroup",
    "OsgkitError",
    "POTENCY_CAP",
    "PotencyOutOfRange",
    "PrincipalPattern",
    "RangeSort",
    "REGISTRY",
    "Relation",
    "SIZE_CAP",
    "SimplicityKind",
    "SizeOutOfRange",
    "StructureGuard",
    "Subset",
    "THEOREM_IDS",
    "UnboundVariable",
    "UnknownCheckId",
    "VerificationReport",
    "canonical_form",
    "check_conjecture",
    "count_ideals",
    "downward_closure",
    "enumerate_associative_tables",
    "enumerate_compatible_orders",
    "enumerate_downward_closed",
    "enumerate_ideals",
    "eval_set_expr",
    "format_conjecture",
    "format_record",
    "format_set_expr",
    "generate_corpus",
    "is_downward_closed",
    "is_ideal",
    "is_m_regular",
    "is_m_regular_element",
    "is_subsemigroup",
    "iter_downward_closed_bits",
    "normalize_check_id",
    "parse_conjecture",
    "parse_corpus",
    "principal_set",
    "resolve_check_ids",
    "revalidate_conjecture",
    "run_check",
    "run_suite",
    "simplicity",
    "subset_product",
    "universe_power",
    "validate_structure",
    "validate_witness",
    "witness_env",
]
