"""starbench: build witness DFAs, combine them with star/product/boolean
constructions, minimize, and check measured state counts against the
closed-form bounds."""

from .core import (
    Dfa,
    DfaFormatError,
    EpsNfa,
    Transformation,
    compose,
    read_dfa,
    write_dfa,
)
from .ops import BooleanOp, concat_nfa, dfa_to_nfa, product_dfa, reverse_nfa, star_nfa
from .minimize import (
    DEFAULT_SUBSET_CAP,
    SubsetCapExceeded,
    SubsetDfa,
    determinize,
    equivalent,
    minimal_dfa,
    minimize,
    state_complexity,
)
from .witnesses import WitnessSpec, build, format_witness, monoid_size, parse_witness
from .bounds import NoKnownBound, Recipe, TABLE, UnknownOperation, evaluate, recipe, resolve_op
from .oracle import SemanticOracle
from .verify import (
    OracleReport,
    VerificationCell,
    conjecture_scan,
    exhaustive_oracle,
    measure_operands,
    membership_oracle,
    run_pipeline,
    verify_cell,
    verify_table,
)

__all__ = [
    "BooleanOp",
    "DEFAULT_SUBSET_CAP",
    "Dfa",
    "DfaFormatError",
    "EpsNfa",
    "NoKnownBound",
    "OracleReport",
    "Recipe",
    "SemanticOracle",
    "SubsetCapExceeded",
    "SubsetDfa",
    "TABLE",
    "Transformation",
    "UnknownOperation",
    "VerificationCell",
    "WitnessSpec",
    "build",
    "compose",
    "concat_nfa",
    "conjecture_scan",
    "determinize",
    "dfa_to_nfa",
    "equivalent",
    "evaluate",
    "exhaustive_oracle",
    "format_witness",
    "measure_operands",
    "membership_oracle",
    "minimal_dfa",
    "minimize",
    "monoid_size",
    "parse_witness",
    "product_dfa",
    "read_dfa",
    "recipe",
    "resolve_op",
    "reverse_nfa",
    "run_pipeline",
    "star_nfa",
    "state_complexity",
    "verify_cell",
    "verify_table",
    "write_dfa",
]
