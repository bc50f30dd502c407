"""Ordinal notations below the Feferman-Schutte ordinal, words over ordinal
letters and their order types, a decision procedure with certificate search
for the strictly positive modal consequence relation, a catalog of analyzed
theories with conservativity spectra, and executable truth for bounded
arithmetic sentences."""

from .errors import (
    BudgetExceededError,
    DomainError,
    InvalidCodeError,
    NotInFragmentError,
    NotVariableFreeError,
    OrdinalOverflowError,
    OutOfApplicabilityError,
    SearchExhaustedError,
    UndefinedError,
    UnsupportedError,
)
from .ordinal import (
    EPS0,
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    VeblenTerm,
    add,
    cnf_exponents,
    compare,
    from_int,
    godel_code,
    godel_decode,
    is_limit,
    is_normal_form,
    is_successor,
    left_subtract,
    omega_power,
    omega_times,
    paper_phi,
    phi,
    predecessor,
    to_int,
)
from .worm import (
    EMPTY,
    Worm,
    compare_at,
    in_fragment,
    lift,
    lower,
    order_type,
    order_type_at,
)
from .rc import (
    And,
    Derivation,
    Diam,
    TOP,
    Var,
    build_minimal_model,
    build_q,
    check_derivation,
    conj,
    derives,
    merge_words,
    model_check,
    normalize,
    proof_search,
    word_normal_form,
    worm_formula,
)
from .syntax import ParseError, parse_formula, parse_ordinal, parse_worm, render
from .spectra import (
    Spectrum,
    TheoryDescriptor,
    fgh_class_label,
    fgh_eval,
    make_theory,
    ord_at,
    parse_theory,
    pi11_ordinal,
    spectrum,
    word_theory,
)
from . import truthcore

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "DomainError",
    "InvalidCodeError",
    "NotInFragmentError",
    "NotVariableFreeError",
    "OrdinalOverflowError",
    "OutOfApplicabilityError",
    "SearchExhaustedError",
    "UndefinedError",
    "UnsupportedError",
    "EPS0",
    "OMEGA",
    "ONE",
    "ZERO",
    "Ordinal",
    "VeblenTerm",
    "add",
    "cnf_exponents",
    "compare",
    "from_int",
    "godel_code",
    "godel_decode",
    "is_limit",
    "is_normal_form",
    "is_successor",
    "left_subtract",
    "omega_power",
    "omega_times",
    "paper_phi",
    "phi",
    "predecessor",
    "to_int",
    "EMPTY",
    "Worm",
    "compare_at",
    "in_fragment",
    "lift",
    "lower",
    "order_type",
    "order_type_at",
    "And",
    "Derivation",
    "Diam",
    "TOP",
    "Var",
    "build_minimal_model",
    "build_q",
    "check_derivation",
    "conj",
    "derives",
    "merge_words",
    "model_check",
    "normalize",
    "proof_search",
    "word_normal_form",
    "worm_formula",
    "ParseError",
    "parse_formula",
    "parse_ordinal",
    "parse_worm",
    "render",
    "Spectrum",
    "TheoryDescriptor",
    "fgh_class_label",
    "fgh_eval",
    "make_theory",
    "ord_at",
    "parse_theory",
    "pi11_ordinal",
    "spectrum",
    "word_theory",
    "truthcore",
]
