"""Boolean functions as polynomials: exact GF(2) normal form, the +/-1
Walsh-Hadamard representation, and a mixed representation with complemented
literals that needs at most 2^(n-1) terms, plus a term-reduction pipeline."""

from .anf import XPolynomial, anf_evaluate, anf_from_table, format_anf, table_from_anf
from .fourier import (
    PMPolynomial,
    PMVector,
    format_pm,
    hadamard_entry,
    parse_pm,
    pm_evaluate,
    pm_vector_from_table,
    sign_represents,
    single_monomial_sign_search,
    wht_solve,
)
from .funclib import (
    ReferencePolynomial,
    prime_function,
    reference,
    reference_names,
    sum_two_squares_function,
)
from .mixed import (
    MixedMonomial,
    MixedPolynomial,
    dnf_atom,
    format_mixed,
    mixed_evaluate,
    mixed_from_anf,
    mixed_to_table,
    parse_polynomial,
    substitute_y,
    theorem2_representation,
)
from .reduce import (
    GENERALIZED,
    PAPER,
    MergeEvent,
    ReductionReport,
    algorithm1,
    merge_fixpoint,
    substitution_pass,
    try_merge,
)
from .truthtable import SupportSplit, TruthTable, emit_table, parse_table, split_support

__version__ = "0.1.0"

__all__ = [
    "GENERALIZED",
    "PAPER",
    "MergeEvent",
    "MixedMonomial",
    "MixedPolynomial",
    "PMPolynomial",
    "PMVector",
    "ReductionReport",
    "ReferencePolynomial",
    "SupportSplit",
    "TruthTable",
    "XPolynomial",
    "algorithm1",
    "anf_evaluate",
    "anf_from_table",
    "dnf_atom",
    "emit_table",
    "format_anf",
    "format_mixed",
    "format_pm",
    "hadamard_entry",
    "merge_fixpoint",
    "mixed_evaluate",
    "mixed_from_anf",
    "mixed_to_table",
    "parse_pm",
    "parse_polynomial",
    "parse_table",
    "pm_evaluate",
    "pm_vector_from_table",
    "prime_function",
    "reference",
    "reference_names",
    "sign_represents",
    "single_monomial_sign_search",
    "split_support",
    "substitute_y",
    "substitution_pass",
    "sum_two_squares_function",
    "table_from_anf",
    "theorem2_representation",
    "try_merge",
    "wht_solve",
]
