"""Goedel-style encodings of a small arithmetic language, code-level
substitution operators, and certified growth checks for self-referential
encoding expansions."""

__version__ = "0.1.0"

from .arithmetization import (
    diagonal_code,
    free_count,
    free_position,
    is_variable_code,
    numeral_code,
    splice_element,
    sub_with_numeral,
    substitute_code,
)
from .encoding import (
    BetaScheme,
    EncodingScheme,
    InvalidCodeError,
    OutOfRangeError,
    PrimeScheme,
    SearchLimitExceeded,
    beta,
    decode_node,
    encode_node,
    get_scheme,
    seq_number,
    seq_witness,
)
from .lab import (
    analyze_diagonal,
    appendix_expansion,
    build_arrays,
    build_sigma_seq,
    build_sigma_sub,
    check_lemma1,
    check_non_identities,
    numeral_code_chain,
    verify_certificate,
)
from .numerics import Magnitude, Ordering, compare_certified, nth_prime
from .syntax import ParseError, numeral, parse, render, substitute, symbols_of

__all__ = [
    "__version__",
    "BetaScheme", "EncodingScheme", "InvalidCodeError", "Magnitude",
    "Ordering", "OutOfRangeError", "ParseError", "PrimeScheme",
    "SearchLimitExceeded",
    "analyze_diagonal", "appendix_expansion", "beta", "build_arrays",
    "build_sigma_seq", "build_sigma_sub", "check_lemma1",
    "check_non_identities", "compare_certified", "decode_node",
    "diagonal_code", "encode_node", "free_count", "free_position",
    "get_scheme", "is_variable_code", "numeral", "numeral_code",
    "numeral_code_chain", "nth_prime", "parse", "render", "seq_number",
    "seq_witness", "splice_element", "sub_with_numeral", "substitute",
    "substitute_code", "symbols_of", "verify_certificate",
]
