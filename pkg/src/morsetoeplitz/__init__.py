"""Symbolic dynamics of constant-length substitutions.

Periodic windows of substitution systems, forbidden-pattern scans,
sliding block codes, block certificates for conjugacy with the Morse and
Toeplitz systems, and induced substitutions on higher-block alphabets.
"""

from .errors import (
    CapacityError,
    ConsistencyError,
    DegenerateError,
    DomainError,
    Error,
    InsufficientWindowError,
    PreconditionError,
    PrimitivityError,
    RangeError,
    SeedError,
    StateError,
)
from .words import Alphabet, BINARY, Window, Word, parse_window
from .substitution import (
    MORSE,
    Seed,
    Substitution,
    TOEPLITZ,
    language_brute,
    minimal_seed_period,
    parse_substitution,
    system_seeds,
)
from .patterns import (
    EVEN_SQUARE_KIND,
    OVERLAP_KIND,
    PatternWitness,
    WordReport,
    classify_word,
    find_even_square,
    find_overlap,
)
from .sliding import (
    LocalRule,
    apply_code,
    apply_to_word,
    identity_rule,
    image_language,
    load_rule,
    oxtoby_rule,
    preimage_blocks,
    projection_rule,
    rule_from_json,
    rule_to_json,
)
from .graphs import SubstitutionGraph, build_graph
from .conjugacy import (
    DerivedSubstitution,
    ExplicitSource,
    MORSE_ALLOWED_PAIRS,
    MORSE_TOKENS,
    MorseCertificate,
    NecessaryReport,
    ParseVerdict,
    PhaseParse,
    SelfSimilarityReport,
    SubstitutionSource,
    ToeplitzCertificate,
    as_source,
    certificate_from_json,
    certificate_to_json,
    derive_substitution,
    morse_identity_pairs,
    necessary_conditions,
    parse_phases,
    recode_morse,
    recode_toeplitz,
    search_morse_certificate,
    search_toeplitz_certificate,
    self_similarity_witness,
    verify_morse_certificate,
    verify_toeplitz_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BINARY",
    "CapacityError",
    "ConsistencyError",
    "DegenerateError",
    "DerivedSubstitution",
    "DomainError",
    "Error",
    "EVEN_SQUARE_KIND",
    "ExplicitSource",
    "InsufficientWindowError",
    "LocalRule",
    "MORSE",
    "MORSE_ALLOWED_PAIRS",
    "MORSE_TOKENS",
    "MorseCertificate",
    "NecessaryReport",
    "OVERLAP_KIND",
    "ParseVerdict",
    "PatternWitness",
    "PhaseParse",
    "PreconditionError",
    "PrimitivityError",
    "RangeError",
    "Seed",
    "SeedError",
    "SelfSimilarityReport",
    "StateError",
    "Substitution",
    "SubstitutionGraph",
    "SubstitutionSource",
    "TOEPLITZ",
    "ToeplitzCertificate",
    "Window",
    "Word",
    "WordReport",
    "apply_code",
    "apply_to_word",
    "as_source",
    "build_graph",
    "certificate_from_json",
    "certificate_to_json",
    "classify_word",
    "derive_substitution",
    "find_even_square",
    "find_overlap",
    "identity_rule",
    "image_language",
    "language_brute",
    "load_rule",
    "minimal_seed_period",
    "morse_identity_pairs",
    "necessary_conditions",
    "oxtoby_rule",
    "parse_phases",
    "parse_substitution",
    "parse_window",
    "preimage_blocks",
    "projection_rule",
    "recode_morse",
    "recode_toeplitz",
    "rule_from_json",
    "rule_to_json",
    "search_morse_certificate",
    "search_toeplitz_certificate",
    "self_similarity_witness",
    "system_seeds",
    "verify_morse_certificate",
    "verify_toeplitz_certificate",
]
