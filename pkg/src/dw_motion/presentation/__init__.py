"""Words, finitely presented groups and endomorphisms."""

from dw_motion.presentation.fp import (
    Endomorphism,
    Presentation,
    compose,
    compose_all,
    substitute,
)
from dw_motion.presentation.parser import (
    format_endomorphism,
    format_presentation,
    format_word,
    parse_endomorphism,
    parse_presentation,
    parse_word,
)
from dw_motion.presentation.standard import (
    S3_MATRIX,
    T3_MATRIX,
    circle,
    endomorphism_from_matrix,
    mapping_class_generators,
    sphere,
    surface_presentation,
    torus,
    torus_power,
    torus_s,
    torus_t,
)
from dw_motion.presentation.words import (
    Word,
    commutator,
    free_reduce,
    inverse,
    power,
    product,
    word_from_tokens,
)

__all__ = [
    # Words
    "Word",
    "commutator",
    "free_reduce",
    "inverse",
    "power",
    "product",
    "word_from_tokens",
    # Presentations
    "Endomorphism",
    "Presentation",
    "compose",
    "compose_all",
    "substitute",
    # Text formats
    "format_endomorphism",
    "format_presentation",
    "format_word",
    "parse_endomorphism",
    "parse_presentation",
    "parse_word",
    # Standard surfaces
    "S3_MATRIX",
    "T3_MATRIX",
    "circle",
    "endomorphism_from_matrix",
    "mapping_class_generators",
    "sphere",
    "surface_presentation",
    "torus",
    "torus_power",
    "torus_s",
    "torus_t",
]
