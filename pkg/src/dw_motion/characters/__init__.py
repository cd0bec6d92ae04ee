"""Permutation characters of SL(2,p) and SL(3,p) and their decompositions."""

from dw_motion.characters.classes import (
    ClassPoint,
    eigenvalue_one_dimension,
    enumerate_class_points,
    expected_class_count,
    generator_of_units,
    norm_one_generator,
)
from dw_motion.characters.tables import (
    ClassFunction,
    class_function,
    permutation_character,
    table1_rhs,
    table2_rhs,
    table_rhs,
)
from dw_motion.characters.verify import (
    CSV_COLUMNS,
    SUPPORTED_CASES,
    CharacterReport,
    CoverageReport,
    NormReport,
    ResidualRow,
    character_norm_check,
    count_pair_orbits,
    coverage_check,
    format_csv,
    verify_character_identity,
    write_csv,
)

__all__ = [
    # Class representatives
    "ClassPoint",
    "eigenvalue_one_dimension",
    "enumerate_class_points",
    "expected_class_count",
    "generator_of_units",
    "norm_one_generator",
    # Class functions
    "ClassFunction",
    "class_function",
    "permutation_character",
    "table1_rhs",
    "table2_rhs",
    "table_rhs",
    # Verification
    "CSV_COLUMNS",
    "SUPPORTED_CASES",
    "CharacterReport",
    "CoverageReport",
    "NormReport",
    "ResidualRow",
    "character_norm_check",
    "count_pair_orbits",
    "coverage_check",
    "format_csv",
    "verify_character_identity",
    "write_csv",
]
