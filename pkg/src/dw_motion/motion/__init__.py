"""Link complements, motion groups and their pure-flux DW representations."""

from dw_motion.motion.generators import (
    MotionPresentation,
    motion_generators,
    motion_presentation,
    torus_family,
)
from dw_motion.motion.links import (
    HopfLinks,
    LinkFamily,
    LinkGroup,
    Necklace,
    TorusLink,
    format_link_spec,
    parse_link_spec,
    pi1,
    validate_link,
)
from dw_motion.motion.necklace import NecklaceLabels, NecklaceReport, necklace_T_check
from dw_motion.motion.representation import (
    MotionRep,
    RelationReport,
    link_labels,
    motion_rep,
    motion_space,
    restrict_permutation,
    verify_motion_relations,
)
from dw_motion.motion.torus import (
    Block,
    PsiReport,
    PuncturedCylinder,
    Thm2Report,
    Thm2Row,
    block_table,
    psi_bijection,
    punctured_cylinder,
    thm2_decomposition,
    twist_parameters,
)

__all__ = [
    # Links
    "HopfLinks",
    "LinkFamily",
    "LinkGroup",
    "Necklace",
    "TorusLink",
    "format_link_spec",
    "parse_link_spec",
    "pi1",
    "validate_link",
    # Motion groups
    "MotionPresentation",
    "motion_generators",
    "motion_presentation",
    "torus_family",
    # Representations
    "MotionRep",
    "RelationReport",
    "link_labels",
    "motion_rep",
    "motion_space",
    "restrict_permutation",
    "verify_motion_relations",
    # Torus-link blocks
    "Block",
    "PsiReport",
    "PuncturedCylinder",
    "Thm2Report",
    "Thm2Row",
    "block_table",
    "psi_bijection",
    "punctured_cylinder",
    "thm2_decomposition",
    "twist_parameters",
    # Necklace
    "NecklaceLabels",
    "NecklaceReport",
    "necklace_T_check",
]
