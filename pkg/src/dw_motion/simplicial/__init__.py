"""Triangulations, flat colorings and the state-sum partition function."""

from dw_motion.simplicial.colorings import (
    Coloring,
    StateSumValue,
    count_colorings,
    holonomy,
    load_boundary_coloring,
    parse_boundary_coloring,
    partition_function,
)
from dw_motion.simplicial.triangulation import (
    Cylinder,
    SpanningTree,
    Triangulation,
    load_cylinder,
    load_triangulation,
    presentation_from_triangulation,
    spanning_tree,
)
from dw_motion.simplicial.verify import (
    BlockReport,
    CylinderMatrix,
    Lemma1Report,
    Lemma2Report,
    boundary_colorings,
    closed_invariant,
    cylinder_count_matrix,
    verify_idempotent_blocks,
    verify_lemma1,
    verify_lemma2_annulus,
    verify_triangulation_independence,
)

__all__ = [
    # Triangulations
    "Cylinder",
    "SpanningTree",
    "Triangulation",
    "load_cylinder",
    "load_triangulation",
    "presentation_from_triangulation",
    "spanning_tree",
    # Colorings
    "Coloring",
    "StateSumValue",
    "count_colorings",
    "holonomy",
    "load_boundary_coloring",
    "parse_boundary_coloring",
    "partition_function",
    # Verification
    "BlockReport",
    "CylinderMatrix",
    "Lemma1Report",
    "Lemma2Report",
    "boundary_colorings",
    "closed_invariant",
    "cylinder_count_matrix",
    "verify_idempotent_blocks",
    "verify_lemma1",
    "verify_lemma2_annulus",
    "verify_triangulation_independence",
]
