"""DW vector spaces, mapping-class representations and dimension reduction."""

from dw_motion.dw.axioms import (
    AxiomReport,
    ImageReport,
    MatrixIdentityReport,
    cylinder_dimension,
    disk_dimension,
    mcg_image_report,
    verify_axioms,
    verify_matrix_identities,
)
from dw_motion.dw.labels import LabelClass, LabelCount, count_labels
from dw_motion.dw.permutations import (
    PermutationRep,
    compose_permutations,
    cycle_string,
    evaluate_word,
    groups_equal,
    identity_permutation,
    image_order,
    is_identity,
    permutation_group,
)
from dw_motion.dw.reduction import (
    AssemblyBlock,
    AssemblyMap,
    ImageOrders,
    IntertwinerReport,
    assemble_dimension_reduction,
    block_action,
    dimred_image_orders,
    product_with_circle,
    reduced_rep,
    representative_independence,
    verify_intertwiner,
)
from dw_motion.dw.space import TRIVIAL_CLASS, DWSpace, dw_space, mcg_rep

__all__ = [
    # Spaces
    "TRIVIAL_CLASS",
    "DWSpace",
    "dw_space",
    "mcg_rep",
    # Permutation reps
    "PermutationRep",
    "compose_permutations",
    "cycle_string",
    "evaluate_word",
    "groups_equal",
    "identity_permutation",
    "image_order",
    "is_identity",
    "permutation_group",
    # Dimension reduction
    "AssemblyBlock",
    "AssemblyMap",
    "ImageOrders",
    "IntertwinerReport",
    "assemble_dimension_reduction",
    "block_action",
    "dimred_image_orders",
    "product_with_circle",
    "reduced_rep",
    "representative_independence",
    "verify_intertwiner",
    # Labels
    "LabelClass",
    "LabelCount",
    "count_labels",
    # Axioms and images
    "AxiomReport",
    "ImageReport",
    "MatrixIdentityReport",
    "cylinder_dimension",
    "disk_dimension",
    "mcg_image_report",
    "verify_axioms",
    "verify_matrix_identities",
]
