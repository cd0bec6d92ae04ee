"""Homomorphism enumeration, conjugation classes and labeled spaces."""

from dw_motion.homs.classes import (
    HomClass,
    Permutation,
    act,
    act_pre,
    class_lookup,
    classes,
    hom_orbit,
    invert_permutation,
    precompose,
)
from dw_motion.homs.enumerate import (
    Hom,
    brute_force_homs,
    enumerate_homs,
    evaluate,
    satisfies_relators,
)
from dw_motion.homs.labeled import (
    BoundaryComponent,
    FluxLabel,
    LabeledBasisVector,
    LabeledSpace,
    check_labels,
    find_witnesses,
    labeled_space,
)

__all__ = [
    # Enumeration
    "Hom",
    "brute_force_homs",
    "enumerate_homs",
    "evaluate",
    "satisfies_relators",
    # Classes
    "HomClass",
    "Permutation",
    "act",
    "act_pre",
    "class_lookup",
    "classes",
    "hom_orbit",
    "invert_permutation",
    "precompose",
    # Labeled spaces
    "BoundaryComponent",
    "FluxLabel",
    "LabeledBasisVector",
    "LabeledSpace",
    "check_labels",
    "find_witnesses",
    "labeled_space",
]
