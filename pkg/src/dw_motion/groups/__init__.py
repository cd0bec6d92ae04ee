"""Finite groups as indexed multiplication tables."""

from dw_motion.groups.conjugacy import (
    ConjugacyClassTable,
    Subgroup,
    centralizer,
    centralizer_subgroup,
    conjugacy_classes,
    conjugation_orbit,
    conjugation_table,
    subgroup_as_group,
)
from dw_motion.groups.constructors import (
    cycle_notation,
    cyclic,
    dihedral,
    direct_product,
    quaternion,
    sl_order,
    special_linear,
    symmetric,
)
from dw_motion.groups.finite import IDENTITY, FiniteGroup, group_from_table
from dw_motion.groups.spec import load_table, make_group, save_table, split_top_level

__all__ = [
    # Core
    "IDENTITY",
    "FiniteGroup",
    "group_from_table",
    # Constructors
    "cycle_notation",
    "cyclic",
    "dihedral",
    "direct_product",
    "quaternion",
    "sl_order",
    "special_linear",
    "symmetric",
    # Spec DSL
    "make_group",
    "load_table",
    "save_table",
    "split_top_level",
    # Conjugacy
    "ConjugacyClassTable",
    "Subgroup",
    "centralizer",
    "centralizer_subgroup",
    "conjugacy_classes",
    "conjugation_orbit",
    "conjugation_table",
    "subgroup_as_group",
]
