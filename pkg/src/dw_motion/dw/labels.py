"""Counting the label set of a surface: pairs ([ρ], irrep of C_G(Im ρ))."""

from typing import NamedTuple

from dw_motion.groups.conjugacy import centralizer_subgroup, conjugacy_classes
from dw_motion.groups.finite import FiniteGroup
from dw_motion.homs.classes import classes
from dw_motion.homs.enumerate import Hom, enumerate_homs
from dw_motion.presentation.fp import Presentation


class LabelClass(NamedTuple):
    """Contribution of one hom class to the label count."""

    rho: Hom  # Canonical representative
    centralizer_order: int  # |C_G(Im ρ)|
    irreps: int  # Number of conjugacy classes of C_G(Im ρ)


class LabelCount(NamedTuple):
    """Number of label types and its per-class breakdown."""

    count: int
    breakdown: list[LabelClass]


def count_labels(
    presentation: Presentation,
    group: FiniteGroup,
    max_workers: int | None = 1,
    verbose: bool = False,
) -> LabelCount:
    """
    Count labels ([ρ], α) with α an irrep of the centralizer of Im ρ.

    Irreducible representations are counted as conjugacy classes, so no
    character table is built.

    Args:
        presentation: π₁(Σ)
        group: Gauge group
        max_workers: Parallel workers for the hom enumeration
        verbose: Print progress information

    Returns:
        LabelCount with one breakdown row per hom class
    """
    homs = enumerate_homs(presentation, group, max_workers=max_workers)
    breakdown = []
    for hom_class in classes(homs, group):
        sub = centralizer_subgroup(group, hom_class.canonical)
        irreps = len(conjugacy_classes(sub.group).classes)
        breakdown.append(LabelClass(hom_class.canonical, sub.group.order, irreps))
    count = sum(row.irreps for row in breakdown)
    if verbose:
        print(f"Labels for {group.name}: {count} over {len(breakdown)} classes")
    return LabelCount(count, breakdown)
