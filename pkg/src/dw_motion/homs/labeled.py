"""Pure-flux labeled spaces: hom classes with prescribed boundary holonomy."""

from typing import NamedTuple

import numpy as np

from dw_motion.errors import LabelError
from dw_motion.groups.finite import FiniteGroup
from dw_motion.homs.classes import HomClass, classes
from dw_motion.homs.enumerate import Hom, enumerate_homs, evaluate
from dw_motion.presentation.fp import Presentation
from dw_motion.presentation.words import Word


class BoundaryComponent(NamedTuple):
    """Boundary torus (or circle) of the space, as peripheral words."""

    meridian: Word  # Loop whose holonomy is conjugated to the label's g
    longitude: Word  # Loop whose holonomy is conjugated to the label's h


class FluxLabel(NamedTuple):
    """Pure-flux label (g, h) with gh = hg."""

    g: int
    h: int


class LabeledBasisVector(NamedTuple):
    """A hom class admitting witnesses for every boundary label."""

    rho: Hom  # Canonical representative of the class
    witnesses: tuple[int, ...]  # Minimal a_i with a_i ρ(m_i) a_i^-1 = g_i etc.
    class_index: int  # Index into LabeledSpace.all_classes


class LabeledSpace(NamedTuple):
    """Basis of a pure-flux DW space."""

    presentation: Presentation
    group: FiniteGroup
    boundary: list[BoundaryComponent]
    labels: list[FluxLabel]
    basis: list[LabeledBasisVector]  # Ordered by class index
    all_classes: list[HomClass]  # Every class of Hom(π, G)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def class_indices(self) -> list[int]:
        return [v.class_index for v in self.basis]


def check_labels(group: FiniteGroup, labels: list[FluxLabel]) -> None:
    """Raise LabelError unless every label pair commutes."""
    for label in labels:
        if not group.commutes(label.g, label.h):
            raise LabelError(
                f"Label ({group.label(label.g)}, {group.label(label.h)}) "
                "does not commute"
            )


def find_witnesses(
    group: FiniteGroup,
    rho: Hom,
    boundary: list[BoundaryComponent],
    labels: list[FluxLabel],
) -> tuple[int, ...] | None:
    """Minimal witnesses a_i for each component, or None if some are missing."""
    conj = group.conjugation
    witnesses = []
    for component, label in zip(boundary, labels):
        m = evaluate(group, rho, component.meridian)
        lon = evaluate(group, rho, component.longitude)
        hits = np.flatnonzero((conj[:, m] == label.g) & (conj[:, lon] == label.h))
        if len(hits) == 0:
            return None
        witnesses.append(int(hits[0]))
    return tuple(witnesses)


def labeled_space(
    presentation: Presentation,
    group: FiniteGroup,
    boundary: list[BoundaryComponent],
    labels: list[FluxLabel],
    hom_classes: list[HomClass] | None = None,
    max_workers: int | None = 1,
) -> LabeledSpace:
    """
    Build the basis of hom classes satisfying pure-flux boundary conditions.

    A class [ρ] is kept when for every boundary component i there is a_i with
    a_i ρ(m_i) a_i^-1 = g_i and a_i ρ(l_i) a_i^-1 = h_i. The condition is
    conjugation invariant, so checking the canonical representative suffices.

    Args:
        presentation: π₁ of the space
        group: Gauge group
        boundary: Meridian/longitude words per labeled component
        labels: One (g, h) label per component
        hom_classes: Precomputed classes of Hom(π, G) (enumerated if omitted)
        max_workers: Parallel workers for the enumeration

    Returns:
        LabeledSpace whose dimension is the number of admissible classes

    Raises:
        LabelError: If a label does not commute or counts mismatch
    """
    if len(boundary) != len(labels):
        raise LabelError(
            f"{len(boundary)} boundary components but {len(labels)} labels"
        )
    check_labels(group, labels)
    if hom_classes is None:
        homs = enumerate_homs(presentation, group, max_workers=max_workers)
        hom_classes = classes(homs, group)

    basis = []
    for k, hom_class in enumerate(hom_classes):
        witnesses = find_witnesses(group, hom_class.canonical, boundary, labels)
        if witnesses is not None:
            basis.append(LabeledBasisVector(hom_class.canonical, witnesses, k))
    return LabeledSpace(
        presentation=presentation,
        group=group,
        boundary=list(boundary),
        labels=list(labels),
        basis=basis,
        all_classes=hom_classes,
    )
