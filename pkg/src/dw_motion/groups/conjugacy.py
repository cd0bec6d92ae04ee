"""Conjugacy classes, centralizers and subgroups."""

from collections.abc import Iterable
from typing import NamedTuple

import numpy as np

from dw_motion.errors import GroupAxiomError
from dw_motion.groups.finite import IDENTITY, FiniteGroup, group_from_table


class ConjugacyClassTable(NamedTuple):
    """Partition of a group into conjugacy classes."""

    classes: list[list[int]]  # Sorted members, classes ordered by representative
    rep: list[int]  # Minimal-index representative per class
    class_of: list[int]  # Element index → class index


class Subgroup(NamedTuple):
    """A subgroup re-indexed as a standalone group."""

    group: FiniteGroup
    embedding: tuple[int, ...]  # Subgroup index → ambient index
    positions: dict[int, int]  # Ambient index → subgroup index

    def lift(self, h: int) -> int:
        return self.embedding[h]

    def restrict(self, g: int) -> int:
        return self.positions[g]


def conjugation_table(group: FiniteGroup) -> np.ndarray:
    """Table with entry [k, g] equal to k g k^-1."""
    return group.conjugation


def conjugation_orbit(group: FiniteGroup, g: int) -> np.ndarray:
    """Sorted conjugacy class of g."""
    xs = group.mul[:, g].astype(np.int64)
    return np.unique(group.mul[xs, group.inv])


def conjugacy_classes(group: FiniteGroup) -> ConjugacyClassTable:
    """Partition the elements into conjugacy classes.

    Classes are listed by increasing minimal element, so class 0 is {identity}.
    """
    class_of = np.full(group.order, -1, dtype=np.int64)
    classes: list[list[int]] = []
    rep: list[int] = []
    for g in range(group.order):
        if class_of[g] >= 0:
            continue
        orbit = conjugation_orbit(group, g)
        class_of[orbit] = len(classes)
        classes.append(orbit.tolist())
        rep.append(g)
    return ConjugacyClassTable(classes=classes, rep=rep, class_of=class_of.tolist())


def centralizer(group: FiniteGroup, elements: Iterable[int]) -> list[int]:
    """Sorted list of all g commuting with every given element.

    The centralizer of the empty set is the whole group.
    """
    mask = np.ones(group.order, dtype=bool)
    for s in set(elements):
        mask &= group.mul[:, s] == group.mul[s, :]
    return np.flatnonzero(mask).tolist()


def subgroup_as_group(
    group: FiniteGroup, elements: Iterable[int], name: str | None = None
) -> Subgroup:
    """
    Re-index a subgroup as a standalone FiniteGroup.

    Elements keep their relative order, so the identity stays at index 0.

    Args:
        group: Ambient group
        elements: Subgroup elements (must be closed and contain the identity)
        name: Display name (default: derived from the ambient group)

    Returns:
        Subgroup with the new group and its embedding into the ambient group

    Raises:
        GroupAxiomError: If elements are not closed under mul and inv
    """
    members = np.array(sorted(set(elements)), dtype=np.int64)
    if len(members) == 0 or members[0] != IDENTITY:
        raise GroupAxiomError("Subgroup must contain the identity")
    lookup = np.full(group.order, -1, dtype=np.int64)
    lookup[members] = np.arange(len(members))
    sub_mul = lookup[group.mul[np.ix_(members, members)]]
    if (sub_mul < 0).any() or (lookup[group.inv[members]] < 0).any():
        raise GroupAxiomError("Elements are not closed under multiplication/inverse")

    labels = None
    if group.element_labels is not None:
        labels = tuple(group.element_labels[g] for g in members)
    matrices = group.matrices[members] if group.matrices is not None else None
    sub = group_from_table(
        name or f"{group.name}[{len(members)}]",
        sub_mul,
        labels,
        matrices=matrices,
        modulus=group.modulus,
        validate=False,
    )
    embedding = tuple(int(g) for g in members)
    return Subgroup(
        group=sub,
        embedding=embedding,
        positions={g: i for i, g in enumerate(embedding)},
    )


def centralizer_subgroup(group: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    """C_G(S) as a standalone group."""
    members = centralizer(group, elements)
    return subgroup_as_group(group, members)
