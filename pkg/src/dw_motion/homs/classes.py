"""Conjugation classes of homomorphisms and the induced endomorphism action."""

from typing import NamedTuple

import numpy as np

from dw_motion.errors import EndomorphismError
from dw_motion.groups.finite import FiniteGroup
from dw_motion.homs.enumerate import Hom, evaluate, satisfies_relators
from dw_motion.presentation.fp import Endomorphism, Presentation

Permutation = tuple[int, ...]  # Class index k ↦ perm[k]


class HomClass(NamedTuple):
    """A simultaneous-conjugation orbit of homomorphisms."""

    canonical: Hom  # Lexicographically minimal member of the orbit
    orbit_size: int  # Number of homs in the orbit (divides |G|)


def hom_orbit(group: FiniteGroup, hom: Hom) -> np.ndarray:
    """Distinct conjugates k·hom·k^-1 as rows, in lexicographic order."""
    if not hom:
        return np.zeros((1, 0), dtype=np.int64)
    conj = group.conjugation[:, list(hom)]
    return np.unique(conj, axis=0)


def classes(homs: list[Hom], group: FiniteGroup) -> list[HomClass]:
    """
    Quotient a conjugation-closed hom set by simultaneous conjugation.

    Classes are ordered by canonical form, so for enumerate_homs output the
    trivial hom's class comes first.

    Args:
        homs: Homomorphisms closed under conjugation
        group: Target group

    Returns:
        HomClass list; orbit sizes sum to len(homs)
    """
    seen: set[Hom] = set()
    result = []
    for hom in sorted(homs):
        if hom in seen:
            continue
        orbit = [tuple(int(x) for x in row) for row in hom_orbit(group, hom)]
        seen.update(orbit)
        result.append(HomClass(canonical=orbit[0], orbit_size=len(orbit)))
    return result


def class_lookup(hom_classes: list[HomClass], group: FiniteGroup) -> dict[Hom, int]:
    """Map every member of every class to its class index."""
    lookup: dict[Hom, int] = {}
    for k, hom_class in enumerate(hom_classes):
        for row in hom_orbit(group, hom_class.canonical):
            lookup[tuple(int(x) for x in row)] = k
    return lookup


def precompose(group: FiniteGroup, hom: Hom, e: Endomorphism) -> Hom:
    """The hom ρ∘e given by the images of e's words under ρ."""
    return tuple(evaluate(group, hom, image) for image in e.images)


def act_pre(
    e: Endomorphism,
    presentation: Presentation,
    hom_classes: list[HomClass],
    group: FiniteGroup,
    lookup: dict[Hom, int] | None = None,
) -> Permutation:
    """
    Plain precomposition [ρ] ↦ [ρ∘e] on hom classes.

    Raises:
        EndomorphismError: If e does not preserve the relators or the induced
            map on classes is not a bijection
    """
    if e.rank != presentation.rank:
        raise EndomorphismError(
            f"Endomorphism has {e.rank} generators, presentation {presentation.rank}"
        )
    if lookup is None:
        lookup = class_lookup(hom_classes, group)
    perm = []
    for hom_class in hom_classes:
        image = precompose(group, hom_class.canonical, e)
        if not satisfies_relators(group, image, presentation):
            raise EndomorphismError(
                f"Endomorphism does not preserve the relators in {group.name}"
            )
        perm.append(lookup[image])
    if sorted(perm) != list(range(len(hom_classes))):
        raise EndomorphismError("Induced map on hom classes is not a bijection")
    return tuple(perm)


def invert_permutation(perm: Permutation) -> Permutation:
    inverse = [0] * len(perm)
    for k, image in enumerate(perm):
        inverse[image] = k
    return tuple(inverse)


def act(
    e: Endomorphism,
    presentation: Presentation,
    hom_classes: list[HomClass],
    group: FiniteGroup,
    lookup: dict[Hom, int] | None = None,
) -> Permutation:
    """Action [ρ] ↦ [ρ∘e^-1]: the inverse of act_pre.

    With this direction act(compose(e1, e2)) = act(e1) ∘ act(e2).
    """
    return invert_permutation(act_pre(e, presentation, hom_classes, group, lookup))
