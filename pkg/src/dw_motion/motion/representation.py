"""Pure-flux representations of motion groups on labeled DW spaces."""

from typing import NamedTuple

from dw_motion.dw.permutations import (
    PermutationRep,
    cycle_string,
    evaluate_word,
    is_identity,
)
from dw_motion.errors import LabelError
from dw_motion.groups.finite import FiniteGroup
from dw_motion.homs.classes import HomClass, act, class_lookup, classes
from dw_motion.homs.enumerate import enumerate_homs
from dw_motion.homs.labeled import FluxLabel, LabeledSpace, labeled_space
from dw_motion.motion.generators import (
    MotionPresentation,
    motion_generators,
    motion_presentation,
)
from dw_motion.motion.links import LinkFamily, TorusLink, pi1


class MotionRep(NamedTuple):
    """A motion-group representation together with the space it acts on."""

    link: LinkFamily
    space: LabeledSpace
    rep: PermutationRep  # Permutations of the labeled basis positions
    presentation: MotionPresentation


class RelationReport(NamedTuple):
    """Result of evaluating every motion relator as a permutation."""

    holds: bool  # True if every relator acts as the identity
    relators: list[str]  # Relator words in generator names
    failures: list[tuple[str, str]]  # (relator, cycle notation of its action)


def link_labels(
    link: LinkFamily, label: FluxLabel, axis_label: FluxLabel | None = None
) -> tuple[list[int], list[FluxLabel]]:
    """Labeled component positions and their labels.

    Every link component shares ``label``. The axis of a necklace or n-Hopf
    link is labeled only when ``axis_label`` is given.
    """
    if isinstance(link, TorusLink):
        if axis_label is not None:
            raise LabelError("Torus links have no axis to label")
        return list(range(link.n)), [label] * link.n
    positions = list(range(link.n))
    labels = [label] * link.n
    if axis_label is not None:
        positions.append(link.n)
        labels.append(axis_label)
    return positions, labels


def motion_space(
    link: LinkFamily,
    group: FiniteGroup,
    label: FluxLabel,
    axis_label: FluxLabel | None = None,
    hom_classes: list[HomClass] | None = None,
    max_workers: int | None = 1,
) -> LabeledSpace:
    """Labeled DW space V_G(S³ ∖ N(L); label) of a link complement."""
    link_group = pi1(link)
    positions, labels = link_labels(link, label, axis_label)
    boundary = [link_group.boundary[k] for k in positions]
    if hom_classes is None:
        homs = enumerate_homs(link_group.presentation, group, max_workers=max_workers)
        hom_classes = classes(homs, group)
    return labeled_space(
        link_group.presentation, group, boundary, labels, hom_classes=hom_classes
    )


def restrict_permutation(space: LabeledSpace, perm: tuple[int, ...]) -> tuple[int, ...]:
    """Restrict a permutation of all hom classes to the labeled basis.

    Raises:
        LabelError: If the permutation does not preserve the labeled classes
    """
    position = {k: i for i, k in enumerate(space.class_indices)}
    restricted = []
    for k in space.class_indices:
        image = perm[k]
        if image not in position:
            raise LabelError("Labels are not invariant under the motion group")
        restricted.append(position[image])
    return tuple(restricted)


def motion_rep(
    link: LinkFamily,
    group: FiniteGroup,
    label: FluxLabel,
    axis_label: FluxLabel | None = None,
    max_workers: int | None = 1,
    verbose: bool = False,
) -> MotionRep:
    """
    Build the permutation action of the motion group on a labeled space.

    Each motion generator acts on all classes of Hom(π₁(S³ ∖ L), G) through
    act and is then restricted to the classes meeting the flux labels.

    Args:
        link: Link family
        group: Gauge group
        label: Flux label (g, h) shared by the link components
        axis_label: Optional label of the axis (necklace and n-Hopf links)
        max_workers: Parallel workers for the hom enumeration
        verbose: Print progress information

    Returns:
        MotionRep on the labeled basis positions

    Raises:
        LabelError: If the labels do not commute or are not motion-invariant
        EndomorphismError: If a generator does not act bijectively
    """
    space = motion_space(link, group, label, axis_label, max_workers=max_workers)
    presentation = motion_presentation(link)
    lookup = class_lookup(space.all_classes, group)
    perms = {}
    for name, e in motion_generators(link).items():
        full = act(e, space.presentation, space.all_classes, group, lookup)
        perms[name] = restrict_permutation(space, full)
    if verbose:
        print(
            f"Motion rep of {link} over {group.name}: dim {space.dimension} "
            f"of {len(space.all_classes)} classes"
        )
    rep = PermutationRep(space.dimension, perms, presentation.generator_names)
    return MotionRep(link, space, rep, presentation)


def verify_motion_relations(
    rep: PermutationRep, presentation: MotionPresentation
) -> RelationReport:
    """Evaluate every relator on the rep and report those acting non-trivially."""
    names = presentation.relator_names
    failures = []
    for name, relator in zip(names, presentation.relators):
        perm = evaluate_word(rep, relator, presentation.generator_names)
        if not is_identity(perm):
            failures.append((name, cycle_string(perm)))
    return RelationReport(not failures, names, failures)
