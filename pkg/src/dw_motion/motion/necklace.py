"""The necklace square: braid actions on a punctured disk and on the necklace.

With the axis labeled (g_c, h_c) and every ring labeled (g, g_c), a basis
class can be conjugated so that ρ(x) = g_c. The ring values then lie in
H = C_G(g_c), which gives T: [x_1..x_n] ↦ [g_c, x_1..x_n] from the disk with
n punctures over H to the necklace space over G.
"""

from typing import NamedTuple

from dw_motion.dw.permutations import (
    compose_permutations,
    groups_equal,
    image_order,
    permutation_group,
)
from dw_motion.errors import LabelError
from dw_motion.groups.conjugacy import centralizer_subgroup
from dw_motion.groups.finite import IDENTITY, FiniteGroup
from dw_motion.homs.classes import act, class_lookup, classes
from dw_motion.homs.enumerate import enumerate_homs
from dw_motion.homs.labeled import BoundaryComponent, FluxLabel, labeled_space
from dw_motion.motion.links import Necklace
from dw_motion.motion.representation import motion_rep, restrict_permutation
from dw_motion.presentation.fp import Endomorphism, Presentation
from dw_motion.presentation.words import Word, product


class NecklaceLabels(NamedTuple):
    """Ring label (g, g_c) and axis label (g_c, h_c)."""

    g: int
    g_c: int
    h_c: int


class NecklaceReport(NamedTuple):
    """Verification of the square relating the disk and necklace actions."""

    holds: bool  # bijective, commuting and equal images
    bijective: bool  # T is a bijection onto the necklace basis
    commutes: bool  # T ∘ σ_i = σ_i ∘ T for every braid generator
    images_equal: bool  # Generated permutation groups agree after transport
    disk_dimension: int
    necklace_dimension: int
    image_order: int  # Order of the braid image on the necklace space
    motion_image_order: int  # Order including the shift p


def _disk_sigma(n: int, i: int) -> Endomorphism:
    """σ_i on the free group x_1..x_n (indices 0..n-1)."""
    images = [Word.generator(k) for k in range(n)]
    x_i, x_next = Word.generator(i - 1), Word.generator(i)
    images[i - 1] = x_i * x_next * Word.generator(i - 1, -1)
    images[i] = x_i
    return Endomorphism(tuple(images))


def check_necklace_labels(group: FiniteGroup, labels: NecklaceLabels) -> None:
    if not group.commutes(labels.g, labels.g_c):
        raise LabelError("Ring label (g, g_c) does not commute")
    if not group.commutes(labels.g_c, labels.h_c):
        raise LabelError("Axis label (g_c, h_c) does not commute")


def necklace_T_check(
    group: FiniteGroup, n: int, labels: NecklaceLabels, verbose: bool = False
) -> NecklaceReport:
    """
    Check that T is a bijection intertwining the two braid actions.

    The disk side is the free group on x_1..x_n mapped into H = C_G(g_c), each
    puncture labeled g and the outer boundary x_1 ⋯ x_n labeled h_c. Braid
    generators act by the same formulas on both sides.

    Args:
        group: Gauge group
        n: Number of rings
        labels: Ring and axis labels
        verbose: Print progress information

    Returns:
        NecklaceReport

    Raises:
        LabelError: If the labels do not commute
    """
    check_necklace_labels(group, labels)
    link = Necklace(n)
    target = motion_rep(
        link,
        group,
        FluxLabel(labels.g, labels.g_c),
        axis_label=FluxLabel(labels.g_c, labels.h_c),
    )
    space = target.space

    sub = centralizer_subgroup(group, [labels.g_c])
    h = sub.group
    xs = [Word.generator(k) for k in range(n)]
    boundary = [BoundaryComponent(x, Word()) for x in xs]
    boundary.append(BoundaryComponent(product(xs), Word()))
    disk_labels = [FluxLabel(sub.restrict(labels.g), IDENTITY)] * n
    disk_labels.append(FluxLabel(sub.restrict(labels.h_c), IDENTITY))
    disk_presentation = Presentation(tuple(f"x{i}" for i in range(1, n + 1)))
    disk_homs = enumerate_homs(disk_presentation, h)
    disk = labeled_space(
        disk_presentation, h, boundary, disk_labels, classes(disk_homs, h)
    )

    lookup = class_lookup(space.all_classes, group)
    position = {k: i for i, k in enumerate(space.class_indices)}
    mapping = []
    for vector in disk.basis:
        hom = (labels.g_c,) + tuple(sub.lift(x) for x in vector.rho)
        mapping.append(position.get(lookup[hom], -1))
    bijective = sorted(mapping) == list(range(space.dimension))

    commutes = bijective
    transported = []
    if bijective:
        disk_lookup = class_lookup(disk.all_classes, h)
        inverse_map = {t: d for d, t in enumerate(mapping)}
        for i in range(1, n):
            sigma = _disk_sigma(n, i)
            full = act(sigma, disk_presentation, disk.all_classes, h, disk_lookup)
            on_disk = restrict_permutation(disk, full)
            on_necklace = target.rep.generators[f"s{i}"]
            moved = tuple(mapping[d] for d in on_disk)
            if compose_permutations(on_necklace, tuple(mapping)) != moved:
                commutes = False
            transported.append(
                tuple(mapping[on_disk[inverse_map[t]]] for t in range(space.dimension))
            )

    sigmas = [target.rep.generators[f"s{i}"] for i in range(1, n)]
    images_equal = commutes and groups_equal(sigmas, transported, space.dimension)
    braid_order = (
        int(permutation_group(sigmas, space.dimension).order())
        if space.dimension
        else 1
    )
    if verbose:
        print(f"Necklace square for n={n} over {group.name}")
        print(f"  disk dim {disk.dimension}, necklace dim {space.dimension}")
    return NecklaceReport(
        holds=bijective and commutes and images_equal,
        bijective=bijective,
        commutes=commutes,
        images_equal=images_equal,
        disk_dimension=disk.dimension,
        necklace_dimension=space.dimension,
        image_order=braid_order,
        motion_image_order=image_order(target.rep),
    )
