"""Dimension reduction: V_G(Y×S¹) as a sum over [g] of V_{C_G(g)}(Y)."""

import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import NamedTuple

from dw_motion.dw.permutations import PermutationRep, permutation_group
from dw_motion.dw.space import DWSpace, dw_space
from dw_motion.errors import VerificationError
from dw_motion.groups.conjugacy import Subgroup, centralizer_subgroup, conjugacy_classes
from dw_motion.groups.finite import FiniteGroup
from dw_motion.homs.classes import (
    HomClass,
    Permutation,
    act,
    class_lookup,
    classes,
)
from dw_motion.homs.enumerate import Hom, enumerate_homs
from dw_motion.presentation.fp import Endomorphism, Presentation
from dw_motion.presentation.words import Word, commutator


class AssemblyBlock(NamedTuple):
    """The summand V_{C_G(g)}(Y) for one conjugacy class [g]."""

    element: int  # Class representative g
    centralizer: Subgroup  # C_G(g) as a standalone group
    source: list[HomClass]  # Classes of Hom(π₁Y, C_G(g)), subgroup indices
    images: list[int]  # Target basis index of each source class


class AssemblyMap(NamedTuple):
    """The assembly bijection ⊔_[g] Hom(π₁Y, C_G(g))/∼ → Hom(π₁(Y×S¹), G)/∼."""

    blocks: list[AssemblyBlock]  # One per conjugacy class of G
    target: DWSpace  # V_G(Y×S¹)
    index: dict[tuple[int, int], int]  # (block, source class) → target class


class IntertwinerReport(NamedTuple):
    """Comparison of ⊕ f_* with (f×id)_* through the assembly map."""

    holds: bool  # True if the permutations agree everywhere
    checked: int  # Number of basis vectors compared
    mismatches: list[tuple[int, int]]  # (block, source class) that disagree


class ImageOrders(NamedTuple):
    """Orders of the generated permutation groups on V_G(Y×S¹)."""

    reduced: int  # Group generated by the transported ⊕ f_*
    ambient: int | None  # Group generated by the ambient generators, if given


def product_with_circle(presentation: Presentation) -> Presentation:
    """π₁(Y×S¹): Y's presentation plus a last generator t commuting with all."""
    t_name = presentation.fresh_name("t")
    t = Word.generator(presentation.rank)
    relators = presentation.relators + tuple(
        commutator(t, Word.generator(g)) for g in range(presentation.rank)
    )
    return Presentation(presentation.generator_names + (t_name,), relators)


def _block(
    presentation: Presentation, group: FiniteGroup, g: int
) -> tuple[Subgroup, list[HomClass]]:
    sub = centralizer_subgroup(group, [g])
    homs = enumerate_homs(presentation, sub.group)
    return sub, classes(homs, sub.group)


def _lift(sub: Subgroup, hom: Hom, g: int) -> Hom:
    return tuple(sub.embedding[x] for x in hom) + (g,)


def assemble_dimension_reduction(
    presentation: Presentation,
    group: FiniteGroup,
    representatives: list[int] | None = None,
    max_workers: int | None = 1,
    verbose: bool = False,
) -> AssemblyMap:
    """
    Build and verify the assembly map for Y×S¹.

    For each conjugacy class representative g, a class [φ: π₁Y → C_G(g)] is
    sent to the G-class of (φ, t ↦ g).

    Args:
        presentation: π₁(Y)
        group: Gauge group G
        representatives: One element per conjugacy class (default: the
            minimal-index representatives)
        max_workers: Parallel workers over the blocks (1 = sequential)
        verbose: Print progress information

    Returns:
        AssemblyMap whose images partition the target basis

    Raises:
        VerificationError: If the assembled map is not a bijection
    """
    start = time.perf_counter()
    class_table = conjugacy_classes(group)
    if representatives is None:
        representatives = class_table.rep
    if sorted(class_table.class_of[g] for g in representatives) != list(
        range(len(class_table.classes))
    ):
        raise ValueError("Need exactly one representative per conjugacy class")

    target = dw_space(product_with_circle(presentation), group)
    lookup = class_lookup(target.basis, group)
    if verbose:
        print(f"Assembling {len(representatives)} blocks for {group.name}")
        print(f"  Target dimension: {target.dimension}")

    computed: dict[int, tuple[Subgroup, list[HomClass]]] = {}
    if max_workers == 1:
        for g in representatives:
            computed[g] = _block(presentation, group, g)
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            future_to_g = {
                executor.submit(_block, presentation, group, g): g
                for g in representatives
            }
            for future in as_completed(future_to_g):
                try:
                    computed[future_to_g[future]] = future.result()
                except Exception:
                    for f in future_to_g:
                        f.cancel()
                    raise

    blocks, index = [], {}
    for b, g in enumerate(representatives):
        sub, source = computed[g]
        images = [lookup[_lift(sub, c.canonical, g)] for c in source]
        for k, image in enumerate(images):
            index[(b, k)] = image
        blocks.append(AssemblyBlock(g, sub, source, images))
        if verbose:
            print(
                f"  [{group.label(g)}]: |C(g)| = {sub.group.order}, "
                f"{len(source)} classes"
            )

    if sorted(index.values()) != list(range(target.dimension)):
        raise VerificationError(
            f"Assembly map is not a bijection: {len(index)} source classes, "
            f"{len(set(index.values()))} distinct images, "
            f"target dimension {target.dimension}"
        )
    if verbose:
        print(f"  Verified bijection in {time.perf_counter() - start:.2f}s")
    return AssemblyMap(blocks, target, index)


def representative_independence(presentation: Presentation, group: FiniteGroup) -> bool:
    """Assembly with the maximal-index representatives gives the same blocks.

    Each block's image set in the target basis must not depend on which
    element of [g] is used.
    """
    class_table = conjugacy_classes(group)
    first = assemble_dimension_reduction(presentation, group)
    second = assemble_dimension_reduction(
        presentation, group, representatives=[c[-1] for c in class_table.classes]
    )
    return all(
        sorted(a.images) == sorted(b.images)
        for a, b in zip(first.blocks, second.blocks)
    )


def block_action(
    assembly: AssemblyMap, presentation: Presentation, f: Endomorphism
) -> Permutation:
    """⊕_[g] f_* transported to the target basis through the assembly map."""
    perm = [0] * assembly.target.dimension
    for b, block in enumerate(assembly.blocks):
        sub_group = block.centralizer.group
        local = act(f, presentation, block.source, sub_group)
        for k, image in enumerate(local):
            perm[assembly.index[(b, k)]] = assembly.index[(b, image)]
    return tuple(perm)


def verify_intertwiner(
    presentation: Presentation,
    group: FiniteGroup,
    f: Endomorphism,
    assembly: AssemblyMap | None = None,
) -> IntertwinerReport:
    """
    Check that the assembly map intertwines ⊕ f_* with (f×id)_*.

    The ambient endomorphism extends f by t ↦ t.

    Raises:
        EndomorphismError: If f does not act bijectively on some block
    """
    if assembly is None:
        assembly = assemble_dimension_reduction(presentation, group)
    target = assembly.target
    ambient = act(f.extended(1), target.presentation, target.basis, group)
    mismatches = []
    for b, block in enumerate(assembly.blocks):
        local = act(f, presentation, block.source, block.centralizer.group)
        for k, image in enumerate(local):
            if ambient[assembly.index[(b, k)]] != assembly.index[(b, image)]:
                mismatches.append((b, k))
    return IntertwinerReport(not mismatches, len(assembly.index), mismatches)


def dimred_image_orders(
    presentation: Presentation,
    group: FiniteGroup,
    generators: dict[str, Endomorphism],
    ambient_generators: dict[str, Endomorphism] | None = None,
    assembly: AssemblyMap | None = None,
) -> ImageOrders:
    """Orders of the reduced and ambient mapping-class images.

    The two groups need not coincide; both orders are reported as found.
    """
    if assembly is None:
        assembly = assemble_dimension_reduction(presentation, group)
    size = assembly.target.dimension
    reduced = [block_action(assembly, presentation, f) for f in generators.values()]
    reduced_order = int(permutation_group(reduced, size).order()) if size else 1
    ambient_order = None
    if ambient_generators is not None:
        target = assembly.target
        lookup = class_lookup(target.basis, group)
        perms = [
            act(e, target.presentation, target.basis, group, lookup)
            for e in ambient_generators.values()
        ]
        ambient_order = int(permutation_group(perms, size).order()) if size else 1
    return ImageOrders(reduced_order, ambient_order)


def reduced_rep(
    assembly: AssemblyMap,
    presentation: Presentation,
    generators: dict[str, Endomorphism],
) -> PermutationRep:
    """⊕ f_* for each named generator, as a rep on the target basis."""
    perms = {
        name: block_action(assembly, presentation, f) for name, f in generators.items()
    }
    return PermutationRep(assembly.target.dimension, perms, tuple(generators))
