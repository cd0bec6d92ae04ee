"""Block decomposition of torus-link spaces over the classes of x and y.

A basis class [ρ] of V_G(S³ ∖ TL; g, h) lies in the block of
([ρ(x)], [ρ(y)]). After conjugating ρ so that ρ(y) is the block's base value
y₀, every generator image commutes with y₀^q, so the block is compared with a
space of maps from the free group on x, y, u_1..u_{n-1} into C_G(y₀^q): the
cylinder with punctures, with x labeled x₀, y labeled y₀ and each meridian
labeled by the base class's meridian value.
"""

import math
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import NamedTuple

import numpy as np

from dw_motion.errors import LabelError
from dw_motion.groups.conjugacy import Subgroup, centralizer_subgroup, conjugacy_classes
from dw_motion.groups.finite import IDENTITY, FiniteGroup
from dw_motion.homs.classes import act, class_lookup, classes
from dw_motion.homs.enumerate import Hom, enumerate_homs, evaluate
from dw_motion.homs.labeled import (
    BoundaryComponent,
    FluxLabel,
    LabeledSpace,
    labeled_space,
)
from dw_motion.motion.generators import motion_generators
from dw_motion.motion.links import TorusLink, torus_meridian
from dw_motion.motion.representation import motion_space
from dw_motion.presentation.fp import Presentation
from dw_motion.presentation.words import Word

Block = tuple[int, int]  # (conjugacy class of x, conjugacy class of y)


class PuncturedCylinder(NamedTuple):
    """The space a block is compared with, built from one base class."""

    base: Hom  # Base class representative with ρ(y) = y₀
    centralizer: Subgroup  # C_G(y₀^q)
    space: LabeledSpace  # Labeled classes of maps from the free group


class PsiReport(NamedTuple):
    """Verification of the block bijection Ψ."""

    holds: bool  # injective, surjective and natural
    block: Block
    size: int  # Number of basis classes in the block
    target_size: int  # Dimension of the punctured-cylinder space
    injective: bool
    surjective: bool
    natural: bool  # Motion generators commute with Ψ
    base_independent: bool  # A second base class gives the same dimension
    mapping: list[int]  # Block position → target basis position


class Thm2Row(NamedTuple):
    """One block of the torus-link decomposition."""

    x_class: str  # Label of the x class representative
    y_class: str  # Label of the y class representative
    block_dimension: int
    cylinder_dimension: int
    centralizer_order: int  # |C_G(y₀^q)|


class Thm2Report(NamedTuple):
    """dim V_G(S³ ∖ TL; g, h) against the sum over blocks."""

    holds: bool
    total: int  # Left-hand side
    block_sum: int  # Sum of cylinder dimensions over nonempty blocks
    u: int  # Twist parameters with p v - q u = 1
    v: int
    rows: list[Thm2Row]


def twist_parameters(p: int, q: int) -> tuple[int, int]:
    """Smallest positive (u, v) with p v - q u = 1.

    Raises:
        ValueError: If gcd(p, q) != 1
    """
    if math.gcd(p, q) != 1:
        raise ValueError(f"gcd({p}, {q}) != 1")
    u = 1
    while (1 + q * u) % p:
        u += 1
    return u, (1 + q * u) // p


def block_table(space: LabeledSpace) -> dict[Block, list[int]]:
    """Basis positions grouped by the classes of ρ(x) and ρ(y), in order."""
    class_of = conjugacy_classes(space.group).class_of
    blocks: dict[Block, list[int]] = {}
    for position, vector in enumerate(space.basis):
        key = (class_of[vector.rho[0]], class_of[vector.rho[1]])
        blocks.setdefault(key, []).append(position)
    return dict(sorted(blocks.items()))


def _free_presentation(n: int) -> Presentation:
    names = ("x", "y") + tuple(f"u{i}" for i in range(1, n))
    return Presentation(names)


def _align_y(group: FiniteGroup, rho: Hom, y0: int) -> Hom:
    """Conjugate ρ by the first k with k ρ(y) k^-1 = y₀."""
    conj = group.conjugation
    k = int(np.flatnonzero(conj[:, rho[1]] == y0)[0])
    return tuple(int(conj[k, g]) for g in rho)


def punctured_cylinder(
    link: TorusLink, group: FiniteGroup, base: Hom
) -> PuncturedCylinder:
    """Labeled space over C_G(y₀^q) with the base class's boundary values."""
    n = link.n
    y0 = base[1]
    sub = centralizer_subgroup(group, [group.power(y0, link.q)])
    h = sub.group
    boundary = [
        BoundaryComponent(Word.generator(0), Word()),
        BoundaryComponent(Word.generator(1), Word()),
    ]
    labels = [
        FluxLabel(sub.restrict(base[0]), IDENTITY),
        FluxLabel(sub.restrict(y0), IDENTITY),
    ]
    for i in range(1, n + 1):
        meridian = torus_meridian(n, i)
        boundary.append(BoundaryComponent(meridian, Word()))
        value = sub.restrict(evaluate(group, base, meridian))
        labels.append(FluxLabel(value, IDENTITY))
    presentation = _free_presentation(n)
    homs = enumerate_homs(presentation, h)
    space = labeled_space(presentation, h, boundary, labels, classes(homs, h))
    return PuncturedCylinder(base, sub, space)


def _psi_images(
    group: FiniteGroup,
    block_reps: list[Hom],
    cylinder: PuncturedCylinder,
) -> list[int | None]:
    """Target basis position of each block class, None if it falls outside."""
    sub, space = cylinder.centralizer, cylinder.space
    lookup = class_lookup(space.all_classes, sub.group)
    position = {k: i for i, k in enumerate(space.class_indices)}
    y0 = cylinder.base[1]
    images: list[int | None] = []
    for rho in block_reps:
        aligned = _align_y(group, rho, y0)
        try:
            restricted = tuple(sub.restrict(g) for g in aligned)
        except KeyError:
            images.append(None)
            continue
        images.append(position.get(lookup[restricted]))
    return images


def _check_naturality(
    link: TorusLink,
    space: LabeledSpace,
    positions: list[int],
    mapping: list[int],
    cylinder: PuncturedCylinder,
) -> bool:
    """Each motion generator permutes the block as it permutes the cylinder."""
    group, target = space.group, cylinder.space
    full_lookup = class_lookup(space.all_classes, group)
    sub_lookup = class_lookup(target.all_classes, target.group)
    basis_position = {k: i for i, k in enumerate(space.class_indices)}
    target_position = {k: i for i, k in enumerate(target.class_indices)}
    block_index = {p: b for b, p in enumerate(positions)}
    for e in motion_generators(link).values():
        on_link = act(e, space.presentation, space.all_classes, group, full_lookup)
        on_cylinder = act(
            e, target.presentation, target.all_classes, target.group, sub_lookup
        )
        for b, p in enumerate(positions):
            image = basis_position.get(on_link[space.basis[p].class_index])
            if image not in block_index:
                return False
            source = target.basis[mapping[b]].class_index
            moved = target_position.get(on_cylinder[source])
            if moved != mapping[block_index[image]]:
                return False
    return True


def psi_bijection(
    link: TorusLink,
    group: FiniteGroup,
    label: FluxLabel,
    block: Block | None = None,
    space: LabeledSpace | None = None,
) -> list[PsiReport]:
    """
    Verify Ψ on one block (or every nonempty block).

    The base class of a block is its first basis class, aligned so that
    ρ(y) = y₀. Ψ sends a class to its aligned representative viewed in
    C_G(y₀^q); injectivity and surjectivity are checked by enumerating both
    sides, naturality by comparing every motion generator's action, and base
    independence by rebuilding the target from the second class of the block.

    Args:
        link: Torus link
        group: Gauge group
        label: Flux label (g, h) of every component
        block: (class of x, class of y) to check (default: all blocks)
        space: Precomputed labeled space of the link complement

    Returns:
        One PsiReport per checked block

    Raises:
        LabelError: If the requested block is empty
    """
    if space is None:
        space = motion_space(link, group, label)
    table = block_table(space)
    y_reps = conjugacy_classes(group).rep
    if block is not None:
        if block not in table:
            raise LabelError(f"Block {block} has no basis classes")
        table = {block: table[block]}

    reports = []
    for key, positions in table.items():
        reps = [space.basis[p].rho for p in positions]
        base = _align_y(group, reps[0], y_reps[key[1]])
        cylinder = punctured_cylinder(link, group, base)
        images = _psi_images(group, reps, cylinder)
        hits = [i for i in images if i is not None]
        injective = len(hits) == len(images) and len(set(hits)) == len(hits)
        surjective = set(hits) == set(range(cylinder.space.dimension))
        mapping = [i if i is not None else -1 for i in images]
        natural = injective and _check_naturality(
            link, space, positions, mapping, cylinder
        )
        base_independent = True
        if len(reps) > 1:
            second = punctured_cylinder(link, group, _align_y(group, reps[1], base[1]))
            base_independent = second.space.dimension == cylinder.space.dimension
        reports.append(
            PsiReport(
                holds=injective and surjective and natural,
                block=key,
                size=len(positions),
                target_size=cylinder.space.dimension,
                injective=injective,
                surjective=surjective,
                natural=natural,
                base_independent=base_independent,
                mapping=mapping,
            )
        )
    return reports


def thm2_decomposition(
    link: TorusLink,
    group: FiniteGroup,
    label: FluxLabel,
    max_workers: int | None = 1,
    verbose: bool = False,
) -> Thm2Report:
    """
    Compare dim V_G(S³ ∖ TL; g, h) with the sum of the block cylinder spaces.

    The block side is built independently of the left-hand dimension: each
    nonempty block contributes the dimension of its punctured-cylinder space.

    Args:
        link: Torus link (gcd(p, q) = 1)
        group: Gauge group
        label: Flux label (g, h) shared by the components
        max_workers: Parallel workers over the blocks (1 = sequential)
        verbose: Print progress information

    Returns:
        Thm2Report with one row per nonempty block
    """
    start = time.perf_counter()
    u, v = twist_parameters(link.p, link.q)
    space = motion_space(link, group, label)
    table = block_table(space)
    class_table = conjugacy_classes(group)
    bases = {
        key: _align_y(
            group,
            space.basis[positions[0]].rho,
            class_table.rep[key[1]],
        )
        for key, positions in table.items()
    }

    cylinders: dict[Block, PuncturedCylinder] = {}
    if max_workers == 1:
        for key, base in bases.items():
            cylinders[key] = punctured_cylinder(link, group, base)
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            future_to_key = {
                executor.submit(punctured_cylinder, link, group, base): key
                for key, base in bases.items()
            }
            for future in as_completed(future_to_key):
                try:
                    cylinders[future_to_key[future]] = future.result()
                except Exception:
                    for f in future_to_key:
                        f.cancel()
                    raise

    rows = []
    for key, positions in table.items():
        cylinder = cylinders[key]
        rows.append(
            Thm2Row(
                x_class=group.label(class_table.rep[key[0]]),
                y_class=group.label(class_table.rep[key[1]]),
                block_dimension=len(positions),
                cylinder_dimension=cylinder.space.dimension,
                centralizer_order=cylinder.centralizer.group.order,
            )
        )
    block_sum = sum(row.cylinder_dimension for row in rows)
    if verbose:
        elapsed = time.perf_counter() - start
        print(f"Torus link {link} over {group.name}: (u, v) = ({u}, {v})")
        print(f"  dim = {space.dimension}, block sum = {block_sum} ({elapsed:.2f}s)")
    return Thm2Report(
        holds=space.dimension == block_sum,
        total=space.dimension,
        block_sum=block_sum,
        u=u,
        v=v,
        rows=rows,
    )

