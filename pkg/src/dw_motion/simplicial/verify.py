"""Brute-force checks of the coloring identities behind the state sum."""

import itertools
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from dw_motion.groups.conjugacy import centralizer
from dw_motion.groups.finite import FiniteGroup
from dw_motion.homs.classes import hom_orbit
from dw_motion.homs.enumerate import enumerate_homs
from dw_motion.simplicial.colorings import (
    Coloring,
    count_colorings,
    holonomy,
    partition_function,
)
from dw_motion.simplicial.triangulation import (
    Cylinder,
    Triangulation,
    check_cylinder,
    end_edge,
    presentation_from_triangulation,
    spanning_tree,
)


class Lemma1Report(NamedTuple):
    """#Col(M) against |G|^(v-1) · #Hom(π₁M, G)."""

    holds: bool  # True if both sides agree
    colorings: int  # #Col(M) by backtracking
    homs: int  # #Hom(π₁M, G) by enumeration
    predicted: int  # |G|^(v-1) · homs


class CylinderMatrix(NamedTuple):
    """Coloring counts of Y×I indexed by colorings of its two ends."""

    counts: np.ndarray  # counts[τ, μ] = #Col(Y×I, τ ∪ μ)
    base_colorings: list[tuple[int, ...]]  # Colors of the base edges
    holonomies: list[tuple[int, ...]]  # Gauge-fixed holonomy of each coloring


class BlockReport(NamedTuple):
    """Block structure and idempotence of Z(Id_Y) in the coloring basis."""

    holds: bool  # block_diagonal and idempotent
    block_diagonal: bool  # Entries vanish off blocks, constant within them
    idempotent: bool  # Z(Id_Y)² = Z(Id_Y)
    blocks: int  # Number of holonomy classes (blocks)
    dimension: int  # Number of colorings of Y
    mismatches: int  # Entries violating the block formula


class Lemma2Report(NamedTuple):
    """#Col(Y×I, τ ∪ μ) against |G|^(interior v) · |C_G(hol τ)|."""

    holds: bool
    pairs_checked: int
    mismatches: list[tuple[int, int, int, int]]  # (τ, μ, counted, expected)


def verify_lemma1(triangulation: Triangulation, group: FiniteGroup) -> Lemma1Report:
    """Check #Col(M) = |G|^(v-1) · #Hom(π₁(M), G) for a connected complex."""
    colorings = count_colorings(triangulation, group)
    presentation = presentation_from_triangulation(triangulation)
    homs = len(enumerate_homs(presentation, group))
    predicted = group.order ** (triangulation.vertex_count - 1) * homs
    return Lemma1Report(colorings == predicted, colorings, homs, predicted)


def closed_invariant(triangulation: Triangulation, group: FiniteGroup) -> Fraction:
    """Z(M) = #Hom(π₁M, G) / |G| for a closed connected M."""
    presentation = presentation_from_triangulation(triangulation)
    return Fraction(len(enumerate_homs(presentation, group)), group.order)


def verify_triangulation_independence(
    first: Triangulation,
    second: Triangulation,
    group: FiniteGroup,
    boundary_colorings: list[Coloring],
) -> bool:
    """Z agrees on two triangulations sharing a boundary, for every τ given."""
    return all(
        partition_function(first, group, tau).same_value(
            partition_function(second, group, tau)
        )
        for tau in boundary_colorings
    )


def boundary_colorings(
    triangulation: Triangulation, group: FiniteGroup
) -> list[Coloring]:
    """Every coloring of the boundary edges (unconstrained)."""
    edges = triangulation.boundary_edges
    return [
        dict(zip(edges, colors))
        for colors in itertools.product(range(group.order), repeat=len(edges))
    ]


def cylinder_count_matrix(
    cylinder: Cylinder, group: FiniteGroup, verbose: bool = False
) -> CylinderMatrix:
    """
    Count colorings of Y×I for every pair of end colorings.

    Args:
        cylinder: Y×I with its base Y and end maps
        group: Gauge group
        verbose: Print progress information

    Returns:
        CylinderMatrix over all colorings of Y's edges

    Raises:
        TriangulationError: If the ends do not match the boundary
    """
    check_cylinder(cylinder)
    base, tri = cylinder.base, cylinder.triangulation
    inverses = group.inverses
    base_colorings = list(
        itertools.product(range(group.order), repeat=len(base.edges))
    )
    tree = spanning_tree(base)
    holonomies = [holonomy(base, tree, list(c), group) for c in base_colorings]

    def end_coloring(end: int, colors: tuple[int, ...]) -> Coloring:
        result = {}
        for edge, g in zip(base.edges, colors):
            image, flipped = end_edge(cylinder, end, edge)
            result[image] = inverses[g] if flipped else g
        return result

    size = len(base_colorings)
    if verbose:
        print(f"Counting Y×I colorings for {size}×{size} end pairs...")
    counts = np.zeros((size, size), dtype=np.int64)
    for i, tau in enumerate(base_colorings):
        bottom = end_coloring(0, tau)
        for j, mu in enumerate(base_colorings):
            boundary = bottom | end_coloring(1, mu)
            counts[i, j] = count_colorings(tri, group, boundary)
    return CylinderMatrix(counts, base_colorings, holonomies)


def _same_class(
    group: FiniteGroup, first: tuple[int, ...], second: tuple[int, ...]
) -> bool:
    orbit = hom_orbit(group, first)
    return bool(np.any(np.all(orbit == np.array(second, dtype=np.int64), axis=1)))


def _expected_counts(
    cylinder: Cylinder, group: FiniteGroup, matrix: CylinderMatrix
) -> np.ndarray:
    """Lemma-2 prediction |G|^(interior v) · |C_G(hol τ)| or 0, per entry."""
    interior = (
        cylinder.triangulation.vertex_count
        - cylinder.triangulation.boundary_vertex_count
    )
    scale = group.order**interior
    holonomies = matrix.holonomies
    centralizer_orders = [len(centralizer(group, h)) for h in holonomies]
    size = len(holonomies)
    expected = np.zeros((size, size), dtype=np.int64)
    for i in range(size):
        for j in range(size):
            if _same_class(group, holonomies[i], holonomies[j]):
                expected[i, j] = scale * centralizer_orders[i]
    return expected


def verify_lemma2_annulus(
    cylinder: Cylinder, group: FiniteGroup, matrix: CylinderMatrix | None = None
) -> Lemma2Report:
    """Check #Col(Y×I, τ ∪ μ) = |G|^(interior v)·|C_G(hol τ)| when the end
    holonomies are conjugate and 0 otherwise.

    Paths between the two ends are the straight products through the
    triangulation; other path choices are not examined.
    """
    if matrix is None:
        matrix = cylinder_count_matrix(cylinder, group)
    expected = _expected_counts(cylinder, group, matrix)
    bad = np.argwhere(matrix.counts != expected)
    mismatches = [
        (int(i), int(j), int(matrix.counts[i, j]), int(expected[i, j]))
        for i, j in bad
    ]
    return Lemma2Report(not mismatches, int(matrix.counts.size), mismatches)


def verify_idempotent_blocks(
    cylinder: Cylinder,
    group: FiniteGroup,
    matrix: CylinderMatrix | None = None,
    verbose: bool = False,
) -> BlockReport:
    """
    Check that Z(Id_Y) is block-diagonal by holonomy class and idempotent.

    With C the count matrix, Z(Id_Y) = |G|^(v_Y - v) C where v counts the
    vertices of Y×I, so idempotence is C² = |G|^(v - v_Y) C; each nonzero
    block entry of Z(Id_Y) is |C_G(hol)| / |G|^(v_Y).

    Raises:
        TriangulationError: If the cylinder ends do not match its boundary
    """
    if matrix is None:
        matrix = cylinder_count_matrix(cylinder, group, verbose=verbose)
    v_base = cylinder.base.vertex_count
    v_total = cylinder.triangulation.vertex_count
    counts = matrix.counts

    # Z entry |C|/|G|^v_Y means counts · |G|^(2 v_Y) = |C| · |G|^v_total
    expected = _expected_counts(cylinder, group, matrix)
    mismatches = int(np.count_nonzero(counts != expected))
    scale = group.order ** (v_total - v_base)
    idempotent = bool(np.array_equal(counts @ counts, scale * counts))

    labels: list[tuple[int, ...]] = []
    for h in matrix.holonomies:
        if not any(_same_class(group, h, other) for other in labels):
            labels.append(h)
    if verbose:
        print(f"  {len(labels)} blocks, {mismatches} mismatched entries")
    return BlockReport(
        holds=mismatches == 0 and idempotent,
        block_diagonal=mismatches == 0,
        idempotent=idempotent,
        blocks=len(labels),
        dimension=len(matrix.base_colorings),
        mismatches=mismatches,
    )
