"""Sanity facts about small pure-flux spaces and mapping-class images."""

from typing import NamedTuple

import numpy as np
from sympy import isprime

from dw_motion.dw.permutations import image_order
from dw_motion.dw.space import dw_space, mcg_rep
from dw_motion.groups.conjugacy import conjugacy_classes
from dw_motion.groups.constructors import sl_order
from dw_motion.groups.finite import IDENTITY, FiniteGroup
from dw_motion.groups.linalg import block_diagonal
from dw_motion.homs.labeled import BoundaryComponent, FluxLabel, labeled_space
from dw_motion.presentation.fp import Presentation
from dw_motion.presentation.standard import (
    S3_MATRIX,
    T3_MATRIX,
    circle,
    mapping_class_generators,
    surface_presentation,
)
from dw_motion.presentation.words import Word, inverse

# SL(2,Z) generators
T2_MATRIX = np.array([[1, 1], [0, 1]])
S2_MATRIX = np.array([[0, -1], [1, 0]])

# The same generators embedded in SL(3,Z) on coordinates (1,2) and (2,3)
T21_MATRIX = block_diagonal(T2_MATRIX, np.eye(1, dtype=np.int64))
S21_MATRIX = block_diagonal(S2_MATRIX, np.eye(1, dtype=np.int64))
S23_MATRIX = block_diagonal(np.eye(1, dtype=np.int64), S2_MATRIX)

# Surfaces whose mapping-class image is compared with SL(d, Z_n)
TORUS_DIMENSIONS = {"torus": 2, "t2": 2, "t3": 3}


class AxiomReport(NamedTuple):
    """Disk and cylinder dimensions over all labels of G."""

    holds: bool  # True if every dimension matched
    disk_checks: int  # Labels g tried on the disk
    cylinder_checks: int  # Label pairs tried on the cylinder
    failures: list[str]  # Human-readable description of each mismatch


class MatrixIdentityReport(NamedTuple):
    """Integer identities between SL(3,Z) and embedded SL(2,Z) generators."""

    holds: bool
    t3_equals_t21: bool  # T₃ = T₂₁
    s3_equals_product: bool  # S₃ = S₂₁·S₂₃


class ImageReport(NamedTuple):
    """Order of the mapping-class image on V_G(T^d)."""

    surface: str
    dimension: int  # dim V_G(T^d)
    image_order: int  # Order of the generated permutation group
    sl_order: int | None  # |SL(d, Z_n)| when G = Z_n with n prime
    matches: bool | None  # image_order == sl_order, when comparable


def disk_dimension(group: FiniteGroup, g: int) -> int:
    """dim V_G(D²; g): 1 exactly when the boundary label is trivial."""
    boundary = [BoundaryComponent(Word(), Word())]
    space = labeled_space(Presentation(()), group, boundary, [FluxLabel(g, IDENTITY)])
    return space.dimension


def cylinder_dimension(group: FiniteGroup, g1: int, g2: int) -> int:
    """dim V_G(S¹×I; g₁, g₂) with both ends oriented outward.

    The two ends see the generator as a and a^-1, so the space is
    1-dimensional exactly when g₂ is conjugate to g₁^-1.
    """
    a = Word.generator(0)
    boundary = [BoundaryComponent(a, Word()), BoundaryComponent(inverse(a), Word())]
    labels = [FluxLabel(g1, IDENTITY), FluxLabel(g2, IDENTITY)]
    return labeled_space(circle(), group, boundary, labels).dimension


def verify_axioms(group: FiniteGroup, verbose: bool = False) -> AxiomReport:
    """Check the disk and cylinder dimensions against the expected 0/1 values."""
    class_table = conjugacy_classes(group)
    failures = []
    for g in range(group.order):
        expected = 1 if g == IDENTITY else 0
        got = disk_dimension(group, g)
        if got != expected:
            failures.append(f"disk {group.label(g)}: {got} != {expected}")

    reps = class_table.rep
    for g1 in reps:
        dual = class_table.class_of[group.inverse(g1)]
        for g2 in reps:
            expected = 1 if class_table.class_of[g2] == dual else 0
            got = cylinder_dimension(group, g1, g2)
            if got != expected:
                failures.append(
                    f"cylinder ({group.label(g1)}, {group.label(g2)}): "
                    f"{got} != {expected}"
                )
    if verbose:
        print(f"Axiom checks for {group.name}: {len(failures)} failures")
    return AxiomReport(not failures, group.order, len(reps) ** 2, failures)


def verify_matrix_identities() -> MatrixIdentityReport:
    t3 = bool(np.array_equal(T3_MATRIX, T21_MATRIX))
    s3 = bool(np.array_equal(S3_MATRIX, S21_MATRIX @ S23_MATRIX))
    return MatrixIdentityReport(t3 and s3, t3, s3)


def _cyclic_prime_order(group: FiniteGroup) -> int | None:
    """n if G is cyclic of prime order n, else None."""
    n = group.order
    if not isprime(n):
        return None
    return n


def mcg_image_report(group: FiniteGroup, surface: str) -> ImageReport:
    """
    Order of the image of M(T^d) acting on V_G(T^d).

    For G = Z_n with n prime the image is expected to be SL(d, Z_n); both
    numbers are reported and compared.

    Raises:
        ValueError: If the surface is not a torus
    """
    if surface not in TORUS_DIMENSIONS:
        known = ", ".join(sorted(TORUS_DIMENSIONS))
        raise ValueError(f"Surface {surface!r} has no SL image (known: {known})")
    d = TORUS_DIMENSIONS[surface]
    space = dw_space(surface_presentation(surface), group)
    rep = mcg_rep(space, mapping_class_generators(surface))
    order = image_order(rep)
    n = _cyclic_prime_order(group)
    expected = sl_order(d, n) if n is not None else None
    matches = None if expected is None else order == expected
    return ImageReport(surface, space.dimension, order, expected, matches)
