"""Check the permutation character of SL(d, p) on Z_p^d against its
decomposition into irreducibles, class by class."""

import csv
import io
import itertools
import time
from pathlib import Path
from typing import NamedTuple

import numpy as np

from dw_motion.characters.classes import (
    ClassPoint,
    enumerate_class_points,
    expected_class_count,
)
from dw_motion.characters.tables import (
    class_function,
    permutation_character,
)
from dw_motion.config import CHARACTER_TOLERANCE
from dw_motion.errors import GroupSpecError, VerificationError
from dw_motion.groups.conjugacy import conjugation_orbit
from dw_motion.groups.finite import FiniteGroup
from dw_motion.groups.spec import make_group

SUPPORTED_CASES = ((2, 2), (2, 3), (2, 5), (3, 2), (3, 3))

CSV_COLUMNS = ("tag", "params", "lhs", "rhs_real", "rhs_imag", "residual")

# Recorded alongside every report
INTERPRETATION = (
    "Roots of unity are exp(2*pi*i*k/(p-1)) powers of the smallest primitive "
    "root mod p; the degree p^2+p+1 characters take (p+1)l(a) + l(a^-2) on C4."
)


class ResidualRow(NamedTuple):
    """One class of the per-class comparison."""

    tag: str
    params: tuple[int, ...]
    lhs: int  # Fixed points of the representative on Z_p^d
    rhs: complex  # Irreducible-character sum
    residual: float  # |lhs - rhs|


class CharacterReport(NamedTuple):
    """Per-class comparison of the permutation character with its decomposition."""

    holds: bool  # Every residual is below CHARACTER_TOLERANCE
    d: int
    p: int
    class_count: int
    max_residual: float
    max_imaginary: float  # Largest |Im rhs|
    rows: list[ResidualRow]
    interpretation: str


class CoverageReport(NamedTuple):
    """Conjugacy classes of the representatives against the whole group."""

    holds: bool  # Pairwise non-conjugate and the class sizes sum to |G|
    group_order: int
    class_sizes: list[int]
    disjoint: bool


class NormReport(NamedTuple):
    """(1/|G|) Σ χ(g)^2 against the number of orbits on pairs of vectors."""

    holds: bool
    norm: float
    orbit_count: int


def verify_character_identity(
    d: int, p: int, verbose: bool = False
) -> CharacterReport:
    """
    Evaluate both sides of the permutation-character decomposition on every
    conjugacy class of SL(d, p).

    Args:
        d: Matrix size (2 or 3)
        p: Prime
        verbose: Print per-class values

    Returns:
        CharacterReport with one row per class

    Raises:
        GroupSpecError: If (d, p) is not a supported case
        VerificationError: If the class enumeration has the wrong size
    """
    if (d, p) not in SUPPORTED_CASES:
        raise GroupSpecError(
            f"Character identities are checked for (d, p) in {SUPPORTED_CASES}"
        )
    start = time.perf_counter()
    points = enumerate_class_points(d, p)
    expected = expected_class_count(d, p)
    if len(points) != expected:
        raise VerificationError(
            f"SL({d},{p}): enumerated {len(points)} classes, expected {expected}"
        )

    lhs = class_function("permutation", d, p, points)
    rhs = class_function("rhs", d, p, points)
    rows = [
        ResidualRow(
            tag=point.tag,
            params=point.params,
            lhs=int(left.real),
            rhs=right,
            residual=abs(left - right),
        )
        for point, left, right in zip(points, lhs.values, rhs.values)
    ]
    max_residual = max(row.residual for row in rows)
    max_imaginary = max(abs(row.rhs.imag) for row in rows)

    if verbose:
        elapsed = time.perf_counter() - start
        print(f"SL({d},{p}): {len(rows)} classes ({elapsed:.3f}s)")
        for row in rows:
            print(f"  {row.tag}{list(row.params)}: {row.lhs} vs {row.rhs.real:.6f}")
        print(f"  max residual {max_residual:.2e}")

    return CharacterReport(
        holds=max_residual < CHARACTER_TOLERANCE,
        d=d,
        p=p,
        class_count=len(rows),
        max_residual=max_residual,
        max_imaginary=max_imaginary,
        rows=rows,
        interpretation=INTERPRETATION,
    )


def _matrix_group(d: int, p: int) -> FiniteGroup:
    if (d, p) not in SUPPORTED_CASES:
        raise GroupSpecError(f"Group-level checks cover (d, p) in {SUPPORTED_CASES}")
    return make_group(f"SL{d}:{p}", use_cache=True)


def coverage_check(
    d: int, p: int, points: list[ClassPoint] | None = None
) -> CoverageReport:
    """Check that the representatives meet every conjugacy class exactly once."""
    group = _matrix_group(d, p)
    if points is None:
        points = enumerate_class_points(d, p)
    seen = np.zeros(group.order, dtype=bool)
    sizes = []
    disjoint = True
    for point in points:
        g = group.index_of_matrix(point.matrix)
        if seen[g]:
            disjoint = False
        orbit = conjugation_orbit(group, g)
        seen[orbit] = True
        sizes.append(len(orbit))
    return CoverageReport(
        holds=disjoint and sum(sizes) == group.order,
        group_order=group.order,
        class_sizes=sizes,
        disjoint=disjoint,
    )


def count_pair_orbits(matrices: np.ndarray, p: int) -> int:
    """Number of orbits of a matrix group on Z_p^d x Z_p^d."""
    d = matrices.shape[-1]
    digits = np.array(list(itertools.product(range(p), repeat=2 * d)), np.int64)
    pairs = digits.reshape(-1, d, 2)
    weights = p ** np.arange(2 * d - 1, -1, -1, dtype=np.int64)
    stack = matrices.astype(np.int64)
    visited = np.zeros(len(pairs), dtype=bool)
    orbits = 0
    for code in range(len(pairs)):
        if visited[code]:
            continue
        images = (stack @ pairs[code]) % p
        visited[images.reshape(len(stack), -1) @ weights] = True
        orbits += 1
    return orbits


def character_norm_check(d: int, p: int) -> NormReport:
    """Burnside cross-check: Σ χ(g)^2 / |G| counts orbits on pairs of vectors."""
    group = _matrix_group(d, p)
    matrices = group.matrices
    if matrices is None:
        raise VerificationError(f"{group.name} carries no matrices")
    total = sum(permutation_character(d, p, m) ** 2 for m in matrices)
    norm = total / group.order
    orbit_count = count_pair_orbits(matrices, p)
    return NormReport(
        holds=abs(norm - orbit_count) < CHARACTER_TOLERANCE,
        norm=norm,
        orbit_count=orbit_count,
    )


def format_csv(report: CharacterReport) -> str:
    """Per-class residual table as CSV text with a header row."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in report.rows:
        writer.writerow(
            [
                row.tag,
                " ".join(str(k) for k in row.params),
                row.lhs,
                f"{row.rhs.real:.12g}",
                f"{row.rhs.imag:.12g}",
                f"{row.residual:.3e}",
            ]
        )
    return buffer.getvalue()


def write_csv(report: CharacterReport, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_csv(report))
