"""Group-spec DSL and the plain-text table format.

Grammar: ``Z:n``, ``S:n``, ``D:n``, ``Q8``, ``SL2:p``, ``SL3:p`` (p prime,
SL3 only for p in {2, 3}), ``prod(a,b)`` with nested specs, ``table:path``.
"""

import re
from pathlib import Path

import numpy as np
from sympy import isprime

from dw_motion.data.cache import ensure_cache_dirs, get_group_cache_path
from dw_motion.errors import GroupAxiomError, GroupSpecError
from dw_motion.groups.constructors import (
    cyclic,
    dihedral,
    direct_product,
    quaternion,
    special_linear,
    symmetric,
)
from dw_motion.groups.finite import FiniteGroup, group_from_table

SUPPORTED_SL3_PRIMES = (2, 3)

# Matrix groups at least this large are worth caching on disk
CACHE_MIN_ORDER = 1000

_SIMPLE_SPEC = re.compile(r"^(Z|S|D|SL2|SL3):(\d+)$")


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on separators that are not nested inside parentheses."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return [part.strip() for part in parts]


def load_table(path: Path) -> FiniteGroup:
    """Read a group from the table format: the order n, then n rows of n indices.

    Raises:
        GroupAxiomError: If the table is malformed or violates the group axioms
    """
    lines = [line for line in Path(path).read_text().splitlines() if line.strip()]
    try:
        n = int(lines[0])
        rows = [[int(tok) for tok in line.split()] for line in lines[1:]]
    except (IndexError, ValueError) as exc:
        raise GroupAxiomError(f"Malformed table file {path}: {exc}") from None
    if len(rows) != n or any(len(row) != n for row in rows):
        raise GroupAxiomError(f"Table file {path} must have {n} rows of {n} entries")
    return group_from_table(f"table:{Path(path).name}", np.array(rows, np.int64))


def save_table(group: FiniteGroup, path: Path) -> None:
    """Write a group in the table format read by load_table."""
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [str(group.order)]
    lines += [" ".join(str(x) for x in row) for row in group.table]
    path.write_text("\n".join(lines) + "\n")


def _load_cached_matrix_group(spec: str, d: int, p: int) -> FiniteGroup | None:
    path = get_group_cache_path(spec)
    if not path.exists():
        return None
    with np.load(path) as data:
        mul, matrices = data["mul"], data["matrices"]
    labels = tuple("".join(str(int(x)) for x in m.reshape(-1)) for m in matrices)
    return group_from_table(
        f"SL({d},{p})", mul, labels, matrices=matrices, modulus=p, validate=False
    )


def _special_linear_cached(
    spec: str, d: int, p: int, use_cache: bool, verbose: bool
) -> FiniteGroup:
    if use_cache:
        cached = _load_cached_matrix_group(spec, d, p)
        if cached is not None:
            if verbose:
                print(f"Loaded cached table for {spec}")
            return cached
    group = special_linear(d, p, verbose=verbose)
    if use_cache and group.order >= CACHE_MIN_ORDER:
        ensure_cache_dirs()
        path = get_group_cache_path(spec)
        np.savez_compressed(path, mul=group.mul, matrices=group.matrices)
        if verbose:
            print(f"Cached table to {path}")
    return group


def make_group(
    spec: str, use_cache: bool = False, verbose: bool = False
) -> FiniteGroup:
    """
    Build a FiniteGroup from a group-spec string.

    Args:
        spec: One of Z:n, S:n, D:n, Q8, SL2:p, SL3:p, prod(a,b), table:path
        use_cache: Store/load large matrix-group tables under the cache dir
        verbose: Print progress for large tables

    Returns:
        FiniteGroup satisfying the group axioms with identity at index 0

    Raises:
        GroupSpecError: If the spec is malformed or parameters unsupported
        GroupAxiomError: If a table file violates the group axioms
    """
    spec = spec.strip()
    if spec == "Q8":
        return quaternion()
    if spec.startswith("table:"):
        return load_table(Path(spec[len("table:") :]))
    if spec.startswith("prod(") and spec.endswith(")"):
        parts = split_top_level(spec[len("prod(") : -1])
        if len(parts) != 2 or not all(parts):
            raise GroupSpecError(f"prod() takes exactly two groups: {spec!r}")
        return direct_product(
            make_group(parts[0], use_cache, verbose),
            make_group(parts[1], use_cache, verbose),
        )

    match = _SIMPLE_SPEC.match(spec)
    if match is None:
        raise GroupSpecError(f"Malformed group spec {spec!r}")
    kind, n = match.group(1), int(match.group(2))
    if kind == "Z":
        return cyclic(n)
    if kind == "S":
        return symmetric(n)
    if kind == "D":
        return dihedral(n)

    d = 2 if kind == "SL2" else 3
    if not isprime(n):
        raise GroupSpecError(f"{spec}: {n} is not prime")
    if d == 3 and n not in SUPPORTED_SL3_PRIMES:
        raise GroupSpecError(
            f"{spec}: SL3 is supported for p in {SUPPORTED_SL3_PRIMES}"
        )
    return _special_linear_cached(spec, d, n, use_cache, verbose)
