"""Named group constructors.

Every constructor fixes a deterministic element order with the identity at
index 0, so canonical forms and golden outputs are stable across runs.
"""

import itertools
import math

import numpy as np

from dw_motion.config import MAX_GROUP_ORDER
from dw_motion.errors import GroupSpecError
from dw_motion.groups.finite import FiniteGroup, group_from_table, index_dtype
from dw_motion.groups.linalg import det_mod

# Left factors per vectorised product when tabulating S_n and SL(d,p)
MATRIX_PRODUCT_CHUNK = 64

# Quaternion units 1, i, j, k: UNIT_PRODUCTS[u][v] = (sign, unit) of u*v
UNIT_PRODUCTS: list[list[tuple[int, int]]] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
]
Q8_LABELS = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")


def _check_order(order: int, spec: str) -> None:
    if order > MAX_GROUP_ORDER:
        raise GroupSpecError(
            f"{spec} has order {order}, above MAX_GROUP_ORDER={MAX_GROUP_ORDER}"
        )


def cyclic(n: int) -> FiniteGroup:
    """Z_n written additively: element k is k mod n."""
    if n < 1:
        raise GroupSpecError(f"Z:{n} needs n >= 1")
    _check_order(n, f"Z:{n}")
    idx = np.arange(n)
    mul = (idx[:, None] + idx[None, :]) % n
    return group_from_table(f"Z{n}", mul, tuple(str(k) for k in range(n)))


def cycle_notation(perm: tuple[int, ...]) -> str:
    """1-based cycle notation, e.g. (12)(34); the identity is 'e'."""
    seen: set[int] = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        cycles.append("(" + "".join(str(i + 1) for i in cycle) + ")")
    return "".join(cycles) or "e"


def symmetric(n: int) -> FiniteGroup:
    """S_n on points 1..n, elements in lexicographic order of image tuples.

    Products compose right to left: (st)(i) = s(t(i)).
    """
    if n < 1:
        raise GroupSpecError(f"S:{n} needs n >= 1")
    _check_order(math.factorial(n), f"S:{n}")
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    perms = perms.reshape(-1, n)
    size = len(perms)
    weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    lookup = np.full(n**n, -1, dtype=np.int64)
    lookup[perms @ weights] = np.arange(size)

    mul = np.empty((size, size), dtype=index_dtype(size))
    for start in range(0, size, MATRIX_PRODUCT_CHUNK):
        stop = min(start + MATRIX_PRODUCT_CHUNK, size)
        # composed[a, b, i] = perms[a][perms[b][i]]
        composed = perms[start:stop][:, perms]
        mul[start:stop] = lookup[composed @ weights]
    labels = tuple(cycle_notation(tuple(int(x) for x in p)) for p in perms)
    return group_from_table(f"S{n}", mul, labels)


def _dihedral_label(flip: int, k: int) -> str:
    base = "s" if flip else ""
    if k == 0:
        return base or "e"
    return base + ("r" if k == 1 else f"r^{k}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n; index f*n + k is s^f r^k, with r s = s r^-1."""
    if n < 1:
        raise GroupSpecError(f"D:{n} needs n >= 1")
    _check_order(2 * n, f"D:{n}")
    idx = np.arange(2 * n)
    flip, rot = idx // n, idx % n
    f1, f2 = flip[:, None], flip[None, :]
    k1, k2 = rot[:, None], rot[None, :]
    k = (np.where(f2 == 1, -k1, k1) + k2) % n
    mul = (f1 ^ f2) * n + k
    labels = tuple(_dihedral_label(int(f), int(r)) for f, r in zip(flip, rot))
    return group_from_table(f"D{n}", mul, labels)


def quaternion() -> FiniteGroup:
    """Q8 with elements 1, -1, i, -i, j, -j, k, -k (index 2*unit + negative)."""
    mul = np.zeros((8, 8), dtype=np.int64)
    for a, b in itertools.product(range(8), repeat=2):
        sign_a = -1 if a % 2 else 1
        sign_b = -1 if b % 2 else 1
        sign, unit = UNIT_PRODUCTS[a // 2][b // 2]
        mul[a, b] = 2 * unit + (1 if sign * sign_a * sign_b < 0 else 0)
    return group_from_table("Q8", mul, Q8_LABELS)


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """a x b with index i*|b| + j for the pair (i, j)."""
    na, nb = a.order, b.order
    _check_order(na * nb, f"prod({a.name},{b.name})")
    mul = (
        a.mul.astype(np.int64)[:, None, :, None] * nb
        + b.mul.astype(np.int64)[None, :, None, :]
    ).reshape(na * nb, na * nb)
    labels = tuple(
        f"({a.label(i)},{b.label(j)})" for i in range(na) for j in range(nb)
    )
    return group_from_table(f"{a.name}x{b.name}", mul, labels)


def sl_order(d: int, p: int) -> int:
    """|SL(d, Z_p)| = p^(d(d-1)/2) * prod_{k=2..d} (p^k - 1)."""
    order = p ** (d * (d - 1) // 2)
    for k in range(2, d + 1):
        order *= p**k - 1
    return order


def special_linear_elements(d: int, p: int) -> np.ndarray:
    """All d x d matrices over Z_p with determinant 1.

    The identity comes first, the rest follow in row-major lexicographic
    order of their entries.
    """
    entries = np.array(list(itertools.product(range(p), repeat=d * d)), np.int64)
    matrices = entries.reshape(-1, d, d)
    matrices = matrices[det_mod(matrices, p) == 1]
    identity = np.eye(d, dtype=np.int64)
    is_identity = np.all(matrices == identity, axis=(1, 2))
    return np.concatenate([matrices[is_identity], matrices[~is_identity]])


def special_linear(d: int, p: int, verbose: bool = False) -> FiniteGroup:
    """SL(d, p) as a multiplication table plus its matrices."""
    _check_order(sl_order(d, p), f"SL{d}:{p}")
    matrices = special_linear_elements(d, p)
    n = len(matrices)
    weights = p ** np.arange(d * d - 1, -1, -1, dtype=np.int64)
    lookup = np.full(p ** (d * d), -1, dtype=np.int64)
    lookup[matrices.reshape(n, -1) @ weights] = np.arange(n)

    if verbose:
        print(f"Tabulating SL({d},{p}): {n:,} elements...")

    mul = np.empty((n, n), dtype=index_dtype(n))
    for start in range(0, n, MATRIX_PRODUCT_CHUNK):
        stop = min(start + MATRIX_PRODUCT_CHUNK, n)
        block = np.einsum("aij,bjk->abik", matrices[start:stop], matrices) % p
        mul[start:stop] = lookup[block.reshape(stop - start, n, d * d) @ weights]

    labels = tuple("".join(str(int(x)) for x in m.reshape(-1)) for m in matrices)
    return group_from_table(
        f"SL({d},{p})", mul, labels, matrices=matrices, modulus=p
    )
