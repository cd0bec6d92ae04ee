"""Matrix arithmetic over Z_p."""

import numpy as np
from sympy import GF, Matrix
from sympy.polys.matrices import DomainMatrix


def det_mod(matrices: np.ndarray, p: int) -> np.ndarray:
    """Determinants mod p of a stack of 2x2 or 3x3 integer matrices."""
    m = matrices.astype(np.int64)
    d = m.shape[-1]
    if d == 2:
        det = m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]
    elif d == 3:
        det = (
            m[..., 0, 0] * (m[..., 1, 1] * m[..., 2, 2] - m[..., 1, 2] * m[..., 2, 1])
            - m[..., 0, 1] * (m[..., 1, 0] * m[..., 2, 2] - m[..., 1, 2] * m[..., 2, 0])
            + m[..., 0, 2] * (m[..., 1, 0] * m[..., 2, 1] - m[..., 1, 1] * m[..., 2, 0])
        )
    else:
        raise ValueError(f"Only 2x2 and 3x3 determinants are supported, got {d}")
    return det % p


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a.astype(np.int64) @ b.astype(np.int64)) % p


def matpow_mod(a: np.ndarray, exponent: int, p: int) -> np.ndarray:
    """a**exponent mod p by repeated squaring (exponent may be negative)."""
    if exponent < 0:
        a = inverse_mod(a, p)
        exponent = -exponent
    result = np.eye(a.shape[0], dtype=np.int64)
    base = a.astype(np.int64) % p
    while exponent:
        if exponent & 1:
            result = matmul_mod(result, base, p)
        base = matmul_mod(base, base, p)
        exponent >>= 1
    return result


def multiplicative_order(a: np.ndarray, p: int, limit: int) -> int | None:
    """Order of an invertible matrix mod p, or None if above limit."""
    identity = np.eye(a.shape[0], dtype=np.int64)
    current = a.astype(np.int64) % p
    for k in range(1, limit + 1):
        if np.array_equal(current, identity):
            return k
        current = matmul_mod(current, a, p)
    return None


def rank_mod(a: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over the field Z_p (p prime)."""
    field = GF(p)
    rows = [[field(int(x) % p) for x in row] for row in np.asarray(a).tolist()]
    return DomainMatrix(rows, np.shape(a), field).rank()


def inverse_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix over Z_p.

    Raises:
        ValueError: If the matrix is singular mod p
    """
    try:
        inverse = Matrix(np.asarray(a).tolist()).inv_mod(p)
    except ValueError:
        raise ValueError(f"Matrix is singular mod {p}") from None
    entries = [[int(x) for x in row] for row in inverse.tolist()]
    return np.array(entries, dtype=np.int64)


def companion_matrix(coefficients: list[int], p: int) -> np.ndarray:
    """Companion matrix of the monic polynomial x^d + c_{d-1}x^{d-1} + ... + c_0.

    Args:
        coefficients: [c_0, c_1, ..., c_{d-1}] (low degree first)
        p: Modulus
    """
    d = len(coefficients)
    m = np.zeros((d, d), dtype=np.int64)
    m[1:, :-1] = np.eye(d - 1, dtype=np.int64)
    m[:, -1] = [(-c) % p for c in coefficients]
    return m


def block_diagonal(*blocks: np.ndarray) -> np.ndarray:
    size = sum(b.shape[0] for b in blocks)
    out = np.zeros((size, size), dtype=np.int64)
    offset = 0
    for b in blocks:
        k = b.shape[0]
        out[offset : offset + k, offset : offset + k] = b
        offset += k
    return out
