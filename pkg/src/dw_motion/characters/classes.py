"""Conjugacy class representatives of SL(2,p) and SL(3,p) as matrices."""

import itertools
from typing import NamedTuple

import numpy as np
from sympy import Poly, isprime, primitive_root, symbols

from dw_motion.errors import GroupSpecError
from dw_motion.groups.linalg import (
    block_diagonal,
    companion_matrix,
    multiplicative_order,
    rank_mod,
)
from dw_motion.groups.spec import SUPPORTED_SL3_PRIMES

_X = symbols("x")


class ClassPoint(NamedTuple):
    """A named conjugacy class with one representative matrix over Z_p."""

    tag: str  # SL2: 1, z, a, b, c, d, zc, zd; SL3: C1..C8
    params: tuple[int, ...]  # Family parameters (exponents of the generator v)
    matrix: np.ndarray  # Representative, entries in 0..p-1


def generator_of_units(p: int) -> int:
    """The smallest primitive root v mod p."""
    return int(primitive_root(p))


def discrete_log(alpha: int, p: int) -> int:
    """k with v^k = alpha mod p for the smallest primitive root v."""
    v = generator_of_units(p)
    alpha %= p
    for k in range(p - 1):
        if pow(v, k, p) == alpha:
            return k
    raise ValueError(f"{alpha} is not a unit mod {p}")


def is_irreducible(coefficients: list[int], p: int) -> bool:
    """Irreducibility over F_p of x^d + c_{d-1}x^{d-1} + ... + c_0."""
    terms = [c * _X**k for k, c in enumerate(coefficients)]
    poly = Poly(_X ** len(coefficients) + sum(terms), _X, modulus=p)
    return bool(poly.is_irreducible)


def norm_one_generator(p: int) -> np.ndarray:
    """A 2x2 matrix of order p+1 with no eigenvalue in F_p.

    It is the companion matrix of an irreducible x^2 - t x + 1.
    """
    for t in range(p):
        coefficients = [1, (-t) % p]
        if not is_irreducible(coefficients, p):
            continue
        b = companion_matrix(coefficients, p)
        if multiplicative_order(b, p, p + 1) == p + 1:
            return b
    raise ValueError(f"No element of order {p + 1} found for p={p}")


def _check_prime(d: int, p: int) -> None:
    if d not in (2, 3):
        raise GroupSpecError(f"Only d = 2, 3 are supported, got {d}")
    if not isprime(p):
        raise GroupSpecError(f"SL({d},{p}) needs a prime modulus")
    if d == 3 and p not in SUPPORTED_SL3_PRIMES:
        raise GroupSpecError(f"SL(3,{p}) classes are supported for p in (2, 3)")


def _sl2_points(p: int) -> list[ClassPoint]:
    identity = np.eye(2, dtype=np.int64)
    c = np.array([[1, 1], [0, 1]], dtype=np.int64)
    b = norm_one_generator(p)
    if p == 2:
        return [
            ClassPoint("1", (), identity),
            ClassPoint("c", (), c),
            ClassPoint("b", (1,), b),
        ]

    v = generator_of_units(p)
    z = (-identity) % p
    d = np.array([[1, v], [0, 1]], dtype=np.int64)
    points = [ClassPoint("1", (), identity), ClassPoint("z", (), z)]
    for ell in range(1, (p - 3) // 2 + 1):
        a = np.diag([pow(v, ell, p), pow(v, -ell, p)]).astype(np.int64)
        points.append(ClassPoint("a", (ell,), a))
    power = b.copy()
    for m in range(1, (p - 1) // 2 + 1):
        points.append(ClassPoint("b", (m,), power % p))
        power = (power @ b) % p
    points += [
        ClassPoint("c", (), c),
        ClassPoint("d", (), d),
        ClassPoint("zc", (), (-c) % p),
        ClassPoint("zd", (), (-d) % p),
    ]
    return points


def _sl3_points(p: int) -> list[ClassPoint]:
    v = generator_of_units(p)
    n = p - 1
    points = []

    def unit(k: int) -> int:
        return pow(v, k % n, p)

    cube_roots = [k for k in range(n) if (3 * k) % n == 0]
    theta_classes = range(np.gcd(3, n))
    for k in cube_roots:
        scalar = np.diag([unit(k)] * 3).astype(np.int64)
        points.append(ClassPoint("C1", (k,), scalar))
    for k in cube_roots:
        m = np.diag([unit(k)] * 3).astype(np.int64)
        m[1, 0] = 1
        points.append(ClassPoint("C2", (k,), m))
    for k in cube_roots:
        for ell in theta_classes:
            m = np.diag([unit(k)] * 3).astype(np.int64)
            m[1, 0] = m[2, 1] = unit(ell)
            points.append(ClassPoint("C3", (k, ell), m))

    split = [k for k in range(1, n) if (3 * k) % n != 0]
    for k in split:
        points.append(
            ClassPoint("C4", (k,), np.diag([unit(k), unit(k), unit(-2 * k)]))
        )
    for k in split:
        m = np.diag([unit(k), unit(k), unit(-2 * k)]).astype(np.int64)
        m[1, 0] = 1
        points.append(ClassPoint("C5", (k,), m))
    for triple in itertools.combinations(range(n), 3):
        if sum(triple) % n == 0:
            diagonal = np.diag([unit(k) for k in triple]).astype(np.int64)
            points.append(ClassPoint("C6", triple, diagonal))

    # Line with eigenvalue α plus an irreducible plane block of determinant α^-1
    for k in range(n):
        alpha_inv = unit(-k)
        for t in range(p):
            coefficients = [alpha_inv, (-t) % p]
            if is_irreducible(coefficients, p):
                block = companion_matrix(coefficients, p)
                m = block_diagonal(np.array([[unit(k)]]), block)
                points.append(ClassPoint("C7", (k, t), m))

    # Irreducible characteristic polynomial with constant term -1
    for c1, c2 in itertools.product(range(p), repeat=2):
        coefficients = [p - 1, c1, c2]
        if is_irreducible(coefficients, p):
            points.append(
                ClassPoint("C8", (c1, c2), companion_matrix(coefficients, p))
            )
    return points


def enumerate_class_points(d: int, p: int) -> list[ClassPoint]:
    """
    One ClassPoint per conjugacy class of SL(d, p).

    SL(2,p) uses the classes 1, z, a^l, b^m, c, d, zc, zd (only 1, c, b for
    p = 2). SL(3,p) uses the families C1..C8, with C7 and C8 realised by
    companion matrices of irreducible quadratics and cubics.

    Raises:
        GroupSpecError: If p is not prime or (d, p) is unsupported
    """
    _check_prime(d, p)
    points = _sl2_points(p) if d == 2 else _sl3_points(p)
    return [
        point._replace(matrix=point.matrix.astype(np.int64) % p) for point in points
    ]


def expected_class_count(d: int, p: int) -> int:
    """p + 4 classes for SL(2,p), p odd (3 for p = 2); p^2 + p for SL(3,p)."""
    if d == 2:
        return 3 if p == 2 else p + 4
    return p * p + p


def eigenvalue_one_dimension(matrix: np.ndarray, p: int) -> int:
    """dim ker(M - I) over Z_p."""
    d = matrix.shape[0]
    return d - rank_mod(matrix - np.eye(d, dtype=np.int64), p)
