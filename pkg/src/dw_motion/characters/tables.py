"""Irreducible-character sums evaluated on class representatives.

Roots of unity are floating complex numbers. λ_i(α) = exp(2πi·i·log_v(α)/(p-1))
for the smallest primitive root v; the same v builds the class matrices.
"""

import cmath
import math
from typing import NamedTuple

import numpy as np

from dw_motion.characters.classes import (
    ClassPoint,
    eigenvalue_one_dimension,
)
from dw_motion.errors import GroupSpecError


class ClassFunction(NamedTuple):
    """Values of a class function on a list of class representatives."""

    name: str
    points: list[ClassPoint]
    values: list[complex]


def permutation_character(d: int, p: int, matrix: np.ndarray) -> int:
    """Number of vectors of Z_p^d fixed by M, i.e. p^dim ker(M - I)."""
    if matrix.shape != (d, d):
        raise ValueError(f"Expected a {d}x{d} matrix, got shape {matrix.shape}")
    return p ** eigenvalue_one_dimension(matrix, p)


def _root(numerator: int, denominator: int) -> complex:
    return cmath.exp(2j * math.pi * numerator / denominator)


def _lambda(i: int, k: int, p: int) -> complex:
    """λ_i(v^k)."""
    return _root(i * k, p - 1)


# SL(2, p)


def _sl2_base(tag: str) -> str:
    return tag[1:] if tag in ("zc", "zd") else tag


def _psi(p: int, point: ClassPoint) -> complex:
    values = {"1": p, "z": p, "a": 1, "b": -1, "c": 0, "d": 0}
    return values[_sl2_base(point.tag)]


def _zeta(i: int, p: int, point: ClassPoint) -> complex:
    """ζ_i of degree p + 1, 1 ≤ i ≤ (p-3)/2."""
    tag = point.tag
    if tag == "1":
        return p + 1
    if tag == "z":
        return (-1) ** i * (p + 1)
    if tag == "a":
        (ell,) = point.params
        return _root(i * ell, p - 1) + _root(-i * ell, p - 1)
    if tag == "b":
        return 0
    if tag in ("c", "d"):
        return 1
    return (-1) ** i


def _xi(j: int, p: int, point: ClassPoint) -> complex:
    """ξ_1 (j = 1) or ξ_2 (j = 2) of degree (p+1)/2."""
    e = (-1) ** ((p - 1) // 2)
    tag = point.tag
    if tag == "1":
        return (p + 1) / 2
    if tag == "z":
        return e * (p + 1) / 2
    if tag == "a":
        (ell,) = point.params
        return (-1) ** ell
    if tag == "b":
        return 0
    root = cmath.sqrt(e * p)
    # ξ_1 and ξ_2 swap their values on c and d
    plus = (tag in ("c", "zc")) == (j == 1)
    value = (1 + root) / 2 if plus else (1 - root) / 2
    return e * value if tag in ("zc", "zd") else value


def table1_rhs(p: int, point: ClassPoint) -> complex:
    """
    2·1 + ψ + 2Σζ_i + ξ_1 + ξ_2 evaluated on a class of SL(2, p).

    For p = 2 the ζ and ξ families are empty and the sum is 2·1 + ψ.
    Values on zc and zd follow from χ(zg) = χ(g)·χ(z)/χ(1).

    Raises:
        GroupSpecError: If the class tag is not an SL(2, p) tag
    """
    if point.tag not in ("1", "z", "a", "b", "c", "d", "zc", "zd"):
        raise GroupSpecError(f"Unknown SL(2,{p}) class tag {point.tag!r}")
    if p == 2:
        psi = {"1": 2, "c": 0, "b": -1}[point.tag]
        return complex(2 + psi)
    total = 2 + _psi(p, point)
    total += 2 * sum(_zeta(i, p, point) for i in range(1, (p - 3) // 2 + 1))
    total += _xi(1, p, point) + _xi(2, p, point)
    return complex(total)


# SL(3, p)


def _sl3_eigen_logs(point: ClassPoint, p: int) -> list[int]:
    """Exponents of the F_p eigenvalues of a C1..C7 representative."""
    n = p - 1
    tag, params = point.tag, point.params
    if tag in ("C1", "C2", "C3"):
        return [params[0]] * 3
    if tag in ("C4", "C5"):
        k = params[0]
        return [k, k, (-2 * k) % n]
    if tag == "C6":
        return list(params)
    if tag == "C7":
        return [params[0]]
    return []


def chi_p_p1(p: int, point: ClassPoint) -> int:
    """χ_{p(p+1)} on a class of SL(3, p)."""
    values = {
        "C1": p * (p + 1),
        "C2": p,
        "C3": 0,
        "C4": p + 1,
        "C5": 1,
        "C6": 2,
        "C7": 0,
        "C8": -1,
    }
    return values[point.tag]


def chi_i(i: int, p: int, point: ClassPoint) -> complex:
    """χ^{(i)} of degree p^2 + p + 1 on a class of SL(3, p), 1 ≤ i ≤ p-2.

    On C4 the value is (p+1)λ_i(α) + λ_i(α^-2), counting lines fixed by
    diag(α, α, α^-2).
    """
    tag = point.tag
    if tag == "C8":
        return 0
    logs = _sl3_eigen_logs(point, p)
    alpha = _lambda(i, logs[0], p)
    if tag == "C1":
        return (p * p + p + 1) * alpha
    if tag == "C2":
        return (p + 1) * alpha
    if tag in ("C3", "C7"):
        return alpha
    if tag == "C4":
        return (p + 1) * alpha + _lambda(i, logs[2], p)
    if tag == "C5":
        return alpha + _lambda(i, logs[2], p)
    return sum(_lambda(i, k, p) for k in logs)


def table2_rhs(p: int, point: ClassPoint) -> complex:
    """
    2·1 + χ_{p(p+1)} + Σ_i χ^{(i)} evaluated on a class of SL(3, p).

    For p = 2 the χ^{(i)} family is empty.

    Raises:
        GroupSpecError: If p is not 2 or 3, or the tag is not C1..C8
    """
    if p not in (2, 3):
        raise GroupSpecError(f"SL(3,{p}) character sums are supported for p in 2, 3")
    if point.tag not in {f"C{k}" for k in range(1, 9)}:
        raise GroupSpecError(f"Unknown SL(3,{p}) class tag {point.tag!r}")
    total = complex(2 + chi_p_p1(p, point))
    total += sum(chi_i(i, p, point) for i in range(1, p - 1))
    return total


def table_rhs(d: int, p: int, point: ClassPoint) -> complex:
    return table1_rhs(p, point) if d == 2 else table2_rhs(p, point)


def class_function(
    name: str, d: int, p: int, points: list[ClassPoint]
) -> ClassFunction:
    """Tabulate ``permutation`` or ``rhs`` on the given representatives."""
    if name == "permutation":
        values = [complex(permutation_character(d, p, pt.matrix)) for pt in points]
    elif name == "rhs":
        values = [table_rhs(d, p, pt) for pt in points]
    else:
        raise ValueError(f"Unknown class function {name!r}")
    return ClassFunction(name, points, values)

