"""Finite groups stored as indexed multiplication tables."""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from dw_motion.config import (
    ASSOCIATIVITY_EXHAUSTIVE_LIMIT,
    ASSOCIATIVITY_SAMPLES,
    MAX_GROUP_ORDER,
)
from dw_motion.errors import GroupAxiomError, LabelError

IDENTITY = 0


def index_dtype(order: int) -> type[np.signedinteger]:
    """Smallest signed integer dtype able to hold element indices."""
    return np.int16 if order < 2**15 else np.int32


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group with elements 0..order-1 and identity at index 0.

    ``mul[g, h]`` is the index of the product gh. Matrix groups also carry
    their matrices (``matrices[g]`` is a d x d array over Z_modulus) so that
    matrix statements can be checked directly.
    """

    name: str
    mul: np.ndarray
    inv: np.ndarray
    element_labels: tuple[str, ...] | None = None
    matrices: np.ndarray | None = None
    modulus: int | None = None

    @property
    def order(self) -> int:
        return int(self.mul.shape[0])

    @property
    def identity(self) -> int:
        return IDENTITY

    @cached_property
    def table(self) -> list[list[int]]:
        """Multiplication table as nested Python lists (fast scalar lookups)."""
        return self.mul.tolist()

    @cached_property
    def inverses(self) -> list[int]:
        return self.inv.tolist()

    @cached_property
    def conjugation(self) -> np.ndarray:
        """Read-only table with entry [k, g] equal to k g k^-1."""
        mul = self.mul.astype(np.int64)
        table = mul[mul, self.inv.astype(np.int64)[:, None]]
        table.setflags(write=False)
        return table

    @cached_property
    def _label_index(self) -> dict[str, int]:
        labels = self.element_labels or tuple(str(g) for g in range(self.order))
        return {label: g for g, label in enumerate(labels)}

    def multiply(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inverse(self, g: int) -> int:
        return self.inverses[g]

    def conjugate(self, k: int, g: int) -> int:
        """Return k g k^-1."""
        table = self.table
        return table[table[k][g]][self.inverses[k]]

    def power(self, g: int, exponent: int) -> int:
        base = g if exponent >= 0 else self.inverses[g]
        result = IDENTITY
        for _ in range(abs(exponent)):
            result = self.table[result][base]
        return result

    def product(self, elements: list[int]) -> int:
        result = IDENTITY
        for g in elements:
            result = self.table[result][g]
        return result

    def label(self, g: int) -> str:
        if self.element_labels is None:
            return str(g)
        return self.element_labels[g]

    def element_index(self, label: str) -> int:
        """Look up an element by its canonical label.

        Raises:
            LabelError: If no element carries this label
        """
        key = "".join(label.split())
        if key in self._label_index:
            return self._label_index[key]
        if key == "()" and self.element_labels and self.element_labels[0] == "e":
            return IDENTITY
        raise LabelError(f"Unknown element label {label!r} for group {self.name}")

    def element_order(self, g: int) -> int:
        order, current = 1, g
        while current != IDENTITY:
            current = self.table[current][g]
            order += 1
        return order

    def commutes(self, g: int, h: int) -> bool:
        return self.table[g][h] == self.table[h][g]

    def matrix_of(self, g: int) -> np.ndarray:
        """Matrix view of element g (matrix groups only)."""
        if self.matrices is None:
            raise ValueError(f"{self.name} is not a matrix group")
        return self.matrices[g].copy()

    @cached_property
    def _matrix_index(self) -> dict[bytes, int]:
        if self.matrices is None:
            return {}
        flat = self.matrices.astype(np.int64).reshape(self.order, -1)
        return {row.tobytes(): g for g, row in enumerate(flat)}

    def index_of_matrix(self, matrix: np.ndarray) -> int:
        """Element index of a matrix, reduced modulo the group's modulus."""
        if self.matrices is None or self.modulus is None:
            raise ValueError(f"{self.name} is not a matrix group")
        key = (np.asarray(matrix, dtype=np.int64) % self.modulus).reshape(-1)
        try:
            return self._matrix_index[key.tobytes()]
        except KeyError:
            raise LabelError(f"Matrix {key.tolist()} is not in {self.name}") from None


def _check_associative(mul: np.ndarray) -> bool:
    n = mul.shape[0]
    if n <= ASSOCIATIVITY_EXHAUSTIVE_LIMIT:
        idx = np.arange(n)
        left = mul[mul[:, :, None], idx[None, None, :]]
        right = mul[idx[:, None, None], mul[None, :, :]]
        return bool(np.array_equal(left, right))
    rng = np.random.default_rng(0)
    a, b, c = rng.integers(0, n, size=(3, ASSOCIATIVITY_SAMPLES))
    return bool(np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]]))


def validate_table(mul: np.ndarray) -> np.ndarray:
    """Check the group axioms on a multiplication table and return inverses.

    Associativity is checked exhaustively up to ASSOCIATIVITY_EXHAUSTIVE_LIMIT
    elements and on random triples above.

    Args:
        mul: Square table of element indices

    Returns:
        Inverse table (inv[g] is the index of g^-1)

    Raises:
        GroupAxiomError: If any axiom fails or identity is not index 0
    """
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
        raise GroupAxiomError("Multiplication table must be a non-empty square")
    n = mul.shape[0]
    if n > MAX_GROUP_ORDER:
        raise GroupAxiomError(f"Order {n} exceeds MAX_GROUP_ORDER={MAX_GROUP_ORDER}")
    if mul.min() < 0 or mul.max() >= n:
        raise GroupAxiomError("Table entries out of range")
    idx = np.arange(n)
    if not (np.array_equal(mul[IDENTITY], idx) and np.array_equal(mul[:, 0], idx)):
        raise GroupAxiomError("Element 0 is not the identity")
    sorted_rows = np.sort(mul, axis=1)
    sorted_cols = np.sort(mul, axis=0)
    if not (
        np.array_equal(sorted_rows, np.broadcast_to(idx, (n, n)))
        and np.array_equal(sorted_cols, np.broadcast_to(idx[:, None], (n, n)))
    ):
        raise GroupAxiomError("Rows and columns must be permutations (Latin square)")
    if not _check_associative(mul):
        raise GroupAxiomError("Multiplication is not associative")
    inv = np.argmax(mul == IDENTITY, axis=1).astype(mul.dtype)
    return inv


def group_from_table(
    name: str,
    mul: np.ndarray,
    element_labels: tuple[str, ...] | None = None,
    matrices: np.ndarray | None = None,
    modulus: int | None = None,
    validate: bool = True,
) -> FiniteGroup:
    """Build a FiniteGroup from a multiplication table."""
    mul = np.ascontiguousarray(mul, dtype=index_dtype(mul.shape[0]))
    if validate:
        inv = validate_table(mul)
    else:
        inv = np.argmax(mul == IDENTITY, axis=1).astype(mul.dtype)
    mul.setflags(write=False)
    inv.setflags(write=False)
    return FiniteGroup(
        name=name,
        mul=mul,
        inv=inv,
        element_labels=element_labels,
        matrices=matrices,
        modulus=modulus,
    )
