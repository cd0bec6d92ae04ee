"""Tests for the multiplication-table group core."""

import numpy as np
import pytest

from dw_motion.errors import GroupAxiomError, LabelError
from dw_motion.groups import IDENTITY, group_from_table
from dw_motion.groups.finite import validate_table


class TestValidateTable:
    """Tests for validate_table."""

    def test_returns_inverses(self, z4_table):
        """Test that the inverse table is computed."""
        inv = validate_table(z4_table)
        assert inv.tolist() == [0, 3, 2, 1]

    def test_rejects_non_square(self):
        """Test that a rectangular table is rejected."""
        with pytest.raises(GroupAxiomError, match="square"):
            validate_table(np.zeros((2, 3), dtype=np.int64))

    def test_rejects_wrong_identity(self, z4_table):
        """Test that element 0 must be the identity."""
        shifted = (z4_table + 1) % 4
        with pytest.raises(GroupAxiomError, match="identity"):
            validate_table(shifted)

    def test_rejects_non_latin(self):
        """Test that repeated entries in a row are rejected."""
        mul = np.array([[0, 1, 2], [1, 1, 0], [2, 0, 1]])
        with pytest.raises(GroupAxiomError, match="Latin"):
            validate_table(mul)

    def test_rejects_non_associative(self):
        """Test that a Latin square with identity 0 but no associativity fails."""
        # Loop of order 5 that is not a group
        mul = np.array(
            [
                [0, 1, 2, 3, 4],
                [1, 0, 3, 4, 2],
                [2, 4, 0, 1, 3],
                [3, 2, 4, 0, 1],
                [4, 3, 1, 2, 0],
            ]
        )
        with pytest.raises(GroupAxiomError, match="associative"):
            validate_table(mul)

    def test_rejects_out_of_range(self):
        """Test that entries outside 0..n-1 are rejected."""
        mul = np.array([[0, 1], [1, 2]])
        with pytest.raises(GroupAxiomError, match="range"):
            validate_table(mul)


class TestFiniteGroup:
    """Tests for FiniteGroup element operations."""

    def test_identity_is_index_zero(self, s3, q8, sl23):
        """Test that every constructor puts the identity first."""
        for group in (s3, q8, sl23):
            assert group.identity == IDENTITY == 0
            assert all(group.multiply(0, g) == g for g in range(group.order))

    def test_inverse(self, s3):
        """Test g * g^-1 = e for every element."""
        for g in range(s3.order):
            assert s3.multiply(g, s3.inverse(g)) == 0

    def test_conjugate_matches_table(self, s3):
        """Test that conjugate agrees with the cached conjugation table."""
        for k in range(s3.order):
            for g in range(s3.order):
                assert s3.conjugate(k, g) == s3.conjugation[k, g]

    def test_power_and_order(self, s3):
        """Test element orders and negative powers."""
        cycle = s3.element_index("(123)")
        assert s3.element_order(cycle) == 3
        assert s3.power(cycle, -1) == s3.element_index("(132)")
        assert s3.power(cycle, 3) == 0

    def test_product(self, s3):
        """Test products compose right to left."""
        g = s3.product([s3.element_index("(12)"), s3.element_index("(23)")])
        assert s3.label(g) == "(123)"

    def test_commutes(self, s3, z6):
        """Test commutation checks."""
        assert not s3.commutes(s3.element_index("(12)"), s3.element_index("(23)"))
        assert all(z6.commutes(a, b) for a in range(6) for b in range(6))

    def test_element_index_ignores_whitespace(self, s3):
        """Test that labels are matched without whitespace."""
        assert s3.element_index(" (1 2) ") == 2

    def test_identity_aliases(self, s3):
        """Test that '()' names the identity of a permutation group."""
        assert s3.element_index("()") == 0

    def test_unknown_label_raises(self, s3):
        """Test that unknown labels raise LabelError."""
        with pytest.raises(LabelError):
            s3.element_index("(1234)")

    def test_unlabelled_group_uses_indices(self, z4_table):
        """Test that groups without labels use decimal indices."""
        group = group_from_table("Z4", z4_table)
        assert group.label(3) == "3"
        assert group.element_index("2") == 2


class TestMatrixView:
    """Tests for the matrix view of SL groups."""

    def test_matrix_round_trip(self, sl23):
        """Test that index_of_matrix inverts matrix_of."""
        for g in range(sl23.order):
            assert sl23.index_of_matrix(sl23.matrix_of(g)) == g

    def test_matrix_reduced_mod_p(self, sl23):
        """Test that matrices are reduced modulo p before lookup."""
        assert sl23.index_of_matrix(np.array([[4, 0], [3, -2]])) == 0

    def test_non_member_raises(self, sl23):
        """Test that a determinant-2 matrix is not found."""
        with pytest.raises(LabelError):
            sl23.index_of_matrix(np.array([[2, 0], [0, 1]]))

    def test_multiplication_matches_matrices(self, sl23):
        """Test that the table agrees with matrix products mod 3."""
        for g in range(0, sl23.order, 5):
            for h in range(sl23.order):
                product = (sl23.matrix_of(g) @ sl23.matrix_of(h)) % 3
                assert sl23.index_of_matrix(product) == sl23.multiply(g, h)

    def test_permutation_group_has_no_matrices(self, s3):
        """Test that matrix_of refuses non-matrix groups."""
        with pytest.raises(ValueError, match="not a matrix group"):
            s3.matrix_of(0)
