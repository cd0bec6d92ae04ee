"""Tests for the coloring identities behind the state sum."""

from fractions import Fraction

import pytest

from dw_motion.simplicial import (
    boundary_colorings,
    closed_invariant,
    cylinder_count_matrix,
    verify_idempotent_blocks,
    verify_lemma1,
    verify_lemma2_annulus,
    verify_triangulation_independence,
)


class TestColoringsCountHoms:
    """Tests that #Col(M) = |G|^(v-1) · #Hom(π₁M, G)."""

    @pytest.mark.parametrize("group_fixture", ["z2", "s3"])
    @pytest.mark.parametrize("fixture", ["circle3", "triangle", "triangle_cone"])
    def test_small_complexes(self, request, fixture, group_fixture):
        """Test the identity on the circle and two disks over Z_2 and S_3."""
        group = request.getfixturevalue(group_fixture)
        report = verify_lemma1(request.getfixturevalue(fixture), group)
        assert report.holds
        assert report.colorings == report.predicted

    def test_circle_values(self, circle3, s3):
        """Test the individual counts for the circle."""
        report = verify_lemma1(circle3, s3)
        assert (report.colorings, report.homs) == (216, 6)

    def test_circle_values_z2(self, circle3, z2):
        """Test the counts for the circle over Z_2: 2^3 colorings, 2 homs."""
        report = verify_lemma1(circle3, z2)
        assert (report.colorings, report.homs, report.predicted) == (8, 2, 8)

    def test_torus(self, torus7, z2):
        """Test the identity on the seven-vertex torus over Z_2."""
        report = verify_lemma1(torus7, z2)
        assert report.holds
        assert report.colorings == 2**6 * 4


class TestClosedInvariant:
    """Tests for closed_invariant."""

    def test_torus_z2(self, torus7, z2):
        """Test Z(T²) = |Hom|/|G| = 2 for Z_2."""
        assert closed_invariant(torus7, z2) == Fraction(2)

    @pytest.mark.integration
    def test_torus_s3(self, torus7, s3):
        """Test Z(T²) = 18/6 = 3 for S_3 (number of conjugacy classes)."""
        assert closed_invariant(torus7, s3) == Fraction(3)


class TestTriangulationIndependence:
    """Tests for verify_triangulation_independence."""

    def test_cone_subdivision(self, triangle, triangle_cone, s3):
        """Test that coning the triangle leaves Z(D², τ) unchanged for all τ."""
        taus = boundary_colorings(triangle, s3)
        assert len(taus) == 216
        assert verify_triangulation_independence(triangle, triangle_cone, s3, taus)


class TestCylinder:
    """Tests for the annulus count matrix."""

    @pytest.mark.parametrize("fixture", ["z2", "z3"])
    def test_count_matrix_shape(self, request, annulus6, fixture):
        """Test one row and column per coloring of the base circle."""
        group = request.getfixturevalue(fixture)
        matrix = cylinder_count_matrix(annulus6, group)
        assert matrix.counts.shape == (group.order**3, group.order**3)

    @pytest.mark.parametrize("fixture", ["z2", "z3"])
    def test_straight_path_counts(self, request, annulus6, fixture):
        """Test counts equal |C_G(hol)| for conjugate end holonomies, else 0."""
        report = verify_lemma2_annulus(annulus6, request.getfixturevalue(fixture))
        assert report.holds
        assert report.mismatches == []

    def test_idempotent_blocks_z2(self, annulus6, z2):
        """Test two holonomy blocks over Z_2 and that Z(Id_Y)² = Z(Id_Y)."""
        report = verify_idempotent_blocks(annulus6, z2)
        assert report.holds
        assert report.block_diagonal
        assert report.idempotent
        assert report.blocks == 2
        assert report.dimension == 8
        assert report.mismatches == 0

    def test_idempotent_blocks_z3(self, annulus6, z3):
        """Test block structure by holonomy class and idempotence over Z_3."""
        report = verify_idempotent_blocks(annulus6, z3)
        assert report.holds
        assert report.blocks == 3
        assert report.dimension == 27

    @pytest.mark.integration
    def test_idempotent_blocks_s3(self, annulus6, s3):
        """Test block structure for S_3, one block per conjugacy class."""
        matrix = cylinder_count_matrix(annulus6, s3)
        report = verify_idempotent_blocks(annulus6, s3, matrix)
        assert report.holds
        assert report.blocks == 3
        assert verify_lemma2_annulus(annulus6, s3, matrix).holds
