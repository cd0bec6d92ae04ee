"""Tests for the necklace square."""

import pytest

from dw_motion.errors import LabelError
from dw_motion.motion import NecklaceLabels, necklace_T_check


def labels(group, g: str, g_c: str, h_c: str) -> NecklaceLabels:
    return NecklaceLabels(
        group.element_index(g), group.element_index(g_c), group.element_index(h_c)
    )


class TestNecklaceCheck:
    """Tests for necklace_T_check."""

    def test_two_rings(self, s3):
        """Test the square for two rings labeled by a transposition."""
        report = necklace_T_check(s3, 2, labels(s3, "(12)", "e", "e"))
        assert report.holds
        assert report.disk_dimension == report.necklace_dimension == 1

    def test_three_rings(self, s3):
        """Test the square for three rings with a nontrivial outer label."""
        report = necklace_T_check(s3, 3, labels(s3, "(12)", "e", "(12)"))
        assert report.holds
        assert report.bijective
        assert report.commutes
        assert report.images_equal
        assert report.disk_dimension == report.necklace_dimension == 5

    def test_nontrivial_axis(self, s3):
        """Test the square with the axis carrying a 3-cycle."""
        report = necklace_T_check(s3, 2, labels(s3, "(123)", "(123)", "(132)"))
        assert report.holds
        assert report.disk_dimension == report.necklace_dimension

    def test_motion_image_contains_braid_image(self, s3):
        """Test that adding the shift can only enlarge the image."""
        report = necklace_T_check(s3, 3, labels(s3, "(12)", "e", "(12)"))
        assert report.motion_image_order % report.image_order == 0

    def test_ring_label_must_commute(self, s3):
        """Test that a non-commuting ring label raises."""
        with pytest.raises(LabelError, match="Ring label"):
            necklace_T_check(s3, 2, labels(s3, "(12)", "(23)", "e"))

    def test_axis_label_must_commute(self, s3):
        """Test that a non-commuting axis label raises."""
        with pytest.raises(LabelError, match="Axis label"):
            necklace_T_check(s3, 2, labels(s3, "e", "(12)", "(23)"))
