"""Tests for label counting."""

import pytest

from dw_motion.dw import count_labels
from dw_motion.presentation import surface_presentation


class TestCountLabels:
    """Tests for count_labels."""

    @pytest.mark.parametrize(
        "surface,count", [("sphere", 3), ("circle", 8), ("torus", 21)]
    )
    def test_s3_counts(self, s3, surface, count):
        """Test the S_3 label counts of the sphere, circle and torus."""
        assert count_labels(surface_presentation(surface), s3).count == count

    def test_torus_breakdown(self, s3):
        """Test one breakdown row per hom class summing to the count."""
        labels = count_labels(surface_presentation("torus"), s3)
        assert len(labels.breakdown) == 8
        assert sum(row.irreps for row in labels.breakdown) == 21
        assert labels.breakdown[0].centralizer_order == 6

    def test_abelian_group(self, z6):
        """Test that every class of an abelian group carries |G| labels."""
        labels = count_labels(surface_presentation("torus"), z6)
        assert labels.count == 36 * 6

    def test_circle_q8(self, q8):
        """Test Q8 on the circle: centers give 5 irreps, others 4 each."""
        labels = count_labels(surface_presentation("circle"), q8)
        assert labels.count == 5 + 5 + 4 + 4 + 4
