"""Tests for triangulations and their fundamental groups."""

import json

import pytest

from dw_motion.data.shipped import fixture_path
from dw_motion.errors import TriangulationError
from dw_motion.homs import enumerate_homs
from dw_motion.simplicial import (
    Triangulation,
    load_cylinder,
    presentation_from_triangulation,
    spanning_tree,
)


class TestTriangulation:
    """Tests for Triangulation validation."""

    def test_edges_sorted(self, triangle):
        """Test edges are oriented low to high and sorted."""
        assert triangle.edges == ((0, 1), (0, 2), (1, 2))

    def test_torus_euler_characteristic(self, torus7):
        """Test V - E + F = 0 for the torus."""
        assert torus7.vertex_count - len(torus7.edges) + len(torus7.triangles) == 0
        assert torus7.boundary_edges == ()

    def test_triangles_normalized(self):
        """Test that triangle vertices are stored sorted."""
        tri = Triangulation(3, ((2, 0, 1),), frozenset({0, 1, 2}))
        assert tri.triangles == ((0, 1, 2),)

    def test_degenerate_triangle(self):
        """Test that repeated vertices are rejected."""
        with pytest.raises(TriangulationError, match="Degenerate"):
            Triangulation(3, ((0, 0, 1),))

    def test_vertex_out_of_range(self):
        """Test that vertices must be below vertex_count."""
        with pytest.raises(TriangulationError, match="out of range"):
            Triangulation(3, ((0, 1, 3),))

    def test_boundary_vertices_required(self):
        """Test that boundary edges must lie on declared boundary vertices."""
        tri = Triangulation(3, ((0, 1, 2),))
        with pytest.raises(TriangulationError, match="boundary_vertices"):
            _ = tri.boundary_edges


class TestCylinder:
    """Tests for load_cylinder."""

    def test_annulus_ends(self, annulus6):
        """Test that the annulus ends cover its six boundary edges."""
        assert annulus6.base.vertex_count == 3
        assert len(annulus6.triangulation.boundary_edges) == 6

    def test_missing_base(self):
        """Test that a plain triangulation is not a cylinder."""
        with pytest.raises(TriangulationError, match="base"):
            load_cylinder(fixture_path("triangle.json"))

    def test_mismatched_ends(self, tmp_path):
        """Test that end maps must land on the boundary edges."""
        data = json.loads(fixture_path("annulus6.json").read_text())
        data["ends"] = [[0, 1, 3], [2, 4, 5]]
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(data))
        with pytest.raises(TriangulationError, match="boundary"):
            load_cylinder(path)


class TestFundamentalGroup:
    """Tests for presentation_from_triangulation."""

    def test_circle(self, circle3):
        """Test π₁ of the circle is free on one generator."""
        presentation = presentation_from_triangulation(circle3)
        assert presentation.rank == 1
        assert presentation.relators == ()

    def test_disk_is_simply_connected(self, triangle, triangle_cone):
        """Test that triangulated disks have trivial π₁."""
        for tri in (triangle, triangle_cone):
            assert presentation_from_triangulation(tri).rank == 0

    def test_unreduced_keeps_generators(self, triangle):
        """Test that reduce=False keeps one generator per non-tree edge."""
        presentation = presentation_from_triangulation(triangle, reduce=False)
        assert presentation.rank == 1
        assert len(presentation.relators) == 1

    def test_torus_hom_count(self, torus7, z2, z3):
        """Test |Hom(π₁T², G)| = |G| · k(G) for abelian G."""
        presentation = presentation_from_triangulation(torus7)
        assert len(enumerate_homs(presentation, z2)) == 4
        assert len(enumerate_homs(presentation, z3)) == 9

    def test_disconnected(self):
        """Test that disconnected complexes are rejected."""
        with pytest.raises(TriangulationError, match="disconnected"):
            spanning_tree(Triangulation(2, ()))

    def test_tree_size(self, torus7):
        """Test that the spanning tree has v - 1 edges."""
        tree = spanning_tree(torus7)
        assert len(tree.tree_edges) == 6
        assert len(tree.generator_edges) == 15
