"""Tests for standard surfaces and mapping-class generators."""

import numpy as np
import pytest

from dw_motion.data.shipped import fixture_path, load_fixture_presentation
from dw_motion.presentation import (
    Endomorphism,
    Presentation,
    compose,
    compose_all,
    endomorphism_from_matrix,
    mapping_class_generators,
    substitute,
    surface_presentation,
    torus_power,
    torus_s,
    torus_t,
)
from dw_motion.presentation.words import Word, inverse

A = Word.generator(0)
B = Word.generator(1)


class TestSurfaces:
    """Tests for standard surface presentations."""

    def test_ranks(self):
        """Test generator and relator counts of the standard surfaces."""
        assert surface_presentation("circle").rank == 1
        assert surface_presentation("sphere").rank == 0
        t3 = surface_presentation("t3")
        assert t3.rank == 3
        assert len(t3.relators) == 3

    def test_unknown_surface(self):
        """Test that unknown names raise ValueError listing the known ones."""
        with pytest.raises(ValueError, match="known"):
            surface_presentation("klein")

    def test_unsupported_torus_dimension(self):
        """Test that T^0 is refused."""
        with pytest.raises(ValueError):
            torus_power(0)

    @pytest.mark.parametrize("name,surface", [("torus", "t2"), ("t3", "t3")])
    def test_shipped_files_match(self, name, surface):
        """Test that shipped .pres files agree with the built-in surfaces."""
        assert load_fixture_presentation(name) == surface_presentation(surface)

    def test_missing_fixture(self):
        """Test that unknown fixtures raise FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            fixture_path("nope.json")


class TestPresentation:
    """Tests for Presentation validation."""

    def test_duplicate_names(self):
        """Test that generator names must be unique."""
        with pytest.raises(ValueError, match="Duplicate"):
            Presentation(("a", "a"))

    def test_relator_out_of_range(self):
        """Test that relators may only use declared generators."""
        with pytest.raises(ValueError):
            Presentation(("a",), (B,))

    def test_fresh_name(self):
        """Test that fresh names avoid existing generators."""
        assert Presentation(("z", "z1")).fresh_name("z") == "z2"


class TestEndomorphisms:
    """Tests for substitution and composition."""

    def test_substitute(self):
        """Test S([a, b]) = b a^-1 b^-1 a."""
        w = substitute(A * B * inverse(A) * inverse(B), torus_s())
        assert w == B * inverse(A) * inverse(B) * A

    def test_s_has_order_four(self):
        """Test that S^2 inverts both generators and S^4 is the identity."""
        s2 = compose(torus_s(), torus_s())
        assert s2.images == (inverse(A), inverse(B))
        assert compose_all([torus_s()] * 4, 2) == Endomorphism.identity(2)

    def test_compose_order(self):
        """Test compose(e1, e2) applies e2 first on generators."""
        st = compose(torus_s(), torus_t())
        # T(a) = ab, then S gives b a^-1
        assert st.images[0] == B * inverse(A)

    def test_compose_rank_mismatch(self):
        """Test that ranks must agree."""
        with pytest.raises(ValueError):
            compose(torus_s(), Endomorphism.identity(3))

    def test_from_matrix(self):
        """Test that matrix rows give generator images."""
        e = endomorphism_from_matrix(np.array([[1, 1], [0, 1]]))
        assert e == torus_t()

    def test_extended(self):
        """Test that extended fixes the appended generators."""
        e = torus_s().extended(1)
        assert e.rank == 3
        assert e.images[2] == Word.generator(2)

    def test_mapping_class_generators(self):
        """Test the named generators per surface."""
        assert set(mapping_class_generators("torus")) == {"S", "T"}
        assert set(mapping_class_generators("t3")) == {"S3", "T3"}
        assert mapping_class_generators("circle") == {}
        with pytest.raises(ValueError):
            mapping_class_generators("klein")
