"""Tests for link specs and link-complement presentations."""

import pytest

from dw_motion.errors import LinkSpecError
from dw_motion.motion import (
    HopfLinks,
    Necklace,
    TorusLink,
    format_link_spec,
    parse_link_spec,
    pi1,
)
from dw_motion.motion.links import torus_meridian
from dw_motion.presentation import format_word


class TestParseLinkSpec:
    """Tests for parse_link_spec."""

    @pytest.mark.parametrize(
        "text,link",
        [
            ("torus:3,2,2", TorusLink(3, 2, 2)),
            ("necklace:3", Necklace(3)),
            (" hopf:2 ", HopfLinks(2)),
        ],
    )
    def test_valid(self, text, link):
        """Test each family parses and formats back."""
        assert parse_link_spec(text) == link
        assert format_link_spec(link) == text.strip()

    @pytest.mark.parametrize(
        "text,message",
        [
            ("torus:2,4,1", "gcd"),
            ("necklace:0", "n >= 1"),
            ("torus:3,2", "3 parameter"),
            ("necklace:1,2", "1 parameter"),
            ("trefoil:1", "Unknown link spec"),
        ],
    )
    def test_invalid(self, text, message):
        """Test that malformed specs raise LinkSpecError."""
        with pytest.raises(LinkSpecError, match=message):
            parse_link_spec(text)


class TestPi1:
    """Tests for pi1."""

    def test_necklace_presentation(self):
        """Test π₁ of the 2-necklace is <x, x1, x2 | [x, x1], [x, x2]>."""
        group = pi1(Necklace(2))
        presentation = group.presentation
        assert presentation.generator_names == ("x", "x1", "x2")
        names = presentation.generator_names
        assert [format_word(r, names) for r in presentation.relators] == [
            "x x1 x^-1 x1^-1",
            "x x2 x^-1 x2^-1",
        ]
        assert group.component_names == ["L1", "L2", "Lc"]

    def test_necklace_axis_longitude(self):
        """Test that the axis longitude is x1 x2 x3."""
        group = pi1(Necklace(3))
        names = group.presentation.generator_names
        axis = group.boundary[-1]
        assert format_word(axis.meridian, names) == "x"
        assert format_word(axis.longitude, names) == "x1 x2 x3"

    def test_hopf_axis_name(self):
        """Test that the n-Hopf axis generator is y."""
        assert pi1(HopfLinks(2)).presentation.generator_names == ("y", "x1", "x2")

    def test_torus_link(self):
        """Test the torus-link relators x^p y^-q and [y^q, u_i]."""
        group = pi1(TorusLink(3, 2, 3))
        names = group.presentation.generator_names
        assert names == ("x", "y", "u1", "u2")
        relators = [format_word(r, names) for r in group.presentation.relators]
        assert relators == [
            "x^3 y^-2",
            "y^2 u1 y^-2 u1^-1",
            "y^2 u2 y^-2 u2^-1",
        ]
        assert len(group.boundary) == 3

    def test_torus_meridians(self):
        """Test meridians u_{i-1} u_i^-1 with u_0 = y and u_n = x."""
        names = ("x", "y", "u1")
        assert format_word(torus_meridian(2, 1), names) == "y u1^-1"
        assert format_word(torus_meridian(2, 2), names) == "u1 x^-1"

    def test_invalid_link(self):
        """Test that pi1 validates its link."""
        with pytest.raises(LinkSpecError):
            pi1(TorusLink(2, 2, 1))
