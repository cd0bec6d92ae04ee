"""Tests for Hom(π, G) enumeration."""

import pytest

from dw_motion.homs import brute_force_homs, enumerate_homs, evaluate
from dw_motion.presentation import parse_word, sphere, surface_presentation


class TestEnumerateHoms:
    """Tests for enumerate_homs."""

    def test_torus_into_s3(self, torus_presentation, s3):
        """Test that Hom(Z^2, S_3) is the 18 commuting pairs."""
        homs = enumerate_homs(torus_presentation, s3)
        assert len(homs) == 18
        assert all(s3.commutes(a, b) for a, b in homs)

    def test_lexicographic_order(self, torus_presentation, q8):
        """Test that homs are produced in lexicographic order."""
        homs = enumerate_homs(torus_presentation, q8)
        assert homs == sorted(homs)
        assert homs[0] == (0, 0)

    def test_sphere_has_one_hom(self, s3):
        """Test that the trivial group has exactly the empty hom."""
        assert enumerate_homs(sphere(), s3) == [()]

    def test_circle(self, z6):
        """Test Hom(Z, G) = G."""
        assert len(enumerate_homs(surface_presentation("circle"), z6)) == 6

    @pytest.mark.parametrize("fixture", ["s3", "q8", "z6", "sl23"])
    def test_matches_brute_force(self, request, trefoil_presentation, fixture):
        """Test the pruned search against filtering every tuple."""
        group = request.getfixturevalue(fixture)
        expected = brute_force_homs(trefoil_presentation, group)
        assert enumerate_homs(trefoil_presentation, group) == expected

    def test_parallel_matches_sequential(self, s3):
        """Test that splitting by the first image preserves the output."""
        t3 = surface_presentation("t3")
        sequential = enumerate_homs(t3, s3)
        assert enumerate_homs(t3, s3, max_workers=4) == sequential
        assert len(sequential) == 48

    def test_verbose_prints(self, torus_presentation, s3, capsys):
        """Test that verbose mode reports progress."""
        enumerate_homs(torus_presentation, s3, verbose=True)
        assert "Found 18 homomorphisms" in capsys.readouterr().out


class TestEvaluate:
    """Tests for evaluate."""

    def test_relator_evaluation_order(self, s3):
        """Test that a word s1 s2 evaluates to P(s1) P(s2)."""
        word = parse_word("a b", ("a", "b"))
        hom = (s3.element_index("(12)"), s3.element_index("(23)"))
        assert s3.label(evaluate(s3, hom, word)) == "(123)"

    def test_inverse_letters(self, s3):
        """Test a^-1 evaluates to the inverse image."""
        word = parse_word("a^-1", ("a",))
        g = s3.element_index("(123)")
        assert evaluate(s3, (g,), word) == s3.inverse(g)
