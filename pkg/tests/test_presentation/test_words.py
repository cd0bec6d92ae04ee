"""Tests for free-group words."""

import pytest

from dw_motion.presentation.words import (
    Word,
    commutator,
    free_reduce,
    inverse,
    power,
    run_length_tokens,
    word_from_tokens,
)

A = Word.generator(0)
B = Word.generator(1)


class TestWord:
    """Tests for Word construction and reduction."""

    def test_cancellation_on_construction(self):
        """Test that x x^-1 reduces to the empty word."""
        assert Word(((0, 1), (0, -1))) == Word()
        assert not Word(((0, 1), (0, -1)))

    def test_nested_cancellation(self):
        """Test that cancellation cascades."""
        w = Word(((0, 1), (1, 1), (1, -1), (0, -1), (1, 1)))
        assert w.letters == ((1, 1),)

    def test_rejects_bad_exponent(self):
        """Test that letters carry exponent ±1 only."""
        with pytest.raises(ValueError):
            Word(((0, 2),))

    def test_generator_power(self):
        """Test Word.generator with negative exponents."""
        assert Word.generator(1, -2).letters == ((1, -1), (1, -1))

    def test_free_reduce_idempotent(self):
        """Test that reducing a reduced word changes nothing."""
        w = A * B * inverse(A)
        assert free_reduce(free_reduce(w)) == w

    def test_max_generator(self):
        """Test the largest generator index, -1 for the empty word."""
        assert (A * B).max_generator == 1
        assert Word().max_generator == -1


class TestWordOperations:
    """Tests for inverse, powers and commutators."""

    def test_inverse_cancels(self):
        """Test w w^-1 = 1."""
        w = A * B * B * inverse(A)
        assert w * inverse(w) == Word()

    def test_power(self):
        """Test positive, zero and negative powers."""
        assert len(power(A * B, 3)) == 6
        assert power(A, 0) == Word()
        assert power(A * B, -1) == inverse(A * B)

    def test_commutator(self):
        """Test [a, b] = a b a^-1 b^-1 and [a, a] = 1."""
        assert commutator(A, B).letters == ((0, 1), (1, 1), (0, -1), (1, -1))
        assert commutator(A, A) == Word()

    def test_tokens(self):
        """Test building from tokens and grouping back into runs."""
        w = word_from_tokens([(0, 3), (1, -2)])
        assert run_length_tokens(w) == [(0, 3), (1, -2)]
