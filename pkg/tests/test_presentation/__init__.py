"""Tests for presentations, words and endomorphisms."""
