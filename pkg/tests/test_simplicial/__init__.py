"""Tests for triangulations, colorings and the state sum."""
