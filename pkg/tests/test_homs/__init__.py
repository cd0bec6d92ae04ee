"""Tests for homomorphism enumeration and hom classes."""
