"""Tests for link groups and motion-group representations."""
