"""Tests for DW spaces, labels and dimension reduction."""
