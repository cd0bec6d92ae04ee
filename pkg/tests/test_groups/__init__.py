"""Tests for named group constructors, specs and conjugacy."""
