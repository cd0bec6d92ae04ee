"""Pytest fixtures for group tests."""

import numpy as np
import pytest


@pytest.fixture
def z4_table() -> np.ndarray:
    """Addition table of Z_4."""
    idx = np.arange(4)
    return (idx[:, None] + idx[None, :]) % 4


@pytest.fixture
def table_file(tmp_path, z4_table):
    """Z_4 written in the plain-text table format."""
    path = tmp_path / "z4.txt"
    rows = [" ".join(str(x) for x in row) for row in z4_table]
    path.write_text("4\n" + "\n".join(rows) + "\n")
    return path
