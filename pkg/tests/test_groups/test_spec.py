"""Tests for the group-spec DSL and table files."""

import numpy as np
import pytest

from dw_motion.errors import GroupAxiomError, GroupSpecError
from dw_motion.groups import load_table, make_group, save_table, split_top_level


class TestSplitTopLevel:
    """Tests for split_top_level."""

    def test_respects_parentheses(self):
        """Test that nested commas are not split."""
        assert split_top_level("Z:2,prod(Z:3,Z:4)") == ["Z:2", "prod(Z:3,Z:4)"]

    def test_strips_whitespace(self):
        """Test that parts are stripped."""
        assert split_top_level(" (12) , e ") == ["(12)", "e"]


class TestMakeGroup:
    """Tests for make_group."""

    @pytest.mark.parametrize(
        "spec,order",
        [
            ("Z:5", 5),
            ("S:3", 6),
            ("D:4", 8),
            ("Q8", 8),
            ("SL2:3", 24),
            ("SL3:2", 168),
            ("prod(Z:2,S:3)", 12),
            ("prod(Z:2,prod(Z:3,Z:2))", 12),
        ],
    )
    def test_orders(self, spec, order):
        """Test the order of every spec form."""
        assert make_group(spec).order == order

    @pytest.mark.parametrize(
        "spec,message",
        [
            ("Z:x", "Malformed"),
            ("A:5", "Malformed"),
            ("SL2:4", "not prime"),
            ("SL3:5", "SL3 is supported"),
            ("prod(Z:2)", "exactly two"),
        ],
    )
    def test_rejects_bad_specs(self, spec, message):
        """Test that malformed or unsupported specs raise GroupSpecError."""
        with pytest.raises(GroupSpecError, match=message):
            make_group(spec)

    def test_table_spec(self, table_file):
        """Test that table:path loads a group file."""
        group = make_group(f"table:{table_file}")
        assert group.order == 4
        assert group.inverse(1) == 3

    def test_cache_round_trip(self, temp_cache_dir):
        """Test that a large SL table is written once and reloaded identically."""
        built = make_group("SL2:13", use_cache=True)
        cached_files = list(temp_cache_dir.glob("*.npz"))
        assert [path.name for path in cached_files] == ["SL2_13.npz"]
        loaded = make_group("SL2:13", use_cache=True)
        assert np.array_equal(built.mul, loaded.mul)
        assert loaded.label(0) == built.label(0)

    def test_small_groups_not_cached(self, temp_cache_dir):
        """Test that small tables are not written to the cache."""
        make_group("SL2:3", use_cache=True)
        assert not temp_cache_dir.exists() or not any(temp_cache_dir.iterdir())


class TestTableFiles:
    """Tests for load_table and save_table."""

    def test_save_then_load(self, tmp_path, s3):
        """Test that a saved table reloads with the same multiplication."""
        path = tmp_path / "s3.txt"
        save_table(s3, path)
        assert np.array_equal(load_table(path).mul, s3.mul)

    def test_malformed_file(self, tmp_path):
        """Test that a non-numeric table is rejected."""
        path = tmp_path / "bad.txt"
        path.write_text("2\n0 1\n1 x\n")
        with pytest.raises(GroupAxiomError, match="Malformed"):
            load_table(path)

    def test_wrong_shape(self, tmp_path):
        """Test that a row count mismatch is rejected."""
        path = tmp_path / "short.txt"
        path.write_text("3\n0 1 2\n1 2 0\n")
        with pytest.raises(GroupAxiomError, match="rows"):
            load_table(path)

    def test_non_group_table(self, tmp_path):
        """Test that a table violating the axioms is rejected."""
        path = tmp_path / "nongroup.txt"
        path.write_text("2\n0 1\n1 1\n")
        with pytest.raises(GroupAxiomError):
            load_table(path)
