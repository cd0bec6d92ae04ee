"""Tests for the torus-link block decomposition."""

import pytest

from dw_motion.errors import LabelError
from dw_motion.homs import FluxLabel
from dw_motion.motion import (
    TorusLink,
    block_table,
    motion_space,
    psi_bijection,
    thm2_decomposition,
    twist_parameters,
)

from .conftest import commuting_labels


class TestTwistParameters:
    """Tests for twist_parameters."""

    def test_trefoil_like(self):
        """Test (u, v) solving p v - q u = 1."""
        assert twist_parameters(3, 2) == (1, 1)
        assert twist_parameters(2, 3) == (1, 2)

    @pytest.mark.parametrize("p,q", [(3, 2), (5, 2), (4, 3), (7, 5), (1, 1)])
    def test_identity_holds(self, p, q):
        """Test that p v - q u = 1 with u > 0."""
        u, v = twist_parameters(p, q)
        assert u > 0
        assert p * v - q * u == 1

    def test_not_coprime(self):
        """Test that non-coprime (p, q) raise."""
        with pytest.raises(ValueError, match="gcd"):
            twist_parameters(4, 2)


class TestBlockTable:
    """Tests for block_table."""

    def test_blocks_partition_basis(self, s3, trivial_label):
        """Test that the blocks partition the labeled basis."""
        space = motion_space(TorusLink(3, 2, 2), s3, trivial_label)
        table = block_table(space)
        positions = sorted(p for block in table.values() for p in block)
        assert positions == list(range(space.dimension))
        assert list(table) == sorted(table)


class TestPsiBijection:
    """Tests for psi_bijection."""

    @pytest.mark.parametrize("fixture", ["s3", "z6"])
    def test_all_labels(self, request, fixture):
        """Test Ψ on every block for every commuting label."""
        group = request.getfixturevalue(fixture)
        link = TorusLink(3, 2, 2)
        for label in commuting_labels(group):
            for report in psi_bijection(link, group, label):
                assert report.holds, (label, report.block)
                assert report.size == report.target_size
                assert report.base_independent

    def test_single_block(self, s3, trivial_label):
        """Test that one block can be requested."""
        link = TorusLink(3, 2, 2)
        space = motion_space(link, s3, trivial_label)
        block = next(iter(block_table(space)))
        reports = psi_bijection(link, s3, trivial_label, block=block, space=space)
        assert len(reports) == 1
        assert reports[0].block == block
        assert sorted(reports[0].mapping) == list(range(reports[0].size))

    def test_empty_block(self, s3, trivial_label):
        """Test that an empty block raises LabelError."""
        with pytest.raises(LabelError, match="no basis classes"):
            psi_bijection(TorusLink(3, 2, 2), s3, trivial_label, block=(99, 99))


class TestThm2Decomposition:
    """Tests for thm2_decomposition."""

    @pytest.mark.parametrize("fixture", ["s3", "z6"])
    def test_all_labels(self, request, fixture):
        """Test that the dimension equals the block sum for every label."""
        group = request.getfixturevalue(fixture)
        link = TorusLink(3, 2, 2)
        for label in commuting_labels(group):
            report = thm2_decomposition(link, group, label)
            assert report.holds, label
            assert report.total == report.block_sum
            assert sum(row.block_dimension for row in report.rows) == report.total

    def test_twist_reported(self, s3, trivial_label):
        """Test that (u, v) are included in the report."""
        report = thm2_decomposition(TorusLink(3, 2, 2), s3, trivial_label)
        assert (report.u, report.v) == (1, 1)

    def test_abelian_centralizers(self, z6, trivial_label):
        """Test that every centralizer of an abelian group is the whole group."""
        report = thm2_decomposition(TorusLink(3, 2, 2), z6, trivial_label)
        assert all(row.centralizer_order == 6 for row in report.rows)

    def test_parallel_matches_sequential(self, s3):
        """Test that threaded block processing gives the same rows."""
        link = TorusLink(3, 2, 2)
        label = FluxLabel(s3.element_index("(123)"), 0)
        sequential = thm2_decomposition(link, s3, label)
        parallel = thm2_decomposition(link, s3, label, max_workers=4)
        assert parallel == sequential

    def test_verbose(self, s3, trivial_label, capsys):
        """Test that verbose mode prints the twist and the block sum."""
        thm2_decomposition(TorusLink(3, 2, 2), s3, trivial_label, verbose=True)
        out = capsys.readouterr().out
        assert "(u, v) = (1, 1)" in out
        assert "block sum" in out
