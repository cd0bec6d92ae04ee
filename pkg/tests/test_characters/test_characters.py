"""Tests for permutation characters of SL(d, p)."""

import numpy as np
import pytest

from dw_motion.characters import (
    CSV_COLUMNS,
    SUPPORTED_CASES,
    character_norm_check,
    class_function,
    count_pair_orbits,
    coverage_check,
    eigenvalue_one_dimension,
    enumerate_class_points,
    expected_class_count,
    format_csv,
    generator_of_units,
    permutation_character,
    verify_character_identity,
    write_csv,
)
from dw_motion.errors import GroupSpecError


class TestClassPoints:
    """Tests for class representatives."""

    @pytest.mark.parametrize(
        "d,p,count",
        [(2, 2, 3), (2, 3, 7), (2, 5, 9), (2, 7, 11), (3, 2, 6), (3, 3, 12)],
    )
    def test_counts(self, d, p, count):
        """Test the number of classes of SL(d, p)."""
        assert expected_class_count(d, p) == count
        assert len(enumerate_class_points(d, p)) == count

    @pytest.mark.parametrize("d,p", SUPPORTED_CASES)
    def test_unit_determinant(self, d, p):
        """Test that every representative lies in SL(d, p)."""
        for point in enumerate_class_points(d, p):
            det = round(np.linalg.det(point.matrix.astype(float)))
            assert det % p == 1

    def test_generator_of_units(self):
        """Test that the chosen generator has order p - 1."""
        for p in (3, 5, 7, 11):
            g = generator_of_units(p)
            assert len({pow(g, k, p) for k in range(p - 1)}) == p - 1

    def test_not_prime(self):
        """Test that a composite modulus is rejected."""
        with pytest.raises(GroupSpecError, match="prime"):
            enumerate_class_points(2, 4)

    def test_unsupported_dimension(self):
        """Test that d = 4 is rejected."""
        with pytest.raises(GroupSpecError):
            enumerate_class_points(4, 2)

    def test_sl3_large_p(self):
        """Test that SL(3, p) classes stop at p = 3."""
        with pytest.raises(GroupSpecError, match="SL\\(3,5\\)"):
            enumerate_class_points(3, 5)


class TestPermutationCharacter:
    """Tests for permutation_character."""

    def test_identity(self):
        """Test that the identity fixes every vector."""
        assert permutation_character(2, 3, np.eye(2, dtype=np.int64)) == 9
        assert permutation_character(3, 2, np.eye(3, dtype=np.int64)) == 8

    def test_transvection(self):
        """Test that a transvection fixes a line."""
        matrix = np.array([[1, 1], [0, 1]])
        assert eigenvalue_one_dimension(matrix, 3) == 1
        assert permutation_character(2, 3, matrix) == 3

    def test_minus_identity(self):
        """Test that -I fixes only zero for odd p."""
        assert permutation_character(2, 5, np.array([[4, 0], [0, 4]])) == 1

    def test_shape_mismatch(self):
        """Test that a wrongly sized matrix raises ValueError."""
        with pytest.raises(ValueError, match="3x3"):
            permutation_character(3, 2, np.eye(2, dtype=np.int64))

    def test_class_function(self):
        """Test tabulating the permutation character on representatives."""
        points = enumerate_class_points(2, 3)
        function = class_function("permutation", 2, 3, points)
        assert function.values[0] == 9
        assert len(function.values) == len(points)

    def test_unknown_class_function(self):
        """Test that an unknown class function name raises."""
        with pytest.raises(ValueError, match="Unknown class function"):
            class_function("trace", 2, 3, [])


class TestCharacterIdentity:
    """Tests for verify_character_identity."""

    @pytest.mark.parametrize("d,p", SUPPORTED_CASES)
    def test_supported_cases_hold(self, d, p):
        """Test that both sides agree on every class."""
        report = verify_character_identity(d, p)
        assert report.holds
        assert report.class_count == expected_class_count(d, p)
        assert report.max_residual < 1e-9
        assert report.max_imaginary < 1e-9

    def test_lhs_is_fixed_point_count(self):
        """Test that each row's lhs is a power of p."""
        report = verify_character_identity(2, 5)
        for row in report.rows:
            assert row.lhs in (1, 5, 25)

    def test_unsupported_case(self):
        """Test that an unsupported (d, p) raises GroupSpecError."""
        with pytest.raises(GroupSpecError):
            verify_character_identity(2, 7)

    def test_verbose(self, capsys):
        """Test that verbose mode prints per-class values."""
        verify_character_identity(2, 3, verbose=True)
        out = capsys.readouterr().out
        assert "SL(2,3): 7 classes" in out
        assert "max residual" in out


class TestCoverage:
    """Tests for coverage_check."""

    @pytest.mark.parametrize("d,p", [(2, 2), (2, 3), (2, 5), (3, 2)])
    def test_classes_partition_group(self, d, p):
        """Test that the class sizes sum to the group order."""
        report = coverage_check(d, p)
        assert report.holds
        assert report.disjoint
        assert sum(report.class_sizes) == report.group_order

    def test_repeated_point(self):
        """Test that a repeated representative is detected."""
        points = enumerate_class_points(2, 3)
        report = coverage_check(2, 3, points + points[:1])
        assert not report.disjoint
        assert not report.holds

    @pytest.mark.integration
    def test_sl3_3(self, temp_cache_dir):
        """Test coverage for SL(3,3) of order 5616."""
        report = coverage_check(3, 3)
        assert report.holds
        assert report.group_order == 5616


class TestNormCheck:
    """Tests for character_norm_check."""

    @pytest.mark.parametrize("d,p,orbits", [(2, 2, 5), (2, 3, 7)])
    def test_orbit_counts(self, d, p, orbits):
        """Test that the character norm equals the number of pair orbits."""
        report = character_norm_check(d, p)
        assert report.holds
        assert report.orbit_count == orbits

    def test_trivial_group_orbits(self):
        """Test that the trivial matrix group has one orbit per pair."""
        identity = np.eye(2, dtype=np.int64)[np.newaxis]
        assert count_pair_orbits(identity, 2) == 16


class TestCsv:
    """Tests for the residual CSV."""

    def test_header_and_rows(self):
        """Test one header line and one line per class."""
        report = verify_character_identity(2, 3)
        lines = format_csv(report).splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert lines[0] == "tag,params,lhs,rhs_real,rhs_imag,residual"
        assert len(lines) == 1 + report.class_count

    def test_write_csv(self, tmp_path):
        """Test that the CSV is written with parent directories."""
        report = verify_character_identity(2, 2)
        path = tmp_path / "out" / "sl2_2.csv"
        write_csv(report, path)
        assert path.read_text() == format_csv(report)
