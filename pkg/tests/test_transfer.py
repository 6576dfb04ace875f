from fractions import Fraction

import pytest
from hypothesis import given, settings

from exactalg import Matrix, diag
from transfer import (
    LatticeConfig,
    config_weight,
    enumerate_partition,
    iter_configurations,
    lattice_config,
    monodromy,
    partition_function,
    spin_sectors,
    transfer_commutator,
    transfer_matrix,
)
from vertex_errors import EnumerationLimitError, SiteCountError
from vertexcore import Weights

from strategies import rationals, weights


class TestMonodromy:
    def test_single_site_blocks(self):
        m = monodromy(Weights(2, 3, 5), 1)
        assert m[0, 0] == diag(2, 3)
        assert m[1, 1] == diag(3, 2)
        assert m[0, 1] == Matrix([[0, 0], [5, 0]])
        assert m[1, 0] == Matrix([[0, 5], [0, 0]])
        assert m.dimension == 2

    def test_permutation_weights(self):
        m = monodromy(Weights(1, 0, 1), 2)
        for alpha in range(2):
            for beta in range(2):
                rows = m[alpha, beta].to_rows()
                assert all(x in (0, 1) for row in rows for x in row)
                assert all(sum(row) <= 1 for row in rows)
                assert all(sum(column) <= 1 for column in zip(*rows))

    def test_trace_is_the_transfer_matrix(self):
        w = Weights(Fraction(1, 2), 3, -2)
        m = monodromy(w, 3)
        assert m[0, 0] + m[1, 1] == transfer_matrix(w, 3)


class TestTransferMatrix:
    def test_single_site(self):
        assert transfer_matrix(Weights(2, 3, 5), 1) == diag(5, 5)

    def test_two_sites(self):
        assert transfer_matrix(Weights(1, 1, 1), 2) == Matrix([
            [2, 0, 0, 0],
            [0, 2, 1, 0],
            [0, 1, 2, 0],
            [0, 0, 0, 2],
        ])
        assert transfer_matrix(Weights(6, -3, 1), 2) == Matrix([
            [45, 0, 0, 0],
            [0, -36, 1, 0],
            [0, 1, -36, 0],
            [0, 0, 0, 45],
        ])

    def test_invalid_size(self):
        with pytest.raises(SiteCountError):
            transfer_matrix(Weights(1, 1, 1), 0)

    @settings(max_examples=20, deadline=None)
    @given(weights(6))
    def test_spin_conservation(self, w):
        t = transfer_matrix(w, 3)
        down = [bin(i).count("1") for i in range(8)]
        for i in range(8):
            for j in range(8):
                if down[i] != down[j]:
                    assert t[i, j] == 0

    @settings(max_examples=20, deadline=None)
    @given(weights(6))
    def test_scale_covariance(self, w):
        assert transfer_matrix(w.scaled(2), 3) == transfer_matrix(w, 3) * 8

    def test_spin_sectors(self):
        sectors = spin_sectors(3)
        assert [list(s) for s in sectors] == [[0], [1, 2, 4], [3, 5, 6], [7]]


class TestCommutation:
    def test_spectral_pair_commutes(self):
        assert transfer_commutator(Weights(6, -3, 1), Weights(-3, 6, 1), 3).is_zero()
        assert transfer_commutator(Weights(6, -3, 1), Weights(-3, 6, 1), 4).is_zero()

    @settings(max_examples=20, deadline=None)
    @given(weights(6), weights(6))
    def test_small_lattices_commute_unconditionally(self, w1, w2):
        # translation invariance alone forces commutation up to three sites
        assert transfer_commutator(w1, w2, 2).is_zero()
        assert transfer_commutator(w1, w2, 3).is_zero()


class TestPartitionFunction:
    def test_single_site(self):
        assert partition_function(Weights(2, 3, 5), 1) == 10
        assert enumerate_partition(Weights(2, 3, 5), 1) == 10

    @pytest.mark.parametrize("w, expected", [
        (Weights(1, 1, 1), 18),
        (Weights(6, -3, 1), 6644),
        (Weights(1, 1, 0), 16),
    ])
    def test_two_by_two(self, w, expected):
        assert partition_function(w, 2) == expected
        assert enumerate_partition(w, 2) == expected

    @settings(max_examples=20, deadline=None)
    @given(weights(5), rationals(4, nonzero=True))
    def test_partition_scales_with_the_lattice_area(self, w, k):
        for n in (2, 3):
            assert partition_function(w.scaled(k), n) == k ** (n * n) * partition_function(w, n)

    def test_fractional_weights(self):
        w = Weights(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
        assert partition_function(w, 2) == Fraction(18, 16)

    @settings(max_examples=10, deadline=None)
    @given(weights(5))
    def test_transfer_matches_enumeration(self, w):
        for n in (1, 2, 3):
            assert partition_function(w, n) == enumerate_partition(w, n)

    def test_enumeration_limit(self):
        with pytest.raises(EnumerationLimitError):
            enumerate_partition(Weights(1, 1, 1), 4)
        with pytest.raises(EnumerationLimitError):
            enumerate_partition(Weights(1, 1, 1), 3, max_size=2)
        with pytest.raises(EnumerationLimitError):
            enumerate_partition(Weights(1, 1, 1), 4, max_size=6)


class TestConfigurations:
    def test_configuration_count(self):
        assert sum(1 for _ in iter_configurations(1)) == 4
        assert sum(1 for _ in iter_configurations(2)) == 256

    @pytest.mark.parametrize("n", [1, 2])
    def test_weights_sum_to_partition_function(self, n):
        w = Weights(2, 3, 5)
        total = sum(config_weight(c, w) for c in iter_configurations(n))
        assert total == enumerate_partition(w, n) == partition_function(w, n)

    def test_all_up_configuration(self):
        config = lattice_config([[0, 0], [0, 0]], [[0, 0], [0, 0]])
        assert config_weight(config, Weights(2, 3, 5)) == 16

    def test_ice_rule_violation(self):
        config = lattice_config([[1]], [[0]])
        assert config.vertex_code(0, 0) == 0b1100
        assert config_weight(config, Weights(2, 3, 5)) == 3
        broken = lattice_config([[1, 0], [0, 0]], [[0, 0], [0, 0]])
        assert config_weight(broken, Weights(2, 3, 5)) == 0

    def test_shape_validation(self):
        with pytest.raises(SiteCountError):
            LatticeConfig(horizontal=((0, 0),), vertical=((0,),))
        with pytest.raises(ValueError):
            lattice_config([[2]], [[0]])

    def test_iteration_limit(self):
        with pytest.raises(EnumerationLimitError):
            next(iter_configurations(4))
