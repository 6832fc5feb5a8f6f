"""
Test cases for the determinant engines, ranks and sequences.
Run with: pytest pascaldet/test_determinants.py -v
"""

import math
import random
from fractions import Fraction

import pytest

from pascaldet.determinants import (
    antisymmetric_roots,
    characteristic_polynomial,
    det,
    det_condensation,
    det_oracle_cofactor,
    det_sequence,
    det_values,
    rank,
    rank_sequence,
    sqrt_det_antisymmetric,
)
from pascaldet.errors import DomainError, NotAntisymmetric, OddOrder, OrderTooLarge
from pascaldet.matrices import (
    DenseMatrix,
    InverseBinomialSpec,
    PascalShiftedSpec,
    SymplecticBallotSpec,
    build,
)


def _differences(values, times):
    for _ in range(times):
        values = [b - a for a, b in zip(values, values[1:])]
    return list(values)


class TestDet:
    """Test the elimination engine."""

    def test_integer_matrix(self):
        assert det(DenseMatrix.from_rows([[1, 2], [3, 4]])) == -2

    def test_rational_matrix(self):
        assert det(DenseMatrix.from_rows([["1/2", 1], [1, 3]])) == Fraction(1, 2)

    def test_empty_matrix(self):
        assert det(DenseMatrix(())) == 1

    def test_row_swap(self):
        assert det(DenseMatrix.from_rows([[0, 1], [1, 0]])) == -1

    def test_singular(self):
        assert det(DenseMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 5]])) == 0

    def test_shifted_pascal_known_value(self):
        """det C(i + j + 2, i + 1) over n x n is n + 1."""
        assert det(build(PascalShiftedSpec(s=1, t=1), 5)) == 6


class TestCondensation:
    """Test Dodgson condensation against elimination."""

    def test_agrees_with_elimination(self):
        matrix = build(PascalShiftedSpec(s=2, t=1), 6)
        result = det_condensation(matrix)
        assert result.value == det(matrix)
        assert not result.fallback_used

    def test_zero_interior_minor_falls_back(self):
        matrix = DenseMatrix.from_rows([[1, 2, 3], [4, 0, 6], [7, 8, 9]])
        result = det_condensation(matrix)
        assert result.value == 60
        assert result.fallback_used

    def test_rational_entries(self):
        matrix = build(InverseBinomialSpec(s=0, t=0), 4)
        assert det_condensation(matrix).value == det(matrix)


class TestCofactorOracle:
    """Test the brute-force cofactor expansion."""

    def test_agrees_with_elimination(self):
        matrix = build(PascalShiftedSpec(s=1, t=2), 6)
        assert det_oracle_cofactor(matrix) == det(matrix)

    def test_order_limit(self):
        with pytest.raises(OrderTooLarge):
            det_oracle_cofactor(DenseMatrix.identity(9))


class TestEngineAgreement:
    """Test that the three engines agree on random integer matrices."""

    @pytest.mark.parametrize("seed", range(4))
    def test_random_matrices(self, seed):
        rng = random.Random(seed)
        for _ in range(50):
            n = rng.randint(1, 7)
            matrix = DenseMatrix.from_rows([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
            value = det(matrix)
            assert value.denominator == 1
            assert det_condensation(matrix).value == value
            assert det_oracle_cofactor(matrix) == value
            assert det(matrix.transpose()) == value

    def test_odd_antisymmetric_vanishes(self):
        rng = random.Random(11)
        for n in (1, 3, 5, 7):
            cells = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    cells[i][j] = rng.randint(-9, 9)
                    cells[j][i] = -cells[i][j]
            assert det(DenseMatrix.from_rows(cells)) == 0


class TestRank:
    """Test integer echelon rank."""

    def test_rank_values(self):
        assert rank(DenseMatrix.from_rows([[1, 2], [2, 4]])) == 1
        assert rank(DenseMatrix.identity(4)) == 4
        assert rank(DenseMatrix.from_rows([[0, 0], [0, 0]])) == 0

    def test_rational_rows(self):
        assert rank(DenseMatrix.from_rows([["1/2", "1/3"], [3, 2]])) == 1


class TestAntisymmetricRoot:
    """Test square roots of antisymmetric determinants."""

    def test_order_two(self):
        assert sqrt_det_antisymmetric(DenseMatrix.from_rows([[0, 3], [-3, 0]])) == 3

    def test_odd_order(self):
        with pytest.raises(OddOrder):
            sqrt_det_antisymmetric(DenseMatrix.from_rows([[0]]))

    def test_not_antisymmetric(self):
        with pytest.raises(NotAntisymmetric):
            sqrt_det_antisymmetric(DenseMatrix.from_rows([[1, 2], [3, 4]]))

    def test_symplectic_ballot_roots(self):
        assert antisymmetric_roots(SymplecticBallotSpec(k=2), 3) == [2, 3, 4]


class TestCharacteristicPolynomial:
    """Test Faddeev-LeVerrier."""

    def test_diagonal(self):
        poly = characteristic_polynomial(DenseMatrix.from_rows([[2, 0], [0, 3]]))
        assert poly.coefficients == (6, -5, 1)

    def test_monic_and_constant_term(self):
        """Constant term is (-1)^n det."""
        matrix = DenseMatrix.from_rows([[1, 2, 0], [0, 1, 4], [5, 0, 1]])
        poly = characteristic_polynomial(matrix)
        assert poly.leading == 1
        assert poly.coefficients[0] == -det(matrix)


class TestSequences:
    """Test determinant and rank sequences."""

    def test_det_sequence_of_pascal(self):
        sequence = det_sequence(PascalShiftedSpec(s=0, t=0), 5)
        assert sequence.dets == [1, 1, 1, 1, 1]
        assert sequence.model_dump(mode="json")["values"][0] == [1, "1"]
        assert list(sequence.to_frame().columns) == ["n", "det"]

    def test_engines_agree(self):
        spec = PascalShiftedSpec(s=1, t=1)
        assert det_values(spec, 6, engine="condensation") == det_values(spec, 6)

    def test_start_offset(self):
        assert det_values(PascalShiftedSpec(s=1, t=1), 4, start=3) == [4, 5]

    def test_parallel_matches_serial(self):
        spec = PascalShiftedSpec(s=2, t=2)
        assert det_values(spec, 6, jobs=2) == det_values(spec, 6, jobs=1)

    def test_rank_sequence(self):
        sequence = rank_sequence(PascalShiftedSpec(s=0, t=0), 3)
        assert sequence.values == ((1, 1), (2, 2), (3, 3))

    def test_bad_n_max(self):
        with pytest.raises(DomainError):
            det_sequence(PascalShiftedSpec(s=0, t=0), 0)

    @pytest.mark.parametrize("s", range(4))
    @pytest.mark.parametrize("t", range(4))
    def test_shifted_pascal_is_polynomial_of_degree_st(self, s, t):
        degree = s * t
        values = det_values(PascalShiftedSpec(s=s, t=t), degree + 4)
        top = _differences(values, degree)
        assert top[0] != 0
        assert top == [top[0]] * len(top)
        assert _differences(values, degree + 1) == [0, 0, 0]

    @pytest.mark.parametrize("s", range(3))
    @pytest.mark.parametrize("t", range(3))
    def test_inverse_binomial_sign(self, s, t):
        """Signs run +, -, -, +, +, -, - as (-1)^C(n, 2)."""
        for n, value in enumerate(det_values(InverseBinomialSpec(s=s, t=t), 7), start=1):
            assert value != 0
            assert (value > 0) == (math.comb(n, 2) % 2 == 0)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
