"""Tests for exact polynomials, classical families and Wronskians."""

from fractions import Fraction

import pytest

from backend.app.core.errors import InvalidPartitionError, ParameterRangeError
from backend.app.polycore.classical import classical_poly, hermite
from backend.app.polycore.exact import ExactPoly, RationalFunction, differentiate, exact_gcd
from backend.app.polycore.partitions import Partition
from backend.app.polycore.wronskian import wronskian


def test_hermite_four():
    assert hermite(4) == ExactPoly((12, 0, -48, 0, 16))


def test_hermite_negative_degree():
    with pytest.raises(ParameterRangeError):
        hermite(-1)


class TestClassicalPoly:
    def test_hermite(self):
        assert classical_poly("hermite", 2) == ExactPoly((-2, 0, 4))

    def test_laguerre_degree_one(self):
        assert classical_poly("laguerre", 1) == ExactPoly((1, -1))

    def test_laguerre_with_alpha(self):
        # L_1^(α) = 1 + α - x
        assert classical_poly("laguerre", 1, alpha=Fraction(1, 2)) == ExactPoly((Fraction(3, 2), -1))

    def test_jacobi_low_degrees(self):
        assert classical_poly("jacobi", 0) == ExactPoly.constant(1)
        assert classical_poly("jacobi", 1) == ExactPoly.x()

    def test_legendre_two(self):
        # P_2 = (3x^2 - 1) / 2
        assert classical_poly("jacobi", 2) == ExactPoly((Fraction(-1, 2), 0, Fraction(3, 2)))

    def test_parameter_out_of_range(self):
        with pytest.raises(ParameterRangeError):
            classical_poly("laguerre", 2, alpha=-1)
        with pytest.raises(ParameterRangeError):
            classical_poly("jacobi", 2, alpha=0, beta=Fraction(-3, 2))

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            classical_poly("chebyshev", 2)


class TestExactArithmetic:
    def test_differentiate(self):
        p = ExactPoly((1, 2, 3))
        assert differentiate(p) == ExactPoly((2, 6))
        assert differentiate(p, 2) == ExactPoly.constant(6)
        assert differentiate(p, 3).is_zero

    def test_trailing_zeros_are_dropped(self):
        assert ExactPoly((1, 0, 0)).degree == 0
        assert ExactPoly().degree == -1

    def test_exact_gcd(self):
        a = ExactPoly.from_roots([1, 2])
        b = ExactPoly.from_roots([2, 3])
        assert exact_gcd(a, b) == ExactPoly((-2, 1))

    def test_gcd_of_coprime(self):
        assert exact_gcd(hermite(3), hermite(4)).degree == 0

    def test_exact_divide(self):
        product = hermite(2) * hermite(3)
        assert product.exact_divide(hermite(3)) == hermite(2)

    def test_rational_function_reduces(self):
        f = RationalFunction(ExactPoly.from_roots([1, 2]), ExactPoly.from_roots([1]))
        assert f.is_polynomial
        assert f(Fraction(5)) == 3

    def test_rational_function_scalars(self):
        f = RationalFunction(ExactPoly.x())
        g = 2 * f + 1
        assert g(Fraction(3)) == 7


class TestWronskian:
    def test_two_hermite(self):
        assert wronskian([hermite(1), hermite(2)]) == ExactPoly((4, 0, 8))

    def test_three_hermite(self):
        assert wronskian([hermite(1), hermite(2), hermite(3)]) == ExactPoly((0, 192, 0, 128))

    def test_repeated_entry_vanishes(self):
        assert wronskian([hermite(2), hermite(2)]).is_zero

    def test_swap_flips_sign(self):
        forward = wronskian([hermite(1), hermite(3)])
        backward = wronskian([hermite(3), hermite(1)])
        assert forward == -backward

    def test_single_entry(self):
        assert wronskian([hermite(3)]) == hermite(3)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            wronskian([])


class TestPartition:
    def test_parse(self):
        assert Partition.parse("1,1,3,3").parts == (1, 1, 3, 3)
        assert Partition.parse(" ").is_empty

    def test_parse_garbage(self):
        with pytest.raises(InvalidPartitionError):
            Partition.parse("1,a")

    def test_decreasing_rejected(self):
        with pytest.raises(InvalidPartitionError):
            Partition((2, 1))

    def test_negative_rejected(self):
        with pytest.raises(InvalidPartitionError):
            Partition((-1, -1))

    def test_double(self):
        assert Partition((1, 1, 3, 3)).is_double
        assert Partition(()).is_double
        assert not Partition((1, 2)).is_double
        assert not Partition((1,)).is_double

    def test_hermite_indices(self):
        assert Partition((2, 2, 3, 3)).hermite_indices() == (2, 3, 5, 6)
        assert Partition((2, 2, 3, 3)).weight == 10
