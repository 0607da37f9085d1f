import math
from fractions import Fraction

import pytest

from qkostka.qexact import (
    QPolynomial,
    QSeriesTruncated,
    bounded_partition_series,
    exponent_numerator,
    finite_pochhammer,
    gaussian_binomial,
    partition_series,
    vector_gaussian_binomial,
)


def test_exponent_numerator_grid():
    assert exponent_numerator(2) == 8
    assert exponent_numerator(Fraction(1, 4)) == 1
    assert exponent_numerator(Fraction(-3, 2)) == -6
    with pytest.raises(ValueError):
        exponent_numerator(Fraction(1, 3))


def test_polynomial_constructors():
    assert QPolynomial.zero().is_zero()
    assert QPolynomial.one().evaluate_at_one() == 1
    assert QPolynomial.q_power(0) == QPolynomial.one()
    assert QPolynomial.q_power(2, 0).is_zero()
    p = QPolynomial.from_integer_terms({0: 1, 3: 2})
    assert p.coefficient(3) == 2
    assert p.coefficient(1) == 0


def test_polynomial_arithmetic():
    q = QPolynomial.q_power(1)
    one = QPolynomial.one()
    assert (one + q) * (one + q) == QPolynomial.from_integer_terms({0: 1, 1: 2, 2: 1})
    assert (one + q) - (one + q) == QPolynomial.zero()
    p = QPolynomial.q_power(Fraction(5, 4)) + QPolynomial.q_power(2, 3)
    assert p.terms() == [(5, 1), (8, 3)]
    assert p.min_exponent() == Fraction(5, 4)
    assert p.max_exponent() == 2
    assert not p.is_integer_grid()
    assert p.evaluate_at_one() == 4


def test_shift_and_inverse():
    p = QPolynomial.one() + QPolynomial.q_power(2)
    assert p.shifted(3) == QPolynomial.q_power(3) + QPolynomial.q_power(5)
    assert p.substitute_inverse() == QPolynomial.one() + QPolynomial.q_power(-2)
    assert p.substitute_inverse().substitute_inverse() == p
    # negative integer exponents are legal
    lau = QPolynomial.q_power(-1) + QPolynomial.one()
    assert lau.min_exponent() == -1


def test_integer_coefficients():
    p = QPolynomial.from_integer_terms({0: 1, 2: 5})
    assert p.integer_coefficients(4) == [1, 0, 5, 0, 0]
    quarter = QPolynomial.q_power(Fraction(1, 4))
    with pytest.raises(ValueError):
        quarter.integer_coefficients(2)


def test_json_round_trip():
    p = QPolynomial.q_power(Fraction(5, 4)) + QPolynomial.q_power(2, 3)
    obj = p.to_json_dict()
    assert obj == {"den": 4, "terms": [[5, "1"], [8, "3"]]}
    assert QPolynomial.from_json_dict(obj) == p
    assert QPolynomial.from_json_dict(QPolynomial.zero().to_json_dict()).is_zero()


def test_str_rendering():
    assert str(QPolynomial.zero()) == "0"
    assert str(QPolynomial.one()) == "1"
    assert str(QPolynomial.q_power(1)) == "q"
    assert str(QPolynomial.q_power(1, -1)) == "-q"
    assert str(QPolynomial.q_power(3, 2)) == "2*q^3"
    assert str(QPolynomial.q_power(Fraction(5, 4))) == "q^(5/4)"


def test_finite_pochhammer():
    assert finite_pochhammer(0) == QPolynomial.one()
    assert finite_pochhammer(-3) == QPolynomial.one()
    assert finite_pochhammer(1) == QPolynomial.one() - QPolynomial.q_power(1)
    assert finite_pochhammer(2) == QPolynomial.from_integer_terms(
        {0: 1, 1: -1, 2: -1, 3: 1}
    )


def test_gaussian_binomial_values():
    assert gaussian_binomial(4, 2) == QPolynomial.from_integer_terms(
        {0: 1, 1: 1, 2: 2, 3: 1, 4: 1}
    )
    assert gaussian_binomial(3, 0) == QPolynomial.one()
    assert gaussian_binomial(3, 3) == QPolynomial.one()
    assert gaussian_binomial(3, 4).is_zero()
    assert gaussian_binomial(3, -1).is_zero()


def test_gaussian_binomial_properties():
    for m in range(8):
        for n in range(m + 1):
            b = gaussian_binomial(m, n)
            assert b == gaussian_binomial(m, m - n)
            # Pascal on the q-grid
            if m:
                assert b == gaussian_binomial(m - 1, n - 1) + gaussian_binomial(
                    m - 1, n
                ).shifted(n)
            assert b.evaluate_at_one() == math.comb(m, n)


def test_vector_gaussian_binomial():
    assert vector_gaussian_binomial((3, 2), (1, 1)) == gaussian_binomial(
        3, 1
    ) * gaussian_binomial(2, 1)
    assert vector_gaussian_binomial((), ()) == QPolynomial.one()
    assert vector_gaussian_binomial((3,), (5,)).is_zero()


def test_partition_series():
    ps = partition_series(10)
    assert [ps.coefficient(n) for n in range(11)] == [
        1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42,
    ]
    assert ps.offset == 0


def test_bounded_partition_series():
    # parts of size at most 1 / at most 2
    ones = bounded_partition_series(1, 6)
    assert [ones.coefficient(n) for n in range(7)] == [1] * 7
    twos = bounded_partition_series(2, 8)
    assert [twos.coefficient(n) for n in range(9)] == [1, 1, 2, 2, 3, 3, 4, 4, 5]
    # unbounded once the bound exceeds the order
    free = bounded_partition_series(10, 10)
    full = partition_series(10)
    assert [free.coefficient(n) for n in range(11)] == [
        full.coefficient(n) for n in range(11)
    ]
    negative = bounded_partition_series(-1, 4)
    assert all(negative.coefficient(n) == 0 for n in range(5))


def test_series_window_access():
    s = QSeriesTruncated((1, 2, 3), offset=Fraction(1, 2))
    assert s.order == 2
    assert s.hi_exponent() == Fraction(5, 2)
    assert s.coefficient_at(Fraction(1, 2)) == 1
    assert s.coefficient_at(Fraction(3, 2)) == 2
    # off the ladder grid but inside the window
    assert s.coefficient_at(Fraction(1)) == 0
    # beyond the window nothing is known
    assert s.coefficient_at(Fraction(9, 2)) is None


def test_series_products():
    s = QSeriesTruncated((1, 2, 3), offset=Fraction(1, 2))
    t = s * s
    assert t.offset == 1
    assert [t.coefficient(n) for n in range(t.order + 1)] == [1, 4, 10]
    shifted = s.times_polynomial(QPolynomial.q_power(1))
    assert shifted.offset == Fraction(3, 2)
    assert shifted.coefficient(0) == 1
