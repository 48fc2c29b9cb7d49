import math
from fractions import Fraction

import pytest

from altpoly.exact import (
    ExactnessError,
    PiRational,
    double_factorial,
    exact_gamma2_ratio,
    falling_factorial,
    gamma_quotient,
)


def test_falling_factorial_values():
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(Fraction(7, 3), 0) == 1
    assert falling_factorial(Fraction(1, 2), 1) == Fraction(1, 2)
    # falling, not rising: (3)_2 = 3*2, not 3*4
    assert falling_factorial(3, 2) == 6
    assert falling_factorial(Fraction(-3), 1) == -3


def test_falling_factorial_float_passthrough():
    assert falling_factorial(0.5, 2) == pytest.approx(0.5 * -0.5)


def test_falling_factorial_rejects_negative_count():
    with pytest.raises(ValueError):
        falling_factorial(2, -1)


def test_double_factorial_values():
    assert double_factorial(5) == 15
    assert double_factorial(6) == 48
    assert double_factorial(1) == 1
    assert double_factorial(0) == 1
    assert double_factorial(-1) == 1


def test_double_factorial_rejects_below_minus_one():
    with pytest.raises(ValueError):
        double_factorial(-2)


def test_gamma_quotient_products():
    # Gamma(5)/Gamma(3) = 4*3
    assert gamma_quotient(5, 3) == 12
    assert gamma_quotient(3, 5) == Fraction(1, 12)
    assert gamma_quotient(Fraction(7, 2), Fraction(3, 2)) == Fraction(15, 4)


def test_exact_gamma2_ratio_whole():
    # Gamma(3)Gamma(2)/Gamma(4) = 2*1/6
    assert exact_gamma2_ratio(3, 2, 4) == Fraction(1, 3)


def test_exact_gamma2_ratio_half_pair_gives_pi():
    v = exact_gamma2_ratio(Fraction(1, 2), Fraction(1, 2), 1)
    assert v == PiRational(0, 1)
    assert float(v) == pytest.approx(math.pi)


def test_exact_gamma2_ratio_mixed_is_rational():
    # Gamma(1/2)Gamma(1)/Gamma(3/2) = 2
    assert exact_gamma2_ratio(Fraction(1, 2), 1, Fraction(3, 2)) == 2


def test_exact_gamma2_ratio_rejects_thirds():
    with pytest.raises(ExactnessError):
        exact_gamma2_ratio(Fraction(1, 3), 1, Fraction(4, 3))


def test_pi_rational_arithmetic():
    a = PiRational(Fraction(1, 2), Fraction(1, 3))
    b = PiRational(Fraction(1, 2), Fraction(-1, 3))
    assert a + b == 1
    assert (a - a) == 0
    assert a * 3 == PiRational(Fraction(3, 2), 1)
    assert a / 2 == PiRational(Fraction(1, 4), Fraction(1, 6))
    assert float(PiRational(0, Fraction(1, 2))) == pytest.approx(math.pi / 2)
    assert str(PiRational(0, Fraction(1, 2))) == "1/2*pi"
