from fractions import Fraction

import pytest

from ellquot import PrimeField, QQ, is_square, rational, rational_sqrt


def test_rational_sqrt_examples():
    assert rational_sqrt(Fraction(25, 9)) == Fraction(5, 3)
    assert rational_sqrt(2) is None
    assert rational_sqrt(121) == 11
    assert rational_sqrt(0) == 0
    assert rational_sqrt(-4) is None


def test_is_square():
    assert is_square(Fraction(49, 64))
    assert not is_square(Fraction(50, 64))


def test_rational_coercion():
    assert rational("3/4") == Fraction(3, 4)
    assert rational(6, 8) == Fraction(3, 4)
    assert QQ("7") == 7
    with pytest.raises(TypeError):
        QQ(1.5)


def test_prime_field_arithmetic():
    F5 = PrimeField(5)
    a = F5(7)
    b = F5(3)
    assert a == 2
    assert a + b == 0
    assert a * b == 1
    assert a / b == F5(4)
    assert -a == 3
    assert a ** 4 == 1
    assert F5(Fraction(1, 2)) == 3  # inverse of 2 mod 5


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(10)


def test_prime_field_division_by_zero():
    F7 = PrimeField(7)
    with pytest.raises(ZeroDivisionError):
        F7(1) / F7(0)
