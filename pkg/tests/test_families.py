import random
from fractions import Fraction

import pytest

from ellquot import (
    QQ,
    UniPoly,
    brumer,
    check_brumer_substitution,
    check_darmon_transform,
    check_shanks_reproduction,
    darmon,
    gras_quartic,
    gras_resultant_identity,
    p_ncl5,
    ptilde_cubic,
    ptilde_quartic,
    shanks_cubic,
)
from ellquot.poly import discriminant

x = UniPoly.gen(QQ)
X = UniPoly.gen(QQ, "X")


def test_pncl5_closed_form():
    assert p_ncl5(0, 0).poly == x ** 5
    assert p_ncl5(1, 1).poly == x ** 5 - x ** 4 + x ** 3 + x ** 2 - 2 * x + 1


def test_pncl5_x4_coefficient_is_minus_n():
    rng = random.Random(61)
    for _ in range(20):
        n = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        assert p_ncl5(n, c).poly.coeff(4) == -n


def test_brumer_darmon_closed_forms():
    assert brumer(0, 0).poly == x ** 5 - 3 * x ** 4 + 3 * x ** 3 - x ** 2
    assert darmon(0, 0).poly == x ** 5 + 5 * x ** 3 + 5 * x ** 2 + 5 * x - 3
    s, u = Fraction(7, 2), Fraction(-3)
    assert brumer(s, u).poly.coeff(0) == s


def test_brumer_substitution_formal_and_random():
    assert check_brumer_substitution()
    rng = random.Random(62)
    for _ in range(20):
        s = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        u = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        assert check_brumer_substitution(s, u)
    with pytest.raises(ValueError):
        check_brumer_substitution(0, 1)


def test_brumer_substitution_negative_control():
    # perturbing the quintic family by +1 breaks the identity
    s, u = Fraction(2), Fraction(3)
    P = p_ncl5(-u, s).poly + 1
    transformed = UniPoly(
        QQ, [a * s ** (5 - j) for j, a in enumerate(reversed(P.coeffs))]
    )
    assert transformed.monic() != brumer(s, u).poly


def test_darmon_transform():
    assert check_darmon_transform()
    assert check_darmon_transform(0, 0)
    rng = random.Random(63)
    for _ in range(10):
        S = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        T = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        assert check_darmon_transform(S, T)


def test_darmon_sign_parity():
    # leading coefficient after x -> -x is -1 for odd degree
    B = brumer(3, 5).poly
    flipped = UniPoly(QQ, [(-1) ** k * a for k, a in enumerate(B.coeffs)])
    assert flipped.lc == -1


def test_shanks_family():
    assert shanks_cubic(1).poly == X ** 3 - X ** 2 - 4 * X - 1
    assert discriminant(shanks_cubic(1).poly) == 169
    assert check_shanks_reproduction()
    for t in (1, 2, 5, Fraction(-7, 3)):
        assert check_shanks_reproduction(t)
    assert ptilde_cubic(-2, -1, 5).poly == x ** 3 - 2 * x ** 2 - 5 * x - 1


def test_gras_family():
    assert gras_quartic(0).poly == X ** 4 - 6 * X ** 2 + 1
    assert ptilde_quartic(2, 3).poly == x ** 4 - 2 * x ** 3 - x ** 2 + 2 * x - 3


def test_gras_resultant_identity():
    assert gras_resultant_identity()
    for t in (2, -3, Fraction(5, 2)):
        assert gras_resultant_identity(t)
    with pytest.raises(ValueError):
        gras_resultant_identity(0)


def test_gras_resultant_negative_control():
    # wrong n (n+1) must break the specialized identity
    from ellquot import FunctionField, resultant

    t = Fraction(2)
    FX = FunctionField("X")
    Xg = FX.gen
    n = (t * t + 32) / (2 * t * t) + 1
    c = (3 * t ** 4 - 1024) / (16 * t ** 4)
    y = UniPoly.gen(FX)
    ptilde = y ** 4 - 2 * y ** 3 + FX(1 - n) * y * y + FX(n) * y - FX(c)
    second = UniPoly(FX, [Xg + FX((t * t + 32) / (8 * t)), FX.zero, FX(-t / 2)])
    res = resultant(ptilde, second)
    normalized = res.num.monic()
    assert normalized != gras_quartic(t).poly


def test_gras_specialization_at_2_value():
    # both sides specialize to X^4 - 2X^3 - 6X^2 + 2X + 1
    assert gras_quartic(2).poly == X ** 4 - 2 * X ** 3 - 6 * X ** 2 + 2 * X + 1
