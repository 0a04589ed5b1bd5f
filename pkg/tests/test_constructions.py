import random
from fractions import Fraction

import pytest

from ellquot import (
    ConstructionInput,
    DegenerateParameterError,
    FunctionField,
    certify,
    construct_l3,
    construct_l4,
    construct_l5,
    construct_l6,
    factor_over_Q,
    quotient_model,
    verify_defining_identity,
)
from ellquot.constructions import a5, quotient_cubic, quotient_cubic_l3


class TestConstructL5:
    def test_row1_fixture(self):
        c, x, yb = construct_l5(1, z=1)
        assert (c, x, yb) == (-1, 2, 11)
        assert 4 * 8 + 32 * 4 + 44 * 2 - 127 == 121 == yb * yb

    def test_row1_erratum_flag(self):
        c_fixed, _, _ = construct_l5(1, z=1)
        c_printed, _, _ = construct_l5(1, z=1, as_printed=True)
        assert c_fixed == -1
        assert c_printed == Fraction(-1, 2)
        # the printed value breaks the defining identity A_5(c) = z^2
        assert a5(c_fixed, Fraction(-1)) == 1
        assert a5(c_printed, Fraction(-1)) != 1

    def test_row2_fixture_degenerate(self):
        c, x, yb = construct_l5(2, z=0)
        assert c == 18
        assert x == Fraction(-345, 4)
        assert yb == 0  # torsion output, flagged downstream

    def test_row2_x_closed_form(self):
        z = Fraction(3, 2)
        c, x, _ = construct_l5(2, z=z)
        assert c == 16 * z * z + 18
        assert x == -64 * z ** 4 - 148 * z * z - Fraction(345, 4)

    def test_row3_formula_and_square_indicator(self):
        t, m = Fraction(2), Fraction(1)
        c, x, yb = construct_l5(3, t=t, m=m)
        den = t ** 6 + 8 * t ** 4 + 21 * t * t + 16 * m * m + 18
        num = 11 * t ** 6 + 33 * t ** 4 - 8 * m * t ** 3 + 21 * t * t + 8 * m * t - 1
        assert c == num / den
        u0 = (t * t - 1) / 4
        assert x == -(u0 + 1) * c * c + (11 * u0 + 8) * c + u0
        alpha, beta, gamma = quotient_cubic(5, c)
        assert 4 * x ** 3 + alpha * x * x + beta * x + gamma == yb * yb

    def test_bad_row(self):
        with pytest.raises(DegenerateParameterError):
            construct_l5(4, z=1)
        with pytest.raises(DegenerateParameterError):
            construct_l5(3, z=1)


class TestConstructL3:
    def test_fixture(self):
        a3, x, yb = construct_l3(0, 1, 5)
        assert (a3, x, yb) == (6, 7, 20)
        assert 4 * 343 - 972 == 400 == yb * yb

    def test_vanishing_g3_gives_torsion(self):
        a3, x, yb = construct_l3(0, 1, 3)
        assert a3 == 2
        assert yb == 0

    def test_u1_zero_rejected(self):
        with pytest.raises(DegenerateParameterError):
            construct_l3(0, 0, 5)

    def test_singular_when_z_matches_linear_term(self):
        # z = u1*a1 + 1 forces a3 = 0 and a singular curve downstream
        cert = certify(ConstructionInput(3, params={"a1": 2, "u1": 1, "z": 3}))
        assert not cert.valid
        assert "singular" in cert.excluded_reason


class TestConstructL4:
    def test_fixture(self):
        c, x, yb = construct_l4(1, 1)
        assert (c, x, yb) == (Fraction(1, 3), Fraction(2, 3), Fraction(5, 3))
        assert (x + c) * (4 * x * x + x + c) == Fraction(25, 9)

    def test_u_zero_degenerate_torsion(self):
        c, x, yb = construct_l4(0, 3)
        assert x == -c and yb == 0

    def test_denominator_zero_rejected(self):
        with pytest.raises(DegenerateParameterError):
            construct_l4(1, -2)


class TestConstructL6:
    def test_fixture(self):
        c, x, yb = construct_l6(1, 16)
        assert c == Fraction(4, 7)
        assert x == Fraction(624, 49)
        assert yb == Fraction(29584, 343)
        # 4x - alpha is the square (43/7)^2
        alpha = 19 * c * c + 14 * c - 1
        assert 4 * x - alpha == Fraction(43, 7) ** 2

    def test_v0_zero_torsion(self):
        c, x, yb = construct_l6(0, 5)
        assert yb == 0

    def test_denominator_zero_rejected(self):
        with pytest.raises(DegenerateParameterError):
            construct_l6(1, 12)


def test_defining_identities_exact():
    for l in (3, 4, 5, 6):
        assert verify_defining_identity(l)


def test_perturbed_identity_fails():
    from ellquot.multipoly import MultiPoly, identity_check

    vars_ = ("c", "u0")
    c, u0 = MultiPoly.gens(vars_)
    x = -(u0 + 1) * c * c + (11 * u0 + 8) * c + u0
    alpha = c * c - 30 * c + 1
    beta = -2 * c * (3 * c + 1) * (4 * c - 7)
    gamma = -c * (4 * c ** 4 - 4 * c ** 3 - 40 * c * c + 91 * c - 4)
    lhs = 4 * x ** 3 + alpha * x * x + beta * x + gamma
    A_perturbed = (
        -(4 * u0 + 3) * (u0 + 1) ** 2 * c * c
        + 2 * (2 * u0 + 1) * (11 * u0 * u0 + 11 * u0 + 2) * c
        + u0 * u0 * (4 * u0 + 1)
        + 1
    )
    G = c * c - 11 * c - 1
    assert not identity_check(lhs, A_perturbed * G * G, "exact")


def test_quotient_model_tables_symbolic():
    Fc = FunctionField("c")
    c = Fc.gen
    for l in (4, 5, 6):
        b = quotient_model(l, c).curve.b_form()
        assert (b.b2, 2 * b.b4, b.b6) == quotient_cubic(l, c)
    m3 = quotient_model(3, Fraction(2), Fraction(3))
    b = m3.curve.b_form()
    assert (b.b2, 2 * b.b4, b.b6) == quotient_cubic_l3(Fraction(2), Fraction(3))


class TestCertify:
    def test_l5_row1_z2_valid(self):
        cert = certify(ConstructionInput(5, row=1, params={"z": 2}))
        assert cert.valid
        assert factor_over_Q(cert.fiber.poly).is_irreducible

    def test_l5_row1_z1_is_dual_kernel_torsion(self):
        # the z=1 point generates the dual kernel: order 5, not infinite
        cert = certify(ConstructionInput(5, row=1, params={"z": 1}))
        assert cert.on_curve and cert.nontrivial and not cert.infinite_order
        assert cert.curve_F.order_of_point(cert.point, 12) == 5
        assert cert.excluded_reason == "torsion point"

    def test_l5_row2_z0_excluded(self):
        cert = certify(ConstructionInput(5, row=2, params={"z": 0}))
        assert cert.excluded_reason == "torsion point (y=0)"

    def test_l4_fixture_valid(self):
        cert = certify(ConstructionInput(4, params={"u": 1, "v": 1}))
        assert cert.valid

    def test_l6_fixture_valid_with_cyclic_fiber(self):
        cert = certify(ConstructionInput(6, params={"v0": 1, "z": 16}))
        assert cert.valid
        assert cert.fiber.poly.degree == 6
        assert factor_over_Q(cert.fiber.poly).is_irreducible

    def test_l3_fixture_is_trivial(self):
        # the published l=3 parametrization always lands in the isogeny image;
        # the fixture point (7, 20) is the image of (3, -9) and of its
        # kernel translates
        cert = certify(ConstructionInput(3, params={"a1": 0, "u1": 1, "z": 5}))
        assert cert.on_curve and cert.infinite_order and not cert.nontrivial
        assert cert.witness is not None
        assert cert.witness.x in (3, -2, 6)
        from ellquot import kubert_curve, push_point, velu_quotient

        E, A = kubert_curve(3, 0, 6)
        isog = velu_quotient(E, A, 3)
        image = push_point(isog, cert.witness)
        assert E.contains(cert.witness)
        assert image.x == 7

    def test_as_printed_row1_off_curve(self):
        cert = certify(ConstructionInput(5, row=1, params={"z": 1}, as_printed=True))
        assert not cert.valid
        assert "row-1" in cert.excluded_reason


def test_random_sweep_statistics():
    from ellquot.verify import _draw_input

    rng = random.Random(77)
    for l, expect_valid in ((4, True), (5, True), (6, True)):
        valid = degenerate = 0
        for _ in range(15):
            cert = certify(_draw_input(l, rng))
            if cert.valid:
                valid += 1
            else:
                degenerate += 1
        assert valid >= 13, (l, valid, degenerate)


def test_l3_sweep_all_trivial():
    from ellquot.verify import _draw_input

    rng = random.Random(78)
    for _ in range(10):
        cert = certify(_draw_input(3, rng))
        assert not cert.valid
