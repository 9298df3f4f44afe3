from sympy import Poly, Symbol

from matroid_csm.services.polynomial import IntPolynomial


def test_trailing_zeros_are_stripped():
    assert IntPolynomial((1, 2, 0, 0)).coefficients == (1, 2)
    assert IntPolynomial((0, 0)).is_zero
    assert IntPolynomial().degree == -1


def test_arithmetic():
    p = IntPolynomial((1, 1))
    q = IntPolynomial((-1, 1))
    assert (p * q).coefficients == (-1, 0, 1)
    assert (p + q).coefficients == (0, 2)
    assert (p - q).coefficients == (2,)
    assert (-p).coefficients == (-1, -1)
    assert (3 * p).coefficients == (3, 3)
    assert p(4) == 5


def test_shift_evaluates_at_one_plus_t():
    reduced_k4 = IntPolynomial((6, -5, 1))
    assert reduced_k4.shift(1).coefficients == (2, -3, 1)


def test_divide_by_linear_factor():
    chi = IntPolynomial((-3, 6, -4, 1))
    quotient, remainder = chi.divmod_linear(1)
    assert quotient.coefficients == (3, -3, 1)
    assert remainder == 0
    _, remainder = IntPolynomial((1, 0, 1)).divmod_linear(1)
    assert remainder == 2


def test_sympy_round_trip():
    x = Symbol("x")
    poly = Poly(x**2 - 3 * x + 3, x)
    assert IntPolynomial.from_poly(poly).coefficients == (3, -3, 1)
    assert IntPolynomial((3, -3, 1)).to_poly().as_expr() == x**2 - 3 * x + 3


def test_format():
    assert IntPolynomial((3, -3, 1)).format() == "t^2 - 3t + 3"
    assert IntPolynomial((0, 2, 1)).format() == "t^2 + 2t"
    assert str(IntPolynomial((0, -1))) == "-t"
    assert IntPolynomial().format() == "0"
    assert IntPolynomial((1, 1)).format("x") == "x + 1"
