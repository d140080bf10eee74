import pytest

from fractions import Fraction

from pjp.rootsys import Weight, parse_root_system
from pjp.laurent import LaurentPoly
from pjp.polynomial import (
    Polynomial,
    MalformedInput,
    parse_polynomial,
    substitute,
    variables,
    from_terms,
)


def test_parse_polynomial():
    x1, x2, x3 = variables(3)

    assert parse_polynomial("x1*x2 + x1*x3 + x2*x3", 3) == x1 * x2 + x1 * x3 + x2 * x3
    assert parse_polynomial("x1^2 - 1/3", 1) == variables(1)[0] ** 2 - Fraction(1, 3)
    assert parse_polynomial("(x1 + 1)**2", 1) == from_terms(1, [((2,), 1), ((1,), 2), ((0,), 1)])
    assert parse_polynomial("0", 2).is_zero
    assert parse_polynomial("5", 2) == 5

    with pytest.raises(MalformedInput):
        parse_polynomial("x1 + y", 2)
    with pytest.raises(MalformedInput):
        parse_polynomial("sqrt(2)*x1", 1)
    with pytest.raises(MalformedInput):
        parse_polynomial("x1 +", 1)
    with pytest.raises(MalformedInput):
        parse_polynomial("1/x1", 1)


def test_arithmetic():
    x1, x2 = variables(2)

    p = x1 * x2 - 3
    assert p.degree == 2
    assert Polynomial.zero(2).degree == -1
    assert p.coefficient((1, 1)) == 1
    assert p.coefficient((0, 0)) == -3
    assert list(p.items()) == [((1, 1), Fraction(1)), ((0, 0), Fraction(-3))]
    assert p - p == 0
    assert 2 - x1 == -(x1 - 2)
    assert (x1 + x2) ** 2 == x1 ** 2 + 2 * x1 * x2 + x2 ** 2
    assert hash(x1 * x2) == hash(x2 * x1)
    assert str(p) == "x1*x2 - 3"


def test_evaluate():
    x1, x2 = variables(2)

    p = x1 * x2 - 3
    assert p.evaluate([2, Fraction(1, 2)]) == -2
    assert p.evaluate([0, 0]) == -3


def test_substitute():
    rs = parse_root_system("A1")
    e = LaurentPoly.monomial(rs, Weight((1,)))
    chi = e + LaurentPoly.monomial(rs, Weight((-1,)))
    (x,) = variables(1)
    one = LaurentPoly.constant(rs, 1)

    assert substitute(x ** 2 - 2, [chi], one) == e * e + LaurentPoly.monomial(rs, Weight((-2,)))
    assert substitute(Polynomial.constant(1, 3), [chi], one) == 3
    assert substitute(x * x * x, [Fraction(1, 2)], Fraction(1)) == Fraction(1, 8)
