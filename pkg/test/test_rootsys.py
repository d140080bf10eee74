import pytest

from fractions import Fraction

from pjp.rootsys import (
    Weight,
    RationalWeight,
    Coweight,
    UnsupportedType,
    InvalidSubset,
    InvalidMultiplicity,
    MismatchedRootSystem,
    NotIDominant,
    build_root_system,
    parse_root_system,
    simple_subset,
    multiplicity,
    multiplicity_from_roots,
    rho,
    inner,
    height,
    pairing,
    is_dominant,
    ambient_coweight,
    xi_basis,
    simple_root_coordinates,
)


def test_weight_normalization():
    assert Weight((2, 4), 2) == Weight((1, 2))
    assert Weight((2, 4), 2).den == 1
    assert Weight((1, 2), 2).den == 2

    half = Weight.of([Fraction(1, 2), 1])
    assert half == Weight((1, 2), 2)
    assert half.coords == (Fraction(1, 2), Fraction(1))
    assert half.doubled == (1, 2)
    assert not half.is_integral

    with pytest.raises(ValueError):
        Weight.of([Fraction(1, 3)])
    with pytest.raises(ValueError):
        Weight((1,), 3)


def test_weight_arithmetic():
    a = Weight((1, 0))
    b = Weight((1, 1), 2)

    assert a + b == Weight((3, 1), 2)
    assert a - a == Weight.zero(2)
    assert (a - a).is_zero
    assert -a == Weight((-1, 0))
    assert 2 * b == Weight((1, 1))
    assert Weight((1, 3)).halved() == Weight((1, 3), 2)

    with pytest.raises(MismatchedRootSystem):
        a + Weight((1,))


def test_root_systems():
    rs = build_root_system("A", 2)

    assert rs.name == "A2"
    assert str(rs) == "A2"
    assert rs.cartan == ((2, -1), (-1, 2))
    assert rs.positive_roots == (Weight((2, -1)), Weight((-1, 2)), Weight((1, 1)))
    assert rs.simple_roots == (Weight((2, -1)), Weight((-1, 2)))
    assert rs.orbit_count == 1

    assert len(parse_root_system("b2").positive_roots) == 4
    assert len(parse_root_system("G2").positive_roots) == 6
    assert len(parse_root_system("D4").positive_roots) == 12
    assert parse_root_system("B2").orbit_count == 2
    assert parse_root_system("A2", 2).scale == 2
    assert str(parse_root_system("A2", 2)) == "A2 (scale 2)"

    with pytest.raises(UnsupportedType):
        parse_root_system("E6")
    with pytest.raises(UnsupportedType):
        parse_root_system("A")
    with pytest.raises(UnsupportedType):
        build_root_system("A", 2, 0)


def test_inner_products():
    rs = parse_root_system("A2")
    a1, a2 = rs.simple_roots
    w1, w2 = rs.fundamental_weights

    assert inner(rs, a1, a1) == 2
    assert inner(rs, a1, a2) == -1
    assert inner(rs, w1, w1) == Fraction(2, 3)
    assert inner(rs, w1, a1) == 1
    assert inner(parse_root_system("A2", 2), a1, a1) == 8

    assert simple_root_coordinates(rs, w1) == (Fraction(2, 3), Fraction(1, 3))
    assert height(rs, Weight((1, 1))) == 2
    assert pairing(rs, w1, a1) == 1
    assert pairing(rs, w1, Weight((1, 1))) == 1
    assert pairing(rs, w1, -a1) == -1

    with pytest.raises(MismatchedRootSystem):
        pairing(rs, w1, Weight((3, 0)))


def test_scale():
    rs1 = build_root_system("A", 2, 1)
    rs2 = build_root_system("A", 2, 2)

    # same coordinates, the metric picks up scale²
    assert rs2.positive_roots == rs1.positive_roots
    for root in rs1.positive_roots:
        assert inner(rs2, root, root) == 4 * inner(rs1, root, root)
        for weight in rs1.fundamental_weights + (Weight((1, 1)),):
            assert pairing(rs2, weight, root) == pairing(rs1, weight, root)

    a1, a2 = rs2.simple_roots
    assert inner(rs2, a1, a1) == 8
    assert inner(rs2, a2, a2) == 8
    assert inner(rs2, a1, a2) == -4

    # e1 - e2 evaluates to 2 on 2α₁
    xi = ambient_coweight(rs2, [1, -1, 0])
    assert xi(a1) == 2 * ambient_coweight(rs1, [1, -1, 0])(a1)
    assert ambient_coweight(rs1, [1, 0, 0])(a1) == 1
    assert ambient_coweight(rs2, [1, 0, 0])(a1) == 2
    assert [c(w) for c in xi_basis(rs2) for w in rs2.fundamental_weights] == [2, 0, 0, 2]


def test_subsets():
    rs = parse_root_system("A2")

    assert simple_subset(rs, [1, 0, 1]) == (0, 1)
    assert simple_subset(rs, []) == ()

    with pytest.raises(InvalidSubset):
        simple_subset(rs, [2])

    assert is_dominant(rs, Weight((1, -1)), (0,))
    assert not is_dominant(rs, Weight((1, -1)), (1,))
    assert is_dominant(rs, Weight((-3, -3)), ())


def test_multiplicity():
    rs = parse_root_system("B2")

    assert multiplicity(rs, 1).values == (1, 1)
    assert multiplicity(rs, [Fraction(1, 2), 2]).values == (Fraction(1, 2), 2)
    assert multiplicity(rs, [3]).values == (3, 3)
    assert multiplicity(rs, 1).is_integral
    assert not multiplicity(rs, Fraction(1, 2)).is_integral

    with pytest.raises(InvalidMultiplicity):
        multiplicity(rs, [1, 2, 3])
    with pytest.raises(InvalidMultiplicity):
        multiplicity(rs, -1)

    a2 = parse_root_system("A2")
    k = multiplicity_from_roots(a2, {root: 2 for root in a2.positive_roots})
    assert k == multiplicity(a2, 2)


def test_rho():
    rs = parse_root_system("A2")

    assert rho(rs, multiplicity(rs, 1)) == RationalWeight((Fraction(1), Fraction(1)))
    assert rho(rs, multiplicity(rs, Fraction(1, 2))) == RationalWeight(
        (Fraction(1, 2), Fraction(1, 2))
    )
    assert rho(rs, multiplicity(rs, 0)) == RationalWeight.zero(2)


def test_coweights():
    rs = parse_root_system("A2")
    a1, a2 = rs.simple_roots

    xi = ambient_coweight(rs, [1, 0, 0])
    assert xi == Coweight((Fraction(2, 3), Fraction(1, 3)))
    assert xi(a1) == 1
    assert xi(a2) == 0
    assert ambient_coweight(rs, [1, 1, 1]) == Coweight((Fraction(0), Fraction(0)))

    first, second = xi_basis(rs)
    assert first(rs.fundamental_weights[0]) == 1
    assert second(rs.fundamental_weights[0]) == 0

    with pytest.raises(UnsupportedType):
        ambient_coweight(parse_root_system("B2"), [1, 0, 0])
    with pytest.raises(MismatchedRootSystem):
        ambient_coweight(rs, [1, 0])


def test_error_codes():
    try:
        raise NotIDominant("not dominant")
    except NotIDominant as e:
        assert e.code == "NotIDominant"
        assert e.message == "not dominant"
