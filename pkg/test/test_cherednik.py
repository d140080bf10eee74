import pytest

from fractions import Fraction

from pjp.rootsys import (
    Weight,
    RationalWeight,
    NotIDominant,
    multiplicity,
    parse_root_system,
    xi_basis,
)
from pjp.weylgroup import weyl_group
from pjp.laurent import LaurentPoly, NotDivisible, inner_k, orbit_sum, weyl_act
from pjp.parabolic import box, dominant_box
from pjp.polynomial import variables
from pjp.cherednik import (
    divided_difference,
    cherednik_apply,
    spectral,
    spectral_by_signs,
    spectral_by_definition,
    spectral_by_longest,
    e_poly,
    e_poly_gs,
    e_poly_both,
    poly_in_cherednik,
    apply_invariant,
    casimir_apply,
    casimir_expansion_apply,
    double_reflection_terms,
    joint_eigenvalues,
    is_eigenfunction,
    symmetrize,
)


def e(rs, *coords):
    return LaurentPoly.monomial(rs, Weight(coords))


def test_divided_difference():
    rs = parse_root_system("A1")

    assert divided_difference(rs, 0, e(rs, 1)) == e(rs, 1)
    assert divided_difference(rs, 0, e(rs, -1)) == -e(rs, 1)
    assert divided_difference(rs, 0, e(rs, 2)) == e(rs, 2) + 1
    assert divided_difference(rs, 0, LaurentPoly.constant(rs, 3)) == 0
    # symmetric polynomials are killed
    assert divided_difference(rs, 0, e(rs, 2) + e(rs, -2)) == 0

    with pytest.raises(NotDivisible):
        divided_difference(rs, 0, LaurentPoly.monomial(rs, Weight((1,), 2)))


def test_cherednik_operators():
    rs = parse_root_system("A1")
    (xi,) = xi_basis(rs)
    k = multiplicity(rs, 1)

    assert cherednik_apply(rs, xi, k, e(rs, 1)) == 2 * e(rs, 1)
    assert cherednik_apply(rs, xi, k, e(rs, -1)) == -2 * e(rs, -1) - 2 * e(rs, 1)
    assert cherednik_apply(rs, xi, k, LaurentPoly.constant(rs, 1)) == -1

    (x,) = variables(1)
    assert poly_in_cherednik(rs, x, [xi], k, e(rs, 1)) == cherednik_apply(rs, xi, k, e(rs, 1))
    # q(D)1 = ρ(k)(ξ)²
    assert poly_in_cherednik(rs, x ** 2, [xi], k, LaurentPoly.constant(rs, 1)) == 1


def test_cherednik_operators_commute():
    rs = parse_root_system("A2")
    k = multiplicity(rs, Fraction(2, 3))
    first, second = xi_basis(rs)
    f = e(rs, 1, -1) * 3 + e(rs, -2, 1) - e(rs, 0, 2) * Fraction(1, 2)

    assert cherednik_apply(rs, first, k, cherednik_apply(rs, second, k, f)) == cherednik_apply(
        rs, second, k, cherednik_apply(rs, first, k, f)
    )


def test_cherednik_operators_are_symmetric():
    rs = parse_root_system("A2")
    k = multiplicity(rs, 1)
    (xi, _) = xi_basis(rs)
    monomials = [LaurentPoly.monomial(rs, mu) for mu in box(rs, 1)]

    for f in monomials:
        image = cherednik_apply(rs, xi, k, f)
        for g in monomials:
            assert inner_k(image, g, k) == inner_k(f, cherednik_apply(rs, xi, k, g), k)


def test_spectral():
    rs = parse_root_system("A1")
    k = multiplicity(rs, 1)

    assert spectral(rs, Weight((1,)), k).value == RationalWeight((Fraction(2),))
    assert spectral(rs, Weight((-1,)), k).value == RationalWeight((Fraction(-2),))
    assert spectral(rs, Weight((0,)), k).value == RationalWeight((Fraction(-1),))
    assert spectral(rs, Weight((1,)), k)(xi_basis(rs)[0]) == 2

    a2 = parse_root_system("A2")
    half = multiplicity(a2, Fraction(1, 2))
    for weight in box(a2, 2):
        assert spectral_by_signs(a2, weight, half) == spectral_by_definition(a2, weight, half)
    for weight in dominant_box(a2, (1,), 2):
        assert spectral_by_longest(a2, (1,), weight, half) == spectral_by_definition(
            a2, weight, half
        )

    # λ = 0 gives −ρ(k)
    assert spectral(a2, Weight((0, 0)), half).value == RationalWeight(
        (Fraction(-1, 2), Fraction(-1, 2))
    )

    with pytest.raises(NotIDominant):
        spectral_by_longest(a2, (1,), Weight((0, -1)), half)


def test_e_poly_closed_forms():
    rs = parse_root_system("A1")

    for value in (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5, 3)):
        k = multiplicity(rs, value)
        ratio = value / (1 + value)
        assert e_poly(rs, Weight((-1,)), k) == e(rs, -1) + e(rs, 1) * ratio
        assert e_poly(rs, Weight((2,)), k) == e(rs, 2) + ratio
        assert e_poly(rs, Weight((1,)), k) == e(rs, 1)
        assert e_poly(rs, Weight((0,)), k) == 1

    assert e_poly(rs, Weight((-1,)), multiplicity(rs, 1)) == e(rs, -1) + e(rs, 1) * Fraction(1, 2)
    assert e_poly(rs, Weight((2,)), multiplicity(rs, 2)) == e(rs, 2) + Fraction(2, 3)


def test_e_poly_constructions_agree():
    for name in ("A1", "A2"):
        rs = parse_root_system(name)
        for value in (1, 2):
            k = multiplicity(rs, value)
            for weight in box(rs, 1):
                assert e_poly(rs, weight, k) == e_poly_gs(rs, weight, k)
                assert e_poly_both(rs, weight, k) == e_poly(rs, weight, k)


def test_e_poly_is_eigenfunction():
    rs = parse_root_system("A2")
    k = multiplicity(rs, Fraction(5, 3))

    for weight in box(rs, 1):
        f = e_poly(rs, weight, k)
        value = spectral(rs, weight, k)
        for xi in xi_basis(rs):
            assert cherednik_apply(rs, xi, k, f) == f * value(xi)


def test_e_polys_are_orthogonal():
    rs = parse_root_system("A2")
    k = multiplicity(rs, 1)
    weights = box(rs, 1)
    polys = [e_poly(rs, weight, k) for weight in weights]

    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            assert inner_k(polys[i], polys[j], k) == 0


def test_stabilizer_invariance():
    rs = parse_root_system("A2")
    k = multiplicity(rs, 2)

    s2 = weyl_group(rs).simple(1)

    # s2 fixes λ = (1, 0), so it fixes E(λ, k)
    f = e_poly(rs, Weight((1, 0)), k)
    assert weyl_act(s2, f) == f
    assert symmetrize(rs, (1,), Weight((1, 0)), f) == f

    g = e_poly(rs, Weight((-1, 1)), k)
    assert symmetrize(rs, (1,), Weight((-1, 1)), g) == g + weyl_act(s2, g)


def test_joint_eigenvalues():
    rs = parse_root_system("A1")
    k = multiplicity(rs, 1)
    (xi,) = xi_basis(rs)
    (x,) = variables(1)

    assert joint_eigenvalues(rs, Weight((2,)), k, [x, x ** 2], [xi]) == (3, 9)
    assert is_eigenfunction(rs, e_poly(rs, Weight((-1,)), k), Weight((-1,)), k, x, [xi])
    assert not is_eigenfunction(rs, e(rs, -1), Weight((-1,)), k, x, [xi])

    symmetric = e(rs, 2) + e(rs, -2) + 1
    assert apply_invariant(rs, (0,), x ** 2, [xi], k, symmetric) == symmetric * 9


def test_casimir_expansion():
    rs = parse_root_system("A2")
    for value in (Fraction(1, 2), Fraction(2)):
        k = multiplicity(rs, value)
        for weight in box(rs, 1):
            f = LaurentPoly.monomial(rs, weight)
            assert casimir_apply(rs, k, f) == casimir_expansion_apply(rs, k, f)


def test_reflection_terms_cancel():
    rs = parse_root_system("A2", 2)
    k = multiplicity(rs, 1)

    # W-invariants are killed by every Δ_β
    assert double_reflection_terms(rs, k, orbit_sum(rs, (0, 1), Weight((1, 1)))) == 0
    for weight in dominant_box(rs, (1,), 1):
        assert double_reflection_terms(rs, k, orbit_sum(rs, (1,), weight)) == 0
