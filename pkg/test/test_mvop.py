import pytest

from fractions import Fraction

from pjp.rootsys import ComputationError, Weight, multiplicity, parse_root_system
from pjp.laurent import LaurentPoly, orbit_sum
from pjp.parabolic import dominant_box
from pjp.polynomial import variables
from pjp.jacobi import invariant_generators
from pjp.vectorize import gamma
from pjp.mvop import (
    NotWInvariant,
    fundamental_invariants,
    to_chi,
    chi_substitute,
    determinant,
    adjugate,
    pair_count,
    expected_determinant,
    steinberg_matrix,
    steinberg_coords,
    script_p,
    weight_matrix,
    mvop_labels,
    mvop_matrix,
    mvop_inner,
    column,
    conjugated_apply,
)


def e(rs, *coords):
    return LaurentPoly.monomial(rs, Weight(coords))


def test_to_chi():
    rs = parse_root_system("A2")
    x1, x2 = variables(2)

    assert to_chi(orbit_sum(rs, (0, 1), Weight((1, 1)))) == x1 * x2 - 3
    assert to_chi(LaurentPoly.constant(rs, 4)) == 4
    chi1, chi2 = fundamental_invariants(rs)
    assert to_chi(chi1 * chi1 - chi2 * 2) == x1 ** 2 - 2 * x2

    with pytest.raises(NotWInvariant):
        to_chi(e(rs, 1, 0))


def test_chi_substitute():
    rs = parse_root_system("A2")
    x1, x2 = variables(2)

    assert chi_substitute(rs, x1 * x2 - 3) == orbit_sum(rs, (0, 1), Weight((1, 1)))

    b2 = parse_root_system("B2")
    p = x1 ** 2 + x2 * Fraction(1, 2) - 1
    assert to_chi(chi_substitute(b2, p)) == p


def test_determinant():
    rs = parse_root_system("A1")
    a, b = e(rs, 1), e(rs, -1)
    one = LaurentPoly.constant(rs, 1)
    zero = LaurentPoly.zero(rs)

    assert determinant([[one, b], [one, a]]) == a - b
    assert determinant([[zero, one], [one, zero]]) == -1
    assert determinant([[one, a], [one, a]]) == 0
    assert adjugate([[one, b], [one, a]]) == [[a, -b], [-one, one]]

    with pytest.raises(ComputationError):
        determinant([])


def test_steinberg_matrix():
    rs = parse_root_system("A1")
    one = LaurentPoly.constant(rs, 1)

    matrix = steinberg_matrix(rs, ())
    assert matrix.entries == ((one, e(rs, -1)), (one, e(rs, 1)))
    assert matrix.determinant == e(rs, 1) - e(rs, -1)
    assert matrix.sign == 1
    assert matrix.size == 2
    assert matrix.column(1).components == (e(rs, -1), e(rs, 1))

    assert steinberg_matrix(rs, (0,)).entries == ((one,),)


def test_pair_count():
    a1 = parse_root_system("A1")
    (alpha,) = a1.positive_roots

    assert pair_count(a1, (), alpha) == 1
    assert pair_count(a1, (0,), alpha) == 0

    # every reflection of A2 swaps two of the three cosets of W_{s2}
    a2 = parse_root_system("A2")
    for root in a2.positive_roots:
        assert pair_count(a2, (1,), root) == 1
    assert expected_determinant(a2, (1,)) == steinberg_matrix(a2, (1,)).determinant * (
        steinberg_matrix(a2, (1,)).sign
    )


def test_steinberg_coords():
    rs = parse_root_system("A2")

    for subset in ((), (1,)):
        matrix = steinberg_matrix(rs, subset)
        for weight in dominant_box(rs, subset, 1):
            phi = gamma(rs, subset, orbit_sum(rs, subset, weight))
            assert matrix.apply(steinberg_coords(phi)) == phi


def test_weight_matrix():
    rs = parse_root_system("A1")
    (x1,) = variables(1)

    assert weight_matrix(rs, ()) == [[2, x1], [x1, 2]]
    assert weight_matrix(rs, (0,)) == [[1]]


def test_script_p():
    rs = parse_root_system("A1")
    (x1,) = variables(1)

    for value in (Fraction(1, 2), Fraction(1), Fraction(2)):
        c = value / (1 + value)
        assert script_p(rs, (), Weight((-1,)), multiplicity(rs, value)) == [x1 * c, 1 - c]


def test_mvop_matrix():
    rs = parse_root_system("A1")
    k = multiplicity(rs, 1)
    (x1,) = variables(1)

    assert mvop_labels(rs, (), Weight((0,))) == [Weight((0,)), Weight((-1,))]
    assert mvop_labels(rs, (), Weight((1,))) == [Weight((1,)), Weight((-2,))]

    matrix = mvop_matrix(rs, (), Weight((0,)), k)
    half = Fraction(1, 2)
    assert matrix == [[1, x1 * half], [0, half]]
    assert column(matrix, 1) == [x1 * half, half]


def test_mvop_inner():
    rs = parse_root_system("A1")
    k = multiplicity(rs, 1)

    columns = []
    for sigma in (Weight((0,)), Weight((1,))):
        matrix = mvop_matrix(rs, (), sigma, k)
        columns.extend(column(matrix, v) for v in range(2))

    assert mvop_inner(rs, (), columns[0], columns[0], k) == 4
    for i in range(len(columns)):
        for j in range(i + 1, len(columns)):
            assert mvop_inner(rs, (), columns[i], columns[j], k) == 0


def test_conjugated_apply():
    rs = parse_root_system("A1")
    k = multiplicity(rs, 1)
    generators, xis = invariant_generators(rs, ())

    values = column(mvop_matrix(rs, (), Weight((0,)), k), 1)
    # the label −ϖ has spectral vector −2ϖ, so ξ₁ acts by −1
    assert conjugated_apply(rs, (), generators[0], xis, k, values) == [-p for p in values]
