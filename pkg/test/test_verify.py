import pytest

from fractions import Fraction

from pjp.verify import (
    ALL,
    DEFAULT_KSET,
    CHECKS,
    OPERATORS,
    STEINBERG,
    SUITES,
    Case,
    MVOP,
    cases,
    random_multiplicities,
    with_random_multiplicities,
    run_case,
    run_cases,
    check_steinberg_example,
    check_alt_example,
    check_figure_table,
    check_bijection,
    check_epoly_closed_forms,
    check_quoted,
    check_t,
    check_determinant,
    check_uniqueness,
    check_unitarity,
    check_spherical_generators,
)


def test_cases():
    kset = (Fraction(1),)

    steinberg = cases(STEINBERG, kset, 1)
    assert len(steinberg) == 9
    assert "A2 I={s2} generators" in [c.name for c in steinberg]

    operators = [c.name for c in cases(OPERATORS, kset, 1)]
    assert "rational-function identities" in operators
    assert "T unimodular" in operators
    assert "example matrices k=1" in operators
    assert "A1 Casimir expansion k=1" in operators

    everything = cases(ALL, kset, 1)
    assert {c.suite for c in everything} == set(SUITES)
    assert all(c.check in CHECKS for c in everything)

    with pytest.raises(ValueError):
        cases("nope")


def test_cases_skip_fractional_k_where_needed():
    names = [c.name for c in cases("jacobi", (Fraction(1, 2), Fraction(2)), 1)]

    assert all("k=2" in name for name in names)


def test_examples():
    assert check_steinberg_example() == (True, "")
    assert check_alt_example() == (True, "")
    assert check_figure_table("A2") == (True, "")
    assert check_bijection("A2", (1,), 2) == (True, "")
    assert check_epoly_closed_forms(Fraction(5, 3)) == (True, "")
    assert check_quoted() == (True, "")
    assert check_t() == (True, "")
    assert check_spherical_generators() == (True, "")


def test_structural_checks():
    assert check_determinant("A2", (1,)) == (True, "")
    assert check_uniqueness("A1", (), Fraction(1), 2) == (True, "")
    assert check_unitarity("A2", (1,), Fraction(1), 1, 11) == (True, "")


def test_run_case():
    result = run_case(Case(STEINBERG, "example", "check_steinberg_example", ()))
    assert result.passed

    failed = run_case(Case(OPERATORS, "unsupported", "check_casimir", ("E6", Fraction(1), 1)))
    assert not failed.passed
    assert failed.detail.startswith("UnsupportedType: ")

    results = run_cases(cases(STEINBERG, (Fraction(1),), 1))
    assert [r.case for r in results] == cases(STEINBERG, (Fraction(1),), 1)
    assert all(r.passed for r in results)


def test_random_multiplicities():
    drawn = random_multiplicities(11)

    assert drawn == random_multiplicities(11)
    assert len(drawn) == 2
    assert len(set(drawn)) == 2
    assert all(0 < k <= 3 for k in drawn)
    assert random_multiplicities(11, 3, exclude=drawn)[0] not in drawn
    assert random_multiplicities(11, 0) == ()


def test_cases_cover_random_multiplicities():
    kset = with_random_multiplicities(DEFAULT_KSET, 5)
    assert kset[: len(DEFAULT_KSET)] == DEFAULT_KSET
    assert len(kset) == len(DEFAULT_KSET) + 2

    names = [c.name for c in cases("spectral", kset, 1)]
    for k in kset[len(DEFAULT_KSET):]:
        text = f"k={k.numerator}" if k.denominator == 1 else f"k={k.numerator}/{k.denominator}"
        assert any(name.endswith(text) for name in names)


def test_cases_use_the_whole_box():
    kset = (Fraction(1),)

    for case in cases(MVOP, kset, 4):
        if case.check == "check_freeness":
            assert case.args[3] == 4
        elif case.check != "check_determinant":
            assert case.args[-1] == 4
    for case in cases(OPERATORS, kset, 4):
        if len(case.args) > 0:
            assert case.args[-1] == 4
    assert all(case.args[-2] == 4 for case in cases("unitarity", kset, 4) if len(case.args) == 5)
