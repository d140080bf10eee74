"""
Named verification suites. Every case is an exact check; a suite passes when all of
its cases do.
"""

import random

from fractions import Fraction
from dataclasses import dataclass
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from pjp.rootsys import (
    ComputationError,
    RootSystem,
    Weight,
    multiplicity,
    parse_root_system,
    full_subset,
)
from pjp.weylgroup import min_coset_reps
from pjp.laurent import LaurentPoly, inner_k, orbit_sum
from pjp.parabolic import (
    steinberg_generators,
    alt_steinberg,
    alt_cover_piece,
    figure_table,
    f_i,
    f_i_inverse,
    box,
    dominant_box,
)
from pjp.cherednik import (
    e_poly,
    e_poly_gs,
    spectral,
    casimir_apply,
    casimir_expansion_apply,
    double_reflection_terms,
)
from pjp.jacobi import (
    jacobi_sym,
    jacobi_gs,
    gram_matrix,
    invariant_generators,
    a2_generators,
    spectral_data,
)
from pjp.matrixutil import is_diagonal
from pjp.vectorize import (
    EXAMPLE_SUBSET,
    big_p,
    example_root_system,
    gamma,
    vec_inner,
    transport_holds,
    spherical_identities_hold,
    quoted_identities_hold,
    t_is_unimodular,
    t_image,
    spherical_vector,
    spherical_generators,
    expected_spherical_images,
    eigen_unique,
)
from pjp.mvop import (
    steinberg_matrix,
    steinberg_coords,
    to_chi,
    chi_substitute,
    mvop_matrix,
    mvop_inner,
    column,
    conjugated_apply,
)

from typing import List, Tuple, Dict, Callable, Sequence, Any

STEINBERG = "steinberg"
BIJECTION = "bijection"
EPOLY = "epoly"
JACOBI = "jacobi"
ORTHOGONALITY = "orthogonality"
SPECTRAL = "spectral"
OPERATORS = "operators"
UNITARITY = "unitarity"
MVOP = "mvop"
UNIQUENESS = "uniqueness"
ALL = "all"

SUITES = [
    STEINBERG,
    BIJECTION,
    EPOLY,
    JACOBI,
    ORTHOGONALITY,
    SPECTRAL,
    OPERATORS,
    UNITARITY,
    MVOP,
    UNIQUENESS,
]

DEFAULT_KSET = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5, 3))
DEFAULT_BOX = 3

# random multiplicities are drawn from (0, RANDOM_BOUND] with small denominators
RANDOM_COUNT = 2
RANDOM_BOUND = 3
RANDOM_DENOMINATORS = range(1, 7)

# (root system, subsets) pairs covered by the suites
SUBSETS = [("A1", ((), (0,))), ("A2", ((), (1,), (0, 1)))]

Outcome = Tuple[bool, str]


@dataclass(frozen=True)
class Case:
    suite: str
    name: str
    check: str  # key into CHECKS
    args: Tuple[Any, ...]


@dataclass(frozen=True)
class Result:
    case: Case
    passed: bool
    detail: str


def _subset_name(subset: Sequence[int]) -> str:
    if len(subset) == 0:
        return "I=none"
    return "I={" + ",".join(f"s{i + 1}" for i in subset) + "}"


def _k_name(k: Fraction) -> str:
    return f"k={k.numerator}" if k.denominator == 1 else f"k={k.numerator}/{k.denominator}"


def random_multiplicities(
    seed: int, count: int = RANDOM_COUNT, exclude: Sequence[Fraction] = ()
) -> Tuple[Fraction, ...]:
    """Return `count` distinct rationals in (0, 3], reproducibly for a given seed."""

    generator = random.Random(seed)
    drawn: List[Fraction] = []
    while len(drawn) < count:
        denominator = generator.choice(RANDOM_DENOMINATORS)
        k = Fraction(generator.randint(1, RANDOM_BOUND * denominator), denominator)
        if k not in drawn and k not in exclude:
            drawn.append(k)
    return tuple(drawn)


def with_random_multiplicities(
    kset: Sequence[Fraction], seed: int, count: int = RANDOM_COUNT
) -> Tuple[Fraction, ...]:
    return tuple(kset) + random_multiplicities(seed, count, exclude=kset)


def _terms(rs: RootSystem, *terms: Tuple[Tuple[int, ...], int]) -> LaurentPoly:
    return LaurentPoly.from_terms(rs, [(Weight(e), c) for e, c in terms])


def check_steinberg_example() -> Outcome:
    rs = parse_root_system("A2")
    expected = [
        _terms(rs, ((0, 0), 1)),
        _terms(rs, ((-1, 1), 1), ((0, -1), 1)),
        _terms(rs, ((-1, 0), 1)),
    ]
    found = [datum.generator for datum in steinberg_generators(rs, (1,))]
    if found != expected:
        return False, "generators differ from 1, e^(-w1+w2) + e^(-w2), e^(-w1)"
    return True, ""


def check_alt_example() -> Outcome:
    rs = parse_root_system("A2")
    expected = [
        _terms(rs, ((0, 0), 1)),
        _terms(rs, ((1, -1), 1), ((0, 1), 1)),
        _terms(rs, ((1, 0), 1)),
    ]
    found = [datum.generator for datum in alt_steinberg(rs, (1,))]
    if found != expected:
        return False, "alternative generators differ from 1, e^(w1-w2) + e^(w2), e^(w1)"
    return True, ""


def check_figure_table(name: str) -> Outcome:
    rs = parse_root_system(name)
    subsets = [(), (1,), full_subset(rs)] if rs.rank > 1 else [(), full_subset(rs)]
    rows = figure_table(rs, subsets)
    for n, subset in enumerate(subsets):
        marked = [row for row in rows if row.in_coset_reps[n]]
        if len(marked) != len(min_coset_reps(rs, subset)):
            return False, f"{_subset_name(subset)} marks {len(marked)} rows"
        labels = [datum.label for datum in steinberg_generators(rs, subset)]
        if [row.label for row in marked] != labels:
            return False, f"{_subset_name(subset)} rows disagree with the generators"
    return True, ""


def check_alt_cover(name: str, subset: Tuple[int, ...], radius: int) -> Outcome:
    rs = parse_root_system(name)
    for weight in dominant_box(rs, subset, radius):
        # raises unless exactly one piece holds the weight
        alt_cover_piece(rs, subset, weight)
    return True, ""


def check_bijection(name: str, subset: Tuple[int, ...], radius: int) -> Outcome:
    rs = parse_root_system(name)
    seen: Dict[Tuple[Any, Weight], Weight] = {}
    for weight in dominant_box(rs, subset, radius):
        v, sigma = f_i_inverse(rs, subset, weight)
        if f_i(rs, subset, v, sigma) != weight:
            return False, f"f_I(f_I^-1({weight.coords})) != {weight.coords}"
        if (v, sigma) in seen:
            return False, f"{seen[(v, sigma)].coords} and {weight.coords} share a preimage"
        seen[(v, sigma)] = weight
    return True, ""


def check_epoly(name: str, k: Fraction, radius: int) -> Outcome:
    rs = parse_root_system(name)
    mult = multiplicity(rs, k)
    for weight in _box(rs, radius):
        if e_poly(rs, weight, mult) != e_poly_gs(rs, weight, mult):
            return False, f"constructions of E({weight.coords}) disagree"
    return True, ""


def check_epoly_closed_forms(k: Fraction) -> Outcome:
    rs = parse_root_system("A1")
    mult = multiplicity(rs, k)
    ratio = k / (1 + k)
    first = _terms(rs, ((-1,), 1)) + _terms(rs, ((1,), 1)) * ratio
    if e_poly(rs, Weight((-1,)), mult) != first:
        return False, "E(-w) differs from e^(-w) + k/(1+k) e^(w)"
    second = _terms(rs, ((2,), 1)) + ratio
    if e_poly(rs, Weight((2,)), mult) != second:
        return False, "E(2w) differs from e^(2w) + k/(1+k)"
    return True, ""


def _box(rs: RootSystem, radius: int) -> List[Weight]:
    return dominant_box(rs, (), radius)


def check_jacobi(name: str, subset: Tuple[int, ...], k: Fraction, radius: int) -> Outcome:
    rs = parse_root_system(name)
    mult = multiplicity(rs, k)
    for weight in dominant_box(rs, subset, radius):
        if jacobi_sym(rs, subset, weight, mult).poly != jacobi_gs(rs, subset, weight, mult).poly:
            return False, f"constructions of p_I({weight.coords}) disagree"
    return True, ""


def check_orthogonality(name: str, subset: Tuple[int, ...], k: Fraction, radius: int) -> Outcome:
    rs = parse_root_system(name)
    labels = dominant_box(rs, subset, radius)
    gram = gram_matrix(rs, subset, multiplicity(rs, k), labels)
    if not is_diagonal(gram):
        return False, "Gram matrix has off-diagonal entries"
    for i, label in enumerate(labels):
        if gram[i][i] <= 0:
            return False, f"p_I({label.coords}) has non-positive norm"
    return True, ""


def check_spectral(name: str, subset: Tuple[int, ...], k: Fraction, radius: int) -> Outcome:
    rs = parse_root_system(name)
    mult = multiplicity(rs, k)
    generators, xis = invariant_generators(rs, subset)
    for weight in dominant_box(rs, subset, radius):
        # both raise InternalInconsistency on a mismatch
        spectral(rs, weight, mult, subset)
        spectral_data(rs, subset, weight, mult, generators, xis)
    return True, ""


def check_example_spectral(k: Fraction, radius: int) -> Outcome:
    rs = example_root_system()
    mult = multiplicity(rs, k)
    generators, xis = a2_generators(rs)
    for subset in ((), EXAMPLE_SUBSET):
        for weight in dominant_box(rs, subset, radius):
            spectral_data(rs, subset, weight, mult, generators, xis)
    return True, ""


def check_transport(k: Fraction, radius: int) -> Outcome:
    return transport_holds(k, radius)


def check_spherical(k: Fraction, radius: int) -> Outcome:
    return spherical_identities_hold(k, radius)


def check_quoted() -> Outcome:
    failed = [name for name, holds in quoted_identities_hold() if not holds]
    if len(failed) > 0:
        return False, "; ".join(failed)
    return True, ""


def check_t() -> Outcome:
    if not t_is_unimodular():
        return False, "T is not unimodular"
    return True, ""


def check_casimir(name: str, k: Fraction, radius: int) -> Outcome:
    rs = parse_root_system(name)
    mult = multiplicity(rs, k)
    for weight in box(rs, radius):
        f = LaurentPoly.monomial(rs, weight)
        if casimir_apply(rs, mult, f) != casimir_expansion_apply(rs, mult, f):
            return False, f"Casimir expansion differs on e^{weight.coords}"
    return True, ""


def check_reflection_cancellation(k: Fraction, radius: int) -> Outcome:
    rs = example_root_system()
    mult = multiplicity(rs, k)
    for weight in dominant_box(rs, EXAMPLE_SUBSET, radius):
        if not double_reflection_terms(rs, mult, orbit_sum(rs, EXAMPLE_SUBSET, weight)).is_zero:
            return False, f"reflection terms survive on m_I({weight.coords})"
    return True, ""


def check_unitarity(
    name: str, subset: Tuple[int, ...], k: Fraction, radius: int, seed: int
) -> Outcome:
    rs = parse_root_system(name)
    mult = multiplicity(rs, k)
    generator = random.Random(seed)
    basis = [orbit_sum(rs, subset, mu) for mu in dominant_box(rs, subset, radius)]
    size = len(min_coset_reps(rs, subset))
    for n in range(10):
        phi = _random_combination(rs, basis, generator)
        psi = _random_combination(rs, basis, generator)
        left = vec_inner(gamma(rs, subset, phi), gamma(rs, subset, psi), mult)
        if left != size * inner_k(phi, psi, mult):
            return False, f"pair {n + 1} breaks (Γφ, Γψ) = |W^I|(φ, ψ)"
    return True, ""


def _random_combination(
    rs: RootSystem, basis: Sequence[LaurentPoly], generator: random.Random
) -> LaurentPoly:
    result = LaurentPoly.zero(rs)
    for f in generator.sample(list(basis), min(3, len(basis))):
        result = result + f * Fraction(generator.randint(-5, 5), generator.randint(1, 4))
    return result


def check_spherical_generators() -> Outcome:
    for n, (psi, expected) in enumerate(zip(spherical_generators(), expected_spherical_images())):
        if t_image(psi) != expected:
            return False, f"T·Ψ{n + 1} differs from its displayed form"
        if spherical_vector(expected) != psi:
            return False, f"T^-1 does not carry the displayed form back to Ψ{n + 1}"
    return True, ""


def check_determinant(name: str, subset: Tuple[int, ...]) -> Outcome:
    # raises InternalInconsistency unless det Φ_I is ±∏(e^{β/2} − e^{−β/2})^{n_β}
    steinberg_matrix(parse_root_system(name), subset)
    return True, ""


def check_freeness(name: str, subset: Tuple[int, ...], count: int, radius: int, seed: int) -> Outcome:
    rs = parse_root_system(name)
    generator = random.Random(seed)
    basis = [orbit_sum(rs, subset, mu) for mu in dominant_box(rs, subset, radius)]
    matrix = steinberg_matrix(rs, subset)
    for n in range(count):
        phi = gamma(rs, subset, _random_combination(rs, basis, generator))
        if matrix.apply(steinberg_coords(phi)) != phi:
            return False, f"vector {n + 1} is not rebuilt from its Steinberg coordinates"
    return True, ""


def check_substitution(name: str, subset: Tuple[int, ...], k: Fraction, radius: int) -> Outcome:
    rs = parse_root_system(name)
    mult = multiplicity(rs, k)
    for weight in dominant_box(rs, subset, radius):
        for f in steinberg_coords(big_p(rs, subset, weight, mult)):
            if chi_substitute(rs, to_chi(f)) != f:
                return False, f"χ-rewrite of a coordinate of P_I({weight.coords}) is not exact"
    return True, ""


def check_mvop_orthogonality(name: str, subset: Tuple[int, ...], k: Fraction, radius: int) -> Outcome:
    rs = parse_root_system(name)
    mult = multiplicity(rs, k)
    columns = []
    for sigma in dominant_box(rs, full_subset(rs), radius):
        matrix = mvop_matrix(rs, subset, sigma, mult)
        columns.extend((sigma, v, column(matrix, v)) for v in range(len(matrix)))
    for (s, v, first), (t, w, second) in combinations(columns, 2):
        if mvop_inner(rs, subset, first, second, mult) != 0:
            return False, f"columns ({s.coords}, {v + 1}) and ({t.coords}, {w + 1}) are not orthogonal"
    for s, v, first in columns:
        if mvop_inner(rs, subset, first, first, mult) <= 0:
            return False, f"column ({s.coords}, {v + 1}) has non-positive norm"
    return True, ""


def check_mvop_eigen(name: str, subset: Tuple[int, ...], k: Fraction, radius: int) -> Outcome:
    rs = parse_root_system(name)
    mult = multiplicity(rs, k)
    generators, xis = invariant_generators(rs, subset)
    representatives = min_coset_reps(rs, subset)
    for sigma in dominant_box(rs, full_subset(rs), radius):
        matrix = mvop_matrix(rs, subset, sigma, mult)
        for v, u in enumerate(representatives):
            values = column(matrix, v)
            label = f_i(rs, subset, u, sigma)
            data = spectral_data(rs, subset, label, mult, generators, xis)
            for q, value in zip(generators, data.spectral):
                if conjugated_apply(rs, subset, q, xis, mult, values) != [p * value for p in values]:
                    return False, f"column ({sigma.coords}, {v + 1}) is not an eigenvector of {q}"
    return True, ""


def check_uniqueness(name: str, subset: Tuple[int, ...], k: Fraction, radius: int) -> Outcome:
    rs = parse_root_system(name)
    generators, xis = invariant_generators(rs, subset)
    labels = dominant_box(rs, subset, radius)
    return eigen_unique(rs, subset, labels, multiplicity(rs, k), generators, xis)


def check_example_uniqueness(k: Fraction, radius: int) -> Outcome:
    rs = example_root_system()
    generators, xis = a2_generators(rs)
    labels = dominant_box(rs, EXAMPLE_SUBSET, radius)
    return eigen_unique(rs, EXAMPLE_SUBSET, labels, multiplicity(rs, k), generators, xis)


CHECKS: Dict[str, Callable[..., Outcome]] = {
    f.__name__: f
    for f in (
        check_steinberg_example,
        check_alt_example,
        check_figure_table,
        check_alt_cover,
        check_bijection,
        check_epoly,
        check_epoly_closed_forms,
        check_jacobi,
        check_orthogonality,
        check_spectral,
        check_example_spectral,
        check_transport,
        check_spherical,
        check_quoted,
        check_t,
        check_casimir,
        check_reflection_cancellation,
        check_unitarity,
        check_spherical_generators,
        check_determinant,
        check_freeness,
        check_substitution,
        check_mvop_orthogonality,
        check_mvop_eigen,
        check_uniqueness,
        check_example_uniqueness,
    )
}


def cases(suite: str, kset: Sequence[Fraction] = DEFAULT_KSET, radius: int = DEFAULT_BOX) -> List[Case]:
    """Return the cases of a suite (or of every suite), in report order."""

    if suite == ALL:
        return [c for name in SUITES for c in cases(name, kset, radius)]
    if suite not in SUITES:
        raise ValueError(f"unknown suite: {suite}")
    integral = [k for k in kset if k.denominator == 1]
    found: List[Case] = []

    def add(name: str, check: str, *args: Any) -> None:
        found.append(Case(suite, name, check, args))

    for rs_name, subsets in SUBSETS:
        for subset in subsets:
            label = f"{rs_name} {_subset_name(subset)}"
            if suite == BIJECTION:
                add(label, "check_bijection", rs_name, subset, radius)
            elif suite == STEINBERG:
                add(f"{label} alternative cover", "check_alt_cover", rs_name, subset, radius)
            elif suite == MVOP:
                add(f"{label} determinant", "check_determinant", rs_name, subset)
                add(f"{label} freeness", "check_freeness", rs_name, subset, 200, radius, 7)
            for k in integral:
                if suite == JACOBI:
                    add(f"{label} {_k_name(k)}", "check_jacobi", rs_name, subset, k, radius)
                elif suite == ORTHOGONALITY:
                    add(f"{label} {_k_name(k)}", "check_orthogonality", rs_name, subset, k, radius)
                elif suite == UNITARITY:
                    add(f"{label} {_k_name(k)}", "check_unitarity", rs_name, subset, k, radius, 11)
                elif suite == MVOP:
                    add(f"{label} {_k_name(k)} substitution", "check_substitution", rs_name, subset, k, radius)
                    add(f"{label} {_k_name(k)} orthogonality", "check_mvop_orthogonality", rs_name, subset, k, radius)
                    add(f"{label} {_k_name(k)} eigenvectors", "check_mvop_eigen", rs_name, subset, k, radius)
            for k in kset:
                if suite == SPECTRAL:
                    add(f"{label} {_k_name(k)}", "check_spectral", rs_name, subset, k, radius)
                elif suite == UNIQUENESS:
                    add(f"{label} {_k_name(k)}", "check_uniqueness", rs_name, subset, k, radius)
        if suite == STEINBERG:
            add(f"{rs_name} table", "check_figure_table", rs_name)
        if suite == EPOLY:
            for k in integral:
                add(f"{rs_name} {_k_name(k)}", "check_epoly", rs_name, k, radius)
        if suite == OPERATORS:
            for k in kset:
                add(f"{rs_name} Casimir expansion {_k_name(k)}", "check_casimir", rs_name, k, radius)

    if suite == STEINBERG:
        add("A2 I={s2} generators", "check_steinberg_example")
        add("A2 I={s2} alternative generators", "check_alt_example")
    elif suite == EPOLY:
        for k in kset:
            add(f"A1 closed forms {_k_name(k)}", "check_epoly_closed_forms", k)
    elif suite == SPECTRAL:
        for k in kset:
            add(f"A2 example generators {_k_name(k)}", "check_example_spectral", k, radius)
    elif suite == OPERATORS:
        add("rational-function identities", "check_quoted")
        add("T unimodular", "check_t")
        for k in kset:
            add(f"example matrices {_k_name(k)}", "check_transport", k, radius)
            add(f"spherical identities {_k_name(k)}", "check_spherical", k, radius)
            add(f"reflection cancellation {_k_name(k)}", "check_reflection_cancellation", k, radius)
    elif suite == UNITARITY:
        add("spherical generators", "check_spherical_generators")
    elif suite == UNIQUENESS:
        for k in kset:
            add(f"A2 example generators {_k_name(k)}", "check_example_uniqueness", k, radius)
    return found


def run_case(case: Case) -> Result:
    try:
        passed, detail = CHECKS[case.check](*case.args)
    except ComputationError as e:
        passed, detail = False, f"{e.code}: {e.message}"
    return Result(case, passed, detail)


def run_cases(to_run: Sequence[Case], jobs: int = 1) -> List[Result]:
    """Return the result of every case, in case order."""

    if jobs > 1 and len(to_run) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run_case, to_run))
    return [run_case(case) for case in to_run]
