"""
Parabolic Jacobi polynomials p_I(λ, k), built either by symmetrizing E(λ, k) or by
solving the orthogonality conditions against the lower basic invariants.
"""

from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from pjp.rootsys import (
    RootSystem,
    Weight,
    Coweight,
    Multiplicity,
    InternalInconsistency,
    NotIDominant,
    UnsupportedType,
    ambient_coweight,
    full_subset,
    is_dominant,
    simple_subset,
    xi_basis,
)
from pjp.laurent import LaurentPoly, NotInvariant, inner_k, orbit_sum
from pjp.parabolic import lower_ideal, less
from pjp.cherednik import (
    e_poly,
    symmetrize,
    joint_eigenvalues,
    poly_in_cherednik,
    casimir_polynomial,
)
from pjp.polynomial import Polynomial, variables
from pjp.matrixutil import solve

from typing import List, Tuple, Sequence, Dict, Optional, Iterable

SYMMETRIZED = "sym"
ORTHOGONALIZED = "gs"
BOTH = "both"

METHODS = [SYMMETRIZED, ORTHOGONALIZED, BOTH]


@dataclass(frozen=True)
class JacobiPoly:
    label: Weight
    subset: Tuple[int, ...]
    k: Multiplicity
    poly: LaurentPoly
    expansion: Tuple[Tuple[Weight, Fraction], ...]  # c_{λ,μ} over m_I(μ), λ first
    spectral: Tuple[Fraction, ...] = ()  # q(λ̃) for the generators in use


def expand_in_orbit_sums(
    rs: RootSystem, subset: Iterable[int], f: LaurentPoly
) -> List[Tuple[Weight, Fraction]]:
    """Return the coefficients of f over the basic invariants m_I(μ), by descending μ."""

    subset = simple_subset(rs, subset)
    expansion = [(mu, c) for mu, c in f.items() if is_dominant(rs, mu, subset)]
    rebuilt = LaurentPoly.zero(rs)
    for mu, c in expansion:
        rebuilt = rebuilt + orbit_sum(rs, subset, mu) * c
    if rebuilt != f:
        raise NotInvariant("polynomial is not W_I-invariant")
    return expansion


def _checked(
    rs: RootSystem, subset: Tuple[int, ...], weight: Weight, k: Multiplicity, poly: LaurentPoly
) -> JacobiPoly:
    expansion = expand_in_orbit_sums(rs, subset, poly)
    leading = dict(expansion).get(weight)
    if leading != 1:
        raise InternalInconsistency(f"p_I({weight.coords}) has leading coefficient {leading}")
    for mu, _ in expansion:
        if mu != weight and not less(rs, mu, weight):
            raise InternalInconsistency(
                f"p_I({weight.coords}) has a term m_I({mu.coords}) outside its lower ideal"
            )
    ordered = [(weight, Fraction(1))] + [(mu, c) for mu, c in expansion if mu != weight]
    return JacobiPoly(weight, subset, k, poly, tuple(ordered))


def _check_label(rs: RootSystem, subset: Tuple[int, ...], weight: Weight) -> None:
    if not is_dominant(rs, weight, subset):
        raise NotIDominant(f"{weight.coords} is not dominant for I={list(subset)}")


@lru_cache(maxsize=None)
def jacobi_sym(rs: RootSystem, subset: Tuple[int, ...], weight: Weight, k: Multiplicity) -> JacobiPoly:
    """Return p_I(λ, k) = Σ_{w∈(W_I)^λ} wE(λ, k)."""

    subset = simple_subset(rs, subset)
    _check_label(rs, subset, weight)
    poly = symmetrize(rs, subset, weight, e_poly(rs, weight, k))
    return _checked(rs, subset, weight, k, poly)


@lru_cache(maxsize=None)
def jacobi_gs(rs: RootSystem, subset: Tuple[int, ...], weight: Weight, k: Multiplicity) -> JacobiPoly:
    """Return p_I(λ, k) for integer k from (p, m_I(μ))_k = 0 for all μ <_I λ."""

    subset = simple_subset(rs, subset)
    _check_label(rs, subset, weight)
    lower = lower_ideal(rs, subset, weight)[:-1]
    top = orbit_sum(rs, subset, weight)
    basis = [orbit_sum(rs, subset, mu) for mu in lower]
    gram = [[inner_k(a, b, k) for b in basis] for a in basis]
    rhs = [-inner_k(a, top, k) for a in basis]
    poly = top
    for f, c in zip(basis, solve(gram, rhs)):
        poly = poly + f * c
    return _checked(rs, subset, weight, k, poly)


def jacobi(
    rs: RootSystem,
    subset: Iterable[int],
    weight: Weight,
    k: Multiplicity,
    method: str = SYMMETRIZED,
) -> JacobiPoly:
    subset = simple_subset(rs, subset)
    if method == SYMMETRIZED:
        return jacobi_sym(rs, subset, weight, k)
    if method == ORTHOGONALIZED:
        return jacobi_gs(rs, subset, weight, k)
    if method == BOTH:
        result = jacobi_sym(rs, subset, weight, k)
        if jacobi_gs(rs, subset, weight, k).poly != result.poly:
            raise InternalInconsistency(f"constructions of p_I({weight.coords}) disagree")
        return result
    raise ValueError(f"unknown method: {method}")


def gram_matrix(
    rs: RootSystem,
    subset: Iterable[int],
    k: Multiplicity,
    labels: Sequence[Weight],
    method: str = SYMMETRIZED,
) -> List[List[Fraction]]:
    """Return the matrix of (p_I(λ, k), p_I(μ, k))_k over the labels."""

    polys = [jacobi(rs, subset, label, k, method).poly for label in labels]
    return [[inner_k(a, b, k) for b in polys] for a in polys]


def invariant_generators(
    rs: RootSystem, subset: Iterable[int]
) -> Tuple[List[Polynomial], List[Coweight]]:
    """Return generators of S(𝔥)^{W_I} as polynomials over a list of coweights.

    For type A the coweights are the ambient coordinate functionals ξ_1, …, ξ_{n+1}
    and the generators are power sums inside each block of W_I; for other types only
    the trivial subgroup (the ξ-basis itself) and the full group (through the
    Casimir element) are covered.
    """

    subset = simple_subset(rs, subset)
    if rs.family != "A":
        if len(subset) == 0:
            return list(variables(rs.rank)), xi_basis(rs)
        if subset == full_subset(rs) and rs.rank == 1:
            q, xis = casimir_polynomial(rs)
            return [q], xis
        raise UnsupportedType(
            f"invariant generators are only tabulated for type A (got {rs.name})"
        )
    n = rs.rank + 1
    xis = [
        ambient_coweight(rs, [1 if j == i else 0 for j in range(n)]) for i in range(n)
    ]
    x = variables(n)
    blocks: List[List[int]] = [[0]]
    for i in range(rs.rank):
        if i in subset:
            blocks[-1].append(i + 1)
        else:
            blocks.append([i + 1])
    generators = []
    for b, block in enumerate(blocks):
        for degree in range(1, len(block) + 1):
            # the ambient coordinates sum to zero, so the last block's linear
            # power sum is redundant
            if degree == 1 and b == len(blocks) - 1:
                continue
            power_sum = Polynomial.zero(n)
            for i in block:
                power_sum = power_sum + x[i] ** degree
            generators.append(power_sum)
    return generators, xis


def a2_generators(rs: RootSystem) -> Tuple[List[Polynomial], List[Coweight]]:
    """Return ξ₁ and ξ₁ξ₂ + ξ₁ξ₃ + ξ₂ξ₃ over the ambient coweights of A₂."""

    if rs.name != "A2":
        raise UnsupportedType(f"expected A2 (got {rs.name})")
    xis = [ambient_coweight(rs, [1 if j == i else 0 for j in range(3)]) for i in range(3)]
    x1, x2, x3 = variables(3)
    return [x1, x1 * x2 + x1 * x3 + x2 * x3], xis


def spectral_data(
    rs: RootSystem,
    subset: Iterable[int],
    weight: Weight,
    k: Multiplicity,
    generators: Optional[Sequence[Polynomial]] = None,
    xis: Optional[Sequence[Coweight]] = None,
) -> JacobiPoly:
    """Return p_I(λ, k) with q(λ̃) recorded for each generator.

    Every generator is checked to act on p_I(λ, k) by its value at λ̃.
    """

    subset = simple_subset(rs, subset)
    if generators is None or xis is None:
        generators, xis = invariant_generators(rs, subset)
    p = jacobi_sym(rs, subset, weight, k)
    values = joint_eigenvalues(rs, weight, k, generators, xis)
    for q, value in zip(generators, values):
        if poly_in_cherednik(rs, q, xis, k, p.poly) != p.poly * value:
            raise InternalInconsistency(f"p_I({weight.coords}) is not an eigenfunction of {q}")
    return JacobiPoly(p.label, p.subset, p.k, p.poly, p.expansion, values)


def joint_spectrum(
    rs: RootSystem,
    k: Multiplicity,
    labels: Sequence[Weight],
    generators: Sequence[Polynomial],
    xis: Sequence[Coweight],
) -> Dict[Weight, Tuple[Fraction, ...]]:
    return {label: joint_eigenvalues(rs, label, k, generators, xis) for label in labels}


def collisions(spectrum: Dict[Weight, Tuple[Fraction, ...]]) -> List[Tuple[Weight, Weight]]:
    """Return the pairs of labels whose joint eigenvalues coincide."""

    seen: Dict[Tuple[Fraction, ...], Weight] = {}
    found = []
    for label, values in spectrum.items():
        if values in seen:
            found.append((seen[values], label))
        else:
            seen[values] = label
    return found


def separation_witness(
    spectrum: Dict[Weight, Tuple[Fraction, ...]]
) -> Optional[Tuple[Weight, Weight]]:
    """Return two labels that agree on the first generator but not on all of them."""

    for (a, x), (b, y) in combinations(spectrum.items(), 2):
        if x[0] == y[0] and x != y:
            return a, b
    return None
