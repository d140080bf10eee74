"""
Cherednik differential-reflection operators on ℂ[P] and the nonsymmetric Jacobi
polynomials E(λ, k) as their unitriangular joint eigenfunctions.
"""

from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache

from pjp.rootsys import (
    ComputationError,
    RootSystem,
    Weight,
    RationalWeight,
    Coweight,
    Multiplicity,
    InternalInconsistency,
    NotIDominant,
    coroot_pairing,
    inner,
    is_dominant,
    rho,
    root_coweight,
    simple_subset,
    xi_basis,
)
from pjp.weylgroup import (
    weyl_group,
    act,
    act_rational,
    canonical_elements,
)
from pjp.laurent import (
    LaurentPoly,
    NotDivisible,
    derivative,
    inner_k,
    is_invariant,
    sum_of,
    weyl_act,
)
from pjp.parabolic import lower_ideal, less
from pjp.polynomial import Polynomial
from pjp.matrixutil import solve

from typing import Dict, List, Optional, Sequence, Tuple, Iterable


class SpectralCollision(ComputationError):
    pass


@dataclass(frozen=True)
class SpectralVector:
    weight: Weight  # λ
    k: Multiplicity
    value: RationalWeight  # λ̃

    def __call__(self, xi: Coweight) -> Fraction:
        return xi(self.value)


def divided_difference(rs: RootSystem, index: int, f: LaurentPoly) -> LaurentPoly:
    """Return (1 − e^{−β})^{-1}(1 − s_β)f for the positive root β with the given index."""

    coroot = rs.coroot_coefficients[index]
    root = rs.positive_roots[index].doubled
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for key, c in f.terms.items():
        doubled_pairing = sum(a * d for a, d in zip(coroot, key))
        if doubled_pairing % 2 != 0:
            raise NotDivisible(
                f"(1 − s_β)e^λ is not divisible by 1 − e^{{−β}} for λ = {Weight.from_doubled(key).coords}"
            )
        m = doubled_pairing // 2
        if m > 0:
            # e^λ(1 + e^{−β} + ... + e^{−(m−1)β})
            steps = range(0, -m, -1)
            sign = 1
        elif m < 0:
            # −(e^{λ+β} + ... + e^{λ−mβ})
            steps = range(1, -m + 1)
            sign = -1
        else:
            continue
        for j in steps:
            target = tuple(a + j * b for a, b in zip(key, root))
            terms[target] = terms.get(target, Fraction(0)) + sign * c
    return LaurentPoly(rs, {key: c for key, c in terms.items() if c != 0})


def root_values(rs: RootSystem, xi: Coweight) -> List[Fraction]:
    """Return β(ξ) for every positive root β."""

    return [xi(root) for root in rs.positive_roots]


def cherednik_apply(
    rs: RootSystem, xi: Coweight, k: Multiplicity, f: LaurentPoly
) -> LaurentPoly:
    """Return D_ξ(k)f = ∂_ξ f + Σ_{β>0} k_β β(ξ)Δ_β f − ρ(k)(ξ)f."""

    result = derivative(f, xi) - f * xi(rho(rs, k))
    parts = [result]
    for index, value in enumerate(root_values(rs, xi)):
        factor = k.of_root(rs, index) * value
        if factor != 0:
            parts.append(divided_difference(rs, index, f) * factor)
    return sum_of(rs, parts)


def _epsilon(value: Fraction) -> int:
    return 1 if value > 0 else -1


def spectral_by_signs(rs: RootSystem, weight: Weight, k: Multiplicity) -> RationalWeight:
    """Return λ + ½ Σ_{β>0} k_β ε(⟨λ, β^∨⟩)β, with ε(0) = −1."""

    total = weight.rational()
    for index, root in enumerate(rs.positive_roots):
        sign = _epsilon(coroot_pairing(rs, weight, index))
        total = total + root.rational() * (k.of_root(rs, index) * sign / 2)
    return total


def spectral_by_definition(rs: RootSystem, weight: Weight, k: Multiplicity) -> RationalWeight:
    """Return λ − v(λ)^{-1}ρ(k)."""

    group = weyl_group(rs)
    v = canonical_elements(rs, simple_subset(rs, []), weight).v
    return weight.rational() - act_rational(group.inverse(v), rho(rs, k))


def spectral_by_longest(
    rs: RootSystem, subset: Iterable[int], weight: Weight, k: Multiplicity
) -> RationalWeight:
    """Return w₀^{I,λ}(λ − w₀^I v(w₀^I λ)^{-1}ρ(k)) for λ ∈ P_I⁺."""

    subset = simple_subset(rs, subset)
    if not is_dominant(rs, weight, subset):
        raise NotIDominant(f"{weight.coords} is not dominant for I={list(subset)}")
    group = weyl_group(rs)
    elements = canonical_elements(rs, subset, weight)
    longest = elements.longest_i
    v = canonical_elements(rs, simple_subset(rs, []), act(longest, weight)).v
    shifted = act_rational(group.multiply(longest, group.inverse(v)), rho(rs, k))
    return act_rational(elements.longest_stabilizer, weight.rational() - shifted)


@lru_cache(maxsize=None)
def spectral(
    rs: RootSystem, weight: Weight, k: Multiplicity, subset: Optional[Tuple[int, ...]] = None
) -> SpectralVector:
    """Return λ̃, checking that its closed forms agree."""

    value = spectral_by_definition(rs, weight, k)
    if spectral_by_signs(rs, weight, k) != value:
        raise InternalInconsistency(f"spectral formulas disagree at {weight.coords}")
    if subset is not None and is_dominant(rs, weight, subset):
        if spectral_by_longest(rs, subset, weight, k) != value:
            raise InternalInconsistency(
                f"spectral formula through w₀^I disagrees at {weight.coords}"
            )
    return SpectralVector(weight, k, value)


def _monomial(rs: RootSystem, weight: Weight) -> LaurentPoly:
    return LaurentPoly.monomial(rs, weight)


@lru_cache(maxsize=None)
def e_poly(rs: RootSystem, weight: Weight, k: Multiplicity) -> LaurentPoly:
    """Return E(λ, k), solved by back-substitution along the lower ≤_∅ ideal of λ.

    Raise `SpectralCollision` if some μ <_∅ λ cannot be told apart from λ by λ̃.
    """

    trivial = simple_subset(rs, [])
    ideal = lower_ideal(rs, trivial, weight)
    position = {mu: i for i, mu in enumerate(ideal)}
    xis = xi_basis(rs)
    target = spectral(rs, weight, k)

    # columns[ξ][ν] = D_ξ e^ν, restricted to the ideal
    columns: List[Dict[Weight, LaurentPoly]] = [{} for _ in xis]

    def column(i: int, nu: Weight) -> LaurentPoly:
        if nu not in columns[i]:
            image = cherednik_apply(rs, xis[i], k, _monomial(rs, nu))
            for mu, _ in image.items():
                if mu != nu and (mu not in position or not less(rs, mu, nu)):
                    raise InternalInconsistency(
                        f"D_ξ e^{nu.coords} leaves the span below it (found {mu.coords})"
                    )
            if image.coefficient(nu) != spectral(rs, nu, k)(xis[i]):
                raise InternalInconsistency(f"D_ξ is not triangular at {nu.coords}")
            columns[i][nu] = image
        return columns[i][nu]

    coefficients: Dict[Weight, Fraction] = {weight: Fraction(1)}
    for mu in reversed(ideal[:-1]):
        eigen = spectral(rs, mu, k)
        choice = next(
            (i for i, xi in enumerate(xis) if eigen(xi) != target(xi)), None
        )
        if choice is None:
            raise SpectralCollision(
                f"λ̃ of {mu.coords} and {weight.coords} coincide at k={list(map(str, k.values))}"
            )
        xi = xis[choice]
        total = Fraction(0)
        for nu, c in coefficients.items():
            total += c * column(choice, nu).coefficient(mu)
        value = -total / (eigen(xi) - target(xi))
        if value != 0:
            coefficients[mu] = value

    result = LaurentPoly.from_terms(rs, coefficients.items())
    for xi in xis:
        if cherednik_apply(rs, xi, k, result) != result * target(xi):
            raise InternalInconsistency(f"E({weight.coords}) is not an eigenfunction")
    return result


@lru_cache(maxsize=None)
def e_poly_gs(rs: RootSystem, weight: Weight, k: Multiplicity) -> LaurentPoly:
    """Return E(λ, k) for integer k as e^λ plus the lower terms orthogonal to every e^μ, μ <_∅ λ."""

    lower = lower_ideal(rs, simple_subset(rs, []), weight)[:-1]
    top = _monomial(rs, weight)
    basis = [_monomial(rs, mu) for mu in lower]
    gram = [[inner_k(a, b, k) for b in basis] for a in basis]
    rhs = [-inner_k(a, top, k) for a in basis]
    solution = solve(gram, rhs)
    return top + LaurentPoly.from_terms(rs, zip(lower, solution))


def e_poly_both(rs: RootSystem, weight: Weight, k: Multiplicity) -> LaurentPoly:
    result = e_poly(rs, weight, k)
    if e_poly_gs(rs, weight, k) != result:
        raise InternalInconsistency(f"constructions of E({weight.coords}) disagree")
    return result


def poly_in_cherednik(
    rs: RootSystem,
    q: Polynomial,
    xis: Sequence[Coweight],
    k: Multiplicity,
    f: LaurentPoly,
) -> LaurentPoly:
    """Return q(D)f, with the variable x_i standing for D_{ξ_i}(k)."""

    if len(xis) != q.nvars:
        raise ComputationError(f"{q.nvars} variables but {len(xis)} coweights")
    cache: Dict[Tuple[int, ...], LaurentPoly] = {(0,) * q.nvars: f}

    def power(exponent: Tuple[int, ...]) -> LaurentPoly:
        if exponent not in cache:
            i = next(i for i, e in enumerate(exponent) if e > 0)
            lower = tuple(e - 1 if j == i else e for j, e in enumerate(exponent))
            cache[exponent] = cherednik_apply(rs, xis[i], k, power(lower))
        return cache[exponent]

    return sum_of(rs, (power(e) * c for e, c in q.terms.items()))


def apply_invariant(
    rs: RootSystem,
    subset: Iterable[int],
    q: Polynomial,
    xis: Sequence[Coweight],
    k: Multiplicity,
    f: LaurentPoly,
) -> LaurentPoly:
    """Return D_{I,q}f for W_I-invariant f, checking the result stays W_I-invariant."""

    subset = simple_subset(rs, subset)
    result = poly_in_cherednik(rs, q, xis, k, f)
    if is_invariant(f, subset) and not is_invariant(result, subset):
        raise InternalInconsistency("q(D) does not preserve the W_I-invariants")
    return result


def casimir_polynomial(rs: RootSystem) -> Tuple[Polynomial, List[Coweight]]:
    """Return Ω = Σ g_ij ξ_iξ_j with Ω(λ) = (λ, λ), over the ξ-basis."""

    xis = xi_basis(rs)
    n = rs.rank
    terms = {}
    for i in range(n):
        for j in range(n):
            g = inner(rs, Weight.fundamental(n, i), Weight.fundamental(n, j)) / (
                rs.scale * rs.scale
            )
            e = tuple((1 if t == i else 0) + (1 if t == j else 0) for t in range(n))
            terms[e] = terms.get(e, Fraction(0)) + g
    return Polynomial(n, {e: c for e, c in terms.items() if c != 0}), xis


def casimir_apply(rs: RootSystem, k: Multiplicity, f: LaurentPoly) -> LaurentPoly:
    q, xis = casimir_polynomial(rs)
    return poly_in_cherednik(rs, q, xis, k, f)


def laplacian(rs: RootSystem, f: LaurentPoly) -> LaurentPoly:
    """Return L f, with L e^λ = (λ, λ)e^λ."""

    return LaurentPoly.from_terms(
        rs, ((mu, c * inner(rs, mu, mu)) for mu, c in f.items())
    )


def double_reflection_terms(rs: RootSystem, k: Multiplicity, f: LaurentPoly) -> LaurentPoly:
    """Return Σ_{β,γ>0} k_βk_γ(β, γ)(Δ_βΔ_γ − Δ_β)f."""

    roots = rs.positive_roots
    differences = [divided_difference(rs, j, f) for j in range(len(roots))]
    parts = []
    for b in range(len(roots)):
        for g in range(len(roots)):
            factor = k.of_root(rs, b) * k.of_root(rs, g) * inner(rs, roots[b], roots[g])
            if factor == 0:
                continue
            parts.append(
                (divided_difference(rs, b, differences[g]) - differences[b]) * factor
            )
    return sum_of(rs, parts)


def casimir_expansion_apply(rs: RootSystem, k: Multiplicity, f: LaurentPoly) -> LaurentPoly:
    """Return Ωf through its expansion into differential and reflection parts.

    L + Σ_β k_β(∂_{β'}Δ_β + Δ_β∂_{β'} − ∂_{β'}) + Σ_{β,γ} k_βk_γ(β,γ)(Δ_βΔ_γ − Δ_β) + (ρ, ρ)
    """

    parts = [laplacian(rs, f), double_reflection_terms(rs, k, f)]
    r = rho(rs, k)
    parts.append(f * inner(rs, r, r))
    for index, root in enumerate(rs.positive_roots):
        kb = k.of_root(rs, index)
        if kb == 0:
            continue
        dual = root_coweight(rs, root)
        d = derivative(f, dual)
        parts.append(derivative(divided_difference(rs, index, f), dual) * kb)
        parts.append(divided_difference(rs, index, d) * kb)
        parts.append(d * -kb)
    return sum_of(rs, parts)


def joint_eigenvalues(
    rs: RootSystem,
    weight: Weight,
    k: Multiplicity,
    generators: Sequence[Polynomial],
    xis: Sequence[Coweight],
) -> Tuple[Fraction, ...]:
    """Return (q(λ̃) for q in generators)."""

    value = spectral(rs, weight, k).value
    at = [xi(value) for xi in xis]
    return tuple(q.evaluate(at) for q in generators)


def is_eigenfunction(
    rs: RootSystem,
    f: LaurentPoly,
    weight: Weight,
    k: Multiplicity,
    q: Polynomial,
    xis: Sequence[Coweight],
) -> bool:
    (eigenvalue,) = joint_eigenvalues(rs, weight, k, [q], xis)
    return poly_in_cherednik(rs, q, xis, k, f) == f * eigenvalue


def symmetrize(rs: RootSystem, subset: Iterable[int], weight: Weight, f: LaurentPoly) -> LaurentPoly:
    """Return Σ_{w∈(W_I)^λ} wf."""

    subset = simple_subset(rs, subset)
    representatives = canonical_elements(rs, subset, weight).stabilizer_reps
    return sum_of(rs, (weyl_act(w, f) for w in representatives))
