"""
Polynomials in the fundamental invariants χ₁, …, χ_n, the Steinberg matrix Φ_I and the
matrix-valued orthogonal polynomials built from it.
"""

from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache

from pjp.rootsys import (
    ComputationError,
    RootSystem,
    Weight,
    Coweight,
    Multiplicity,
    InternalInconsistency,
    full_subset,
    height,
    simple_subset,
)
from pjp.weylgroup import WeylElt, weyl_group, act, min_coset_reps, coset_permutation
from pjp.laurent import LaurentPoly, exact_div, is_invariant, orbit_sum, star, weyl_act
from pjp.parabolic import steinberg_generators, f_i
from pjp.polynomial import Polynomial, substitute
from pjp.vectorize import VectorPoly, big_p, induced_apply, vec_inner

from typing import List, Tuple, Sequence, Iterable

Grid = Tuple[Tuple[LaurentPoly, ...], ...]


class NotWInvariant(ComputationError):
    pass


@lru_cache(maxsize=None)
def fundamental_invariants(rs: RootSystem) -> Tuple[LaurentPoly, ...]:
    """Return χ_i = m_S(ϖ_i) for i = 1, …, n."""

    return tuple(orbit_sum(rs, full_subset(rs), w) for w in rs.fundamental_weights)


@lru_cache(maxsize=None)
def _chi_power(rs: RootSystem, exponent: Tuple[int, ...]) -> LaurentPoly:
    if sum(exponent) == 0:
        return LaurentPoly.constant(rs, 1)
    i = next(i for i, a in enumerate(exponent) if a > 0)
    lower = tuple(a - 1 if j == i else a for j, a in enumerate(exponent))
    return _chi_power(rs, lower) * fundamental_invariants(rs)[i]


def to_chi(f: LaurentPoly) -> Polynomial:
    """Return the polynomial P with P(χ₁, …, χ_n) = f.

    Repeatedly removes c·χ^μ where e^μ is a dominant exponent of greatest height.
    """

    rs = f.rs
    if not is_invariant(f, full_subset(rs)):
        raise NotWInvariant("polynomial is not W-invariant")
    result = Polynomial.zero(rs.rank)
    remainder = f
    while not remainder.is_zero:
        dominant = [mu for mu in remainder.exponents() if all(n >= 0 for n in mu.num)]
        top = max(dominant, key=lambda mu: (height(rs, mu), mu.sort_key()))
        if not top.is_integral:
            raise NotWInvariant(f"exponent {top.coords} is not in the weight lattice")
        exponent = tuple(int(c) for c in top.coords)
        c = remainder.coefficient(top)
        result = result + Polynomial.monomial(exponent, c)
        remainder = remainder - _chi_power(rs, exponent) * c
    return result


def chi_substitute(rs: RootSystem, p: Polynomial) -> LaurentPoly:
    """Return p(χ₁, …, χ_n)."""

    return substitute(p, fundamental_invariants(rs), LaurentPoly.constant(rs, 1))


@dataclass(frozen=True)
class SteinbergMatrix:
    """Represents Φ_I, whose v-th column is Γ(φ_v)."""

    rs: RootSystem
    subset: Tuple[int, ...]
    entries: Grid  # entries[u][v] = u(φ_v)
    determinant: LaurentPoly
    sign: int  # det Φ_I = sign·∏(e^{β/2} − e^{−β/2})^{n_β}

    @property
    def size(self) -> int:
        return len(self.entries)

    def column(self, v: int) -> VectorPoly:
        return VectorPoly(self.rs, self.subset, tuple(row[v] for row in self.entries))

    def apply(self, values: Sequence[LaurentPoly]) -> VectorPoly:
        """Return Φ_I·f for a vector f of W-invariants."""

        components = []
        for row in self.entries:
            total = LaurentPoly.zero(self.rs)
            for entry, f in zip(row, values):
                total = total + entry * f
            components.append(total)
        return VectorPoly(self.rs, self.subset, tuple(components))


def determinant(rows: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Return the determinant by fraction-free (Bareiss) elimination.

    The entries are Laurent polynomials with negative exponents, which sympy's `Poly`
    does not represent, so the elimination runs on `LaurentPoly` with `exact_div`.
    """

    matrix = [list(row) for row in rows]
    n = len(matrix)
    if n == 0:
        raise ComputationError("determinant of an empty matrix")
    rs = matrix[0][0].rs
    sign = 1
    previous = LaurentPoly.constant(rs, 1)
    for k in range(n - 1):
        if matrix[k][k].is_zero:
            pivot = next((i for i in range(k + 1, n) if not matrix[i][k].is_zero), None)
            if pivot is None:
                return LaurentPoly.zero(rs)
            matrix[k], matrix[pivot] = matrix[pivot], matrix[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                matrix[i][j] = exact_div(
                    matrix[i][j] * matrix[k][k] - matrix[i][k] * matrix[k][j], previous
                )
        previous = matrix[k][k]
    return matrix[n - 1][n - 1] * sign


def adjugate(rows: Sequence[Sequence[LaurentPoly]]) -> List[List[LaurentPoly]]:
    """Return the adjugate by cofactors, with every minor from `determinant`."""

    n = len(rows)
    rs = rows[0][0].rs
    if n == 1:
        return [[LaurentPoly.constant(rs, 1)]]
    result = [[LaurentPoly.zero(rs)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [rows[r][c] for c in range(n) if c != j] for r in range(n) if r != i
            ]
            cofactor = determinant(minor)
            result[j][i] = cofactor if (i + j) % 2 == 0 else -cofactor
    return result


def reflection_of(rs: RootSystem, root: Weight) -> WeylElt:
    """Return s_β for a root β, as w s_i w^{-1} with β = wα_i."""

    group = weyl_group(rs)
    for w in group.elements:
        for i, simple in enumerate(rs.simple_roots):
            if act(w, simple) == root:
                return group.multiply(group.multiply(w, group.simple(i)), group.inverse(w))
    raise ComputationError(f"{root.coords} is not a root of {rs.name}")


def pair_count(rs: RootSystem, subset: Iterable[int], root: Weight) -> int:
    """Return n_β, the number of pairs of cosets in W/W_I interchanged by s_β."""

    subset = simple_subset(rs, subset)
    permutation = coset_permutation(rs, reflection_of(rs, root), subset)
    return sum(1 for a, b in enumerate(permutation) if a != b) // 2


def expected_determinant(rs: RootSystem, subset: Iterable[int]) -> LaurentPoly:
    """Return ∏_{β>0}(e^{β/2} − e^{−β/2})^{n_β}."""

    subset = simple_subset(rs, subset)
    product = LaurentPoly.constant(rs, 1)
    for root in rs.positive_roots:
        half = root.halved()
        factor = LaurentPoly.monomial(rs, half) - LaurentPoly.monomial(rs, -half)
        product = product * factor ** pair_count(rs, subset, root)
    return product


@lru_cache(maxsize=None)
def steinberg_matrix(rs: RootSystem, subset: Tuple[int, ...]) -> SteinbergMatrix:
    subset = simple_subset(rs, subset)
    generators = [datum.generator for datum in steinberg_generators(rs, subset)]
    entries = tuple(
        tuple(weyl_act(u, phi) for phi in generators) for u in min_coset_reps(rs, subset)
    )
    value = determinant(entries)
    expected = expected_determinant(rs, subset)
    if value == expected:
        sign = 1
    elif value == -expected:
        sign = -1
    else:
        raise InternalInconsistency(
            f"det Φ_I for I={list(subset)} is not the product over pair counts"
        )
    return SteinbergMatrix(rs, subset, entries, value, sign)


@lru_cache(maxsize=None)
def _steinberg_adjugate(rs: RootSystem, subset: Tuple[int, ...]) -> Grid:
    return tuple(tuple(row) for row in adjugate(steinberg_matrix(rs, subset).entries))


def steinberg_coords(phi: VectorPoly) -> List[LaurentPoly]:
    """Return the W-invariants f_v with Φ = Σ_v f_v·Γ(φ_v).

    Raise `NotDivisible` if Φ is outside the free module spanned by the Γ(φ_v).
    """

    rs, subset = phi.rs, phi.subset
    matrix = steinberg_matrix(rs, subset)
    coords = []
    for row in _steinberg_adjugate(rs, subset):
        total = LaurentPoly.zero(rs)
        for entry, component in zip(row, phi.components):
            total = total + entry * component
        f = exact_div(total, matrix.determinant)
        if not is_invariant(f, full_subset(rs)):
            raise InternalInconsistency("a Steinberg coordinate is not W-invariant")
        coords.append(f)
    return coords


def script_p(rs: RootSystem, subset: Iterable[int], weight: Weight, k: Multiplicity) -> List[Polynomial]:
    """Return 𝒫_I(λ, k), the χ-coordinates of P_I(λ, k)."""

    return [to_chi(f) for f in steinberg_coords(big_p(rs, subset, weight, k))]


def weight_matrix(rs: RootSystem, subset: Iterable[int]) -> List[List[Polynomial]]:
    """Return 𝒲_I = Φ_I*Φ_I in χ-coordinates."""

    matrix = steinberg_matrix(rs, simple_subset(rs, subset))
    n = matrix.size
    rows = []
    for v in range(n):
        row = []
        for w in range(n):
            total = LaurentPoly.zero(rs)
            for u in range(n):
                total = total + star(matrix.entries[u][v]) * matrix.entries[u][w]
            row.append(to_chi(total))
        rows.append(row)
    return rows


def mvop_labels(rs: RootSystem, subset: Iterable[int], sigma: Weight) -> List[Weight]:
    """Return the labels f_I(v, σ) for v ∈ W^I, in the canonical order."""

    subset = simple_subset(rs, subset)
    return [f_i(rs, subset, v, sigma) for v in min_coset_reps(rs, subset)]


def mvop_matrix(
    rs: RootSystem, subset: Iterable[int], sigma: Weight, k: Multiplicity
) -> List[List[Polynomial]]:
    """Return ℳ_I(σ, k), whose v-th column is 𝒫_I(v^{-1}(λ_v + σ), k)."""

    subset = simple_subset(rs, subset)
    columns = [script_p(rs, subset, label, k) for label in mvop_labels(rs, subset, sigma)]
    return [[column[i] for column in columns] for i in range(len(columns))]


def column(matrix: Sequence[Sequence[Polynomial]], v: int) -> List[Polynomial]:
    return [row[v] for row in matrix]


def to_torus(rs: RootSystem, subset: Iterable[int], values: Sequence[Polynomial]) -> VectorPoly:
    """Return Φ_I·Q(χ)."""

    matrix = steinberg_matrix(rs, simple_subset(rs, subset))
    return matrix.apply([chi_substitute(rs, q) for q in values])


def mvop_inner(
    rs: RootSystem,
    subset: Iterable[int],
    first: Sequence[Polynomial],
    second: Sequence[Polynomial],
    k: Multiplicity,
) -> Fraction:
    """Return ⟨Q₁, Q₂⟩_{I,k}, evaluated on the torus as (Φ_I Q₁(χ), Φ_I Q₂(χ))_{I,k}."""

    return vec_inner(to_torus(rs, subset, first), to_torus(rs, subset, second), k)


def conjugated_apply(
    rs: RootSystem,
    subset: Iterable[int],
    q: Polynomial,
    xis: Sequence[Coweight],
    k: Multiplicity,
    values: Sequence[Polynomial],
) -> List[Polynomial]:
    """Return Φ_I^{-1}∘D_{I,q}∘Φ_I applied to a vector of χ-polynomials."""

    phi = to_torus(rs, subset, values)
    return [to_chi(f) for f in steinberg_coords(induced_apply(q, xis, k, phi))]
