"""
Vector-valued Laurent polynomials indexed by W/W_I, and matrix differential
operators with rational-function coefficients acting on them.

The worked A₂ example lives on the root system 2Σ (A2 at scale 2) with I = {s2}.
Its Σ-roots α₁₂, α₁₃, α₂₃ are half of the roots of 2Σ; the coweights ξ₁, ξ₂, ξ₃ are
the ambient coordinate functionals ⅓(2,−1,−1), ⅓(−1,2,−1), ⅓(−1,−1,2).
"""

from fractions import Fraction
from dataclasses import dataclass, replace
from functools import lru_cache
from math import comb

from pjp.rootsys import (
    ComputationError,
    RootSystem,
    Weight,
    Coweight,
    Multiplicity,
    InternalInconsistency,
    ambient_coweight,
    build_root_system,
    check_same,
    simple_subset,
)
from pjp.weylgroup import min_coset_reps
from pjp.laurent import (
    LaurentPoly,
    NotDivisible,
    NotInvariant,
    derivative,
    exact_div,
    inner_k,
    is_invariant,
    orbit_sum,
    sum_of,
    weyl_act,
)
from pjp.cherednik import poly_in_cherednik
from pjp.jacobi import jacobi_sym, a2_generators, joint_spectrum, collisions
from pjp.parabolic import dominant_box
from pjp.polynomial import Polynomial

from typing import List, Tuple, Sequence, Dict, Union, Iterable, Optional

Scalar = Union[int, Fraction]

EXAMPLE_SUBSET = (1,)  # I = {s2}

OPERATOR_NAMES = ["M1", "M2", "D1", "D2", "T"]


@dataclass(frozen=True)
class VectorPoly:
    rs: RootSystem
    subset: Tuple[int, ...]
    components: Tuple[LaurentPoly, ...]  # in the canonical W^I order

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> LaurentPoly:
        return self.components[i]

    def _check(self, other: "VectorPoly") -> None:
        check_same(self.rs, other.rs)
        if self.subset != other.subset:
            raise ComputationError("vector polynomials over different W^I do not mix")

    def __add__(self, other: "VectorPoly") -> "VectorPoly":
        self._check(other)
        return replace(
            self, components=tuple(a + b for a, b in zip(self.components, other.components))
        )

    def __sub__(self, other: "VectorPoly") -> "VectorPoly":
        self._check(other)
        return replace(
            self, components=tuple(a - b for a, b in zip(self.components, other.components))
        )

    def __mul__(self, factor: Union[Scalar, LaurentPoly]) -> "VectorPoly":
        return replace(self, components=tuple(a * factor for a in self.components))

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.components)


def vector(rs: RootSystem, subset: Iterable[int], components: Sequence[LaurentPoly]) -> VectorPoly:
    subset = simple_subset(rs, subset)
    if len(components) != len(min_coset_reps(rs, subset)):
        raise ComputationError(
            f"expected {len(min_coset_reps(rs, subset))} components (got {len(components)})"
        )
    return VectorPoly(rs, subset, tuple(components))


def gamma(rs: RootSystem, subset: Iterable[int], f: LaurentPoly) -> VectorPoly:
    """Return Γ(φ), whose u-component is uφ for u ∈ W^I."""

    subset = simple_subset(rs, subset)
    if not is_invariant(f, subset):
        raise NotInvariant("Γ is only defined on W_I-invariant polynomials")
    return VectorPoly(
        rs, subset, tuple(weyl_act(u, f) for u in min_coset_reps(rs, subset))
    )


def gamma_inverse(phi: VectorPoly) -> LaurentPoly:
    """Return the e-component of a W-invariant vector polynomial."""

    first = phi.components[0]
    if gamma(phi.rs, phi.subset, first) != phi:
        raise NotInvariant("vector polynomial is not W-invariant")
    return first


def vec_inner(phi: VectorPoly, psi: VectorPoly, k: Multiplicity) -> Fraction:
    """Return (Φ, Ψ)_{I,k} = Σ_u (Φ_u, Ψ_u)_k."""

    phi._check(psi)
    return sum(
        (inner_k(a, b, k) for a, b in zip(phi.components, psi.components)), Fraction(0)
    )


def big_p(rs: RootSystem, subset: Iterable[int], weight: Weight, k: Multiplicity) -> VectorPoly:
    """Return P_I(λ, k) = Γ(p_I(λ, k))."""

    subset = simple_subset(rs, subset)
    return gamma(rs, subset, jacobi_sym(rs, subset, weight, k).poly)


def induced_apply(
    q: Polynomial, xis: Sequence[Coweight], k: Multiplicity, phi: VectorPoly
) -> VectorPoly:
    """Return β(γ(D_{I,q}))Φ, computed as Γ(q(D)Γ^{-1}Φ)."""

    f = gamma_inverse(phi)
    return gamma(phi.rs, phi.subset, poly_in_cherednik(phi.rs, q, xis, k, f))


@dataclass(frozen=True, eq=False)
class RationalFunction:
    """Represents a quotient of Laurent polynomials (never reduced automatically)."""

    num: LaurentPoly
    den: LaurentPoly

    @staticmethod
    def of(value: Union[LaurentPoly, Scalar], rs: Optional[RootSystem] = None) -> "RationalFunction":
        if isinstance(value, LaurentPoly):
            return RationalFunction(value, LaurentPoly.constant(value.rs, 1))
        if rs is None:
            raise ComputationError("a constant rational function needs a root system")
        return RationalFunction(
            LaurentPoly.constant(rs, value), LaurentPoly.constant(rs, 1)
        )

    @property
    def rs(self) -> RootSystem:
        return self.num.rs

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _coerce(self, other: Union["RationalFunction", LaurentPoly, Scalar]) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction.of(other, self.rs)

    def __add__(self, other: Union["RationalFunction", LaurentPoly, Scalar]) -> "RationalFunction":
        other = self._coerce(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: Union["RationalFunction", LaurentPoly, Scalar]) -> "RationalFunction":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Union[LaurentPoly, Scalar]) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other: Union["RationalFunction", LaurentPoly, Scalar]) -> "RationalFunction":
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["RationalFunction", LaurentPoly, Scalar]) -> "RationalFunction":
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by a zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = self._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def as_laurent(self) -> LaurentPoly:
        return exact_div(self.num, self.den)


@dataclass(frozen=True)
class OpTerm:
    row: int
    col: int
    coefficient: RationalFunction
    derivative: Tuple[int, ...]  # multi-index over the operator's coweights


@dataclass(frozen=True)
class MatrixRatOp:
    """Represents Σ c(t)·∂^a acting from component `col` into component `row`."""

    rs: RootSystem
    size: int
    xis: Tuple[Coweight, ...]
    terms: Tuple[OpTerm, ...]

    def _check(self, other: "MatrixRatOp") -> None:
        check_same(self.rs, other.rs)
        if self.size != other.size or self.xis != other.xis:
            raise ComputationError("matrix operators of different shapes do not mix")

    def __add__(self, other: "MatrixRatOp") -> "MatrixRatOp":
        self._check(other)
        return replace(self, terms=self.terms + other.terms)

    def __neg__(self) -> "MatrixRatOp":
        return self.scaled(-1)

    def __sub__(self, other: "MatrixRatOp") -> "MatrixRatOp":
        return self + (-other)

    def scaled(self, factor: Scalar) -> "MatrixRatOp":
        return replace(
            self,
            terms=tuple(replace(t, coefficient=t.coefficient * factor) for t in self.terms),
        )

    def shifted(self, value: Scalar) -> "MatrixRatOp":
        """Return M + value·Id."""

        none = (0,) * len(self.xis)
        extra = tuple(
            OpTerm(i, i, RationalFunction.of(value, self.rs), none) for i in range(self.size)
        )
        return replace(self, terms=self.terms + extra)

    @property
    def is_order_zero(self) -> bool:
        return all(sum(t.derivative) == 0 for t in self.terms)

    def entries(self) -> List[List[RationalFunction]]:
        """Return the coefficient matrix of an order-zero operator."""

        if not self.is_order_zero:
            raise ComputationError("only order-zero operators have a coefficient matrix")
        zero = RationalFunction.of(0, self.rs)
        matrix = [[zero for _ in range(self.size)] for _ in range(self.size)]
        for t in self.terms:
            matrix[t.row][t.col] = matrix[t.row][t.col] + t.coefficient
        return matrix

    def conjugated(self, exponents: Sequence[Weight]) -> "MatrixRatOp":
        """Return the operator with entries e^{−w_i}∘M_ij∘e^{w_j}.

        Uses ∂_ξ∘e^{w} = e^{w}∘(∂_ξ + w(ξ)), expanded binomially on every multi-index.
        """

        if len(exponents) != self.size:
            raise ComputationError(f"expected {self.size} exponents (got {len(exponents)})")
        terms = []
        for t in self.terms:
            shift = exponents[t.col] - exponents[t.row]
            coefficient = t.coefficient * LaurentPoly.monomial(self.rs, shift)
            values = [xi(exponents[t.col]) for xi in self.xis]
            for lower, factor in _binomial_expansion(t.derivative, values):
                if factor != 0:
                    terms.append(OpTerm(t.row, t.col, coefficient * factor, lower))
        return replace(self, terms=tuple(terms))


def _binomial_expansion(
    multi_index: Tuple[int, ...], values: Sequence[Fraction]
) -> List[Tuple[Tuple[int, ...], Fraction]]:
    """Expand ∏_l (∂_l + c_l)^{a_l} into Σ_b factor_b·∂^b."""

    expansion: List[Tuple[Tuple[int, ...], Fraction]] = [((), Fraction(1))]
    for a, c in zip(multi_index, values):
        expansion = [
            (b + (j,), factor * comb(a, j) * c ** (a - j))
            for b, factor in expansion
            for j in range(a + 1)
        ]
    return expansion


def _apply_derivative(
    f: LaurentPoly, multi_index: Tuple[int, ...], xis: Sequence[Coweight]
) -> LaurentPoly:
    for a, xi in zip(multi_index, xis):
        for _ in range(a):
            f = derivative(f, xi)
    return f


def matrix_op_apply(op: MatrixRatOp, phi: VectorPoly) -> VectorPoly:
    """Return MΦ with exact Laurent components.

    Raise `NotDivisible` if some component is not a Laurent polynomial.
    """

    check_same(op.rs, phi.rs)
    if op.size != len(phi):
        raise ComputationError(f"a {op.size}×{op.size} operator cannot act on {len(phi)} components")
    derived: Dict[Tuple[int, Tuple[int, ...]], LaurentPoly] = {}
    rows: List[Dict[LaurentPoly, List[LaurentPoly]]] = [{} for _ in range(op.size)]
    for t in op.terms:
        key = (t.col, t.derivative)
        if key not in derived:
            derived[key] = _apply_derivative(phi.components[t.col], t.derivative, op.xis)
        if derived[key].is_zero or t.coefficient.is_zero:
            continue
        rows[t.row].setdefault(t.coefficient.den, []).append(t.coefficient.num * derived[key])

    components = []
    for i, groups in enumerate(rows):
        numerator = LaurentPoly.zero(op.rs)
        denominator = LaurentPoly.constant(op.rs, 1)
        for den, parts in groups.items():
            num = sum_of(op.rs, parts)
            if num.is_zero:
                continue
            try:
                numerator = numerator + num * exact_div(denominator, den)
                continue
            except NotDivisible:
                pass
            try:
                factor = exact_div(den, denominator)
                numerator = numerator * factor + num
                denominator = den
            except NotDivisible:
                numerator = numerator * den + num * denominator
                denominator = denominator * den
        try:
            components.append(exact_div(numerator, denominator))
        except NotDivisible:
            raise NotDivisible(f"row {i + 1} of the operator leaves the Laurent polynomials")
    return replace(phi, components=tuple(components))


def operators_equal_on(
    a: MatrixRatOp, b: MatrixRatOp, vectors: Iterable[VectorPoly]
) -> Tuple[bool, str]:
    """Return whether two operators agree on every given vector, with a diagnostic."""

    for n, phi in enumerate(vectors):
        try:
            if matrix_op_apply(a, phi) != matrix_op_apply(b, phi):
                return False, f"operators differ on test vector {n + 1}"
        except NotDivisible as e:
            return False, f"test vector {n + 1}: {e}"
    return True, ""


def order_zero_product(a: MatrixRatOp, b: MatrixRatOp) -> List[List[RationalFunction]]:
    x, y = a.entries(), b.entries()
    n = a.size
    return [
        [sum((x[i][t] * y[t][j] for t in range(n)), RationalFunction.of(0, a.rs)) for j in range(n)]
        for i in range(n)
    ]


def order_zero_determinant(op: MatrixRatOp) -> RationalFunction:
    """Return the determinant of an order-zero operator by cofactor expansion."""

    def det(matrix: List[List[RationalFunction]]) -> RationalFunction:
        if len(matrix) == 1:
            return matrix[0][0]
        total = RationalFunction.of(0, op.rs)
        for j in range(len(matrix)):
            if matrix[0][j].is_zero:
                continue
            minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
            term = matrix[0][j] * det(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    return det(op.entries())


@lru_cache(maxsize=None)
def example_root_system() -> RootSystem:
    """Return 2Σ for Σ of type A₂."""

    return build_root_system("A", 2, 2)


@lru_cache(maxsize=None)
def example_coweights() -> Tuple[Coweight, ...]:
    rs = example_root_system()
    return tuple(
        ambient_coweight(rs, [1 if j == i else 0 for j in range(3)]) for i in range(3)
    )


def sigma_roots() -> Tuple[Weight, Weight, Weight]:
    """Return the Σ-roots α₁₂, α₁₃, α₂₃ as half-weights of 2Σ."""

    return Weight((2, -1), 2), Weight((1, 1), 2), Weight((-1, 2), 2)


def sigma_weights() -> Tuple[Weight, Weight]:
    """Return the Σ-fundamental weights ω₁, ω₂."""

    return Weight((1, 0), 2), Weight((0, 1), 2)


def _e(weight: Weight) -> LaurentPoly:
    return LaurentPoly.monomial(example_root_system(), weight)


def _const(value: Scalar) -> LaurentPoly:
    return LaurentPoly.constant(example_root_system(), value)


def _rf(value: Union[LaurentPoly, Scalar]) -> RationalFunction:
    return RationalFunction.of(value, example_root_system())


def sh(alpha: Weight) -> LaurentPoly:
    return _e(alpha) - _e(-alpha)


def ch(alpha: Weight) -> LaurentPoly:
    return _e(alpha) + _e(-alpha)


def coth(alpha: Weight) -> RationalFunction:
    return RationalFunction(ch(alpha), sh(alpha))


def reciprocal_one_minus(beta: Weight, numerator: Scalar = 1) -> RationalFunction:
    """Return numerator/(1 − e^{−β})."""

    return RationalFunction(_const(numerator), 1 - _e(-beta))


def _unit(i: int) -> Tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(3))


def _second(i: int, j: int) -> Tuple[int, ...]:
    return tuple((1 if t == i else 0) + (1 if t == j else 0) for t in range(3))


def _operator(terms: Iterable[OpTerm]) -> MatrixRatOp:
    return MatrixRatOp(example_root_system(), 3, example_coweights(), tuple(terms))


def _matrix_terms(matrix: Sequence[Sequence[RationalFunction]], factor: Scalar) -> List[OpTerm]:
    return [
        OpTerm(i, j, entry * factor, (0, 0, 0))
        for i, row in enumerate(matrix)
        for j, entry in enumerate(row)
        if not entry.is_zero
    ]


def _scalar_terms(parts: Sequence[Tuple[RationalFunction, Tuple[int, ...]]]) -> List[OpTerm]:
    """Return the terms of (Σ c·∂^a)·Id."""

    return [OpTerm(i, i, c, a) for i in range(3) for c, a in parts]


def _first_order_coth_parts(k: Fraction) -> List[Tuple[RationalFunction, Tuple[int, ...]]]:
    """Return −k Σ_{i<j} coth(α_ij)(∂_i − ∂_j) as (coefficient, multi-index) pairs."""

    a, b, c = sigma_roots()
    parts = []
    for root, (i, j) in ((a, (0, 1)), (b, (0, 2)), (c, (1, 2))):
        parts.append((coth(root) * -k, _unit(i)))
        parts.append((coth(root) * k, _unit(j)))
    return parts


def _second_order_parts() -> List[Tuple[RationalFunction, Tuple[int, ...]]]:
    return [(_rf(1), _second(i, j)) for i, j in ((0, 1), (0, 2), (1, 2))]


def a2_example_ops(k: Scalar, displayed: bool = False) -> Tuple[MatrixRatOp, MatrixRatOp]:
    """Return the matrices of β(γ(ξ₁)) and β(γ(ξ₁ξ₂ + ξ₁ξ₃ + ξ₂ξ₃)) for 2Σ, I = {s2}.

    The off-diagonal reflection terms of the second matrix are −1/(e^α − e^{−α})².
    With `displayed`, they are −1/(1 − e^{∓2α})² instead, which does not match β(γ(q)).
    """

    k = Fraction(k)
    a, b, c = sigma_roots()
    two_a, two_b, two_c = a * 2, b * 2, c * 2

    first = [
        [coth(a) + coth(b), reciprocal_one_minus(two_a, -2), reciprocal_one_minus(two_b, -2)],
        [reciprocal_one_minus(-two_a, -2), -coth(a) + coth(c), reciprocal_one_minus(two_c, -2)],
        [reciprocal_one_minus(-two_b, -2), reciprocal_one_minus(-two_c, -2), -coth(b) - coth(c)],
    ]
    m1 = _operator(
        [OpTerm(i, i, _rf(1), _unit(i)) for i in range(3)] + _matrix_terms(first, k)
    )

    def inverse_square(root: Weight) -> RationalFunction:
        return RationalFunction(_const(1), sh(root) ** 2)

    def one_minus_square(root: Weight) -> RationalFunction:
        return RationalFunction(_const(1), (1 - _e(-root * 2)) ** 2)

    ia, ib, ic = inverse_square(a), inverse_square(b), inverse_square(c)
    if displayed:
        upper = [one_minus_square(a), one_minus_square(b), one_minus_square(c)]
        lower = [one_minus_square(-a), one_minus_square(-b), one_minus_square(-c)]
    else:
        upper = lower = [ia, ib, ic]
    reflections = [
        [ia + ib, -upper[0], -upper[1]],
        [-lower[0], ia + ic, -upper[2]],
        [-lower[1], -lower[2], ib + ic],
    ]
    m2 = _operator(
        _scalar_terms(_second_order_parts() + _first_order_coth_parts(k))
        + _matrix_terms(reflections, 4 * k)
    ).shifted(-4 * k * k)
    return m1, m2


def shimeno_ops(k: Scalar, displayed: bool = False) -> Tuple[MatrixRatOp, MatrixRatOp]:
    """Return the spherical operators 𝒟₁ and 𝒟₂ of the A₂ example.

    Uses α₁ = α₁₂, α₂ = α₂₃ and α₃ = α₁₃; row 2 involves α₁ and α₂ only. With `displayed`,
    these entries are used instead:

    - 𝒟₁ (2, 2): −coth α₁ + coth α₃
    - 𝒟₂ (2, 2): 2/sh(α₁)² + 2/sh(α₃)², where sh(α) = e^α − e^{−α}
    - 𝒟₂ (2, 3): −(e^{α₂} − e^{−α₂})/sh(α₂)² = −1/sh(α₂)

    The identities with the matrices of β(γ(q)) fail for those.
    """

    k = Fraction(k)
    a1, a3, a2 = sigma_roots()

    def over_sh(root: Weight, numerator: Scalar) -> RationalFunction:
        return RationalFunction(_const(numerator), sh(root))

    first = [
        [coth(a1) + coth(a3), over_sh(a1, -2), over_sh(a3, -2)],
        [over_sh(a1, 2), -coth(a1) + coth(a3 if displayed else a2), over_sh(a2, -2)],
        [over_sh(a3, 2), over_sh(a2, 2), -coth(a3) - coth(a2)],
    ]
    d1 = _operator(
        [OpTerm(i, i, _rf(1), _unit(i)) for i in range(3)] + _matrix_terms(first, k)
    )

    def two_over_square(root: Weight) -> RationalFunction:
        return RationalFunction(_const(2), sh(root) ** 2)

    def cosh_over_square(root: Weight) -> RationalFunction:
        return RationalFunction(-ch(root), sh(root) ** 2)

    second = [
        [two_over_square(a1) + two_over_square(a3), cosh_over_square(a1), cosh_over_square(a3)],
        [
            cosh_over_square(a1),
            two_over_square(a1) + two_over_square(a3 if displayed else a2),
            over_sh(a2, -1) if displayed else cosh_over_square(a2),
        ],
        [cosh_over_square(a3), cosh_over_square(a2), two_over_square(a3) + two_over_square(a2)],
    ]
    d2 = _operator(
        _scalar_terms(_second_order_parts() + _first_order_coth_parts(k))
        + _matrix_terms(second, 2 * k)
    )
    return d1, d2


def t_exponents() -> Tuple[Weight, Weight, Weight]:
    """Return the exponents of T = diag(e^{ω₁}, e^{ω₂−ω₁}, e^{−ω₂})."""

    w1, w2 = sigma_weights()
    return w1, w2 - w1, -w2


def t_matrix() -> MatrixRatOp:
    return _operator(OpTerm(i, i, _rf(_e(w)), (0, 0, 0)) for i, w in enumerate(t_exponents()))


def t_inverse() -> MatrixRatOp:
    return _operator(OpTerm(i, i, _rf(_e(-w)), (0, 0, 0)) for i, w in enumerate(t_exponents()))


def to_spherical(operator: MatrixRatOp) -> MatrixRatOp:
    """Return T^{-1}∘M∘T, the operator M carried over to the spherical side.

    T maps a spherical vector Ψ onto TΨ with components in 2P, where the
    matrices of β(γ(q)) act; so M acts on Ψ as T^{-1}∘M∘T.
    """

    return operator.conjugated(t_exponents())


def spherical_vector(phi: VectorPoly) -> VectorPoly:
    """Return T^{-1}Φ, the spherical vector that T maps onto Φ."""

    return replace(
        phi,
        components=tuple(c.shifted(-w) for c, w in zip(phi.components, t_exponents())),
    )


def t_shift() -> Fraction:
    """Return the constant c with T^{-1}∘∂_{ξ'_i}∘T = ∂_{ξ'_i} + c on every row.

    Row i differentiates along the i-th example coweight, and conjugating by
    e^{t_i} adds ξ'_i(t_i) for the i-th exponent t_i of T.
    """

    shifts = {xi(t) for xi, t in zip(example_coweights(), t_exponents())}
    if len(shifts) != 1:
        raise InternalInconsistency(f"T shifts the rows unevenly: {sorted(shifts)}")
    return shifts.pop()


def spherical_apply(operator: MatrixRatOp, phi: VectorPoly) -> VectorPoly:
    """Return T(D(T^{-1}Φ)) for an operator D on the spherical side."""

    return t_image(matrix_op_apply(operator, spherical_vector(phi)))


def t_image(phi: VectorPoly) -> VectorPoly:
    """Return TΦ (pointwise multiplication)."""

    return replace(
        phi,
        components=tuple(c.shifted(w) for c, w in zip(phi.components, t_exponents())),
    )


def spherical_generators() -> Tuple[VectorPoly, VectorPoly, VectorPoly]:
    """Return Ψ_{ω₁}, Ψ_{ω₁+ω₂} and Ψ_{ω₂}."""

    rs = example_root_system()
    w1, _ = sigma_weights()
    _, _, a23 = sigma_roots()
    return (
        gamma(rs, EXAMPLE_SUBSET, _e(w1)),
        gamma(rs, EXAMPLE_SUBSET, ch(a23)) * Fraction(1, 2),
        gamma(rs, EXAMPLE_SUBSET, _e(-w1)),
    )


def expected_spherical_images() -> Tuple[VectorPoly, VectorPoly, VectorPoly]:
    """Return the generators of the spherical side in 2P for the A2 example."""

    rs = example_root_system()
    p1, p2 = Weight((1, 0)), Weight((0, 1))

    def vec(*components: LaurentPoly) -> VectorPoly:
        return VectorPoly(rs, EXAMPLE_SUBSET, tuple(components))

    half = Fraction(1, 2)
    return (
        vec(_e(p1), _e(p2 - p1), _e(-p2)),
        vec(
            (_e(p1 - p2) + _e(p2)) * half,
            (_e(-p1) + _e(p2)) * half,
            (_e(-p1) + _e(p1 - p2)) * half,
        ),
        vec(_const(1), _const(1), _const(1)),
    )


def named_operator(name: str, k: Scalar) -> MatrixRatOp:
    if name == "M1":
        return a2_example_ops(k)[0]
    if name == "M2":
        return a2_example_ops(k)[1]
    if name == "D1":
        return shimeno_ops(k)[0]
    if name == "D2":
        return shimeno_ops(k)[1]
    if name == "T":
        return t_matrix()
    raise ComputationError(f"unknown operator: {name}")


def example_test_vectors(radius: int) -> List[VectorPoly]:
    """Return Γ(m_I(μ)) for all μ ∈ P_I⁺ in the box of the given radius."""

    rs = example_root_system()
    return [
        gamma(rs, EXAMPLE_SUBSET, orbit_sum(rs, EXAMPLE_SUBSET, mu))
        for mu in dominant_box(rs, EXAMPLE_SUBSET, radius)
    ]


def transport_holds(k: Scalar, radius: int) -> Tuple[bool, str]:
    """Check that the example matrices act on Γ(m_I(μ)) like Γ(q(D)m_I(μ))."""

    rs = example_root_system()
    multiplicity = Multiplicity((Fraction(k),) * rs.orbit_count)
    generators, xis = a2_generators(rs)
    for name, op, q in zip(("M1", "M2"), a2_example_ops(k), generators):
        for n, phi in enumerate(example_test_vectors(radius)):
            try:
                if matrix_op_apply(op, phi) != induced_apply(q, xis, multiplicity, phi):
                    return False, f"{name} differs from β(γ(q)) on test vector {n + 1}"
            except NotDivisible as e:
                return False, f"{name}, test vector {n + 1}: {e}"
    return True, ""


def spherical_identities_hold(k: Scalar, radius: int) -> Tuple[bool, str]:
    """Check T^{-1}M₁T = 𝒟₁ + c and T^{-1}M₂T = 𝒟₂ − 𝒟₁ − 4k² − ⅓ on T^{-1}Γ(m_I(μ)).

    The constant c is `t_shift()`; 𝒟₁ leaves out the constant that
    conjugation by T adds to ∂_{ξ₁}, ∂_{s₁ξ₁} and ∂_{s₃ξ₁}.
    """

    k = Fraction(k)
    m1, m2 = a2_example_ops(k)
    d1, d2 = shimeno_ops(k)
    vectors = [spherical_vector(phi) for phi in example_test_vectors(radius)]
    holds, detail = operators_equal_on(to_spherical(m1), d1.shifted(t_shift()), vectors)
    if not holds:
        return False, f"first identity: {detail}"
    holds, detail = operators_equal_on(
        to_spherical(m2), (d2 - d1).shifted(-4 * k * k - Fraction(1, 3)), vectors
    )
    if not holds:
        return False, f"second identity: {detail}"
    return True, ""


def quoted_identities_hold() -> List[Tuple[str, bool]]:
    """Check the two rational-function identities used to simplify the example."""

    results = []
    for alpha in sigma_roots():
        first = reciprocal_one_minus(alpha * 2, 2) - 1
        results.append((f"2/(1−e^(−2α)) − 1 = coth α for α = {alpha.coords}", first == coth(alpha)))
        left = RationalFunction(_e(-alpha) * -4, (1 - _e(-alpha * 2)) ** 2)
        right = RationalFunction(ch(alpha) * -2, sh(alpha) ** 2) + RationalFunction(
            _const(-2), sh(alpha)
        )
        results.append((f"−4e^(−α)/(1−e^(−2α))² expansion for α = {alpha.coords}", left == right))
    return results


def t_is_unimodular() -> bool:
    """Return `True` if T·T^{-1} = Id and det T = 1, `False` otherwise."""

    product = order_zero_product(t_matrix(), t_inverse())
    identity = all(
        product[i][j] == (1 if i == j else 0) for i in range(3) for j in range(3)
    )
    return identity and order_zero_determinant(t_matrix()) == 1


def eigen_unique(
    rs: RootSystem,
    subset: Iterable[int],
    labels: Sequence[Weight],
    k: Multiplicity,
    generators: Sequence[Polynomial],
    xis: Sequence[Coweight],
) -> Tuple[bool, str]:
    """Check that P_I(λ, k) are joint eigenvectors with pairwise distinct eigenvalues."""

    subset = simple_subset(rs, subset)
    spectrum = joint_spectrum(rs, k, labels, generators, xis)
    for label, values in spectrum.items():
        phi = big_p(rs, subset, label, k)
        for q, value in zip(generators, values):
            if induced_apply(q, xis, k, phi) != phi * value:
                raise InternalInconsistency(f"P_I({label.coords}) is not a joint eigenvector")
    found = collisions(spectrum)
    if len(found) > 0:
        a, b = found[0]
        return False, f"{a.coords} and {b.coords} share eigenvalues"
    return True, ""
