"""
Sparse exact Laurent polynomials on the half-weight lattice.

Terms are keyed by doubled fundamental-weight coordinates (see `Weight.doubled`) so
that sums of exponents are plain integer additions.
"""

import heapq

from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache

from pjp.rootsys import (
    ComputationError,
    RootSystem,
    Weight,
    Coweight,
    Multiplicity,
    NotIDominant,
    check_same,
    is_dominant,
    simple_subset,
)
from pjp.weylgroup import WeylElt, enumerate_subgroup, act, weyl_group

from typing import Dict, Tuple, Iterable, Iterator, Union, List

Key = Tuple[int, ...]
Scalar = Union[int, Fraction]


class NonIntegerMultiplicity(ComputationError):
    pass


class NotDivisible(ComputationError):
    pass


class NotInvariant(ComputationError):
    pass


@dataclass(frozen=True, eq=False)
class LaurentPoly:
    rs: RootSystem
    terms: Dict[Key, Fraction]  # never holds zero coefficients; never mutated

    @staticmethod
    def zero(rs: RootSystem) -> "LaurentPoly":
        return LaurentPoly(rs, {})

    @staticmethod
    def constant(rs: RootSystem, value: Scalar) -> "LaurentPoly":
        if value == 0:
            return LaurentPoly.zero(rs)
        return LaurentPoly(rs, {(0,) * rs.rank: Fraction(value)})

    @staticmethod
    def monomial(rs: RootSystem, exponent: Weight, coefficient: Scalar = 1) -> "LaurentPoly":
        if exponent.rank != rs.rank:
            raise ComputationError(f"exponent of rank {exponent.rank} used with {rs}")
        if coefficient == 0:
            return LaurentPoly.zero(rs)
        return LaurentPoly(rs, {exponent.doubled: Fraction(coefficient)})

    @staticmethod
    def from_terms(
        rs: RootSystem, terms: Iterable[Tuple[Weight, Scalar]]
    ) -> "LaurentPoly":
        collected: Dict[Key, Fraction] = {}
        for exponent, coefficient in terms:
            key = exponent.doubled
            collected[key] = collected.get(key, Fraction(0)) + Fraction(coefficient)
        return LaurentPoly(rs, _pruned(collected))

    @property
    def is_zero(self) -> bool:
        return len(self.terms) == 0

    @property
    def is_constant(self) -> bool:
        return self.is_zero or (len(self.terms) == 1 and (0,) * self.rs.rank in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, exponent: Weight) -> Fraction:
        return self.terms.get(exponent.doubled, Fraction(0))

    def items(self) -> Iterator[Tuple[Weight, Fraction]]:
        """Yield (exponent, coefficient) pairs in descending exponent order."""

        for key in sorted(self.terms, reverse=True):
            yield Weight.from_doubled(key), self.terms[key]

    def exponents(self) -> List[Weight]:
        return [exponent for exponent, _ in self.items()]

    def leading(self) -> Tuple[Weight, Fraction]:
        key = max(self.terms)
        return Weight.from_doubled(key), self.terms[key]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(self.rs, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.rs.rank == other.rs.rank and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        other = self._coerce(other)
        terms = dict(self.terms)
        for key, coefficient in other.terms.items():
            terms[key] = terms.get(key, Fraction(0)) + coefficient
        return LaurentPoly(self.rs, _pruned(terms))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.rs, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentPoly.zero(self.rs)
            return LaurentPoly(
                self.rs, {key: c * other for key, c in self.terms.items()}
            )
        other = self._coerce(other)
        terms: Dict[Key, Fraction] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                key = tuple(i + j for i, j in zip(a, b))
                terms[key] = terms.get(key, Fraction(0)) + x * y
        return LaurentPoly(self.rs, _pruned(terms))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        result = LaurentPoly.constant(self.rs, 1)
        base = self
        while exponent > 0:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shifted(self, exponent: Weight) -> "LaurentPoly":
        """Return e^μ·f."""

        offset = exponent.doubled
        return LaurentPoly(
            self.rs,
            {tuple(i + j for i, j in zip(key, offset)): c for key, c in self.terms.items()},
        )

    def _coerce(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(self.rs, other)
        check_same(self.rs, other.rs)
        return other

    def __str__(self) -> str:
        from pjp.formatutil import format_laurent

        return format_laurent(self)


def _pruned(terms: Dict[Key, Fraction]) -> Dict[Key, Fraction]:
    return {key: c for key, c in terms.items() if c != 0}


def _act_key(w: WeylElt, key: Key) -> Key:
    return tuple(sum(row[j] * key[j] for j in range(len(row))) for row in w.matrix)


def weyl_act(w: WeylElt, f: LaurentPoly) -> LaurentPoly:
    """Return wf, i.e. the substitution e^λ ↦ e^{wλ}."""

    return LaurentPoly(f.rs, {_act_key(w, key): c for key, c in f.terms.items()})


def star(f: LaurentPoly) -> LaurentPoly:
    """Return the torus conjugate of f (exponents negated, coefficients fixed)."""

    return LaurentPoly(f.rs, {tuple(-i for i in key): c for key, c in f.terms.items()})


def constant_term(f: LaurentPoly) -> Fraction:
    return f.terms.get((0,) * f.rs.rank, Fraction(0))


def derivative(f: LaurentPoly, xi: Coweight) -> LaurentPoly:
    """Return ∂_ξ f, where ∂_ξ e^λ = λ(ξ)e^λ."""

    terms = {}
    for key, c in f.terms.items():
        value = sum((d * v for d, v in zip(key, xi.values)), Fraction(0)) / 2
        if value != 0:
            terms[key] = c * value
    return LaurentPoly(f.rs, terms)


def is_invariant(f: LaurentPoly, subset: Iterable[int]) -> bool:
    """Return `True` if f is W_I-invariant, `False` otherwise."""

    # invariance under the generators of W_I is enough
    group = weyl_group(f.rs)
    return all(weyl_act(group.simple(i), f) == f for i in simple_subset(f.rs, subset))


@lru_cache(maxsize=None)
def delta_k(rs: RootSystem, k: Multiplicity) -> LaurentPoly:
    """Return δ_k = ∏_{α∈R}(e^{α/2} − e^{−α/2})^{k_α} = ∏_{α>0}(2 − e^α − e^{−α})^{k_α}."""

    if not k.is_integral:
        raise NonIntegerMultiplicity(
            f"δ_k needs integer multiplicities (got {', '.join(str(v) for v in k.values)})"
        )
    result = LaurentPoly.constant(rs, 1)
    for index, root in enumerate(rs.positive_roots):
        factor = 2 - LaurentPoly.monomial(rs, root) - LaurentPoly.monomial(rs, -root)
        result = result * factor ** int(k.of_root(rs, index))
    return result


def inner_k(f: LaurentPoly, g: LaurentPoly, k: Multiplicity) -> Fraction:
    """Return (f, g)_k, the constant term of star(f)·g·δ_k."""

    check_same(f.rs, g.rs)
    delta = delta_k(f.rs, k).terms
    total = Fraction(0)
    for a, x in f.terms.items():
        for b, y in g.terms.items():
            d = delta.get(tuple(i - j for i, j in zip(a, b)))
            if d is not None:
                total += x * y * d
    return total


def orbit_sum(rs: RootSystem, subset: Iterable[int], weight: Weight) -> LaurentPoly:
    """Return m_I(λ) = Σ_{μ∈W_I·λ} e^μ."""

    subset = simple_subset(rs, subset)
    if not is_dominant(rs, weight, subset):
        raise NotIDominant(f"{weight.coords} is not dominant for I={list(subset)}")
    return _orbit_sum(rs, subset, weight)


@lru_cache(maxsize=None)
def _orbit_sum(rs: RootSystem, subset: Tuple[int, ...], weight: Weight) -> LaurentPoly:
    orbit = {act(w, weight).doubled for w in enumerate_subgroup(rs, subset)}
    return LaurentPoly(rs, {key: Fraction(1) for key in orbit})


def exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Return q with f = q·g.

    Raise `NotDivisible` when no Laurent polynomial quotient exists.
    """

    check_same(f.rs, g.rs)
    if g.is_zero:
        raise NotDivisible("division by the zero polynomial")
    if f.is_zero:
        return LaurentPoly.zero(f.rs)
    if len(g.terms) == 1:
        (key, c), = g.terms.items()
        return LaurentPoly(
            f.rs,
            {tuple(i - j for i, j in zip(a, key)): x / c for a, x in f.terms.items()},
        )

    rank = f.rs.rank
    # the newton polytope of f is the sum of those of q and g, so every
    # exponent of q lies inside this box
    low = [min(a[i] for a in f.terms) - min(b[i] for b in g.terms) for i in range(rank)]
    high = [max(a[i] for a in f.terms) - max(b[i] for b in g.terms) for i in range(rank)]
    if any(lo > hi for lo, hi in zip(low, high)):
        raise NotDivisible(f"{g} does not divide {f}")

    lead_key = max(g.terms)
    lead = g.terms[lead_key]
    remainder = dict(f.terms)
    # max-heap of candidate leading exponents; stale entries are skipped
    heap = [tuple(-i for i in key) for key in remainder]
    heapq.heapify(heap)
    quotient: Dict[Key, Fraction] = {}
    while len(heap) > 0:
        key = tuple(-i for i in heapq.heappop(heap))
        c = remainder.get(key)
        if c is None or c == 0:
            continue
        t = tuple(i - j for i, j in zip(key, lead_key))
        if any(t[i] < low[i] or t[i] > high[i] for i in range(rank)):
            raise NotDivisible(f"{g} does not divide {f}")
        factor = c / lead
        quotient[t] = factor
        for b, y in g.terms.items():
            target = tuple(i + j for i, j in zip(t, b))
            value = remainder.get(target, Fraction(0)) - factor * y
            if value == 0:
                remainder.pop(target, None)
            else:
                if target not in remainder:
                    heapq.heappush(heap, tuple(-i for i in target))
                remainder[target] = value
    return LaurentPoly(f.rs, quotient)


def divides(g: LaurentPoly, f: LaurentPoly) -> bool:
    try:
        exact_div(f, g)
    except NotDivisible:
        return False
    return True


def sum_of(rs: RootSystem, polynomials: Iterable[LaurentPoly]) -> LaurentPoly:
    terms: Dict[Key, Fraction] = {}
    for f in polynomials:
        check_same(rs, f.rs)
        for key, c in f.terms.items():
            terms[key] = terms.get(key, Fraction(0)) + c
    return LaurentPoly(rs, _pruned(terms))
