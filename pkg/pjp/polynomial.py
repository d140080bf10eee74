"""
Sparse polynomials in commuting variables x1, …, xn with exact rational coefficients.

They stand for elements of S(𝔥) (with the variables bound to a list of coweights) and
for polynomials in the fundamental invariants χ₁, …, χ_n.
"""

from fractions import Fraction
from dataclasses import dataclass

import sympy  # type: ignore

from pjp.rootsys import ComputationError

from typing import Dict, Tuple, Iterable, Iterator, Union, Sequence, TypeVar

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]
T = TypeVar("T")


class MalformedInput(ComputationError):
    pass


@dataclass(frozen=True, eq=False)
class Polynomial:
    nvars: int
    terms: Dict[Exponent, Fraction]  # never holds zero coefficients; never mutated

    @staticmethod
    def zero(nvars: int) -> "Polynomial":
        return Polynomial(nvars, {})

    @staticmethod
    def constant(nvars: int, value: Scalar) -> "Polynomial":
        if value == 0:
            return Polynomial.zero(nvars)
        return Polynomial(nvars, {(0,) * nvars: Fraction(value)})

    @staticmethod
    def variable(nvars: int, i: int) -> "Polynomial":
        """Return x_{i+1} (variables are 0-based internally)."""

        return Polynomial(
            nvars, {tuple(1 if j == i else 0 for j in range(nvars)): Fraction(1)}
        )

    @staticmethod
    def monomial(exponent: Sequence[int], coefficient: Scalar = 1) -> "Polynomial":
        if coefficient == 0:
            return Polynomial.zero(len(exponent))
        return Polynomial(len(exponent), {tuple(exponent): Fraction(coefficient)})

    @property
    def is_zero(self) -> bool:
        return len(self.terms) == 0

    @property
    def degree(self) -> int:
        if self.is_zero:
            return -1
        return max(sum(e) for e in self.terms)

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Yield (exponent, coefficient) pairs by descending degree, then exponent."""

        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            yield e, self.terms[e]

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponent), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def _coerce(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        if other.nvars != self.nvars:
            raise ComputationError(
                f"polynomials in {self.nvars} and {other.nvars} variables do not mix"
            )
        return other

    def __add__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Polynomial(self.nvars, {e: c for e, c in terms.items() if c != 0})

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        other = self._coerce(other)
        terms: Dict[Exponent, Fraction] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                e = tuple(i + j for i, j in zip(a, b))
                terms[e] = terms.get(e, Fraction(0)) + x * y
        return Polynomial(self.nvars, {e: c for e, c in terms.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        result = Polynomial.constant(self.nvars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, values: Sequence[Scalar]) -> Fraction:
        if len(values) != self.nvars:
            raise ComputationError(f"expected {self.nvars} values (got {len(values)})")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for value, power in zip(values, e):
                if power > 0:
                    term *= Fraction(value) ** power
            total += term
        return total

    def __str__(self) -> str:
        from pjp.formatutil import format_polynomial

        return format_polynomial(self)


def substitute(p: Polynomial, images: Sequence[T], one: T) -> T:
    """Return p(images), evaluated in any ring whose elements support +, * and scaling.

    Powers of each image are computed once.
    """

    if len(images) != p.nvars:
        raise ComputationError(f"expected {p.nvars} images (got {len(images)})")
    powers = [[one] for _ in images]
    total = one * 0  # type: ignore
    for e, c in p.terms.items():
        term = one * c  # type: ignore
        for i, power in enumerate(e):
            while len(powers[i]) <= power:
                powers[i].append(powers[i][-1] * images[i])  # type: ignore
            if power > 0:
                term = term * powers[i][power]  # type: ignore
        total = total + term  # type: ignore
    return total


def variables(nvars: int) -> Tuple[Polynomial, ...]:
    return tuple(Polynomial.variable(nvars, i) for i in range(nvars))


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    """Return the polynomial written in `text` using the variables x1, …, xn.

    For example, `x1*x2 + x1*x3 + x2*x3` or `x1^2 - 1/3`.
    """

    symbols = sympy.symbols(f"x1:{nvars + 1}")
    namespace = {str(s): s for s in symbols}
    try:
        expression = sympy.sympify(text.replace("^", "**"), locals=namespace)
        poly = sympy.Poly(expression, *symbols)
    except (sympy.SympifyError, sympy.PolynomialError, TypeError, SyntaxError) as e:
        raise MalformedInput(f"not a polynomial in x1..x{nvars}: '{text}' ({e})")
    terms = {}
    for monomial, coefficient in poly.terms():
        if not coefficient.is_Rational:
            raise MalformedInput(f"coefficient {coefficient} is not rational in '{text}'")
        terms[tuple(int(i) for i in monomial)] = Fraction(
            int(coefficient.p), int(coefficient.q)
        )
    return Polynomial(nvars, {e: c for e, c in terms.items() if c != 0})


def from_terms(nvars: int, terms: Iterable[Tuple[Sequence[int], Scalar]]) -> Polynomial:
    result = Polynomial.zero(nvars)
    for exponent, coefficient in terms:
        result = result + Polynomial.monomial(exponent, coefficient)
    return result
