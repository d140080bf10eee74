"""
Exact models of finite crystallographic root systems.

Weights are kept in fundamental-weight coordinates with a shared denominator of
1 or 2, so every exponent that shows up (including e^{α/2}) stays integer-based.
"""

from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache

import sympy  # type: ignore

from typing import Tuple, Dict, List, Iterable, Union, Optional, Mapping

Rational = Union[int, Fraction]

# symmetrized gram matrices of simple roots at scale 1 are assembled from these;
# long roots have (α, α) = 2
SUPPORTED_TYPES = [
    ("A", 1),
    ("A", 2),
    ("A", 3),
    ("A", 4),
    ("B", 2),
    ("B", 3),
    ("C", 2),
    ("C", 3),
    ("D", 4),
    ("G", 2),
]

POSITIVE_ROOT_COUNTS = {"A": lambda n: n * (n + 1) // 2,
                        "B": lambda n: n * n,
                        "C": lambda n: n * n,
                        "D": lambda n: n * (n - 1),
                        "G": lambda n: 6}


class ComputationError(Exception):
    """Represents a failure raised by any of the exact constructions."""

    message: str

    def __init__(self, message: str):
        self.message = message
        super().__init__(f"{self.message}")

    @property
    def code(self) -> str:
        """Return a stable machine-readable name for this kind of failure."""

        return type(self).__name__


class UnsupportedType(ComputationError):
    pass


class MismatchedRootSystem(ComputationError):
    pass


class NotIDominant(ComputationError):
    pass


class InvalidSubset(ComputationError):
    pass


class InvalidMultiplicity(ComputationError):
    pass


class InternalInconsistency(ComputationError):
    pass


@dataclass(frozen=True)
class Weight:
    """Represents an element of ½P in fundamental-weight coordinates.

    The actual coordinates are `num[i] / den`; a weight with all numerators even is
    always stored with `den == 1`, so that equality is coordinate equality.
    """

    num: Tuple[int, ...]
    den: int = 1

    def __post_init__(self) -> None:
        if self.den not in (1, 2):
            raise ValueError(f"weight denominator must be 1 or 2 (got {self.den})")
        if self.den == 2 and all(n % 2 == 0 for n in self.num):
            object.__setattr__(self, "num", tuple(n // 2 for n in self.num))
            object.__setattr__(self, "den", 1)

    @staticmethod
    def of(coords: Iterable[Rational]) -> "Weight":
        """Return the weight with the given (integer or half-integer) coordinates."""

        doubled = []
        for c in coords:
            d = Fraction(c) * 2
            if d.denominator != 1:
                raise ValueError(f"coordinate {c} is not in ½ℤ")
            doubled.append(int(d))
        return Weight.from_doubled(doubled)

    @staticmethod
    def from_doubled(doubled: Iterable[int]) -> "Weight":
        return Weight(tuple(doubled), 2)

    @staticmethod
    def zero(rank: int) -> "Weight":
        return Weight((0,) * rank)

    @staticmethod
    def fundamental(rank: int, i: int) -> "Weight":
        return Weight(tuple(1 if j == i else 0 for j in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.num)

    @property
    def coords(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(n, self.den) for n in self.num)

    @property
    def doubled(self) -> Tuple[int, ...]:
        return tuple(n * (2 // self.den) for n in self.num)

    @property
    def is_integral(self) -> bool:
        return self.den == 1

    @property
    def is_zero(self) -> bool:
        return all(n == 0 for n in self.num)

    def sort_key(self) -> Tuple[int, ...]:
        """Return the key of the deterministic (lexicographic) exponent order."""

        return self.doubled

    def halved(self) -> "Weight":
        if self.den != 1:
            raise ValueError("only integral weights can be halved")
        return Weight(self.num, 2)

    def __add__(self, other: "Weight") -> "Weight":
        _check_rank(self, other)
        if self.den == other.den:
            return Weight(tuple(a + b for a, b in zip(self.num, other.num)), self.den)
        return Weight.from_doubled(a + b for a, b in zip(self.doubled, other.doubled))

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-n for n in self.num), self.den)

    def __mul__(self, factor: int) -> "Weight":
        return Weight(tuple(n * factor for n in self.num), self.den)

    __rmul__ = __mul__

    def rational(self) -> "RationalWeight":
        return RationalWeight(self.coords)


@dataclass(frozen=True)
class RationalWeight:
    """Represents a rational functional on 𝔥 in fundamental-weight coordinates.

    This is where ρ(k) and the spectral vectors live; neither is confined to ½P
    once k is an arbitrary rational.
    """

    coords: Tuple[Fraction, ...]

    @staticmethod
    def zero(rank: int) -> "RationalWeight":
        return RationalWeight((Fraction(0),) * rank)

    def __add__(self, other: "RationalWeight") -> "RationalWeight":
        return RationalWeight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RationalWeight") -> "RationalWeight":
        return RationalWeight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RationalWeight":
        return RationalWeight(tuple(-a for a in self.coords))

    def __mul__(self, factor: Rational) -> "RationalWeight":
        return RationalWeight(tuple(a * factor for a in self.coords))

    __rmul__ = __mul__


@dataclass(frozen=True)
class Coweight:
    """Represents ξ ∈ 𝔥 by its values ϖ_i(ξ) on the fundamental weights."""

    values: Tuple[Fraction, ...]

    def __call__(self, weight: Union[Weight, RationalWeight]) -> Fraction:
        if isinstance(weight, Weight):
            total = sum(n * v for n, v in zip(weight.num, self.values))
            return Fraction(total) / weight.den
        return Fraction(sum(c * v for c, v in zip(weight.coords, self.values)))

    def __add__(self, other: "Coweight") -> "Coweight":
        return Coweight(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "Coweight") -> "Coweight":
        return Coweight(tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "Coweight":
        return Coweight(tuple(-a for a in self.values))

    def __mul__(self, factor: Rational) -> "Coweight":
        return Coweight(tuple(a * factor for a in self.values))

    __rmul__ = __mul__


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    scale: Fraction
    cartan: Tuple[Tuple[int, ...], ...]  # a_ij = ⟨α_j, α_i^∨⟩
    symmetrizers: Tuple[Fraction, ...]  # d_i = (α_i, α_i)/2 at scale 1
    positive_roots: Tuple[Weight, ...]
    root_coefficients: Tuple[Tuple[int, ...], ...]  # simple-root coordinates
    coroot_coefficients: Tuple[Tuple[int, ...], ...]  # simple-coroot coordinates
    orbits: Tuple[int, ...]  # W-orbit index of each positive root

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def simple_roots(self) -> Tuple[Weight, ...]:
        return tuple(
            Weight(tuple(self.cartan[i][j] for i in range(self.rank)))
            for j in range(self.rank)
        )

    @property
    def fundamental_weights(self) -> Tuple[Weight, ...]:
        return tuple(Weight.fundamental(self.rank, i) for i in range(self.rank))

    @property
    def orbit_count(self) -> int:
        return max(self.orbits) + 1

    def __str__(self) -> str:
        if self.scale == 1:
            return self.name
        return f"{self.name} (scale {self.scale})"


@dataclass(frozen=True)
class Multiplicity:
    """Represents a W-invariant multiplicity function, one value per root orbit."""

    values: Tuple[Fraction, ...]

    def of_root(self, rs: RootSystem, index: int) -> Fraction:
        return self.values[rs.orbits[index]]

    @property
    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)


def _check_rank(a: Weight, b: Weight) -> None:
    if a.rank != b.rank:
        raise MismatchedRootSystem(f"weights of rank {a.rank} and {b.rank} do not mix")


def _gram_matrix(family: str, rank: int) -> List[List[Fraction]]:
    gram = [[Fraction(0)] * rank for _ in range(rank)]
    if family == "A":
        for i in range(rank):
            gram[i][i] = Fraction(2)
            if i + 1 < rank:
                gram[i][i + 1] = gram[i + 1][i] = Fraction(-1)
    elif family == "B":
        for i in range(rank):
            gram[i][i] = Fraction(2) if i < rank - 1 else Fraction(1)
            if i + 1 < rank:
                gram[i][i + 1] = gram[i + 1][i] = Fraction(-1)
    elif family == "C":
        for i in range(rank):
            gram[i][i] = Fraction(1) if i < rank - 1 else Fraction(2)
            if i + 1 < rank - 1:
                gram[i][i + 1] = gram[i + 1][i] = Fraction(-1, 2)
            elif i + 1 == rank - 1:
                gram[i][i + 1] = gram[i + 1][i] = Fraction(-1)
    elif family == "D":
        for i in range(rank):
            gram[i][i] = Fraction(2)
        for i in range(rank - 2):
            gram[i][i + 1] = gram[i + 1][i] = Fraction(-1)
        gram[rank - 3][rank - 1] = gram[rank - 1][rank - 3] = Fraction(-1)
    elif family == "G":
        # note that α₁ is the short root
        gram = [[Fraction(2, 3), Fraction(-1)], [Fraction(-1), Fraction(2)]]
    return gram


def build_root_system(family: str, rank: int, scale: Rational = 1) -> RootSystem:
    """Return the root system of the given type, with all roots scaled by `scale`.

    Roots and weights keep their coordinates on the scaled lattice, so the simple root α_i
    of the result stands for `scale`·α_i at scale 1. The Cartan integers and `pairing` do
    not change; `inner` is multiplied by scale², and coweights from `xi_basis` or
    `ambient_coweight` take `scale` times their scale-1 values on every root.
    """

    family = family.upper()
    if (family, rank) not in SUPPORTED_TYPES:
        raise UnsupportedType(f"unsupported root system: {family}{rank}")
    scale = Fraction(scale)
    if scale <= 0:
        raise UnsupportedType(f"scale must be positive (got {scale})")

    gram = _gram_matrix(family, rank)
    cartan = tuple(
        tuple(int(2 * gram[i][j] / gram[i][i]) for j in range(rank))
        for i in range(rank)
    )
    symmetrizers = tuple(gram[i][i] / 2 for i in range(rank))

    def reflect(coefficients: Tuple[int, ...], i: int) -> Tuple[int, ...]:
        pairing = sum(c * cartan[i][j] for j, c in enumerate(coefficients))
        return tuple(c - pairing if j == i else c for j, c in enumerate(coefficients))

    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    roots = set(simple)
    frontier = list(simple)
    while len(frontier) > 0:
        discovered = []
        for root in frontier:
            for i in range(rank):
                image = reflect(root, i)
                if image not in roots:
                    roots.add(image)
                    discovered.append(image)
        frontier = discovered

    positive = sorted(
        (r for r in roots if all(c >= 0 for c in r)),
        key=lambda r: (sum(r), tuple(-c for c in r)),
    )
    if len(positive) != POSITIVE_ROOT_COUNTS[family](rank):
        raise InternalInconsistency(f"{family}{rank}: wrong number of positive roots")

    weights = []
    coroots = []
    lengths = []
    for r in positive:
        weights.append(
            Weight(tuple(sum(c * cartan[i][j] for j, c in enumerate(r)) for i in range(rank)))
        )
        half_length = sum(
            r[i] * r[j] * gram[i][j] for i in range(rank) for j in range(rank)
        ) / 2
        coroot = tuple(c * symmetrizers[j] / half_length for j, c in enumerate(r))
        if any(c.denominator != 1 for c in coroot):
            raise InternalInconsistency(f"{family}{rank}: coroot {coroot} not integral")
        coroots.append(tuple(int(c) for c in coroot))
        lengths.append(half_length)

    # orbits of roots are root lengths; numbered by first appearance among simple roots
    orbit_of_length: Dict[Fraction, int] = {}
    for i in range(rank):
        if symmetrizers[i] not in orbit_of_length:
            orbit_of_length[symmetrizers[i]] = len(orbit_of_length)

    return RootSystem(
        family=family,
        rank=rank,
        scale=scale,
        cartan=cartan,
        symmetrizers=symmetrizers,
        positive_roots=tuple(weights),
        root_coefficients=tuple(positive),
        coroot_coefficients=tuple(coroots),
        orbits=tuple(orbit_of_length[length] for length in lengths),
    )


def parse_root_system(text: str, scale: Rational = 1) -> RootSystem:
    """Return the root system named by `text`, e.g. `A2` or `G2`."""

    text = text.strip().upper()
    if len(text) < 2 or not text[1:].isdigit():
        raise UnsupportedType(f"unsupported root system: {text}")
    return build_root_system(text[0], int(text[1:]), scale)


def check_same(rs: RootSystem, other: RootSystem) -> None:
    if rs is not other and rs != other:
        raise MismatchedRootSystem(f"{rs} does not match {other}")


def simple_subset(rs: RootSystem, indices: Iterable[int]) -> Tuple[int, ...]:
    """Return a subset I of simple reflections (0-based indices) in canonical form."""

    subset = tuple(sorted(set(indices)))
    for i in subset:
        if i < 0 or i >= rs.rank:
            raise InvalidSubset(f"s{i + 1} is not a simple reflection of {rs.name}")
    return subset


def full_subset(rs: RootSystem) -> Tuple[int, ...]:
    return tuple(range(rs.rank))


@lru_cache(maxsize=None)
def inverse_cartan(rs: RootSystem) -> Tuple[Tuple[Fraction, ...], ...]:
    inverse = sympy.Matrix(rs.cartan).inv()
    return tuple(
        tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(rs.rank))
        for i in range(rs.rank)
    )


@lru_cache(maxsize=None)
def root_lookup(rs: RootSystem) -> Dict[Weight, Tuple[int, int]]:
    """Return a map from every root to (index of ±root in R⁺, sign)."""

    lookup = {}
    for index, root in enumerate(rs.positive_roots):
        lookup[root] = (index, 1)
        lookup[-root] = (index, -1)
    return lookup


def simple_root_coordinates(
    rs: RootSystem, weight: Union[Weight, RationalWeight]
) -> Tuple[Fraction, ...]:
    """Return the coordinates of a weight in the basis of simple roots."""

    coords = weight.coords
    inverse = inverse_cartan(rs)
    # note that weight coordinate i of α_j is a_ij, so the weight is A·m
    return tuple(
        sum((inverse[j][i] * coords[i] for i in range(rs.rank)), Fraction(0))
        for j in range(rs.rank)
    )


def height(rs: RootSystem, weight: Union[Weight, RationalWeight]) -> Fraction:
    return sum(simple_root_coordinates(rs, weight), Fraction(0))


def coroot_pairing(
    rs: RootSystem, weight: Union[Weight, RationalWeight], index: int
) -> Fraction:
    """Return ⟨λ, β^∨⟩ for the positive root with the given index."""

    coords = weight.coords
    total = Fraction(0)
    for j, c in enumerate(rs.coroot_coefficients[index]):
        if c != 0:
            total += c * coords[j]
    return total


def pairing(rs: RootSystem, weight: Union[Weight, RationalWeight], root: Weight) -> Fraction:
    """Return ⟨λ, α^∨⟩ for a root α of `rs` (positive or negative)."""

    if len(weight.coords) != rs.rank:
        raise MismatchedRootSystem(f"weight of rank {len(weight.coords)} used with {rs}")
    found = root_lookup(rs).get(root)
    if found is None:
        raise MismatchedRootSystem(f"{root} is not a root of {rs}")
    index, sign = found
    return sign * coroot_pairing(rs, weight, index)


def inner(
    rs: RootSystem,
    a: Union[Weight, RationalWeight],
    b: Union[Weight, RationalWeight],
) -> Fraction:
    """Return (a, b) with (α, α) = 2 for long roots at scale 1."""

    if len(a.coords) != rs.rank or len(b.coords) != rs.rank:
        raise MismatchedRootSystem(f"weights do not belong to {rs}")
    m = simple_root_coordinates(rs, b)
    coords = a.coords
    total = sum(
        (coords[i] * m[i] * rs.symmetrizers[i] for i in range(rs.rank)), Fraction(0)
    )
    return total * rs.scale * rs.scale


def is_dominant(rs: RootSystem, weight: Weight, subset: Iterable[int]) -> bool:
    """Return `True` if ⟨λ, α^∨⟩ ≥ 0 for all α ∈ R_I⁺, `False` otherwise."""

    # note that R_I⁺ is spanned by the simple roots in I with nonnegative
    # coefficients, so testing simple coroots is enough
    return all(weight.num[i] >= 0 for i in simple_subset(rs, subset))


def multiplicity(rs: RootSystem, values: Union[Rational, Iterable[Rational]]) -> Multiplicity:
    """Return a multiplicity function from one value, or one value per root orbit."""

    if isinstance(values, (int, Fraction)):
        values = [values] * rs.orbit_count
    values = tuple(Fraction(v) for v in values)
    if len(values) == 1:
        values = values * rs.orbit_count
    if len(values) != rs.orbit_count:
        raise InvalidMultiplicity(
            f"{rs.name} has {rs.orbit_count} root orbits; got {len(values)} values"
        )
    if any(v < 0 for v in values):
        raise InvalidMultiplicity(f"multiplicities must be nonnegative (got {values})")
    return Multiplicity(values)


def multiplicity_from_roots(
    rs: RootSystem, values: Mapping[Weight, Rational]
) -> Multiplicity:
    """Return a multiplicity function given per root; values must be constant on orbits."""

    per_orbit: List[Optional[Fraction]] = [None] * rs.orbit_count
    lookup = root_lookup(rs)
    for root, value in values.items():
        if root not in lookup:
            raise MismatchedRootSystem(f"{root} is not a root of {rs}")
        orbit = rs.orbits[lookup[root][0]]
        if per_orbit[orbit] is not None and per_orbit[orbit] != Fraction(value):
            raise InvalidMultiplicity(f"multiplicity is not constant on the orbit of {root}")
        per_orbit[orbit] = Fraction(value)
    if any(v is None for v in per_orbit):
        raise InvalidMultiplicity("multiplicity missing for a root orbit")
    return multiplicity(rs, [v for v in per_orbit if v is not None])


def rho(rs: RootSystem, k: Multiplicity) -> RationalWeight:
    """Return ρ(k) = ½ Σ_{α>0} k_α α."""

    total = RationalWeight.zero(rs.rank)
    for index, root in enumerate(rs.positive_roots):
        total = total + root.rational() * (k.of_root(rs, index) / 2)
    return total


def xi_basis(rs: RootSystem) -> List[Coweight]:
    """Return the basis of 𝔥 dual to the fundamental weights at scale 1."""

    return [
        Coweight(tuple(rs.scale if j == i else Fraction(0) for j in range(rs.rank)))
        for i in range(rs.rank)
    ]


def ambient_coweight(rs: RootSystem, vector: Iterable[Rational]) -> Coweight:
    """Return the coweight of a type A root system given by an ambient vector in ℚ^{n+1}.

    The vector is projected onto the hyperplane Σx = 0 first.
    """

    if rs.family != "A":
        raise UnsupportedType(f"ambient coordinates are only defined for type A ({rs.name})")
    x = [Fraction(v) for v in vector]
    if len(x) != rs.rank + 1:
        raise MismatchedRootSystem(f"{rs.name} needs {rs.rank + 1} ambient coordinates")
    mean = sum(x, Fraction(0)) / len(x)
    values = []
    partial = Fraction(0)
    for i in range(rs.rank):
        partial += x[i] - mean
        values.append(partial * rs.scale)
    return Coweight(tuple(values))


def root_coweight(rs: RootSystem, weight: Union[Weight, RationalWeight]) -> Coweight:
    """Return the element λ' of 𝔥 with μ(λ') = (μ, λ) for all μ."""

    return Coweight(
        tuple(inner(rs, Weight.fundamental(rs.rank, i), weight) for i in range(rs.rank))
    )
