from fractions import Fraction
from dataclasses import dataclass, field
from functools import lru_cache

from pjp.rootsys import (
    RootSystem,
    Weight,
    RationalWeight,
    InvalidSubset,
    simple_subset,
    full_subset,
    root_lookup,
)

from typing import Tuple, List, Dict, Iterable

Matrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class WeylElt:
    """Represents an element of W by its action on weight coordinates.

    Two elements are equal exactly when their matrices are; the word is the
    lexicographically smallest reduced word and only serves presentation.
    """

    matrix: Matrix
    word: Tuple[int, ...] = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        if len(self.word) == 0:
            return "e"
        return "*".join(f"s{i + 1}" for i in self.word)


def _identity(rank: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))


def _multiply(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n))
        for i in range(n)
    )


def reflection_matrix(rs: RootSystem, i: int) -> Matrix:
    """Return the matrix of s_i, i.e. λ ↦ λ − ⟨λ, α_i^∨⟩α_i, on weight coordinates."""

    n = rs.rank
    return tuple(
        tuple((1 if j == t else 0) - (rs.cartan[j][i] if t == i else 0) for t in range(n))
        for j in range(n)
    )


class WeylGroup:
    """Represents the full Weyl group of a root system, enumerated once."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.generators = [reflection_matrix(rs, i) for i in range(rs.rank)]
        identity = WeylElt(_identity(rs.rank), ())
        self.elements: List[WeylElt] = [identity]
        self._by_matrix: Dict[Matrix, WeylElt] = {identity.matrix: identity}
        # breadth-first over words in lexicographic order; the first word to reach
        # an element is its lexicographically smallest reduced word
        level = [identity]
        while len(level) > 0:
            discovered = []
            for element in level:
                for i, generator in enumerate(self.generators):
                    matrix = _multiply(element.matrix, generator)
                    if matrix in self._by_matrix:
                        continue
                    successor = WeylElt(matrix, element.word + (i,))
                    self._by_matrix[matrix] = successor
                    discovered.append(successor)
            discovered.sort(key=lambda w: w.word)
            self.elements.extend(discovered)
            level = discovered

    @property
    def identity(self) -> WeylElt:
        return self.elements[0]

    @property
    def longest(self) -> WeylElt:
        return self.elements[-1]

    def __len__(self) -> int:
        return len(self.elements)

    def canonical(self, matrix: Matrix) -> WeylElt:
        return self._by_matrix[matrix]

    def multiply(self, u: WeylElt, v: WeylElt) -> WeylElt:
        return self._by_matrix[_multiply(u.matrix, v.matrix)]

    def inverse(self, w: WeylElt) -> WeylElt:
        return self.element(reversed(w.word))

    def simple(self, i: int) -> WeylElt:
        return self._by_matrix[self.generators[i]]

    def element(self, word: Iterable[int]) -> WeylElt:
        """Return the element s_{i₁}···s_{i_m} for the word (i₁, …, i_m)."""

        matrix = _identity(self.rs.rank)
        for i in word:
            if i < 0 or i >= self.rs.rank:
                raise InvalidSubset(f"s{i + 1} is not a simple reflection of {self.rs.name}")
            matrix = _multiply(matrix, self.generators[i])
        return self._by_matrix[matrix]


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystem) -> WeylGroup:
    return WeylGroup(rs)


def act(w: WeylElt, weight: Weight) -> Weight:
    """Return wλ."""

    return Weight(
        tuple(sum(row[j] * weight.num[j] for j in range(len(row))) for row in w.matrix),
        weight.den,
    )


def act_rational(w: WeylElt, weight: RationalWeight) -> RationalWeight:
    return RationalWeight(
        tuple(
            sum((row[j] * weight.coords[j] for j in range(len(row))), Fraction(0))
            for row in w.matrix
        )
    )


def is_positive_root(rs: RootSystem, root: Weight) -> bool:
    return root_lookup(rs)[root][1] > 0


def inversions(rs: RootSystem, w: WeylElt) -> List[Weight]:
    """Return R(w) = {α ∈ R⁺ | wα < 0}."""

    return [root for root in rs.positive_roots if not is_positive_root(rs, act(w, root))]


def parse_word(rs: RootSystem, text: str) -> WeylElt:
    """Return the element named by a word like `s2*s1` (or `e`)."""

    text = text.strip()
    if text in ("", "e"):
        return weyl_group(rs).identity
    word = []
    for letter in text.split("*"):
        letter = letter.strip()
        if not letter.startswith("s") or not letter[1:].isdigit():
            raise InvalidSubset(f"not a simple reflection: '{letter}'")
        word.append(int(letter[1:]) - 1)
    return weyl_group(rs).element(word)


@lru_cache(maxsize=None)
def enumerate_subgroup(rs: RootSystem, subset: Tuple[int, ...]) -> Tuple[WeylElt, ...]:
    """Return all elements of W_I, ordered by (length, word)."""

    subset = simple_subset(rs, subset)
    return tuple(
        w for w in weyl_group(rs).elements if all(i in subset for i in w.word)
    )


@lru_cache(maxsize=None)
def min_coset_reps(rs: RootSystem, subset: Tuple[int, ...]) -> Tuple[WeylElt, ...]:
    """Return W^I, the shortest representatives of W/W_I, ordered by (length, word).

    This order also fixes the component order of every vector-valued polynomial.
    """

    subset = simple_subset(rs, subset)
    simple_roots = rs.simple_roots
    return tuple(
        v
        for v in weyl_group(rs).elements
        if all(is_positive_root(rs, act(v, simple_roots[i])) for i in subset)
    )


def coset_decompose(
    rs: RootSystem, w: WeylElt, subset: Iterable[int]
) -> Tuple[WeylElt, WeylElt]:
    """Return (w'', w') with w = w''w', w'' ∈ W^I and w' ∈ W_I."""

    subset = simple_subset(rs, subset)
    group = weyl_group(rs)
    representatives = set(min_coset_reps(rs, subset))
    for u in enumerate_subgroup(rs, subset):
        candidate = group.multiply(w, group.inverse(u))
        if candidate in representatives:
            return candidate, u
    raise InvalidSubset(f"{w} has no decomposition over W_I")  # unreachable


def coset_index(rs: RootSystem, w: WeylElt, subset: Iterable[int]) -> int:
    """Return the position of wW_I in the canonical W^I order."""

    subset = simple_subset(rs, subset)
    representative, _ = coset_decompose(rs, w, subset)
    return min_coset_reps(rs, subset).index(representative)


@lru_cache(maxsize=None)
def coset_permutation(
    rs: RootSystem, w: WeylElt, subset: Tuple[int, ...]
) -> Tuple[int, ...]:
    """Return the permutation a ↦ b of W^I positions with w·u_a W_I = u_b W_I."""

    group = weyl_group(rs)
    return tuple(
        coset_index(rs, group.multiply(w, u), subset) for u in min_coset_reps(rs, subset)
    )


def bruhat_leq(rs: RootSystem, u: WeylElt, v: WeylElt) -> bool:
    """Return `True` if u ≤ v in the Bruhat order, `False` otherwise."""

    group = weyl_group(rs)
    while True:
        if u.length > v.length:
            return False
        if u.length == 0:
            return True
        if u == v:
            return True
        # the last letter of a reduced word is a right descent of v
        s = group.simple(v.word[-1])
        us = group.multiply(u, s)
        if us.length < u.length:
            u = us
        v = group.multiply(v, s)


@dataclass(frozen=True)
class CanonicalElements:
    """Represents the elements of W attached to a weight λ and a subset I."""

    dominant: Weight  # λ₊
    i_dominant: Weight  # λ_{I,+}
    v_bar: WeylElt  # shortest with v̄(λ)λ₊ = λ
    v: WeylElt  # shortest with v(λ)λ ∈ P⁻
    v_bar_i: WeylElt  # shortest in W_I with v̄_I(λ)λ_{I,+} = λ
    stabilizer: Tuple[WeylElt, ...]  # W_{I,λ}
    stabilizer_reps: Tuple[WeylElt, ...]  # (W_I)^λ
    longest_i: WeylElt  # w₀^I
    longest_stabilizer: WeylElt  # w₀^{I,λ}
    v_inversions: Tuple[Weight, ...]  # R(v(λ))


def _descend(
    rs: RootSystem, weight: Weight, subset: Iterable[int], upward: bool
) -> Tuple[Weight, List[int]]:
    """Reflect λ by simple reflections until it is (anti)dominant for the subset.

    Return the final weight μ and the indices (i₁, …, i_m) used, so that
    μ = s_{i_m}···s_{i₁}λ.
    """

    subset = list(subset)
    group = weyl_group(rs)
    steps = []
    current = weight
    while True:
        index = next(
            (
                i
                for i in subset
                if (current.num[i] < 0 if upward else current.num[i] > 0)
            ),
            None,
        )
        if index is None:
            return current, steps
        current = act(group.simple(index), current)
        steps.append(index)


def _longest(elements: Iterable[WeylElt]) -> WeylElt:
    return max(elements, key=lambda w: (w.length, w.word))


@lru_cache(maxsize=None)
def canonical_elements(
    rs: RootSystem, subset: Tuple[int, ...], weight: Weight
) -> CanonicalElements:
    subset = simple_subset(rs, subset)
    group = weyl_group(rs)

    dominant, steps = _descend(rs, weight, full_subset(rs), upward=True)
    v_bar = group.element(steps)
    _, steps = _descend(rs, weight, full_subset(rs), upward=False)
    v = group.element(reversed(steps))
    i_dominant, steps = _descend(rs, weight, subset, upward=True)
    v_bar_i = group.element(steps)

    subgroup = enumerate_subgroup(rs, subset)
    stabilizer = tuple(u for u in subgroup if act(u, weight) == weight)
    representatives: Dict[Weight, WeylElt] = {}
    for u in subgroup:
        image = act(u, weight)
        if image not in representatives:
            representatives[image] = u

    return CanonicalElements(
        dominant=dominant,
        i_dominant=i_dominant,
        v_bar=v_bar,
        v=v,
        v_bar_i=v_bar_i,
        stabilizer=stabilizer,
        stabilizer_reps=tuple(representatives.values()),
        longest_i=_longest(subgroup),
        longest_stabilizer=_longest(stabilizer),
        v_inversions=tuple(inversions(rs, v)),
    )


def longest_element(rs: RootSystem, subset: Iterable[int]) -> WeylElt:
    return _longest(enumerate_subgroup(rs, simple_subset(rs, subset)))
