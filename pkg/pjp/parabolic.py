"""
Steinberg generators of the W_I-invariants, the bijection between labels and
(coset representative, dominant weight) pairs, and the orders used to build the
Jacobi polynomials.
"""

from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache

from pjp.rootsys import (
    RootSystem,
    Weight,
    NotIDominant,
    InternalInconsistency,
    InvalidSubset,
    is_dominant,
    simple_subset,
    full_subset,
    simple_root_coordinates,
    height,
    root_lookup,
)
from pjp.weylgroup import (
    WeylElt,
    weyl_group,
    act,
    min_coset_reps,
    canonical_elements,
    bruhat_leq,
    longest_element,
)
from pjp.laurent import LaurentPoly, orbit_sum

from typing import List, Tuple, Iterable

DOMINANCE = "dominance"
EMPTY = "empty"
PARABOLIC = "I"


@dataclass(frozen=True)
class SteinbergDatum:
    v: WeylElt
    weight: Weight  # λ_v
    label: Weight  # v^{-1}λ_v
    generator: LaurentPoly  # φ_v


@dataclass(frozen=True)
class AltSteinbergDatum:
    w: WeylElt
    weight: Weight  # μ_w = −λ_w
    label: Weight  # w₀^I w^{-1}μ_w
    generator: LaurentPoly


@dataclass(frozen=True)
class FigureRow:
    """Represents one row of the table of Steinberg weights over all of W."""

    v: WeylElt
    weight: Weight
    label: Weight
    in_coset_reps: Tuple[bool, ...]  # membership of v in W^I for each listed subset


def steinberg_weight(rs: RootSystem, v: WeylElt) -> Weight:
    """Return λ_v = Σ ϖ_α over simple roots α with v^{-1}α < 0."""

    inverse = weyl_group(rs).inverse(v)
    lookup = root_lookup(rs)
    total = Weight.zero(rs.rank)
    for i, root in enumerate(rs.simple_roots):
        if lookup[act(inverse, root)][1] < 0:
            total = total + Weight.fundamental(rs.rank, i)
    return total


@lru_cache(maxsize=None)
def steinberg_generators(rs: RootSystem, subset: Tuple[int, ...]) -> Tuple[SteinbergDatum, ...]:
    """Return the generators φ_v of ℂ[P]^{W_I} over ℂ[P]^W, one per v ∈ W^I."""

    subset = simple_subset(rs, subset)
    group = weyl_group(rs)
    data = []
    for v in min_coset_reps(rs, subset):
        weight = steinberg_weight(rs, v)
        label = act(group.inverse(v), weight)
        if not is_dominant(rs, label, subset):
            raise InternalInconsistency(
                f"Steinberg label {label.coords} of {v} is not I-dominant"
            )
        data.append(SteinbergDatum(v, weight, label, orbit_sum(rs, subset, label)))
    return tuple(data)


def figure_table(rs: RootSystem, subsets: Iterable[Iterable[int]]) -> List[FigureRow]:
    """Return (v, λ_v, v^{-1}λ_v) for every v ∈ W, marking v ∈ W^I for each subset."""

    subsets = [simple_subset(rs, s) for s in subsets]
    representatives = [set(min_coset_reps(rs, s)) for s in subsets]
    group = weyl_group(rs)
    rows = []
    for v in group.elements:
        weight = steinberg_weight(rs, v)
        rows.append(
            FigureRow(
                v,
                weight,
                act(group.inverse(v), weight),
                tuple(v in reps for reps in representatives),
            )
        )
    return rows


def f_i(rs: RootSystem, subset: Iterable[int], v: WeylElt, sigma: Weight) -> Weight:
    """Return f_I(v, σ) = v^{-1}(λ_v + σ)."""

    subset = simple_subset(rs, subset)
    if v not in min_coset_reps(rs, subset):
        raise InvalidSubset(f"{v} is not a shortest coset representative for I")
    if not is_dominant(rs, sigma, full_subset(rs)):
        raise NotIDominant(f"{sigma.coords} is not dominant")
    group = weyl_group(rs)
    return act(group.inverse(v), steinberg_weight(rs, v) + sigma)


def f_i_inverse(rs: RootSystem, subset: Iterable[int], weight: Weight) -> Tuple[WeylElt, Weight]:
    """Return the unique (v, σ) ∈ W^I × P⁺ with f_I(v, σ) = μ."""

    subset = simple_subset(rs, subset)
    if not is_dominant(rs, weight, subset):
        raise NotIDominant(f"{weight.coords} is not dominant for I={list(subset)}")
    group = weyl_group(rs)
    v = group.inverse(canonical_elements(rs, subset, weight).v_bar)
    sigma = act(v, weight) - steinberg_weight(rs, v)
    if v not in min_coset_reps(rs, subset) or not is_dominant(rs, sigma, full_subset(rs)):
        raise InternalInconsistency(f"no Steinberg decomposition of {weight.coords}")
    return v, sigma


@lru_cache(maxsize=None)
def alt_steinberg(rs: RootSystem, subset: Tuple[int, ...]) -> Tuple[AltSteinbergDatum, ...]:
    """Return the alternative generators m_I(w₀^I w^{-1}μ_w), μ_w = −λ_w, for w ∈ W^I.

    The labels come from the partition of P_I⁺ into the sets w₀^I w^{-1}(μ_w + P⁻).
    """

    subset = simple_subset(rs, subset)
    group = weyl_group(rs)
    longest = longest_element(rs, subset)
    data = []
    for w in min_coset_reps(rs, subset):
        weight = -steinberg_weight(rs, w)
        label = act(group.multiply(longest, group.inverse(w)), weight)
        if not is_dominant(rs, label, subset):
            raise InternalInconsistency(f"alternative label {label.coords} is not I-dominant")
        data.append(AltSteinbergDatum(w, weight, label, orbit_sum(rs, subset, label)))
    return tuple(data)


def alt_cover_piece(rs: RootSystem, subset: Iterable[int], weight: Weight) -> WeylElt:
    """Return the unique w ∈ W^I with λ ∈ w₀^I w^{-1}(μ_w + P⁻)."""

    subset = simple_subset(rs, subset)
    if not is_dominant(rs, weight, subset):
        raise NotIDominant(f"{weight.coords} is not dominant for I={list(subset)}")
    group = weyl_group(rs)
    longest = longest_element(rs, subset)
    pieces = []
    for datum in alt_steinberg(rs, subset):
        offset = act(group.multiply(datum.w, longest), weight) - datum.weight
        if all(n <= 0 for n in offset.num):
            pieces.append(datum.w)
    if len(pieces) != 1:
        raise InternalInconsistency(
            f"{weight.coords} lies in {len(pieces)} pieces of the alternative cover"
        )
    return pieces[0]


def dominance_leq(rs: RootSystem, a: Weight, b: Weight) -> bool:
    """Return `True` if a ⪯ b, i.e. b − a ∈ Q⁺, `False` otherwise."""

    difference = simple_root_coordinates(rs, b - a)
    return all(c >= 0 and c.denominator == 1 for c in difference)


def empty_leq(rs: RootSystem, a: Weight, b: Weight) -> bool:
    """Return `True` if a ≤_∅ b, `False` otherwise."""

    if a == b:
        return True
    trivial = simple_subset(rs, [])
    first = canonical_elements(rs, trivial, a)
    second = canonical_elements(rs, trivial, b)
    if first.dominant == second.dominant:
        return bruhat_leq(rs, first.v_bar, second.v_bar)
    return dominance_leq(rs, first.dominant, second.dominant)


def leq(
    rs: RootSystem, subset: Iterable[int], a: Weight, b: Weight, mode: str = PARABOLIC
) -> bool:
    if mode == DOMINANCE:
        return dominance_leq(rs, a, b)
    if mode == PARABOLIC:
        subset = simple_subset(rs, subset)
        for weight in (a, b):
            if not is_dominant(rs, weight, subset):
                raise NotIDominant(f"{weight.coords} is not dominant for I={list(subset)}")
        return empty_leq(rs, a, b)
    if mode == EMPTY:
        return empty_leq(rs, a, b)
    raise ValueError(f"unknown order: {mode}")


def less(rs: RootSystem, a: Weight, b: Weight) -> bool:
    return a != b and empty_leq(rs, a, b)


@lru_cache(maxsize=None)
def dominant_ideal(rs: RootSystem, weight: Weight) -> Tuple[Weight, ...]:
    """Return all dominant μ with μ ⪯ λ for a dominant λ.

    Every such μ is reached from λ by subtracting one positive root at a time
    while staying dominant.
    """

    found = {weight}
    frontier = [weight]
    while len(frontier) > 0:
        discovered = []
        for mu in frontier:
            for root in rs.positive_roots:
                nu = mu - root
                if nu not in found and all(n >= 0 for n in nu.num):
                    found.add(nu)
                    discovered.append(nu)
        frontier = discovered
    return tuple(sorted(found, key=lambda mu: (height(rs, mu), mu.sort_key())))


def ideal_sort_key(rs: RootSystem, weight: Weight) -> Tuple[Fraction, int, Tuple[int, ...], Tuple[int, ...]]:
    elements = canonical_elements(rs, simple_subset(rs, []), weight)
    return (
        height(rs, elements.dominant),
        elements.v_bar.length,
        elements.v_bar.word,
        weight.sort_key(),
    )


@lru_cache(maxsize=None)
def lower_ideal(rs: RootSystem, subset: Tuple[int, ...], weight: Weight) -> Tuple[Weight, ...]:
    """Return {μ ∈ P_I⁺ | μ ≤_I λ}, ordered by a linear extension of ≤_I (λ last)."""

    subset = simple_subset(rs, subset)
    if not is_dominant(rs, weight, subset):
        raise NotIDominant(f"{weight.coords} is not dominant for I={list(subset)}")
    trivial = simple_subset(rs, [])
    elements = canonical_elements(rs, trivial, weight)
    group = weyl_group(rs)
    members = []
    for dominant in dominant_ideal(rs, elements.dominant):
        orbit = {act(w, dominant) for w in group.elements}
        for mu in orbit:
            if not is_dominant(rs, mu, subset):
                continue
            if dominant == elements.dominant and not bruhat_leq(
                rs, canonical_elements(rs, trivial, mu).v_bar, elements.v_bar
            ):
                continue
            members.append(mu)
    members.sort(key=lambda mu: ideal_sort_key(rs, mu))
    if members[-1] != weight:
        raise InternalInconsistency(f"{weight.coords} is not the top of its own ideal")
    return tuple(members)


def box(rs: RootSystem, radius: int) -> List[Weight]:
    """Return all integral weights with |coordinates| ≤ radius, in lexicographic order."""

    weights = [()]  # type: List[Tuple[int, ...]]
    for _ in range(rs.rank):
        weights = [w + (c,) for w in weights for c in range(-radius, radius + 1)]
    return [Weight(w) for w in weights]


def dominant_box(rs: RootSystem, subset: Iterable[int], radius: int) -> List[Weight]:
    subset = simple_subset(rs, subset)
    return [w for w in box(rs, radius) if is_dominant(rs, w, subset)]
