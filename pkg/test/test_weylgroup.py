import pytest

from pjp.rootsys import Weight, InvalidSubset, parse_root_system
from pjp.weylgroup import (
    weyl_group,
    act,
    inversions,
    parse_word,
    enumerate_subgroup,
    min_coset_reps,
    coset_decompose,
    coset_index,
    coset_permutation,
    bruhat_leq,
    canonical_elements,
    longest_element,
)


def test_group_orders():
    assert len(weyl_group(parse_root_system("A1"))) == 2
    assert len(weyl_group(parse_root_system("A2"))) == 6
    assert len(weyl_group(parse_root_system("B2"))) == 8
    assert len(weyl_group(parse_root_system("G2"))) == 12
    assert len(weyl_group(parse_root_system("A3"))) == 24


def test_words():
    rs = parse_root_system("A2")
    group = weyl_group(rs)

    assert str(group.identity) == "e"
    assert str(group.longest) == "s1*s2*s1"
    assert group.longest.length == 3
    # s1s2s1 = s2s1s2, and the smallest word wins
    assert group.element([1, 0, 1]) == group.longest
    assert str(group.element([1, 0, 1])) == "s1*s2*s1"
    assert group.element([0, 0]) == group.identity

    assert parse_word(rs, "s2*s1") == group.element([1, 0])
    assert parse_word(rs, "e") == group.identity

    with pytest.raises(InvalidSubset):
        parse_word(rs, "t1")
    with pytest.raises(InvalidSubset):
        parse_word(rs, "s3")


def test_action():
    rs = parse_root_system("A2")
    group = weyl_group(rs)
    s1 = group.simple(0)
    w1 = rs.fundamental_weights[0]
    a1 = rs.simple_roots[0]

    assert act(s1, w1) == Weight((-1, 1))
    assert act(s1, a1) == -a1
    assert act(group.longest, w1) == Weight((0, -1))
    assert act(s1, Weight((1, 0), 2)) == Weight((-1, 1), 2)

    assert inversions(rs, s1) == [a1]
    assert len(inversions(rs, group.longest)) == 3

    u = group.element([0, 1])
    assert group.multiply(u, group.inverse(u)) == group.identity


def test_cosets():
    rs = parse_root_system("A2")
    group = weyl_group(rs)

    assert [str(w) for w in enumerate_subgroup(rs, (1,))] == ["e", "s2"]
    assert [str(v) for v in min_coset_reps(rs, (1,))] == ["e", "s1", "s2*s1"]
    assert len(min_coset_reps(rs, ())) == 6
    assert [str(v) for v in min_coset_reps(rs, (0, 1))] == ["e"]

    representative, rest = coset_decompose(rs, group.element([0, 1]), (1,))
    assert str(representative) == "s1"
    assert str(rest) == "s2"

    assert coset_index(rs, group.element([1, 0, 1]), (1,)) == 2
    assert coset_permutation(rs, group.simple(0), (1,)) == (1, 0, 2)


def test_bruhat_order():
    rs = parse_root_system("A2")
    group = weyl_group(rs)
    s1, s2 = group.simple(0), group.simple(1)

    assert bruhat_leq(rs, group.identity, group.longest)
    assert bruhat_leq(rs, s1, group.element([1, 0]))
    assert not bruhat_leq(rs, s1, s2)
    assert not bruhat_leq(rs, group.longest, s1)
    for w in group.elements:
        assert bruhat_leq(rs, w, w)


def test_canonical_elements():
    rs = parse_root_system("A2")
    weight = Weight((-1, 1))

    elements = canonical_elements(rs, (1,), weight)
    assert elements.dominant == Weight((1, 0))
    assert act(elements.v_bar, elements.dominant) == weight
    assert str(elements.v_bar) == "s1"
    assert all(n <= 0 for n in act(elements.v, weight).num)
    assert elements.i_dominant == weight
    assert [str(u) for u in elements.stabilizer_reps] == ["e", "s2"]
    assert str(elements.longest_i) == "s2"

    trivial = canonical_elements(rs, (1,), Weight((1, 0)))
    assert [str(u) for u in trivial.stabilizer] == ["e", "s2"]
    assert [str(u) for u in trivial.stabilizer_reps] == ["e"]

    assert str(longest_element(rs, (0, 1))) == "s1*s2*s1"
