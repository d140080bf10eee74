import pytest

from pjp.rootsys import Weight, NotIDominant, InvalidSubset, parse_root_system
from pjp.weylgroup import weyl_group, min_coset_reps
from pjp.laurent import LaurentPoly
from pjp.parabolic import (
    steinberg_weight,
    steinberg_generators,
    alt_steinberg,
    alt_cover_piece,
    figure_table,
    f_i,
    f_i_inverse,
    dominance_leq,
    leq,
    less,
    dominant_ideal,
    lower_ideal,
    box,
    dominant_box,
    DOMINANCE,
    PARABOLIC,
)


def e(rs, *coords):
    return LaurentPoly.monomial(rs, Weight(coords))


def test_steinberg_generators():
    rs = parse_root_system("A2")

    data = steinberg_generators(rs, (1,))
    assert [str(d.v) for d in data] == ["e", "s1", "s2*s1"]
    assert [d.weight for d in data] == [Weight((0, 0)), Weight((1, 0)), Weight((0, 1))]
    assert [d.label for d in data] == [Weight((0, 0)), Weight((-1, 1)), Weight((-1, 0))]
    assert [d.generator for d in data] == [
        LaurentPoly.constant(rs, 1),
        e(rs, -1, 1) + e(rs, 0, -1),
        e(rs, -1, 0),
    ]

    # W_I = W leaves a single generator
    (datum,) = steinberg_generators(rs, (0, 1))
    assert datum.generator == 1

    assert len(steinberg_generators(rs, ())) == 6
    assert len(steinberg_generators(parse_root_system("B2"), ())) == 8


def test_steinberg_weight():
    rs = parse_root_system("A2")
    group = weyl_group(rs)

    assert steinberg_weight(rs, group.identity) == Weight((0, 0))
    assert steinberg_weight(rs, group.longest) == Weight((1, 1))


def test_alt_steinberg():
    rs = parse_root_system("A2")

    data = alt_steinberg(rs, (1,))
    assert [d.label for d in data] == [Weight((0, 0)), Weight((0, 1)), Weight((1, 0))]
    assert [d.generator for d in data] == [
        LaurentPoly.constant(rs, 1),
        e(rs, 1, -1) + e(rs, 0, 1),
        e(rs, 1, 0),
    ]

    assert str(alt_cover_piece(rs, (1,), Weight((0, 0)))) == "e"
    assert str(alt_cover_piece(rs, (1,), Weight((1, 0)))) == "s2*s1"
    for weight in dominant_box(rs, (1,), 2):
        assert alt_cover_piece(rs, (1,), weight) in min_coset_reps(rs, (1,))

    with pytest.raises(NotIDominant):
        alt_cover_piece(rs, (1,), Weight((0, -1)))


def test_figure_table():
    rs = parse_root_system("A2")

    rows = figure_table(rs, [(), (1,), (0, 1)])
    assert len(rows) == 6
    assert rows[0].in_coset_reps == (True, True, True)
    assert sum(1 for row in rows if row.in_coset_reps[1]) == 3
    assert sum(1 for row in rows if row.in_coset_reps[2]) == 1
    assert rows[-1].weight == Weight((1, 1))


def test_bijection():
    rs = parse_root_system("A2")
    group = weyl_group(rs)
    s2s1 = group.element([1, 0])

    assert f_i(rs, (1,), s2s1, Weight((1, 0))) == Weight((-2, 1))
    v, sigma = f_i_inverse(rs, (1,), Weight((-2, 1)))
    assert v == s2s1
    assert sigma == Weight((1, 0))

    for weight in dominant_box(rs, (1,), 2):
        v, sigma = f_i_inverse(rs, (1,), weight)
        assert f_i(rs, (1,), v, sigma) == weight

    with pytest.raises(InvalidSubset):
        f_i(rs, (1,), group.simple(1), Weight((0, 0)))
    with pytest.raises(NotIDominant):
        f_i(rs, (1,), group.identity, Weight((-1, 0)))
    with pytest.raises(NotIDominant):
        f_i_inverse(rs, (1,), Weight((0, -1)))


def test_orders():
    rs = parse_root_system("A2")

    assert dominance_leq(rs, Weight((0, 0)), Weight((1, 1)))
    assert not dominance_leq(rs, Weight((0, 0)), Weight((1, 0)))
    assert leq(rs, (), Weight((0, 0)), Weight((1, 1)), DOMINANCE)

    a1 = parse_root_system("A1")
    assert less(a1, Weight((1,)), Weight((-1,)))
    assert not less(a1, Weight((-1,)), Weight((1,)))
    assert not less(a1, Weight((1,)), Weight((1,)))
    assert less(a1, Weight((0,)), Weight((2,)))

    with pytest.raises(NotIDominant):
        leq(a1, (0,), Weight((-1,)), Weight((1,)), PARABOLIC)


def test_ideals():
    rs = parse_root_system("A2")

    assert dominant_ideal(rs, Weight((1, 1))) == (Weight((0, 0)), Weight((1, 1)))
    assert dominant_ideal(rs, Weight((2, 0))) == (Weight((0, 1)), Weight((2, 0)))

    a1 = parse_root_system("A1")
    assert lower_ideal(a1, (), Weight((-1,))) == (Weight((1,)), Weight((-1,)))
    assert lower_ideal(a1, (0,), Weight((2,))) == (Weight((0,)), Weight((2,)))
    assert lower_ideal(a1, (), Weight((1,))) == (Weight((1,)),)

    with pytest.raises(NotIDominant):
        lower_ideal(a1, (0,), Weight((-2,)))


def test_boxes():
    assert box(parse_root_system("A1"), 1) == [Weight((-1,)), Weight((0,)), Weight((1,))]
    assert dominant_box(parse_root_system("A2"), (0, 1), 1) == [
        Weight((0, 0)),
        Weight((0, 1)),
        Weight((1, 0)),
        Weight((1, 1)),
    ]
