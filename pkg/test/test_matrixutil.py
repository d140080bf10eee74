import pytest

from fractions import Fraction

from pjp.matrixutil import SingularGram, solve, rank, is_diagonal


def test_solve():
    rows = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]

    assert solve(rows, [Fraction(3), Fraction(5)]) == [Fraction(4, 5), Fraction(7, 5)]
    assert solve([], []) == []

    with pytest.raises(SingularGram):
        solve([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]], [Fraction(1), Fraction(1)])


def test_rank():
    assert rank([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]) == 1
    assert rank([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1, 3)]]) == 2
    assert rank([]) == 0


def test_is_diagonal():
    assert is_diagonal([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(5)]])
    assert not is_diagonal([[Fraction(1), Fraction(1, 2)], [Fraction(0), Fraction(5)]])
