from fractions import Fraction

import pytest

from coherent_hodge.errors import PreconditionViolation
from coherent_hodge.walls import critical_values, critical_values_bruteforce, wall_decompositions


def test_d5_a1():
    cv = critical_values(5, 1)
    assert [(c.index, c.d1, c.n1, c.n2, c.alpha) for c in cv] == [
        (1, 2, 3, 4, Fraction(1, 4)),
        (2, 1, 2, 5, Fraction(3, 5)),
    ]
    assert cv[-1].alpha < Fraction(5, 6)


@pytest.mark.parametrize("a", range(4))
def test_no_walls_for_small_d(a):
    assert critical_values(1, a) == []
    assert critical_values(2, a) == []


def test_bruteforce_examples():
    assert critical_values_bruteforce(7, 5) == [Fraction(1, 4), Fraction(3, 5)]
    assert critical_values_bruteforce(3, 2) == []
    assert critical_values_bruteforce(2, 2) == []
    assert critical_values_bruteforce(1, 4) == []


@pytest.mark.parametrize("d", range(1, 16))
@pytest.mark.parametrize("a", range(4))
def test_closed_form_matches_search(d, a):
    cv = critical_values(d, a)
    assert [(c.alpha, c.n1, c.d1) for c in cv] == wall_decompositions(2 + a * d, d)
    top = Fraction(d, 1 + a * d)
    assert all(0 < c.alpha < top for c in cv)
    assert all(x.alpha < y.alpha for x, y in zip(cv, cv[1:]))
    for c in cv:
        assert c.n1 == c.d1 * a + 1
        assert c.n2 == c.d2 * a + 1
        assert 2 * c.d1 < d


@pytest.mark.parametrize("d1", range(1, 10))
@pytest.mark.parametrize("a", range(1, 5))
def test_no_walls_for_rank_one_plus_a_d1(d1, a):
    assert critical_values_bruteforce(1 + a * d1, d1) == []


def test_last_wall_value():
    # alpha_L = (d - 2) / (1 + a(d - 1))
    for d in range(3, 12):
        for a in range(4):
            assert critical_values(d, a)[-1].alpha == Fraction(d - 2, 1 + a * (d - 1))


def test_preconditions():
    with pytest.raises(PreconditionViolation):
        critical_values(0, 1)
    with pytest.raises(PreconditionViolation):
        critical_values(5, -1)
    with pytest.raises(PreconditionViolation):
        wall_decompositions(0, 3)
