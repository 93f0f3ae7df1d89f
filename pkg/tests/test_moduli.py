import pytest

from coherent_hodge.arith import ONE, U, UV, V, ZERO, BiPoly, RatExpr, one_minus_x_power, x_power
from coherent_hodge.blocks import e_curve, e_grassmannian, e_proj
from coherent_hodge.errors import OutOfScope, PreconditionViolation
from coherent_hodge.moduli import (
    ModuliQuery,
    StratumId,
    beta,
    chamber_count,
    gi_closed_expr,
    hodge,
    hodge_flip,
    hodge_g0_coprime,
    hodge_g0_gcd2,
    hodge_g0_gcd2_strata,
    hodge_gL,
    hodge_gi_closed,
    hodge_gi_recursive,
    hodge_stratum,
    hodge_stratum_constructive,
    rank_offset,
)

CURVE = (ONE + U) * (ONE + V)
X = UV


def test_beta():
    assert beta(5, 1) == 5
    assert beta(7, 7) == 1
    assert beta(6, 2) == 9


def test_query_validation():
    with pytest.raises(PreconditionViolation):
        ModuliQuery(0, 3, 1)
    with pytest.raises(PreconditionViolation):
        ModuliQuery(2, 3, 0)
    with pytest.raises(PreconditionViolation):
        ModuliQuery(2, 3, 1, chamber=-1)


# -- coprime ---------------------------------------------------------------------


def test_coprime_examples():
    assert hodge_g0_coprime(ModuliQuery(2, 3, 1)) == CURVE * (ONE + X + X**2)
    assert hodge_g0_coprime(ModuliQuery(2, 3, 3, fixed_det=True)) == ONE


@pytest.mark.parametrize("d", range(1, 12))
def test_coprime_degree_and_rank_independence(d):
    for k in range(1, d + 1):
        full = hodge_g0_coprime(ModuliQuery(d + 1, d, k))
        assert full.degree() == 2 * beta(d, k)
        assert full == hodge_g0_coprime(ModuliQuery(2 * d + 1, d, k))


def test_coprime_preconditions():
    with pytest.raises(PreconditionViolation):
        hodge_g0_coprime(ModuliQuery(2, 4, 1))
    with pytest.raises(PreconditionViolation):
        hodge_g0_coprime(ModuliQuery(2, 3, 4))


# -- gcd 2 strata -----------------------------------------------------------------


def test_strata_d2():
    q = ModuliQuery(2, 2, 1)
    assert hodge_stratum(q, StratumId.GENERIC) == X * CURVE
    assert hodge_stratum(q, StratumId.SPLIT) == ZERO
    assert hodge_stratum(q, StratumId.EXTENSION) == CURVE


def test_split_fixed_d4():
    q = ModuliQuery(2, 4, 1, fixed_det=True)
    assert hodge_stratum(q, StratumId.SPLIT) == BiPoly.const(4)
    assert hodge_stratum(q, StratumId.SPLIT) == e_grassmannian(2, 2).value * 4


@pytest.mark.parametrize("d", range(2, 23, 2))
@pytest.mark.parametrize("fixed", [False, True])
def test_strata_closed_vs_constructive(d, fixed):
    q = ModuliQuery(6, d, 1, fixed) if d % 3 else ModuliQuery(2, d, 1, fixed)
    for s in StratumId:
        assert hodge_stratum(q, s) == hodge_stratum_constructive(q, s)


def test_strata_preconditions():
    with pytest.raises(PreconditionViolation):
        hodge_stratum(ModuliQuery(2, 4, 2), StratumId.GENERIC)
    with pytest.raises(PreconditionViolation):
        hodge_stratum(ModuliQuery(3, 6, 1), StratumId.GENERIC)
    with pytest.raises(PreconditionViolation):
        hodge_g0_gcd2(ModuliQuery(2, 3, 1))


def test_gcd2_d2():
    assert hodge_g0_gcd2(ModuliQuery(2, 2, 1)) == CURVE * (ONE + X)
    assert hodge_g0_gcd2(ModuliQuery(2, 2, 1, fixed_det=True)) == ONE + X


@pytest.mark.parametrize("d", range(2, 21, 2))
@pytest.mark.parametrize("fixed", [False, True])
def test_gcd2_equals_sum_of_strata(d, fixed):
    q = ModuliQuery(2, d, 1, fixed)
    assert hodge_g0_gcd2_strata(q).value == hodge_g0_gcd2(q)


def test_generic_stratum_does_not_factor():
    full = hodge_stratum(ModuliQuery(2, 4, 1), StratumId.GENERIC)
    fixed = hodge_stratum(ModuliQuery(2, 4, 1, True), StratumId.GENERIC)
    assert full != CURVE * fixed
    # while the totals do
    assert hodge_g0_gcd2(ModuliQuery(2, 4, 1)) == CURVE * hodge_g0_gcd2(ModuliQuery(2, 4, 1, True))


def test_fixed_generic_stratum_d4_by_hand():
    # (1 - x^2)/((1-x)^2 (1+x)) = 1/(1-x); bracket (1 - x^3)(x - 3) + (x - x^2)(u + v)
    # divided by (1 - x) gives (1 + x + x^2)(x - 3) + x(u + v)
    expected = (ONE + X + X**2) * (X - 3) + X * (U + V)
    assert hodge_stratum(ModuliQuery(2, 4, 1, True), StratumId.GENERIC) == expected


# -- chambers ---------------------------------------------------------------------


def test_gL_examples():
    assert hodge_gL(1) == CURVE
    assert hodge_gL(3, fixed_det=True) == ONE + X + X**2
    assert hodge_gL(2) == CURVE * (ONE + X)


def test_flip_examples():
    assert hodge_flip(5, 1, "plus") == CURVE**2
    assert hodge_flip(5, 1, "minus") == (ONE + X + X**2) * CURVE**2
    d, d1 = 5, 2
    diff = hodge_flip(d, d1, "minus") - hodge_flip(d, d1, "plus")
    assert diff == CURVE**2 * e_proj(d1 - 1).value * (e_proj(d - 2 * d1 - 1).value - e_proj(d1 - 1).value)


@pytest.mark.parametrize("d", range(3, 16))
def test_flip_difference_matches_wall_crossing_fraction(d):
    # E^2 (1 - x^d1) / (1 - x)^2 * (x^d1 - x^(d - 2 d1))
    for d1 in range(1, chamber_count(d) + 1):
        expected = RatExpr(
            CURVE**2 * one_minus_x_power(d1) * (x_power(d1) - x_power(d - 2 * d1)),
            (ONE - X) ** 2,
        ).to_poly()
        assert hodge_flip(d, d1, "minus") - hodge_flip(d, d1, "plus") == expected


def test_flip_fixed_det_drops_one_curve_factor():
    for side in ("plus", "minus"):
        assert hodge_flip(7, 2, side) == CURVE * hodge_flip(7, 2, side, fixed_det=True)


def test_flip_preconditions():
    with pytest.raises(PreconditionViolation):
        hodge_flip(4, 2, "plus")
    with pytest.raises(PreconditionViolation):
        hodge_flip(5, 0, "plus")
    with pytest.raises(ValueError):
        hodge_flip(5, 1, "sideways")


def test_recursive_examples():
    assert hodge_gi_recursive(5, 2) == hodge_gL(5)
    assert hodge_gi_recursive(5, 0) == hodge_g0_coprime(ModuliQuery(7, 5, 1))
    assert hodge_gi_recursive(4, 0) == hodge_g0_gcd2(ModuliQuery(2, 4, 1))


def test_closed_examples():
    assert hodge_gi_closed(5, 2) == hodge_gL(5)
    _, correction = gi_closed_expr(5, 2)
    assert not correction.num
    assert hodge_gi_closed(5, 0) == hodge_gi_recursive(5, 0)
    assert hodge_gi_closed(4, 0, fixed_det=True) == hodge_g0_gcd2(ModuliQuery(2, 4, 1, True))


def test_closed_odd_d_at_zero_has_no_correction():
    for d in range(1, 30, 2):
        _, correction = gi_closed_expr(d, 0)
        assert not correction.num


def test_chamber_range():
    with pytest.raises(PreconditionViolation):
        hodge_gi_closed(5, 3)
    with pytest.raises(PreconditionViolation):
        hodge_gi_recursive(5, -1)


@pytest.mark.parametrize("d", range(1, 25))
def test_recursion_equals_closed(d):
    for i in range(chamber_count(d) + 1):
        for fixed in (False, True):
            assert hodge_gi_recursive(d, i, fixed) == hodge_gi_closed(d, i, fixed)


def test_chamber_d6_by_hand():
    # d = 6: L = 2, walls at d1 = 2 (i = 1) and d1 = 1 (i = 2)
    # crossing d1 = 1: E^2 (1 - x)(x - x^4) / (1 - x)^2 = E^2 x (1 + x + x^2)
    g_l = CURVE * e_proj(5).value
    assert hodge_gi_closed(6, 2) == g_l
    assert hodge_gi_closed(6, 1) == g_l + CURVE**2 * X * (ONE + X + X**2)
    # crossing d1 = 2: the factor x^2 - x^(6-4) vanishes
    assert hodge_gi_closed(6, 0) == hodge_gi_closed(6, 1)


# -- dispatch ---------------------------------------------------------------------


def test_rank_offset():
    assert rank_offset(2, 5) == 0
    assert rank_offset(12, 5) == 2
    assert rank_offset(3, 5) is None


def test_dispatch():
    assert hodge(ModuliQuery(2, 3, 1)) == CURVE * (ONE + X + X**2)
    assert hodge(ModuliQuery(2, 4, 1, chamber=0)) == hodge_g0_gcd2(ModuliQuery(2, 4, 1))
    assert hodge(ModuliQuery(10, 4, 1, True, chamber=1)) == hodge_gi_closed(4, 1, True)
    assert hodge(ModuliQuery(3, 5, 2, True)) == e_grassmannian(2, 5).value
    with pytest.raises(OutOfScope):
        hodge(ModuliQuery(3, 6, 1))
    with pytest.raises(OutOfScope):
        hodge(ModuliQuery(3, 5, 1, chamber=1))
    with pytest.raises(OutOfScope):
        hodge(ModuliQuery(2, 4, 2))
    with pytest.raises(PreconditionViolation):
        hodge(ModuliQuery(2, 3, 4))
