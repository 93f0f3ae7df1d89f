"""Hodge polynomials of moduli spaces of coherent systems on an elliptic curve.

Notation used throughout: ``x = uv``, ``E = (1+u)(1+v)`` (the curve), ``G_i``
is the moduli space in the chamber just above the ``i``-th critical value, so
``i = 0`` is the small-alpha chamber ``0+`` and ``i = L = floor((d-1)/2)`` is the
last chamber before the moduli space becomes empty.

Only ``d`` enters the chamber formulas; the rank ``2 + a d`` does not.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .arith import ONE, U, V, ZERO, BiPoly, RatExpr, exact_div, one_minus_x_power, x_power
from .blocks import (
    HodgeClass,
    e_affine,
    e_curve,
    e_grassmannian,
    e_proj,
    fibration_product,
    stratification_sum,
    z2_minus,
    z2_plus,
)
from .errors import OutOfScope, PreconditionViolation

X = x_power(1)
CURVE = e_curve().value
SUM_UV = U + V  # u + v


class StratumId(enum.IntEnum):
    GENERIC = 1     # E = F1 + F2, F1 != F2 stable
    EXTENSION = 2   # nontrivial 0 -> F -> E -> F -> 0
    SPLIT = 3       # E = F + F


@dataclass(frozen=True)
class ModuliQuery:
    """Which moduli space: type ``(n, d, k)``, optional fixed determinant, chamber.

    ``chamber=None`` means the small-alpha chamber ``0+``.
    """

    n: int
    d: int
    k: int = 1
    fixed_det: bool = False
    chamber: Optional[int] = None

    def __post_init__(self):
        if self.n < 1 or self.d < 1 or self.k < 1:
            raise PreconditionViolation(f"need n, d, k >= 1, got ({self.n}, {self.d}, {self.k})")
        if self.chamber is not None and self.chamber < 0:
            raise PreconditionViolation(f"chamber index must be >= 0, got {self.chamber}")

    @property
    def h(self) -> int:
        return gcd(self.n, self.d)


def beta(d: int, k: int) -> int:
    """Expected dimension ``k(d-k) + 1``."""
    return k * (d - k) + 1


def chamber_count(d: int) -> int:
    """``L = floor((d-1)/2)``: number of critical values for type ``(2+ad, d, 1)``."""
    return (d - 1) // 2


def _gamma(d: int) -> int:
    return 1 if d % 2 else 2


# -- coprime case --------------------------------------------------------------


def hodge_g0_coprime(q: ModuliQuery) -> BiPoly:
    """``gcd(n,d) = 1``: Gr(k,d) for fixed determinant, a Gr(k,d)-bundle over C otherwise."""
    if q.h != 1:
        raise PreconditionViolation(f"gcd(n, d) = {q.h}, need 1")
    if not 1 <= q.k <= q.d:
        raise PreconditionViolation(f"need 1 <= k <= d, got k={q.k}, d={q.d}")
    grass = e_grassmannian(q.k, q.d)
    if q.fixed_det:
        return grass.value
    return fibration_product(e_curve(), grass).value


# -- gcd(n, d) = 2, k = 1: strata ------------------------------------------------


def _check_gcd2(q: ModuliQuery) -> int:
    if q.k != 1:
        raise PreconditionViolation(f"gcd-2 formulas need k = 1, got k={q.k}")
    if q.h != 2:
        raise PreconditionViolation(f"gcd(n, d) = {q.h}, need 2")
    return q.d // 2


def _gcd2_denominator() -> BiPoly:
    # (1 - x)^2 (1 + x)
    return (ONE - X) * (ONE - X) * (ONE + X)


def stratum_expr(q: ModuliQuery, s: StratumId) -> RatExpr:
    """Closed formula for one stratum as an unreduced fraction."""
    h = _check_gcd2(q)
    den = _gcd2_denominator()
    a_h = one_minus_x_power(h)
    if s is StratumId.GENERIC:
        if q.fixed_det:
            bracket = one_minus_x_power(h + 1) * (X - 3) + (X - x_power(h)) * SUM_UV
            return RatExpr(a_h * bracket, den)
        bracket = SUM_UV * (X - x_power(h)) + X * one_minus_x_power(h + 1)
        return RatExpr(CURVE * a_h * bracket, den)
    if s is StratumId.EXTENSION:
        factor = BiPoly.const(4) if q.fixed_det else CURVE
        return RatExpr(factor * x_power(h - 1) * a_h, ONE - X)
    if s is StratumId.SPLIT:
        factor = BiPoly.const(4) if q.fixed_det else CURVE
        return RatExpr(factor * a_h * one_minus_x_power(h - 1), den)
    raise ValueError(s)


def hodge_stratum(q: ModuliQuery, s: StratumId) -> BiPoly:
    """Hodge polynomial of stratum ``s`` of ``G_0(n, d, 1)`` (or ``G_0(n, N, 1)``), gcd(n,d) = 2."""
    return stratum_expr(q, s).to_poly()


def _grassmannian_or_empty(r: int, N: int) -> HodgeClass:
    # Gr(r, N) with r > N is the empty variety
    if r > N:
        return HodgeClass(ZERO, f"Gr({r},{N})")
    return e_grassmannian(r, N)


def hodge_stratum_constructive(q: ModuliQuery, s: StratumId) -> BiPoly:
    """The same strata assembled from blocks, following the geometry:

    * generic: Z2-invariant part of ``P x P`` minus the part over the diagonal
      (full), or the +/- decomposition over ``C_N`` minus 4 points (fixed det);
    * extension: an ``A^(h-1)``-fibration over a ``P^(h-1)``-bundle over ``C``
      (or over four points);
    * split: a ``Gr(2, h)``-fibration over ``C`` (or four copies of ``Gr(2, h)``).
    """
    h = _check_gcd2(q)
    fibre = e_proj(h - 1)
    if q.fixed_det:
        base = HodgeClass(BiPoly.const(4), "4 points")
    else:
        base = e_curve()

    if s is StratumId.GENERIC:
        if not q.fixed_det:
            bundle = fibration_product(e_curve(), fibre)
            over_diagonal = fibration_product(e_curve(), z2_plus(fibre))
            return z2_plus(bundle).value - over_diagonal.value
        # C_N minus its 4 fixed points: total (1+u)(1+v) - 4, quotient P^1 minus 4 points
        punctured = e_curve().value - 4
        plus = e_proj(1).value - 4
        minus = punctured - plus
        return plus * z2_plus(fibre).value + minus * z2_minus(fibre).value
    if s is StratumId.EXTENSION:
        return fibration_product(base, fibration_product(fibre, e_affine(h - 1))).value
    if s is StratumId.SPLIT:
        return fibration_product(base, _grassmannian_or_empty(2, h)).value
    raise ValueError(s)


def _g0_gcd2_bracket(h: int) -> BiPoly:
    # (u+v)(x - x^h) + (1+x)(1 - x^(h+1))
    return SUM_UV * (X - x_power(h)) + (ONE + X) * one_minus_x_power(h + 1)


def g0_gcd2_expr(q: ModuliQuery) -> RatExpr:
    h = _check_gcd2(q)
    num = one_minus_x_power(h) * _g0_gcd2_bracket(h)
    if not q.fixed_det:
        num = CURVE * num
    return RatExpr(num, _gcd2_denominator())


def hodge_g0_gcd2(q: ModuliQuery) -> BiPoly:
    """Closed form for ``G_0(n, d, 1)`` / ``G_0(n, N, 1)`` with gcd(n, d) = 2."""
    return g0_gcd2_expr(q).to_poly()


def hodge_g0_gcd2_strata(q: ModuliQuery) -> HodgeClass:
    return stratification_sum(
        HodgeClass(hodge_stratum(q, s), s.name.lower()) for s in StratumId
    )


# -- chambers for type (2 + a d, d, 1) -------------------------------------------


def hodge_gL(d: int, fixed_det: bool = False) -> BiPoly:
    """Terminal chamber: a ``P^(d-1)``-bundle over the curve."""
    if d < 1:
        raise PreconditionViolation(f"need d >= 1, got {d}")
    fibre = e_proj(d - 1)
    if fixed_det:
        return fibre.value
    return fibration_product(e_curve(), fibre).value


def hodge_flip(d: int, d1: int, side: str, fixed_det: bool = False) -> BiPoly:
    """Flip locus ``G_i^+`` (``side='plus'``) or ``G_i^-`` (``side='minus'``).

    Both are projective bundles over ``C x G_0(1 + a d1, d1, 1)``, the latter
    being a ``P^(d1-1)``-bundle over ``C``.  Fibre dimension is ``d1 - 1`` on the
    plus side and ``d - 2 d1 - 1`` on the minus side.  With fixed determinant
    the first curve factor disappears.
    """
    L = chamber_count(d)
    if not 1 <= d1 <= L or d - 2 * d1 < 1:
        raise PreconditionViolation(f"need 1 <= d1 <= {L} for d={d}, got d1={d1}")
    if side == "plus":
        fibre = e_proj(d1 - 1)
    elif side == "minus":
        fibre = e_proj(d - 2 * d1 - 1)
    else:
        raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")
    g0_small = fibration_product(e_curve(), e_proj(d1 - 1))
    base = g0_small if fixed_det else fibration_product(e_curve(), g0_small)
    return fibration_product(base, fibre).value


def _d1_for_wall(d: int, i: int) -> int:
    return chamber_count(d) - i + 1


def _check_chamber(d: int, i: int) -> int:
    if d < 1:
        raise PreconditionViolation(f"need d >= 1, got {d}")
    L = chamber_count(d)
    if not 0 <= i <= L:
        raise PreconditionViolation(f"chamber index {i} outside 0..{L} for d={d}")
    return L


def hodge_gi_recursive(d: int, i: int, fixed_det: bool = False) -> BiPoly:
    """``G_i`` by walking down from ``G_L``: crossing wall ``j`` removes ``G_j^+``
    and glues in ``G_j^-``."""
    L = _check_chamber(d, i)
    value = hodge_gL(d, fixed_det)
    for j in range(L, i, -1):
        d1 = _d1_for_wall(d, j)
        value = value + hodge_flip(d, d1, "minus", fixed_det) - hodge_flip(d, d1, "plus", fixed_det)
    return value


def gi_closed_expr(d: int, i: int, fixed_det: bool = False) -> tuple[BiPoly, RatExpr]:
    """(terminal-chamber term, correction term) of the closed chamber formula."""
    _check_chamber(d, i)
    g = _gamma(d)
    m = (d - g) // 2 - i
    curve_factor = CURVE if fixed_det else CURVE * CURVE
    num = curve_factor * one_minus_x_power(m) * (X - x_power(g + 2 * i)) * one_minus_x_power(m + 1)
    den = (ONE - X) * (ONE - X) * one_minus_x_power(2)
    return hodge_gL(d, fixed_det), RatExpr(num, den)


def hodge_gi_closed(d: int, i: int, fixed_det: bool = False) -> BiPoly:
    first, correction = gi_closed_expr(d, i, fixed_det)
    return first + correction.to_poly()


# -- dispatch --------------------------------------------------------------------


def rank_offset(n: int, d: int) -> Optional[int]:
    """``a`` with ``n = 2 + a d``, or None."""
    if n >= 2 and (n - 2) % d == 0:
        return (n - 2) // d
    return None


def hodge(q: ModuliQuery) -> BiPoly:
    """Hodge polynomial for any query covered by a known formula.

    * ``0+`` chamber (``chamber`` None or 0) with gcd(n,d) = 1: coprime formula;
    * ``0+`` chamber with gcd(n,d) = 2 and k = 1: gcd-2 closed form;
    * any chamber for type ``(2 + a d, d, 1)``: chamber closed form.
    """
    i = q.chamber
    if i is None or i == 0:
        if q.h == 1:
            return hodge_g0_coprime(q)
        if q.h == 2 and q.k == 1:
            return hodge_g0_gcd2(q)
    if q.k == 1 and rank_offset(q.n, q.d) is not None:
        return hodge_gi_closed(q.d, i or 0, q.fixed_det)
    if i:
        raise OutOfScope(
            f"chamber {i} is only computed for k = 1 and rank n = 2 + a*d; got (n, d, k) = ({q.n}, {q.d}, {q.k})"
        )
    raise OutOfScope(
        f"no formula for G_0({q.n}, {q.d}, {q.k}): need gcd(n, d) = 1, or gcd(n, d) = 2 with k = 1"
    )


__all__ = [
    "ModuliQuery",
    "StratumId",
    "beta",
    "chamber_count",
    "g0_gcd2_expr",
    "gi_closed_expr",
    "hodge",
    "hodge_flip",
    "hodge_g0_coprime",
    "hodge_g0_gcd2",
    "hodge_g0_gcd2_strata",
    "hodge_gL",
    "hodge_gi_closed",
    "hodge_gi_recursive",
    "hodge_stratum",
    "hodge_stratum_constructive",
    "rank_offset",
    "stratum_expr",
]
