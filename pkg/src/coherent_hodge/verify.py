"""Identity suite: every structural law the formulas must satisfy, checked exactly.

Each check walks a parameter range, yielding ``(case, thunk)`` pairs; the
runner stops at the first thunk that returns False or raises (a closed form
that fails exact division, say) and reports that case as the witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterator, Optional

from . import moduli
from .arith import ZERO, BiPoly
from .blocks import e_curve, e_grassmannian, e_proj, gaussian_binomial, z2_minus, z2_plus, HodgeClass
from .errors import HodgeError
from .moduli import ModuliQuery, StratumId, beta, chamber_count
from .walls import critical_values, wall_decompositions

DEFAULT_MAX_D = 20
DEFAULT_MAX_A = 3
DEEP_MAX_D = 40

CURVE = e_curve().value


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    witness: Optional[str] = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" witness: {self.witness}" if self.witness else ""
        return f"{status}  {self.name} ({self.cases} cases){tail}"


Check = Callable[[int, int], Iterator[tuple[str, Callable[[], bool]]]]
CHECKS: list[tuple[str, Check]] = []


def check(name: str):
    def register(fn: Check) -> Check:
        CHECKS.append((name, fn))
        return fn

    return register


def _even_ds(max_d: int) -> range:
    return range(2, max_d + 1, 2)


def _chambers(max_d: int) -> Iterator[tuple[int, int, bool]]:
    for d in range(1, max_d + 1):
        for i in range(chamber_count(d) + 1):
            for fixed in (False, True):
                yield d, i, fixed


def _grassmannian_ok(r: int, N: int) -> bool:
    g = e_grassmannian(r, N).value
    top = r * (N - r)
    return (
        g == gaussian_binomial(N, r)
        and g(1, 1) == comb(N, r)
        and g == e_grassmannian(N - r, N).value
        and g.is_integral()
        and g.is_nonnegative()
        and g.degree() == 2 * top
        and all(i == j for i, j in g.terms)
        and all(g.coeff(m, m) == g.coeff(top - m, top - m) for m in range(top + 1))
    )


@check("grassmannian: product formula = Gaussian binomial recurrence")
def _grassmannian(max_d, max_a):
    for N in range(max_d + 1):
        for r in range(N + 1):
            yield f"r={r} N={N}", lambda: _grassmannian_ok(r, N)


@check("blocks: Gr(1, n+1) = P^n and P^n(-1,-1) = n+1")
def _proj(max_d, max_a):
    for n in range(max_d + 1):
        yield f"n={n}", lambda: (
            e_proj(n).value == e_grassmannian(1, n + 1).value and e_proj(n).value(-1, -1) == n + 1
        )


@check("blocks: z2_plus(f) + z2_minus(f) = f^2")
def _z2(max_d, max_a):
    rng = random.Random(max_d * 1000 + max_a)
    samples = [e_curve(), HodgeClass(CURVE - 4)] + [e_proj(n) for n in range(max_d)]
    for _ in range(max_d):
        terms = {(rng.randrange(4), rng.randrange(4)): rng.randint(-5, 5) for _ in range(4)}
        samples.append(HodgeClass(BiPoly(terms)))
    for f in samples:
        yield f"f = {f.value}", lambda: z2_plus(f).value + z2_minus(f).value == f.value * f.value


def _strata_sum_ok(q: ModuliQuery) -> bool:
    total = sum((moduli.hodge_stratum(q, s) for s in StratumId), ZERO)
    return total == moduli.hodge_g0_gcd2(q)


@check("gcd 2: sum of strata = closed form")
def _strata_sum(max_d, max_a):
    for d in _even_ds(max_d):
        for fixed in (False, True):
            q = ModuliQuery(2, d, 1, fixed)
            yield f"d={d} fixed_det={fixed}", lambda: _strata_sum_ok(q)


@check("gcd 2: strata closed formulas = constructive assembly")
def _strata_constructive(max_d, max_a):
    for d in _even_ds(max_d):
        for fixed in (False, True):
            q = ModuliQuery(2, d, 1, fixed)
            for s in StratumId:
                yield (
                    f"d={d} fixed_det={fixed} stratum={s.name.lower()}",
                    lambda: moduli.hodge_stratum(q, s) == moduli.hodge_stratum_constructive(q, s),
                )


@check("chambers: downward recursion = closed form")
def _recursion(max_d, max_a):
    for d, i, fixed in _chambers(max_d):
        yield (
            f"d={d} i={i} fixed_det={fixed}",
            lambda: moduli.hodge_gi_recursive(d, i, fixed) == moduli.hodge_gi_closed(d, i, fixed),
        )


def _boundary_ok(d: int, fixed: bool) -> bool:
    g0 = moduli.hodge_gi_closed(d, 0, fixed)
    if d % 2:
        return g0 == moduli.hodge_gL(d, fixed) and g0 == moduli.hodge_g0_coprime(ModuliQuery(2, d, 1, fixed))
    return g0 == moduli.hodge_g0_gcd2(ModuliQuery(2, d, 1, fixed))


@check("chambers: boundary i=0 agrees with the 0+ formulas")
def _boundary(max_d, max_a):
    for d in range(1, max_d + 1):
        for fixed in (False, True):
            yield f"d={d} fixed_det={fixed}", lambda: _boundary_ok(d, fixed)


@check("determinant: full = (1+u)(1+v) * fixed, for G_0 (gcd 2) and every chamber")
def _determinant(max_d, max_a):
    for d in _even_ds(max_d):
        yield f"gcd2 d={d}", lambda: (
            moduli.hodge_g0_gcd2(ModuliQuery(2, d, 1)) == CURVE * moduli.hodge_g0_gcd2(ModuliQuery(2, d, 1, True))
        )
    for d in range(1, max_d + 1):
        for i in range(chamber_count(d) + 1):
            yield f"chamber d={d} i={i}", lambda: (
                moduli.hodge_gi_closed(d, i) == CURVE * moduli.hodge_gi_closed(d, i, True)
            )


@check("determinant: generic stratum does not factor (d=4)")
def _not_locally_trivial(max_d, max_a):
    if max_d < 4:
        return
    full = ModuliQuery(2, 4, 1)
    fixed = ModuliQuery(2, 4, 1, True)
    yield "d=4", lambda: (
        moduli.hodge_stratum(full, StratumId.GENERIC) != CURVE * moduli.hodge_stratum(fixed, StratumId.GENERIC)
    )


@check("Euler characteristic: full family 0, fixed determinant d")
def _euler(max_d, max_a):
    for d, i, fixed in _chambers(max_d):
        yield f"d={d} i={i} fixed_det={fixed}", lambda: (
            moduli.hodge_gi_closed(d, i, fixed)(-1, -1) == (d if fixed else 0)
        )
    for d in _even_ds(max_d):
        for fixed in (False, True):
            yield f"gcd2 d={d} fixed_det={fixed}", lambda: (
                moduli.hodge_g0_gcd2(ModuliQuery(2, d, 1, fixed))(-1, -1) == (d if fixed else 0)
            )


def _structural_ok(p: BiPoly, dim: int) -> bool:
    return (
        p.degree() == 2 * dim
        and p.top_terms() == {(dim, dim): 1}
        and p.is_symmetric()
        and p.is_integral()
        and p.is_nonnegative()
    )


@check("structure: degree 2*dim, monic, u<->v symmetric, nonnegative integers")
def _structure(max_d, max_a):
    # fixed-determinant spaces have one dimension less than beta(d, k)
    for d, i, fixed in _chambers(max_d):
        yield f"chamber d={d} i={i} fixed_det={fixed}", lambda: (
            _structural_ok(moduli.hodge_gi_closed(d, i, fixed), beta(d, 1) - fixed)
        )
    for d in _even_ds(max_d):
        for fixed in (False, True):
            yield f"gcd2 d={d} fixed_det={fixed}", lambda: (
                _structural_ok(moduli.hodge_g0_gcd2(ModuliQuery(2, d, 1, fixed)), beta(d, 1) - fixed)
            )
    for d in range(1, max_d + 1):
        for k in range(1, d + 1):
            for fixed in (False, True):
                yield f"coprime d={d} k={k} fixed_det={fixed}", lambda: (
                    _structural_ok(moduli.hodge_g0_coprime(ModuliQuery(d + 1, d, k, fixed)), beta(d, k) - fixed)
                )


def _walls_ok(d: int, a: int) -> bool:
    cv = critical_values(d, a)
    top = Fraction(d, 1 + a * d)
    return (
        [(c.alpha, c.n1, c.d1) for c in cv] == wall_decompositions(2 + a * d, d)
        and all(0 < c.alpha < top for c in cv)
        and all(x.alpha < y.alpha for x, y in zip(cv, cv[1:]))
        and [c.index for c in cv] == list(range(1, len(cv) + 1))
        and all(c.n1 == c.d1 * a + 1 and c.d1 + c.d2 == d and c.n1 + c.n2 == 2 + a * d for c in cv)
    )


@check("walls: closed form = exhaustive search for rank 2+ad")
def _walls(max_d, max_a):
    for d in range(1, max_d + 1):
        for a in range(max_a + 1):
            yield f"d={d} a={a}", lambda: _walls_ok(d, a)


@check("walls: no walls for type (1+a*d1, d1, 1)")
def _no_walls(max_d, max_a):
    for d1 in range(1, max_d + 1):
        for a in range(max_a + 1):
            yield f"d1={d1} a={a}", lambda: wall_decompositions(1 + a * d1, d1) == []


@check("walls: number of chambers independent of a")
def _a_independence(max_d, max_a):
    for d in range(1, max_d + 1):
        yield f"d={d}", lambda: {len(wall_decompositions(2 + a * d, d)) for a in range(max_a + 1)} == {chamber_count(d)}


def run_check(name: str, fn: Check, max_d: int, max_a: int) -> CheckResult:
    # thunks are called before the generator advances, so late binding of
    # loop variables inside the lambdas is harmless
    cases = 0
    for case, thunk in fn(max_d, max_a):
        cases += 1
        try:
            ok = thunk()
        except HodgeError as exc:
            return CheckResult(name, False, cases, f"{case} ({type(exc).__name__}: {exc})")
        if not ok:
            return CheckResult(name, False, cases, case)
    return CheckResult(name, True, cases)


def run_suite(max_d: int = DEFAULT_MAX_D, max_a: int = DEFAULT_MAX_A) -> list[CheckResult]:
    if max_d < 2:
        raise ValueError(f"max_d must be >= 2, got {max_d}")
    return [run_check(name, fn, max_d, max_a) for name, fn in CHECKS]
