"""Hodge polynomials of basic varieties and the rules for combining them.

Everything here is a polynomial in ``u, v``; for the rational varieties
(affine and projective spaces, Grassmannians) it is in fact a polynomial in
``x = uv``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .arith import ONE, U, V, ZERO, BiPoly, exact_div, one_minus_x_power, parity_substitute, x_power
from .errors import InvalidRange


@dataclass(frozen=True)
class HodgeClass:
    """The Hodge polynomial of a named variety.

    The label is documentation only and is ignored by ``==``.
    """

    value: BiPoly
    label: str = field(default="", compare=False)

    def __add__(self, other: "HodgeClass") -> "HodgeClass":
        return stratification_sum([self, other])

    def __mul__(self, other: "HodgeClass") -> "HodgeClass":
        return fibration_product(self, other)

    def __str__(self) -> str:
        return f"{self.label}: {self.value}" if self.label else str(self.value)


def e_point() -> HodgeClass:
    return HodgeClass(ONE, "pt")


def e_curve() -> HodgeClass:
    """The elliptic curve: ``(1+u)(1+v)``."""
    return HodgeClass((ONE + U) * (ONE + V), "C")


def e_affine(n: int) -> HodgeClass:
    if n < 0:
        raise InvalidRange(f"affine space of dimension {n}")
    return HodgeClass(x_power(n), f"A^{n}")


def e_proj(n: int) -> HodgeClass:
    """``1 + uv + ... + (uv)^n``, summed directly."""
    if n < 0:
        raise InvalidRange(f"projective space of dimension {n}")
    return HodgeClass(BiPoly({(m, m): 1 for m in range(n + 1)}), f"P^{n}")


@lru_cache(maxsize=None)
def _grassmannian(r: int, N: int) -> BiPoly:
    # after step m the running value is the Gaussian binomial [N-r+m, m], so
    # every intermediate division is exact
    value = ONE
    for m in range(1, r + 1):
        value = exact_div(value * one_minus_x_power(N - r + m), one_minus_x_power(m))
    return value


def e_grassmannian(r: int, N: int) -> HodgeClass:
    """Grassmannian of ``r``-planes in ``N``-space via the product formula

    ``prod_{m=1..r} (1 - x^(N-r+m)) / (1 - x^m)`` with ``x = uv``.
    """
    if r < 0 or r > N:
        raise InvalidRange(f"Gr({r},{N}) needs 0 <= r <= N")
    return HodgeClass(_grassmannian(r, N), f"Gr({r},{N})")


@lru_cache(maxsize=None)
def gaussian_binomial(N: int, r: int) -> BiPoly:
    """``[N choose r]`` in ``x = uv`` from the Pascal-type recurrence

    ``[N, r] = [N-1, r] + x^(N-r) [N-1, r-1]``.

    Kept independent of :func:`e_grassmannian` so that each checks the other.
    """
    if r < 0 or r > N:
        return ZERO
    if r == 0 or r == N:
        return ONE
    return gaussian_binomial(N - 1, r) + x_power(N - r) * gaussian_binomial(N - 1, r - 1)


def stratification_sum(parts: Iterable[HodgeClass]) -> HodgeClass:
    parts = list(parts)
    total = ZERO
    for p in parts:
        total = total + p.value
    return HodgeClass(total, " + ".join(p.label for p in parts if p.label))


def fibration_product(base: HodgeClass, fibre: HodgeClass) -> HodgeClass:
    """Total space of a fibration that is locally trivial in the Zariski
    topology, or in the complex topology with projective-space fibres."""
    label = f"{fibre.label}-bundle over {base.label}" if base.label and fibre.label else ""
    return HodgeClass(base.value * fibre.value, label)


_HALF = Fraction(1, 2)


def z2_plus(f: HodgeClass) -> HodgeClass:
    """Invariant part of ``X x X`` under swapping the factors:
    ``(f(u,v)^2 + f(-u^2,-v^2)) / 2``."""
    sq = f.value * f.value
    return HodgeClass((sq + parity_substitute(f.value)) * _HALF, f"S^2({f.label})" if f.label else "")


def z2_minus(f: HodgeClass) -> HodgeClass:
    """Anti-invariant part: ``(f(u,v)^2 - f(-u^2,-v^2)) / 2``."""
    sq = f.value * f.value
    return HodgeClass((sq - parity_substitute(f.value)) * _HALF, f"({f.label} x {f.label})_-" if f.label else "")
