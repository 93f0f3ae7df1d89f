"""Isomorphism and birational-type statements for moduli of coherent systems."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .errors import OutOfScope, PreconditionViolation


class Verdict(enum.Enum):
    ISOMORPHIC = "Isomorphic"
    NOT_ISOMORPHIC = "NotIsomorphic"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    reason: str

    def __str__(self) -> str:
        return f"{self.verdict.value} ({self.reason})"


def classify_isomorphism(n: int, n2: int, d: int, k: int) -> Classification:
    """Compare ``G_0(n, d, k)`` with ``G_0(n2, d, k)`` for ranks coprime to ``d``.

    Congruent ranks mod ``d`` give isomorphic spaces for every ``k``; for
    ``k = 1`` and ``k = d - 1`` non-congruent ranks give non-isomorphic ones.
    Other cases are left undetermined.
    """
    if d < 1 or n < 1 or n2 < 1:
        raise PreconditionViolation(f"need n, n2, d >= 1, got ({n}, {n2}, {d})")
    if gcd(n, d) != 1 or gcd(n2, d) != 1:
        raise PreconditionViolation(
            f"need gcd(n, d) = gcd(n', d) = 1, got gcd({n}, {d}) = {gcd(n, d)}, gcd({n2}, {d}) = {gcd(n2, d)}"
        )
    if not 1 <= k <= d:
        raise PreconditionViolation(f"need 1 <= k <= d, got k={k}, d={d}")
    if (n - n2) % d == 0:
        return Classification(Verdict.ISOMORPHIC, "n' ≡ n mod d")
    if k == 1 or k == d - 1:
        return Classification(
            Verdict.NOT_ISOMORPHIC, f"n' ≢ n mod d and k = {'1' if k == 1 else 'd-1'}"
        )
    return Classification(Verdict.UNDETERMINED, "n' ≢ n mod d and 1 < k < d-1")


class BirationalKind(enum.Enum):
    RATIONAL = "Rational"
    PROJ_BUNDLE_TIMES_CURVE = "ProjBundleTimesCurve"
    FIBRED_OVER_SYM_PROD = "FibredOverSymProd"
    FIBRED_OVER_PROJ_SPACE = "FibredOverProjSpace"


@dataclass(frozen=True)
class BirationalType:
    """``dim`` is set for ProjBundleTimesCurve, ``h`` for the two fibred kinds."""

    kind: BirationalKind
    dim: int | None = None
    h: int | None = None
    reason: str = ""

    def describe(self) -> str:
        if self.kind is BirationalKind.RATIONAL:
            return "rational"
        if self.kind is BirationalKind.PROJ_BUNDLE_TIMES_CURVE:
            return f"birational to P^{self.dim} × C"
        if self.kind is BirationalKind.FIBRED_OVER_SYM_PROD:
            return f"birational to a variety fibred over S^{self.h}C with general fibre unirational"
        return f"birational to a variety fibred over P^{self.h - 1} with general fibre unirational"

    def __str__(self) -> str:
        return self.describe()


def birational_type(n: int, d: int, k: int, fixed_det: bool = False) -> BirationalType:
    """Birational type of ``G(alpha; n, d, k)`` (or ``G(alpha; n, N, k)``), any alpha.

    The first applicable case wins:

    1. gcd(n, d) = 1 and k <= d;
    2. gcd(n, d) = 2 and k = 1;
    3. gcd(n - k, d) = 1 and k < min(d, n);
    4. gcd(n, d) = h > 1 and k < d (fibration over the symmetric product S^hC,
       or over P^(h-1) with fixed determinant).
    """
    if n < 1 or d < 1 or k < 1:
        raise PreconditionViolation(f"need n, d, k >= 1, got ({n}, {d}, {k})")
    h = gcd(n, d)

    def rational_or_bundle(dim: int, reason: str) -> BirationalType:
        if fixed_det:
            return BirationalType(BirationalKind.RATIONAL, reason=reason)
        return BirationalType(BirationalKind.PROJ_BUNDLE_TIMES_CURVE, dim=dim, reason=reason)

    if h == 1 and k <= d:
        return rational_or_bundle(k * (d - k), "gcd(n, d) = 1 and k <= d")
    if h == 2 and k == 1:
        return rational_or_bundle(d - 1, "gcd(n, d) = 2 and k = 1")
    if gcd(n - k, d) == 1 and k < min(d, n):
        return rational_or_bundle(k * (d - k), "gcd(n - k, d) = 1 and k < min(d, n)")
    if h > 1 and k < d:
        kind = BirationalKind.FIBRED_OVER_PROJ_SPACE if fixed_det else BirationalKind.FIBRED_OVER_SYM_PROD
        return BirationalType(kind, h=h, reason=f"gcd(n, d) = {h} > 1 and k < d")
    raise OutOfScope(
        f"no birational description for (n, d, k) = ({n}, {d}, {k}): "
        "need gcd(n,d)=1 with k<=d, gcd(n,d)=2 with k=1, gcd(n-k,d)=1 with k<min(d,n), or k<d"
    )


def birational_type_count_bound(d: int) -> int:
    """Upper bound on the number of birational types of ``G(alpha; n, d, 1)``
    over all ``n`` and ``alpha``: the number of divisors of ``d``."""
    if d < 1:
        raise PreconditionViolation(f"need d >= 1, got {d}")
    count, p, m = 1, 2, d
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        count *= e + 1
        p += 1
    if m > 1:
        count *= 2
    return count
