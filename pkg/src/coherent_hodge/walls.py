"""Critical values (walls) for coherent systems with one section.

For type ``(n, d, 1)`` a wall comes from a decomposition ``n = n1 + n2``,
``d = d1 + d2`` into a subsystem ``(F1, V1)`` of type ``(n1, d1, 1)`` and a
quotient bundle ``F2`` of type ``(n2, d2)``; the wall sits at

    alpha = (n1 d2 - n2 d1) / n2

and is relevant when it falls strictly between 0 and the emptiness threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionViolation


@dataclass(frozen=True, order=True)
class CriticalValue:
    alpha: Fraction
    index: int
    d1: int
    d2: int
    n1: int
    n2: int

    def as_dict(self) -> dict:
        return {
            "i": self.index,
            "d1": self.d1,
            "d2": self.d2,
            "n1": self.n1,
            "n2": self.n2,
            "alpha": str(self.alpha),
        }


def critical_values(d: int, a: int) -> list[CriticalValue]:
    """Walls for type ``(2 + a d, d, 1)``, in increasing order of ``alpha``.

    >>> [str(c.alpha) for c in critical_values(5, 1)]
    ['1/4', '3/5']
    """
    if d < 1:
        raise PreconditionViolation(f"need d >= 1, got {d}")
    if a < 0:
        raise PreconditionViolation(f"need a >= 0, got {a}")
    L = (d - 1) // 2
    n = 2 + a * d
    out = []
    for i in range(1, L + 1):
        d1 = L - i + 1
        n1 = d1 * a + 1
        out.append(
            CriticalValue(
                alpha=Fraction(d - 2 * d1, 1 + a * (d - d1)),
                index=i,
                d1=d1,
                d2=d - d1,
                n1=n1,
                n2=n - n1,
            )
        )
    return out


def emptiness_threshold(n: int, d: int) -> Fraction:
    """Upper end ``d / (n - 1)`` of the alpha range for type ``(n, d, 1)``, n >= 2."""
    return Fraction(d, n - 1)


def wall_decompositions(n: int, d: int) -> list[tuple[Fraction, int, int]]:
    """All ``(alpha, n1, d1)`` with ``0 < n1 < n``, ``0 < d1 < d`` whose wall lies
    in ``(0, d / (n - 1))``, found by exhaustive search, sorted.

    Rank 1 has no proper subbundles of positive rank and so no walls.
    """
    if n < 1 or d < 1:
        raise PreconditionViolation(f"need n, d >= 1, got ({n}, {d})")
    if n == 1:
        return []
    top = emptiness_threshold(n, d)
    found = []
    for n1 in range(1, n):
        n2 = n - n1
        for d1 in range(1, d):
            d2 = d - d1
            alpha = Fraction(n1 * d2 - n2 * d1, n2)
            if 0 < alpha < top:
                found.append((alpha, n1, d1))
    found.sort()
    return found


def critical_values_bruteforce(n: int, d: int) -> list[Fraction]:
    """Sorted distinct wall values for type ``(n, d, 1)`` by exhaustive search."""
    return sorted({alpha for alpha, _, _ in wall_decompositions(n, d)})
