"""Exact sparse polynomials in two variables ``u`` and ``v``.

Coefficients are exact rationals.  Internally a coefficient is kept as an
``int`` whenever it is integral and as a :class:`fractions.Fraction` otherwise;
both compare and hash consistently, so the term map is a canonical form.

The zero polynomial is the empty term map.  Values are immutable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .errors import DivisionByZero, NotDivisible

Rational = Fraction
Scalar = Union[int, Fraction]
Exponent = tuple[int, int]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"-3/4"`` to a Fraction.

    Floats are rejected: every value in this package is exact.
    """
    if isinstance(x, bool):
        raise TypeError("bool is not a rational coefficient")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _norm(c):
    # integral Fractions collapse to int so that arithmetic stays on the fast path
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    c = as_rational(c)
    return c.numerator if c.denominator == 1 else c


class BiPoly:
    """Sparse polynomial in ``u`` and ``v`` with exact rational coefficients.

    >>> (U + 1) * (V + 1)
    BiPoly('1 + u + v + uv')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] | Iterable | None = None):
        clean: dict[Exponent, Scalar] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (i, j), c in items:
                i, j = int(i), int(j)
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent ({i}, {j})")
                c = _norm(c)
                if c:
                    clean[(i, j)] = _norm(clean.get((i, j), 0) + c)
                    if not clean[(i, j)]:
                        del clean[(i, j)]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "BiPoly":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = 1) -> "BiPoly":
        return cls({(i, j): c})

    @classmethod
    def coerce(cls, x) -> "BiPoly":
        if isinstance(x, BiPoly):
            return x
        return cls.const(as_rational(x))

    @property
    def terms(self) -> Mapping[Exponent, Scalar]:
        return MappingProxyType(self._terms)

    def coeff(self, i: int, j: int) -> Fraction:
        return Fraction(self._terms.get((i, j), 0))

    def sorted_terms(self) -> list[tuple[Exponent, Scalar]]:
        """Terms in canonical order: ascending total degree, then descending u-degree."""
        return sorted(self._terms.items(), key=lambda t: (t[0][0] + t[0][1], -t[0][0]))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == BiPoly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        try:
            other = BiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = BiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        return BiPoly.coerce(other) - self

    def __mul__(self, other):
        try:
            other = BiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BiPoly":
        return poly_pow(self, e)

    def __call__(self, u0, v0) -> Fraction:
        return poly_eval(self, u0, v0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((i + j for i, j in self._terms), default=-1)

    def top_terms(self) -> dict[Exponent, Scalar]:
        """Terms of maximal total degree."""
        deg = self.degree()
        return {e: c for e, c in self._terms.items() if e[0] + e[1] == deg}

    def swap(self) -> "BiPoly":
        """``f(v, u)``."""
        return BiPoly._raw({(j, i): c for (i, j), c in self._terms.items()})

    def is_symmetric(self) -> bool:
        return self == self.swap()

    def is_integral(self) -> bool:
        return all(type(c) is int for c in self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def specialize_v_to_u(self) -> "BiPoly":
        """``f(u, u)``, returned as a polynomial in ``u`` alone."""
        out: dict[Exponent, Scalar] = {}
        for (i, j), c in self._terms.items():
            out[(i + j, 0)] = out.get((i + j, 0), 0) + c
        return BiPoly(out)

    def to_plain(self) -> str:
        return format_plain(self)

    def to_latex(self) -> str:
        return format_latex(self)

    def to_json(self) -> str:
        return json.dumps(to_json_obj(self))

    def __str__(self) -> str:
        return format_plain(self)

    def __repr__(self) -> str:
        return f"BiPoly({format_plain(self)!r})"


ZERO = BiPoly()
ONE = BiPoly.const(1)
U = BiPoly.monomial(1, 0)
V = BiPoly.monomial(0, 1)
UV = BiPoly.monomial(1, 1)


def x_power(n: int, c: Scalar = 1) -> BiPoly:
    """``c * (uv)**n``."""
    return BiPoly.monomial(n, n, c)


def one_minus_x_power(n: int) -> BiPoly:
    """``1 - (uv)**n``; the zero polynomial when ``n == 0``."""
    return ONE - x_power(n)


def poly_add(a: BiPoly, b: BiPoly) -> BiPoly:
    if len(a._terms) < len(b._terms):
        a, b = b, a
    out = dict(a._terms)
    for e, c in b._terms.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = _norm(s)
        else:
            out.pop(e, None)
    return BiPoly._raw(out)


def poly_mul(a: BiPoly, b: BiPoly) -> BiPoly:
    if not a._terms or not b._terms:
        return ZERO
    out: dict[Exponent, Scalar] = {}
    get = out.get
    bt = list(b._terms.items())
    for (i1, j1), c1 in a._terms.items():
        for (i2, j2), c2 in bt:
            e = (i1 + i2, j1 + j2)
            out[e] = get(e, 0) + c1 * c2
    return BiPoly._raw({e: _norm(c) for e, c in out.items() if c})


def poly_pow(a: BiPoly, e: int) -> BiPoly:
    if e < 0:
        raise ValueError("negative exponent")
    result, base = ONE, a
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def parity_substitute(a: BiPoly) -> BiPoly:
    """``f(-u**2, -v**2)``."""
    return BiPoly._raw(
        {(2 * i, 2 * j): (-c if (i + j) & 1 else c) for (i, j), c in a._terms.items()}
    )


def poly_eval(a: BiPoly, u0, v0) -> Fraction:
    u0, v0 = _norm(as_rational(u0)), _norm(as_rational(v0))
    total = 0
    for (i, j), c in a._terms.items():
        total += c * u0**i * v0**j
    return Fraction(total)


# -- exact division -----------------------------------------------------------
#
# A BiPoly is viewed as a polynomial in u whose coefficients lie in Q[v].  At
# each step the leading u-coefficient of the running remainder must be an exact
# multiple (in Q[v]) of the divisor's leading u-coefficient; if b divides a in
# Q[u, v] this holds at every step, so a failure proves non-divisibility.


def _by_u(p: BiPoly) -> dict[int, dict[int, Scalar]]:
    rows: dict[int, dict[int, Scalar]] = {}
    for (i, j), c in p._terms.items():
        rows.setdefault(i, {})[j] = c
    return rows


def _from_rows(rows: Mapping[int, Mapping[int, Scalar]]) -> BiPoly:
    return BiPoly._raw({(i, j): c for i, row in rows.items() for j, c in row.items()})


def _vdiv(num: dict[int, Scalar], den: dict[int, Scalar]) -> dict[int, Scalar] | None:
    """Exact univariate division in Q[v]; None if a remainder is left."""
    num = dict(num)
    dd = max(den)
    lc = den[dd]
    q: dict[int, Scalar] = {}
    while num:
        dn = max(num)
        if dn < dd:
            return None
        top = num[dn]
        if type(top) is int and type(lc) is int and top % lc == 0:
            c = top // lc
        else:
            c = _norm(Fraction(top) / lc)
        s = dn - dd
        q[s] = c
        for j, dc in den.items():
            k = j + s
            r = num.get(k, 0) - c * dc
            if r:
                num[k] = _norm(r)
            else:
                num.pop(k, None)
    return q


def exact_div(a: BiPoly, b: BiPoly) -> BiPoly:
    """Return ``q`` with ``a == b * q``.

    Raises :class:`DivisionByZero` for ``b == 0`` and :class:`NotDivisible`
    when ``b`` does not divide ``a`` in ``Q[u, v]``.
    """
    if not b:
        raise DivisionByZero("exact_div by the zero polynomial")
    if not a:
        return ZERO
    rem = _by_u(a)
    div = _by_u(b)
    db = max(div)
    lcb = div[db]
    quot: dict[int, dict[int, Scalar]] = {}
    while rem:
        da = max(rem)
        qc = _vdiv(rem[da], lcb) if da >= db else None
        if qc is None:
            raise NotDivisible(a, b, _from_rows(quot), _from_rows(rem))
        s = da - db
        quot[s] = qc
        for i, row in div.items():
            target = rem.setdefault(i + s, {})
            for j1, c1 in row.items():
                for j2, c2 in qc.items():
                    k = j1 + j2
                    r = target.get(k, 0) - c1 * c2
                    if r:
                        target[k] = _norm(r)
                    else:
                        target.pop(k, None)
            if not target:
                del rem[i + s]
    return _from_rows(quot)


@dataclass(frozen=True, eq=False)
class RatExpr:
    """A formal quotient ``num / den`` of two BiPoly."""

    num: BiPoly
    den: BiPoly = ONE

    def __post_init__(self):
        if not self.den:
            raise DivisionByZero("RatExpr with zero denominator")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatExpr):
            return NotImplemented
        return ratexpr_eq(self, other)

    __hash__ = None

    def __add__(self, other: "RatExpr") -> "RatExpr":
        if self.den == other.den:
            return RatExpr(self.num + other.num, self.den)
        return RatExpr(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatExpr") -> "RatExpr":
        return self + RatExpr(-other.num, other.den)

    def __mul__(self, other: "RatExpr") -> "RatExpr":
        return RatExpr(self.num * other.num, self.den * other.den)

    def to_poly(self) -> BiPoly:
        return ratexpr_to_poly(self)


def ratexpr_to_poly(r: RatExpr) -> BiPoly:
    return exact_div(r.num, r.den)


def ratexpr_eq(a: RatExpr, b: RatExpr) -> bool:
    return a.num * b.den == b.num * a.den


# -- serialization ------------------------------------------------------------


def _monomial_str(i: int, j: int, latex: bool) -> str:
    parts = []
    for name, e in (("u", i), ("v", j)):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{{{e}}}" if latex else f"{name}^{e}")
    return "".join(parts)


def _format(p: BiPoly, latex: bool) -> str:
    if not p:
        return "0"
    out = []
    for n, ((i, j), c) in enumerate(p.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        mono = _monomial_str(i, j, latex)
        if isinstance(a, Fraction):
            coef = f"\\frac{{{a.numerator}}}{{{a.denominator}}}" if latex else f"({a})"
        else:
            coef = "" if (a == 1 and mono) else str(a)
        body = coef + mono
        if n == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def format_plain(p: BiPoly) -> str:
    """``'1 + u + v + 2uv + u^2v + uv^2'``-style text."""
    return _format(p, latex=False)


def format_latex(p: BiPoly) -> str:
    """LaTeX text with braced exponents, e.g. ``'3u^{2}v^{2}'``."""
    return _format(p, latex=True)


def to_json_obj(p: BiPoly) -> dict:
    terms = []
    for (i, j), c in p.sorted_terms():
        c = Fraction(c)
        terms.append({"u": i, "v": j, "num": str(c.numerator), "den": str(c.denominator)})
    return {"terms": terms}


def from_json_obj(obj: Mapping) -> BiPoly:
    terms = {}
    for t in obj["terms"]:
        den = int(t["den"])
        if den <= 0:
            raise ValueError(f"non-positive denominator in {t!r}")
        e = (int(t["u"]), int(t["v"]))
        if e in terms:
            raise ValueError(f"duplicate exponent {e}")
        terms[e] = Fraction(int(t["num"]), den)
    return BiPoly(terms)


def from_json(text: str) -> BiPoly:
    return from_json_obj(json.loads(text))
