"""Exact Hodge polynomials of moduli spaces of coherent systems on an elliptic curve."""

from .arith import BiPoly, RatExpr, exact_div, parity_substitute
from .blocks import HodgeClass, e_curve, e_grassmannian, e_proj
from .errors import HodgeError, NotDivisible, OutOfScope, PreconditionViolation
from .moduli import ModuliQuery, StratumId, hodge, hodge_gi_closed

__all__ = [
    "BiPoly",
    "HodgeClass",
    "HodgeError",
    "ModuliQuery",
    "NotDivisible",
    "OutOfScope",
    "PreconditionViolation",
    "RatExpr",
    "StratumId",
    "e_curve",
    "e_grassmannian",
    "e_proj",
    "exact_div",
    "hodge",
    "hodge_gi_closed",
    "parity_substitute",
]
