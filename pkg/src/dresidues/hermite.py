"""Hermite reduction and its iteration into simple-pole layers.

`hermite_reduction` splits a proper f as f = d/dx(g) + h with h proper and
squarefree-denominated; `hermite_list` iterates it and rescales so that layer
k carries exactly the order-k coefficients of the full partial fraction
decomposition of f.  Both outputs are canonical: they are uniquely determined
by the stated degree/squarefreeness constraints, independent of the reduction
variant used.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import polys
from .errors import DomainError, InternalError
from .polys import ONE, Poly
from .ratfun import RF_ZERO, RatFun


def hermite_reduction(f: RatFun) -> tuple[RatFun, RatFun]:
    """Split a proper f as f = d/dx(g) + h, h with squarefree denominator.

    Uses the squarefree-decomposition variant: while the denominator has a
    factor V of top multiplicity j >= 2, solve B*(U*V') = A (mod V) and peel
    off the exact derivative of -B/((j-1) V^(j-1)).
    """
    if not f.is_proper:
        raise DomainError("hermite reduction requires a proper rational function")
    if f.is_zero:
        return RF_ZERO, RF_ZERO
    decomp = polys.squarefree_decomposition(f.den)
    if decomp.unit != 1:
        raise InternalError("denominator of a RatFun must be monic")
    entries = list(decomp.factors)
    g = RF_ZERO
    num = f.num
    while entries and max(m for _, m in entries) > 1:
        j = max(m for _, m in entries)
        v = ONE
        u = ONE
        lower: list[tuple[Poly, int]] = []
        for q, m in entries:
            if m == j:
                v = v * q
            else:
                u = u * q**m
                lower.append((q, m))
        dv = v.derivative()
        b = (num * polys.inverse_mod(u * dv, v)) % v
        c = (num - b * u * dv).exact_div(v)
        scale = Fraction(1, j - 1)
        g = g + RatFun(-b * scale, v ** (j - 1))
        num = u * b.derivative() * scale + c
        entries = lower + [(v, j - 1)]
    den = ONE
    for q, m in entries:
        den = den * q**m
    return g, RatFun(num, den)


def hermite_list(f: RatFun) -> list[RatFun]:
    """Iterated Hermite reduction: the layers (f_1, ..., f_m).

    Layer k is the simple-pole function whose residues are the order-k
    coefficients of the partial fraction decomposition of f, i.e.
    f = sum_k ((-1)^(k-1)/(k-1)!) * d^(k-1)/dx^(k-1) (f_k);
    m is the highest pole order of f, interior layers may be zero, and the
    last layer is nonzero.
    """
    if f.is_zero or not f.is_proper:
        raise DomainError("hermite_list requires a nonzero proper rational function")
    hats: list[RatFun] = []
    g = f
    limit = polys.squarefree_decomposition(f.den).max_multiplicity()
    while not g.is_zero:
        if len(hats) > limit:
            raise InternalError("hermite iteration failed to terminate")
        g, h = hermite_reduction(g)
        hats.append(h)
    return [
        h * (Fraction(-1) ** k * math.factorial(k)) for k, h in enumerate(hats)
    ]
