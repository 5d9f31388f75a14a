"""Shift-reduction of simple-pole rational functions to reduced forms.

A reduced form of f is an f-bar with f - f-bar rationally summable and
f-bar either zero or of polar dispersion zero (at most one pole per
Z-orbit, sitting at the leftmost pole of the orbit).  `simple_reduction`
handles one function; `simple_reduction_multi` reduces several functions
against one shared divisor of initial roots so that common orbits show up
as common poles across the outputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import polys, shiftset
from .errors import DomainError
from .polys import ONE, Poly
from .ratfun import RF_ZERO, RatFun, parfrac


@dataclass(frozen=True)
class ReductionParts:
    """Diagnostic record of the internals of one reduction run.

    `initial` is the divisor of initial roots (the leftmost pole of each
    orbit); `factors[l]` collects the denominator roots exactly l steps right
    of an initial root, `numerators[l]` the matching partial-fraction
    numerators, for l in `indices`.  `shift_gcds[l]` = gcd(b, b(x-l)) and
    `overlap` is their lcm, so initial = denominator / overlap.
    """

    initial: Poly
    indices: tuple[int, ...]
    factors: dict[int, Poly]
    numerators: dict[int, Poly]
    shift_gcds: dict[int, Poly]
    overlap: Poly


@dataclass(frozen=True)
class ReductionOutput:
    reduced: RatFun
    certificate: RatFun | None = None
    parts: ReductionParts | None = None


def _validate_simple(f: RatFun, who: str) -> None:
    if not f.is_proper:
        raise DomainError(f"{who} requires proper rational functions")
    if not polys.is_squarefree(f.den):
        raise DomainError(f"{who} requires squarefree denominators")


def simple_reduction(f: RatFun, want_certificate: bool = False) -> ReductionOutput:
    """Reduced form of a proper simple-pole f, optionally with a certificate
    g satisfying f = reduced + (g(x+1) - g(x)) exactly.

    >>> simple_reduction(RatFun(ONE, Poly([0, 1, 1])), True).certificate
    RatFun('(-1)/(x)')
    """
    _validate_simple(f, "simple_reduction")
    b = f.den
    shifts = shiftset.shift_set(b).shifts
    if not shifts:
        parts = ReductionParts(b, (0,), {0: b}, {0: f.num}, {}, ONE)
        cert = RF_ZERO if want_certificate else None
        return ReductionOutput(f, cert, parts)
    shift_gcds = {ell: polys.gcd(b, b.shift(-ell)) for ell in shifts}
    overlap = polys.lcm_all(shift_gcds.values())
    initial = b.exact_div(overlap)
    factors = {0: initial}
    for ell in shifts:
        bl = polys.gcd(initial.shift(-ell), b)
        if not bl.is_constant:
            factors[ell] = bl
    indices = tuple(sorted(factors))
    nums = parfrac(f, [factors[ell] for ell in indices])
    numerators = dict(zip(indices, nums))
    reduced = RF_ZERO
    certificate = RF_ZERO if want_certificate else None
    for ell in indices:
        piece = RatFun(numerators[ell], factors[ell])
        reduced = reduced + piece.sigma(ell)
        if want_certificate:
            for i in range(ell):
                certificate = certificate - piece.sigma(i)
    parts = ReductionParts(initial, indices, factors, numerators, shift_gcds, overlap)
    return ReductionOutput(reduced, certificate, parts)


def simple_reduction_multi(fs: list[RatFun]) -> list[RatFun]:
    """Compatible reduced forms of several proper simple-pole functions.

    All reductions use the divisor of initial roots of the lcm of the
    denominators, so whenever two inputs have nonzero first-order residue at
    a common orbit their reduced forms share the pole representing it.
    """
    if not fs:
        raise DomainError("simple_reduction_multi requires at least one function")
    for f in fs:
        _validate_simple(f, "simple_reduction_multi")
    b = polys.lcm_all(f.den for f in fs)
    shifts = shiftset.shift_set(b).shifts
    if not shifts:
        return list(fs)
    shift_gcds = {ell: polys.gcd(b, b.shift(-ell)) for ell in shifts}
    overlap = polys.lcm_all(shift_gcds.values())
    initial = b.exact_div(overlap)
    out: list[RatFun] = []
    for f in fs:
        factors = {0: polys.gcd(initial, f.den)}
        for ell in shifts:
            bl = polys.gcd(initial.shift(-ell), f.den)
            if not bl.is_constant:
                factors[ell] = bl
        indices = tuple(sorted(factors))
        nums = parfrac(f, [factors[ell] for ell in indices])
        reduced = RF_ZERO
        for ell, a in zip(indices, nums):
            reduced = reduced + RatFun(a, factors[ell]).sigma(ell)
        out.append(reduced)
    return out
