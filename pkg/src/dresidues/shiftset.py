"""Integer-shift structure of denominators: shift sets and dispersion.

The shift set of b collects the positive integers l for which b(x) and
b(x+l) share a root; it is read off the resultant R(z) = Res_x(b(x), b(x+z))
without factoring b.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import polys
from .errors import DomainError, InternalError
from .polys import Poly, X


@dataclass(frozen=True)
class ShiftSetResult:
    """Shift set plus the intermediate polynomials kept for diagnostics.

    `resultant` is R(z); `core` is R with the z-factor and repeated factors
    removed; `descended` is the T with T(z^2) = core(z).  All three are None
    on the trivial degree <= 1 branch.
    """

    shifts: tuple[int, ...]
    resultant: Poly | None = None
    core: Poly | None = None
    descended: Poly | None = None

    def as_set(self) -> set[int]:
        return set(self.shifts)


def shift_set(b: Poly, bound: int = 10**6) -> ShiftSetResult:
    """All positive integers l with gcd(b(x), b(x+l)) nonconstant.

    >>> shift_set(Poly([0, 1, 1])).shifts
    (1,)
    """
    if b.is_zero:
        raise DomainError("shift set of the zero polynomial")
    if b.degree <= 1:
        return ShiftSetResult(())
    r = polys.resultant_shift(b)
    core = r.exact_div(X * polys.gcd(r, r.derivative()))
    if any(core.coeff(k) != 0 for k in range(1, len(core.coeffs), 2)):
        raise InternalError("squarefree shift resultant is not even")
    if core.coeff(0) == 0:
        raise InternalError("z still divides the squarefree shift resultant")
    descended = Poly(core.coeffs[::2])
    # A positive root l of descended(z^2) has l^2 dividing the constant term
    # of the primitive integer form (rational root theorem on squares), and
    # l is a difference of two roots of b, so l is at most twice the root
    # bound of b itself.
    prim = polys._to_int_primitive(descended)
    prim_mod = [c % polys._FILTER_PRIME for c in prim]
    diff_limit = 2 * polys._cauchy_root_bound(polys._to_int_primitive(b))
    shifts = []
    for ell in _square_divisor_roots(abs(prim[0]), diff_limit * diff_limit, bound):
        if polys._is_int_root(prim, prim_mod, ell * ell):
            shifts.append(ell)
    return ShiftSetResult(tuple(sorted(shifts)), r, core, descended)


def _square_divisor_roots(constant: int, square_limit: int, bound: int) -> list[int]:
    """Positive l with l^2 dividing `constant` and l^2 <= square_limit."""
    halves = {p: e // 2 for p, e in polys.factor_int(constant, bound).items() if e >= 2}
    out: list[int] = []
    items = sorted(halves.items())

    def rec(i: int, acc: int) -> None:
        if i == len(items):
            out.append(acc)
            return
        p, e = items[i]
        for _ in range(e + 1):
            rec(i + 1, acc)
            if acc * acc > square_limit // (p * p):
                break
            acc *= p

    rec(0, 1)
    return sorted(set(out))


def dispersion(b: Poly) -> int:
    """The largest element of the shift set, or 0 when it is empty."""
    if b.is_zero or b.is_constant:
        raise DomainError("dispersion requires a non-constant polynomial")
    shifts = shift_set(b).shifts
    return shifts[-1] if shifts else 0
