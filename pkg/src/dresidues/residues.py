"""Symbolic extraction of discrete residues.

All outputs follow one convention: a pair of polynomials (places, values).
The roots of `places` mark where residues live, with exactly one
representative per Z-orbit carrying a nonzero residue, and evaluating
`values` at such a root gives the residue there.  No denominator is ever
factored into linear factors; everything runs on gcds, partial fractions,
resultants and modular inverses.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import polys, reduction
from .errors import DomainError
from .hermite import hermite_list
from .polys import ONE, ZERO, Poly
from .ratfun import RatFun


@dataclass(frozen=True)
class ResiduePair:
    """Order-k residue data of one function: (1, 0) when every order-k
    residue vanishes, otherwise a squarefree dispersion-0 `places` whose roots
    represent the orbits with nonzero residue and a `values` polynomial of
    smaller degree evaluating to those residues."""

    places: Poly
    values: Poly

    @property
    def is_trivial(self) -> bool:
        return self.places == ONE

    def astuple(self) -> tuple[Poly, Poly]:
        return self.places, self.values


TRIVIAL_PAIR = ResiduePair(ONE, ZERO)


@dataclass(frozen=True)
class MultiResidues:
    """Coordinated residue data for several functions: one shared squarefree
    dispersion-0 `places` polynomial, and values[i][k-1] evaluating at each
    root of `places` to the order-k residue of function i at that orbit.

    When every input is summable there is no qualifying orbit and `places`
    degenerates to the constant 1 with an all-zero values matrix.
    """

    places: Poly
    values: list[list[Poly]]

    @property
    def order_count(self) -> int:
        return len(self.values[0]) if self.values else 0


def first_residues(f: RatFun) -> ResiduePair:
    """Trager-style first-order residues of a proper simple-pole function.

    Returns (b, r) with b the denominator and r the unique polynomial of
    smaller degree with r * db/dx = numerator (mod b), so that the residue of
    f at each root a of b is r(a).  By convention the zero function gives
    (1, 0).

    >>> first_residues(RatFun(ONE, Poly([0, 1])))
    ResiduePair(places=Poly('x'), values=Poly('1'))
    """
    if f.is_zero:
        return TRIVIAL_PAIR
    if not f.is_proper:
        raise DomainError("first_residues requires a proper rational function")
    b = f.den
    if not polys.is_squarefree(b):
        raise DomainError("first_residues requires a squarefree denominator")
    r = (f.num * polys.inverse_mod(b.derivative(), b)) % b
    return ResiduePair(b, r)


def first_residues_multi(fs: list[RatFun]) -> tuple[Poly, list[Poly]]:
    """First residues of several simple-pole functions over one common
    denominator B = lcm of the individual ones.

    Each returned p_i has degree < deg(B), agrees with the Trager polynomial
    of f_i modulo its own denominator, and vanishes modulo the complementary
    factor B/b_i, so p_i evaluates to the residue of f_i at *every* root of B.
    """
    pairs = [first_residues(f) for f in fs]
    big = polys.lcm_all(pair.places for pair in pairs)
    ps: list[Poly] = []
    for pair in pairs:
        if pair.is_trivial:
            ps.append(ZERO)
            continue
        cof = big.exact_div(pair.places)
        if cof == ONE:
            ps.append(pair.values)
            continue
        # Chinese remainder: p = r (mod b), p = 0 (mod B/b).
        lift = polys.inverse_mod(cof, pair.places)
        ps.append((pair.values * lift) % pair.places * cof)
    return big, ps


def discrete_residues(f: RatFun) -> list[ResiduePair]:
    """All discrete residues of a proper f, one ResiduePair per order k.

    Pipeline: Hermite layers, then an independent shift-reduction of each
    layer, then first residues of each reduced layer.  Pair k is (1, 0)
    exactly when every order-k discrete residue of f vanishes.  The zero
    function yields an empty list.
    """
    return _residues_of_layers(f, coordinated=False)


def discrete_residues_coordinated(f: RatFun) -> list[ResiduePair]:
    """Like `discrete_residues`, but all layers are shift-reduced against one
    shared divisor of initial roots, so the same orbit is represented by the
    same root across different orders."""
    return _residues_of_layers(f, coordinated=True)


def _residues_of_layers(f: RatFun, coordinated: bool) -> list[ResiduePair]:
    if not f.is_proper:
        raise DomainError("discrete_residues requires a proper rational function")
    if f.is_zero:
        return []
    layers = hermite_list(f)
    if coordinated:
        reduceds = reduction.simple_reduction_multi(layers)
    else:
        reduceds = [reduction.simple_reduction(layer).reduced for layer in layers]
    return [first_residues(r) for r in reduceds]


def discrete_residues_multi(fs: list[RatFun]) -> MultiResidues:
    """Discrete residues of several functions over one shared places
    polynomial, compatible across both functions and orders.

    Hermite layers of all inputs are padded to a common order count, reduced
    together, and recombined by the CRT-based multi first-residues.
    """
    if not fs:
        raise DomainError("discrete_residues_multi requires at least one function")
    all_layers: list[list[RatFun]] = []
    for f in fs:
        if f.is_zero or not f.is_proper:
            raise DomainError("discrete_residues_multi requires nonzero proper rational functions")
        all_layers.append(hermite_list(f))
    m = max(len(layers) for layers in all_layers)
    zero = RatFun(ZERO)
    flat: list[RatFun] = []
    for layers in all_layers:
        flat.extend(layers + [zero] * (m - len(layers)))
    reduced = reduction.simple_reduction_multi(flat)
    places, ps = first_residues_multi(reduced)
    values = [ps[i * m : (i + 1) * m] for i in range(len(fs))]
    return MultiResidues(places, values)
