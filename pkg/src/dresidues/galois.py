"""Multiplicative-relation lattices for diagonal difference systems.

For nonzero rational functions r_1, ..., r_n, the lattice of integer vectors
e with r_1^e_1 ... r_n^e_n a shift-quotient sigma(p)/p determines the
difference Galois group of the diagonal system sigma(Y) = diag(r_i) Y.  It is
computed factorization-free: log-derivatives turn the multiplicative problem
into a summability problem with integer residues, an integer kernel gives the
candidate lattice, and exact constants gamma_j decide which candidates are
genuine relations.
"""

from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass

from . import polys, residues
from .errors import DomainError, InternalError
from .polys import ONE, Poly, interpolate
from .ratfun import RatFun
from .reduction import simple_reduction, simple_reduction_multi


def log_derivative(r: RatFun) -> RatFun:
    """d/dx(r) / r.  Always proper with simple poles and integer residues
    (the residue at a root of the numerator or denominator of r is its
    multiplicity, with sign).

    >>> log_derivative(RatFun(Poly([0, 0, 1])))
    RatFun('(2)/(x)')
    """
    if r.is_zero:
        raise DomainError("log derivative of zero")
    out = r.derivative() / r
    if not out.is_proper or not polys.is_squarefree(out.den):
        raise InternalError("log derivative must be proper with simple poles")
    return out


def exp_log_derivative(g: RatFun) -> RatFun:
    """The monic rational function p with d/dx(p) / p = g, without factoring.

    The candidate residue values are the integer roots of the Rothstein-
    Trager-style resultant Res_x(b(x), z - r(x)) built from the first-residue
    data (b, r) of g; the multiplicity-c part of p is then gcd(b, r - c).
    Raises DomainError when g is not the log derivative of a rational
    function (non-integer residues)."""
    if not g.is_proper:
        raise DomainError("exp_log_derivative requires a proper input")
    if g.is_zero:
        return RatFun(ONE)
    pair = residues.first_residues(g)
    b, r = pair.places, pair.values
    # Res_x(b(x), z - r(x)) as a polynomial in z of degree deg(b), by
    # evaluation at z = 0..deg(b) and exact interpolation; its roots are the
    # residue values of g.
    pts = [
        (Fraction(j), polys.resultant(b, Poly([j]) - r)) for j in range(b.degree + 1)
    ]
    res_poly = interpolate(pts)
    cands = sorted(polys.integer_roots(res_poly) - {0})
    num, den = ONE, ONE
    cover = ONE
    for c in cands:
        part = polys.gcd(b, r - c)
        if part.is_constant:
            continue
        cover = cover * part
        if c > 0:
            num = num * part**c
        else:
            den = den * part ** (-c)
    if cover != b:
        raise DomainError("input is not a logarithmic derivative (non-integer residues)")
    p = RatFun(num, den)
    if log_derivative(p) != g:
        raise DomainError("input is not a logarithmic derivative (reconstruction failed)")
    return p


# -- integer linear algebra -----------------------------------------------------


def integer_kernel(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis of the lattice {e in Z^ncols : M e = 0}, by unimodular column
    reduction of M tracked on an identity block."""
    wcols = [[row[j] for row in rows] for j in range(ncols)]
    ucols = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    start = 0
    for r in range(len(rows)):
        while True:
            active = [j for j in range(start, ncols) if wcols[j][r] != 0]
            if len(active) <= 1:
                break
            piv = min(active, key=lambda j: abs(wcols[j][r]))
            for j in active:
                if j == piv:
                    continue
                q = wcols[j][r] // wcols[piv][r]
                if q:
                    wcols[j] = [a - q * b for a, b in zip(wcols[j], wcols[piv])]
                    ucols[j] = [a - q * b for a, b in zip(ucols[j], ucols[piv])]
        active = [j for j in range(start, ncols) if wcols[j][r] != 0]
        if active:
            j = active[0]
            wcols[start], wcols[j] = wcols[j], wcols[start]
            ucols[start], ucols[j] = ucols[j], ucols[start]
            start += 1
    return [ucols[j] for j in range(start, ncols)]


def hermite_normal_form(rows: list[list[int]]) -> list[list[int]]:
    """Canonical row-style Hermite normal form of the lattice spanned by the
    given integer rows: echelon shape, positive pivots, entries above a pivot
    reduced into [0, pivot).  Two bases span the same lattice exactly when
    their normal forms are equal."""
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return []
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(rank, len(mat)) if mat[i][col] != 0]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda i: abs(mat[i][col]))
            for i in nz:
                if i == piv:
                    continue
                q = mat[i][col] // mat[piv][col]
                if q:
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[piv])]
        nz = [i for i in range(rank, len(mat)) if mat[i][col] != 0]
        if not nz:
            continue
        i = nz[0]
        mat[rank], mat[i] = mat[i], mat[rank]
        if mat[rank][col] < 0:
            mat[rank] = [-a for a in mat[rank]]
        for i in range(rank):
            q = mat[i][col] // mat[rank][col]
            if q:
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return [row for row in mat[:rank]]


def lattice_contains(basis: list[list[int]], vec: list[int]) -> bool:
    """Membership of an integer vector in the lattice spanned by `basis`."""
    hnf = hermite_normal_form(basis)
    v = list(vec)
    for row in hnf:
        col = next(j for j, a in enumerate(row) if a)
        if v[col] % row[col] != 0:
            return False
        q = v[col] // row[col]
        v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def factor_rational(q: Fraction, bound: int = 10**6) -> tuple[int, dict[int, int]]:
    """Sign and prime exponent vector of a nonzero rational number."""
    if q == 0:
        raise DomainError("cannot factor zero")
    sign = -1 if q < 0 else 1
    exps = dict(polys.factor_int(q.numerator * sign, bound))
    for p, e in polys.factor_int(q.denominator, bound).items():
        exps[p] = exps.get(p, 0) - e
    return sign, {p: e for p, e in exps.items() if e}


# -- the two lattice applications -----------------------------------------------


def integer_lattice_solutions(fs: list[RatFun]) -> list[list[int]]:
    """Z-basis of the integer vectors e with e . f summable, for proper
    simple-pole inputs (log-derivative shaped, with integer residues).

    The rational solution space is cut out by the shared residue-value
    polynomials; intersecting with Z^n is an integer kernel computation, done
    on the denominators-cleared coefficient matrix.  The result is returned in
    Hermite normal form."""
    if not fs:
        raise DomainError("integer_lattice_solutions requires at least one function")
    for f in fs:
        if not f.is_proper or not polys.is_squarefree(f.den):
            raise DomainError("inputs must be proper with simple poles")
    reduced = simple_reduction_multi(fs)
    big, ps = residues.first_residues_multi(reduced)
    n = len(fs)
    rows: list[list[int]] = []
    for power in range(max(len(big.coeffs) - 1, 0)):
        frow = [ps[i].coeff(power) for i in range(n)]
        scale = 1
        for c in frow:
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
        row = [int(c * scale) for c in frow]
        if any(row):
            rows.append(row)
    return hermite_normal_form(integer_kernel(rows, n))


@dataclass(frozen=True)
class RelationLattice:
    """Output of `multiplicative_relations`.

    `candidate_basis` spans the lattice of e with e . (log-derivatives)
    summable; `gammas[j]` is the constant (prod r_i^e_i) * p / sigma(p) for
    the j-th candidate with its witness p in `witnesses[j]`; `basis` spans the
    sublattice of genuine multiplicative relations, in candidate coordinates
    mapped back to Z^n."""

    candidate_basis: list[list[int]]
    gammas: list[Fraction]
    witnesses: list[RatFun]
    basis: list[list[int]]


def multiplicative_relations(rs: list[RatFun], bound: int = 10**6) -> RelationLattice:
    """The lattice of integer e with r^e a shift-quotient sigma(p)/p.

    >>> x = Poly([0, 1])
    >>> multiplicative_relations([RatFun(x), RatFun(2 * x)]).gammas
    [Fraction(1, 2)]
    """
    if not rs:
        raise DomainError("multiplicative_relations requires at least one function")
    if any(r.is_zero for r in rs):
        raise DomainError("multiplicative_relations requires nonzero functions")
    fs = [log_derivative(r) for r in rs]
    candidates = integer_lattice_solutions(fs)
    gammas: list[Fraction] = []
    witnesses: list[RatFun] = []
    for e in candidates:
        combo = RatFun(Poly())
        power = RatFun(ONE)
        for ei, fi, ri in zip(e, fs, rs):
            combo = combo + fi * ei
            power = power * ri**ei
        out = simple_reduction(combo, want_certificate=True)
        if not out.reduced.is_zero:
            raise InternalError("candidate relation is not summable")
        p = exp_log_derivative(out.certificate)
        gamma_fun = power * p / p.sigma()
        if not (gamma_fun.num.is_constant and gamma_fun.den.is_constant):
            raise InternalError("relation constant is not constant")
        gammas.append(gamma_fun.num.coeff(0))
        witnesses.append(p)
    basis = [
        _combine(m, candidates) for m in _unit_product_kernel(gammas, bound)
    ]
    return RelationLattice(candidates, gammas, witnesses, hermite_normal_form(basis))


def _combine(m: list[int], basis: list[list[int]]) -> list[int]:
    n = len(basis[0])
    out = [0] * n
    for mj, ej in zip(m, basis):
        out = [a + mj * b for a, b in zip(out, ej)]
    return out


def _unit_product_kernel(gammas: list[Fraction], bound: int) -> list[list[int]]:
    """Basis of {m in Z^s : prod gammas[j]^m[j] = 1}: the integer kernel of
    the prime-exponent matrix, intersected with the even-parity condition of
    the sign coordinate."""
    s = len(gammas)
    if s == 0:
        return []
    signs: list[int] = []
    exps: list[dict[int, int]] = []
    primes: set[int] = set()
    for q in gammas:
        sign, e = factor_rational(q, bound)
        signs.append(0 if sign > 0 else 1)
        exps.append(e)
        primes.update(e)
    rows = [[e.get(p, 0) for e in exps] for p in sorted(primes)]
    kernel = integer_kernel(rows, s)
    # Impose the mod-2 sign condition as an index-2 (or 1) sublattice.
    parities = [sum(si * mi for si, mi in zip(signs, m)) % 2 for m in kernel]
    odd = [i for i, par in enumerate(parities) if par]
    if not odd:
        return kernel
    head = odd[0]
    out: list[list[int]] = []
    for i, m in enumerate(kernel):
        if i == head:
            out.append([2 * a for a in m])
        elif parities[i]:
            out.append([a - b for a, b in zip(m, kernel[head])])
        else:
            out.append(m)
    return out
