"""Summability decisions and the parameterized summable-combination space.

A rational function is summable (a first difference g(x+1) - g(x) of another
rational function) exactly when all its discrete residues vanish.  For a
tuple of functions, the coefficient vectors v making v . f summable form a
vector space cut out by linear conditions on the residue-value polynomials,
solved here with exact fraction-free elimination.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import residues
from .errors import DomainError
from .hermite import hermite_list
from .polys import Poly
from .ratfun import RF_ZERO, RatFun
from .reduction import simple_reduction


def poly_antidifference(p: Poly) -> Poly:
    """A polynomial q with q(x+1) - q(x) = p, via the binomial basis.

    Delta maps binomial(x, k+1) to binomial(x, k), so writing p in the
    binomial basis by iterated differencing at 0 and shifting the basis index
    gives an antidifference (normalized by q(0) = 0).
    """
    # Iterated finite differences of p evaluated at 0.
    diffs: list[Fraction] = []
    cur = p
    while not cur.is_zero:
        diffs.append(cur(0))
        cur = cur.shift(1) - cur
    q = Poly()
    binom = Poly([0, 1])  # binomial(x, 1) = x
    for k, d in enumerate(diffs):
        binom = binom if k == 0 else binom * Poly([-k, 1]) * Fraction(1, k + 1)
        q = q + binom * d
    return q


def is_summable(f: RatFun, want_certificate: bool = False) -> tuple[bool, RatFun | None]:
    """Decide whether f = g(x+1) - g(x) for some rational g.

    Polynomial parts never block a yes: they always admit a polynomial
    antidifference.  With `want_certificate` a witness g is assembled from the
    per-layer reduction certificates through the layer reconstruction
    identity and returned; otherwise the second component is None.
    """
    poly_part, fp = f.proper_part()
    cert = RatFun(poly_antidifference(poly_part)) if want_certificate else None
    if fp.is_zero:
        return True, cert
    layers = hermite_list(fp)
    outs = [simple_reduction(layer, want_certificate) for layer in layers]
    if any(not out.reduced.is_zero for out in outs):
        return False, None
    if want_certificate:
        for k, out in enumerate(outs, 1):
            piece = out.certificate
            for _ in range(k - 1):
                piece = piece.derivative()
            cert = cert + piece * (Fraction(-1) ** (k - 1) / math.factorial(k - 1))
    return True, cert


def nullspace(rows: list[list[Fraction]], ncols: int | None = None) -> list[list[Fraction]]:
    """Exact basis of the right nullspace of a rational matrix.

    Fraction-free (Bareiss) elimination over the integers after clearing
    denominators row by row; pivoting is deterministic (first nonzero column,
    smallest row index).  Basis vectors are normalized with 1 in their free
    coordinate.
    """
    if ncols is None:
        if not rows:
            raise DomainError("nullspace of an empty matrix needs an explicit column count")
        ncols = len(rows[0])
    mat: list[list[int]] = []
    for row in rows:
        if len(row) != ncols:
            raise DomainError("ragged matrix")
        fr = [Fraction(c) for c in row]
        scale = 1
        for c in fr:
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
        ints = [int(c * scale) for c in fr]
        if any(ints):
            mat.append(ints)
    pivots: list[tuple[int, int]] = []
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        for i in range(rank + 1, len(mat)):
            for j in range(col + 1, ncols):
                mat[i][j] = (mat[rank][col] * mat[i][j] - mat[i][col] * mat[rank][j]) // prev
            mat[i][col] = 0
        prev = mat[rank][col]
        pivots.append((rank, col))
        rank += 1
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis: list[list[Fraction]] = []
    for free in free_cols:
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, c in reversed(pivots):
            s = sum((Fraction(mat[r][j]) * vec[j] for j in range(c + 1, ncols)), Fraction(0))
            vec[c] = -s / mat[r][c]
        lead = next(c for c in vec if c != 0)
        basis.append([c / lead for c in vec])
    return basis


def vspace(fs: list[RatFun]) -> list[list[Fraction]]:
    """Basis of the space of coefficient vectors v with v . f summable.

    One linear condition per (order, power-of-x) coefficient of the shared
    residue-value polynomials from `discrete_residues_multi`; v belongs to the
    space exactly when each order's combined value polynomial vanishes
    identically.
    """
    if not fs:
        raise DomainError("vspace requires at least one function")
    md = residues.discrete_residues_multi(fs)
    n = len(fs)
    width = len(md.places.coeffs) - 1  # deg(places); value polys have smaller degree
    rows: list[list[Fraction]] = []
    for k in range(md.order_count):
        for power in range(width):
            rows.append([md.values[i][k].coeff(power) for i in range(n)])
    return nullspace(rows, ncols=n)
