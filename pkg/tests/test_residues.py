import random
from fractions import Fraction

import pytest

from conftest import assert_multi_matches_oracle, assert_pairs_match_oracle
from dresidues.errors import DomainError
from dresidues.polys import ONE, ZERO, Poly, X, is_squarefree
from dresidues.ratfun import RF_ZERO, RatFun
from dresidues.residues import (
    TRIVIAL_PAIR,
    discrete_residues,
    discrete_residues_coordinated,
    discrete_residues_multi,
    first_residues,
    first_residues_multi,
)
from dresidues.shiftset import dispersion
from dresidues.summability import nullspace
from dresidues.testkit import build_from_spec, orbit_spec, random_orbit_spec

x = X


class TestFirstResidues:
    def test_single_pole(self):
        pair = first_residues(RatFun(ONE, x))
        assert pair.astuple() == (x, ONE)

    def test_golden(self, golden):
        pair = first_residues(golden["fbar1"])
        assert pair.places == golden["B1"]
        assert pair.values == golden["D1"]
        assert pair.values(-3) == Fraction(71, 5000)

    def test_irreducible_quadratic(self):
        pair = first_residues(RatFun(ONE, x**2 + 1))
        assert pair.places == x**2 + 1
        assert pair.values == -x * Fraction(1, 2)
        # r * db/dx = a (mod b), re-verified
        assert (pair.values * Poly([0, 2]) - ONE) % (x**2 + 1) == ZERO

    def test_zero_convention(self):
        assert first_residues(RF_ZERO) == TRIVIAL_PAIR

    def test_rejects_non_squarefree(self):
        with pytest.raises(DomainError):
            first_residues(RatFun(ONE, x**2))

    def test_congruence_random(self):
        rng = random.Random(131)
        for _ in range(25):
            f = build_from_spec(random_orbit_spec(rng, max_orbits=4, max_order=1))
            if f.is_zero:
                continue
            pair = first_residues(f)
            assert (pair.values * pair.places.derivative() - f.num) % pair.places == ZERO
            assert pair.values.degree < pair.places.degree


class TestFirstResiduesMulti:
    def test_singleton(self):
        big, ps = first_residues_multi([RatFun(ONE, x)])
        assert big == x and ps == [ONE]

    def test_crt_pair(self):
        big, ps = first_residues_multi([RatFun(ONE, x), RatFun(ONE, x + 1)])
        assert big == x * (x + 1)
        assert ps[0](0) == 1 and ps[0](-1) == 0
        assert ps[1](-1) == 1 and ps[1](0) == 0
        assert ps[0] == x + 1 and ps[1] == -x

    def test_all_zero(self):
        assert first_residues_multi([RF_ZERO, RF_ZERO]) == (ONE, [ZERO, ZERO])

    def test_crt_conditions_random(self):
        rng = random.Random(137)
        for _ in range(15):
            fs = [
                build_from_spec(random_orbit_spec(rng, max_orbits=3, max_order=1))
                for _ in range(rng.randint(1, 4))
            ]
            big, ps = first_residues_multi(fs)
            for f, p in zip(fs, ps):
                if f.is_zero:
                    assert p.is_zero
                    continue
                assert p.is_zero or p.degree < big.degree
                assert (p * f.den.derivative() - f.num) % f.den == ZERO
                cof = big.exact_div(f.den)
                if cof != ONE:
                    assert p % cof == ZERO


class TestDiscreteResidues:
    def test_golden_first_pair(self, golden):
        pairs = discrete_residues(golden["f"])
        assert pairs[0].places == golden["B1"]
        assert pairs[0].values == golden["D1"]

    def test_summable_input_all_trivial(self):
        f = RatFun(Poly([-1]), x).delta()  # 1/(x(x+1))
        assert all(p.is_trivial for p in discrete_residues(f))

    def test_double_pole(self):
        pairs = discrete_residues(RatFun(ONE, x**2))
        assert pairs[0] == TRIVIAL_PAIR
        assert pairs[1].astuple() == (x, ONE)

    def test_zero_gives_empty(self):
        assert discrete_residues(RF_ZERO) == []

    def test_rejects_non_proper(self):
        with pytest.raises(DomainError):
            discrete_residues(RatFun(x**2, x + 1))

    def test_oracle_equivalence_random(self):
        rng = random.Random(139)
        for _ in range(40):
            spec = random_orbit_spec(rng, max_orbits=4, max_order=3)
            f = build_from_spec(spec)
            if f.is_zero:
                continue
            assert_pairs_match_oracle(discrete_residues(f), spec)
            assert_pairs_match_oracle(discrete_residues_coordinated(f), spec)

    def test_structural_invariants_random(self):
        rng = random.Random(149)
        for _ in range(20):
            f = build_from_spec(random_orbit_spec(rng))
            if f.is_zero:
                continue
            for pair in discrete_residues(f):
                if pair.is_trivial:
                    assert pair.values.is_zero
                    continue
                assert is_squarefree(pair.places)
                assert pair.places.is_constant or dispersion(pair.places) == 0
                assert not pair.values.is_zero
                assert pair.values.degree < pair.places.degree

    def test_coordinated_shares_representatives(self, golden):
        pairs = discrete_residues_coordinated(golden["f"])
        # all three orders put the integer-orbit representative at the same
        # root set drawn from one divisor of initial roots
        nontrivial = [p for p in pairs if not p.is_trivial]
        for p in nontrivial:
            assert golden["b0"] % p.places == ZERO

    def test_linearity_via_vspace_membership(self):
        # dres is additive: (f, g, f+g) always admits the combination (1,1,-1).
        from dresidues.summability import vspace

        rng = random.Random(151)
        for _ in range(8):
            f = build_from_spec(random_orbit_spec(rng, max_orbits=3, max_order=2))
            g = build_from_spec(random_orbit_spec(rng, max_orbits=3, max_order=2))
            h = f + g
            if f.is_zero or g.is_zero or h.is_zero:
                continue
            basis = vspace([f, g, h])
            # (1, 1, -1) must lie in the span: residuals of solving must vanish
            rows = [[v[i] for v in basis] for i in range(3)]
            target = [Fraction(1), Fraction(1), Fraction(-1)]
            aug = [row + [t] for row, t in zip(rows, target)]
            # consistency check: rank of [rows] equals rank of [rows | target]
            assert len(nullspace(aug, ncols=len(basis) + 1)) > len(nullspace(rows, ncols=len(basis)))


class TestDiscreteResiduesMulti:
    def test_pair(self):
        md = discrete_residues_multi([RatFun(ONE, x), RatFun(ONE, x + 1)])
        assert md.places == x + 1
        assert md.values[0][0] == ONE and md.values[1][0] == ONE

    def test_mixed_orders(self):
        md = discrete_residues_multi([RatFun(ONE, x**2), RatFun(ONE, x)])
        assert md.places == x
        assert [d for d in md.values[0]] == [ZERO, ONE]
        assert [d for d in md.values[1]] == [ONE, ZERO]

    def test_singleton_consistent_with_single(self, golden):
        md = discrete_residues_multi([golden["f"]])
        assert md.values[0][0](-3) == Fraction(71, 5000)
        pairs = discrete_residues(golden["f"])
        # same orbit count at order 1 even if representatives differ
        assert md.places.degree >= pairs[0].places.degree

    def test_all_summable_degenerates_to_one(self):
        f = RatFun(Poly([-1]), x).delta()
        md = discrete_residues_multi([f, f])
        assert md.places == ONE
        assert all(d.is_zero for row in md.values for d in row)

    def test_rejects_zero_input(self):
        with pytest.raises(DomainError):
            discrete_residues_multi([RF_ZERO])

    def test_rejects_empty(self):
        with pytest.raises(DomainError):
            discrete_residues_multi([])

    def test_oracle_equivalence_random(self):
        rng = random.Random(157)
        for _ in range(15):
            specs = []
            fs = []
            for _ in range(rng.randint(1, 3)):
                spec = random_orbit_spec(rng, max_orbits=3, max_order=3)
                f = build_from_spec(spec)
                if not f.is_zero:
                    specs.append(spec)
                    fs.append(f)
            if not fs:
                continue
            md = discrete_residues_multi(fs)
            assert_multi_matches_oracle(md.places, md.values, specs)
            assert md.places == ONE or is_squarefree(md.places)
            if not md.places.is_constant:
                assert dispersion(md.places) == 0

    def test_shared_orbit_single_representative(self):
        # both functions have order-1 residues on the orbit of 0, plus private orbits
        f1 = build_from_spec(orbit_spec([(0, 1, 1), (Fraction(1, 2), 1, 2)]))
        f2 = build_from_spec(orbit_spec([(7, 1, 3)]))
        md = discrete_residues_multi([f1, f2])
        # orbit of 0 must appear exactly once among the roots of places
        from dresidues.testkit import rational_roots

        roots = rational_roots(md.places)
        integer_roots_found = [r for r in roots if r.denominator == 1]
        assert len(integer_roots_found) == 1
        root = integer_roots_found[0]
        assert md.values[0][0](root) == 1
        assert md.values[1][0](root) == 3
