"""Group law, the 1+i endomorphism, its fibers and level sets."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cm_octic.curve import (
    INFINITY,
    add,
    all_points,
    curve_order,
    eta_apply,
    eta_level_sets,
    eta_preimages,
    eta_x_via_rational_map,
    eta_x_via_slope,
    eta_y_via_slope,
    find_point_of_order,
    i_action,
    kernel,
    naive_point_count,
    negate,
    point,
    random_point,
    scalar_mul,
)
from cm_octic.modular import Prime, element, jacobi

from conftest import curve_points_oracle, squares_mod

P17 = Prime(17)
P41 = Prime(41)


def oracle_points(p: Prime):
    out = [INFINITY]
    for xy in curve_points_oracle(p.value):
        if xy is not None:
            out.append(point(p, *xy))
    return out


class TestConstruction:
    def test_on_curve_accepted(self):
        P = point(P17, 5, 1)
        assert (P.x.residue, P.y.residue) == (5, 1)
        assert not P.is_infinity

    def test_off_curve_rejected(self):
        with pytest.raises(ValueError):
            point(P17, 2, 5)

    def test_mixed_fields_rejected(self):
        with pytest.raises(AssertionError):
            add(point(P17, 1, 0), point(P41, 1, 0))

    def test_identity(self):
        assert INFINITY.is_infinity
        assert negate(INFINITY) is INFINITY


class TestGroupLaw:
    def test_two_torsion_chord(self):
        R = add(point(P17, 1, 0), point(P17, 16, 0))
        assert (R.x.residue, R.y.residue) == (0, 0)

    def test_doubling_two_torsion_gives_identity(self):
        T = point(P17, 0, 0)
        assert add(T, T) is INFINITY

    def test_inverse(self):
        P = point(P17, 5, 1)
        assert add(P, negate(P)) is INFINITY
        assert add(INFINITY, P) == P
        assert add(P, INFINITY) == P

    def test_axioms_on_sampled_triples(self):
        for p in (P17, P41, Prime(73)):
            pts = [random_point(p, s) for s in range(8)]
            for A, B, C in itertools.islice(itertools.product(pts, repeat=3), 150):
                assert add(A, B) == add(B, A)
                assert add(add(A, B), C) == add(A, add(B, C))

    def test_lagrange_exhaustive(self):
        for p in (P17, P41):
            n = curve_order(p)
            for P in oracle_points(p):
                assert scalar_mul(n, P).is_infinity

    def test_lagrange_sampled(self):
        p = Prime(97)
        n = curve_order(p)
        for s in range(0, 40, 3):
            assert scalar_mul(n, random_point(p, s)).is_infinity

    def test_scalar_edge_cases(self):
        P = point(P41, 1, 0)
        assert scalar_mul(0, P) is INFINITY
        assert scalar_mul(1, P) == P
        assert scalar_mul(-1, P) == negate(P)
        assert scalar_mul(2, P) is INFINITY

    @settings(deadline=None)
    @given(st.integers(-64, 64), st.integers(-64, 64))
    def test_scalar_linearity(self, m, n):
        P = random_point(P41, 3)
        assert scalar_mul(m + n, P) == add(scalar_mul(m, P), scalar_mul(n, P))


class TestIAction:
    def test_example(self):
        # i = 4 mod 17, so (5, 1) -> (-5, 4) = (12, 4)
        Q = i_action(point(P17, 5, 1))
        assert (Q.x.residue, Q.y.residue) == (12, 4)

    def test_squares_to_negation(self):
        for P in oracle_points(P17):
            assert i_action(i_action(P)) == negate(P)

    def test_is_homomorphism(self):
        pts = [random_point(P41, s) for s in range(10)]
        for A, B in itertools.combinations(pts, 2):
            assert i_action(add(A, B)) == add(i_action(A), i_action(B))

    def test_fixes_kernel(self):
        T = point(P17, 0, 0)
        assert i_action(T) == T
        assert i_action(INFINITY) is INFINITY


class TestEta:
    def test_examples(self):
        assert eta_apply(point(P17, 1, 0)) == point(P17, 0, 0)
        assert eta_apply(point(P17, 0, 0)) is INFINITY
        Q = eta_apply(point(P17, 5, 1))
        assert (Q.x.residue, Q.y.residue) == (4, 14)

    def test_kernel_is_exactly_two_points(self):
        for p in (P17, P41):
            ker = {P for P in oracle_points(p) if eta_apply(P).is_infinity}
            assert ker == set(kernel(p))

    def test_closed_forms_match_chord_formula(self):
        for p in (P17, P41, Prime(73)):
            for P in oracle_points(p):
                if P.is_infinity or P.x.residue == 0:
                    continue
                Q = eta_apply(P)
                x0 = eta_x_via_slope(P)
                assert x0 == eta_x_via_rational_map(P)
                assert x0 == Q.x
                assert eta_y_via_slope(P, x0) == Q.y

    def test_image_x_is_square_or_zero(self):
        for p in (P17, P41):
            sq = squares_mod(p.value)
            for P in oracle_points(p):
                Q = eta_apply(P)
                if not Q.is_infinity:
                    assert Q.x.residue == 0 or Q.x.residue in sq

    def test_squared_is_doubling_after_i(self):
        for p in (P17, P41):
            for P in oracle_points(p):
                assert eta_apply(eta_apply(P)) == scalar_mul(2, i_action(P))

    def test_is_homomorphism(self):
        pts = [random_point(Prime(73), s) for s in range(10)]
        for A, B in itertools.combinations(pts, 2):
            assert eta_apply(add(A, B)) == add(eta_apply(A), eta_apply(B))


class TestEtaPreimages:
    def test_identity_fiber_is_kernel(self):
        assert eta_preimages(INFINITY, P17) == kernel(P17)

    def test_identity_fiber_needs_field(self):
        with pytest.raises(ValueError):
            eta_preimages(INFINITY)

    def test_kernel_point_fiber(self):
        pre = eta_preimages(point(P17, 0, 0))
        assert pre == frozenset({point(P17, 1, 0), point(P17, 16, 0)})

    def test_nonsquare_x_has_empty_fiber(self):
        assert eta_preimages(point(P17, 5, 1)) == frozenset()

    def test_fibers_partition_the_group(self):
        for p in (P17, P41):
            pts = oracle_points(p)
            sq = squares_mod(p.value)
            total = 0
            for Q in pts:
                pre = eta_preimages(Q, p)
                for P in pre:
                    assert eta_apply(P) == Q
                if Q.is_infinity:
                    assert len(pre) == 2
                else:
                    hit = Q.x.residue == 0 or Q.x.residue in sq
                    assert (len(pre) > 0) == hit
                    assert len(pre) in (0, 2)
                total += len(pre)
            assert total == len(pts)


class TestLevelSets:
    def test_p17(self):
        ls = eta_level_sets(P17)
        as_ints = lambda s: {e.residue for e in s}
        assert as_ints(ls.level(1)) == {0}
        assert as_ints(ls.level(2)) == {1, 16}
        assert as_ints(ls.level(3)) == {4, 13}
        assert as_ints(ls.level(4)) == {5, 7, 10, 12}
        # every level-4 x carries points at 17 even though chi = -1 there
        assert ls.rational(4) == ls.level(4)

    def test_p41(self):
        ls = eta_level_sets(P41)
        assert {e.residue for e in ls.level(4)} == {16, 18, 23, 25}

    def test_rational_flags_match_curve_membership(self):
        for v in (17, 41, 73, 89, 97, 113):
            p = Prime(v)
            ls = eta_level_sets(p)
            for k in (1, 2, 3, 4):
                expected = {
                    x for x in ls.level(k) if jacobi((x * x * x - x).residue, p) >= 0
                }
                assert ls.rational(k) == expected
                assert ls.rational(k) <= ls.level(k)

    def test_rejects_wrong_residue_class(self):
        with pytest.raises(ValueError):
            eta_level_sets(Prime(13))


class TestCounting:
    @pytest.mark.parametrize("v,n", [(17, 16), (41, 32), (73, 80), (113, 128)])
    def test_order_examples(self, v, n):
        assert curve_order(Prime(v)) == n

    def test_naive_example(self):
        assert naive_point_count(Prime(13)) == 8

    def test_order_matches_naive_count(self):
        for v in range(5, 500):
            if v % 4 == 1 and all(v % d for d in range(2, v)):
                p = Prime(v)
                assert curve_order(p) == naive_point_count(p), v

    def test_naive_guard(self):
        with pytest.raises(ValueError):
            naive_point_count(Prime(131071))

    def test_enumeration_guard(self):
        with pytest.raises(ValueError):
            list(all_points(Prime(131071)))

    def test_enumeration_matches_count(self):
        for v in (13, 17, 41, 97):
            p = Prime(v)
            pts = list(all_points(p))
            assert pts[0] is INFINITY
            assert len(pts) == naive_point_count(p)
            assert len(set(pts)) == len(pts)


class TestSampling:
    @pytest.mark.parametrize("v,seed,xy", [(17, 0, (0, 0)), (41, 1, (1, 0)), (17, 2, (4, 3))])
    def test_walk_examples(self, v, seed, xy):
        P = random_point(Prime(v), seed)
        assert (P.x.residue, P.y.residue) == xy

    def test_walk_replication(self):
        # independently replay the walk: first x >= seed with x^3 - x a square
        p = Prime(41)
        sq = squares_mod(41)
        for seed in range(41):
            x = seed
            while (x**3 - x) % 41 not in sq | {0}:
                x = (x + 1) % 41
            P = random_point(p, seed)
            assert P.x.residue == x
            rhs = (x**3 - x) % 41
            if rhs == 0:
                assert P.y.residue == 0
            else:
                assert P.y.residue == min(P.y.residue, 41 - P.y.residue)

    def test_deterministic(self):
        assert random_point(P41, 7) == random_point(P41, 7)


class TestFindPointOfOrder:
    def test_order_eight_exists_at_41(self):
        P = find_point_of_order(P41, 8)
        assert P is not None
        assert scalar_mul(8, P).is_infinity
        assert not scalar_mul(4, P).is_infinity

    def test_order_two(self):
        P = find_point_of_order(P17, 2)
        assert P is not None and P.y.residue == 0

    def test_order_one(self):
        assert find_point_of_order(P17, 1) is INFINITY

    def test_full_order_absent_at_17(self):
        # E(F_17) has full 2-torsion, so no point of order 16 despite 16 | n
        assert find_point_of_order(P17, 16) is None

    def test_non_divisor_rejected(self):
        with pytest.raises(ValueError):
            find_point_of_order(P17, 3)

    def test_sampling_path_beyond_exhaustive_bound(self):
        p = Prime(10009)
        P = find_point_of_order(p, 8)
        assert P is not None
        assert scalar_mul(8, P).is_infinity
        assert not scalar_mul(4, P).is_infinity
