"""Hom-finiteness, certified CY-fraction lattices, membership and ratios."""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quiverforge.cy_lattice import (CYFraction, build_lattice, cy_dimensions,
                                    dynkin_cy_data, hom_finite, member,
                                    member_certified, solve_ratio)


def member_bruteforce(pair, g1, g2, bound=60):
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if (a * g1[0] + b * g2[0], a * g1[1] + b * g2[1]) == tuple(pair):
                return True
    return False


class TestHomFinite:
    def test_cycle_family_case(self):
        ok, d = hom_finite((6, 7), (-2, -3))
        assert ok and d == 4

    def test_e8_case(self):
        ok, d = hom_finite((14, 15), (4, 4))
        assert ok and d == 4

    def test_proportional_pairs(self):
        ok, d = hom_finite((2, 2), (1, 1))
        assert not ok and d == 0

    def test_zero_ambient_rejected(self):
        with pytest.raises(ValueError):
            hom_finite((0, 0), (1, 1))

    @given(st.tuples(st.integers(-8, 8), st.integers(-8, 8)),
           st.tuples(st.integers(-8, 8), st.integers(-8, 8)))
    @settings(max_examples=80, deadline=None)
    def test_equivalent_conditions(self, g1, g2):
        if g1 == (0, 0):
            return
        ok, d = hom_finite(g1, g2)
        lat = build_lattice(g1, g2)
        assert ok == (d != 0) == (lat.rank == 2) == (lat.det != 0)


class TestCyDimensions:
    def test_cycle_family_is_2cy(self):
        lat = cy_dimensions((6, 7), (-2, -3))
        assert lat.certified == "L"
        ok, coeffs = member((2, 1), lat)
        assert ok and coeffs == (1, 2)

    def test_e8_is_2cy(self):
        lat = cy_dimensions((14, 15), (4, 4))
        assert lat.certified == "L"
        ok, coeffs = member((2, 1), lat)
        assert ok and coeffs == (-1, 4)

    def test_tubular_is_0cy(self):
        lat = cy_dimensions((2, 2), (2, 1))
        assert lat.certified == "L"
        assert member((0, 1), lat)[0]
        assert solve_ratio(0, lat) == CYFraction(0, 1)

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError, match="not Hom-finite"):
            cy_dimensions((2, 2), (1, 1))

    def test_parity_fallback_to_2l(self):
        # d2 odd with e2 even: the first parity condition fails
        lat = cy_dimensions((4, 2), (1, 2))
        assert not lat.parity_first and not lat.parities_hold
        assert lat.certified == "2L"
        assert member_certified((4, 2), lat) is False   # (2,1) is not in L
        assert member_certified((8, 4), lat) is True    # 2*(4,2)

    def test_2l_subset_of_l(self):
        lat = cy_dimensions((4, 2), (1, 2))
        for d in range(-6, 7):
            for e in range(-6, 7):
                if member_certified((d, e), lat):
                    assert member((d, e), lat)[0]


class TestMember:
    def test_odd_first_coordinate(self):
        lat = cy_dimensions((2, 2), (2, 1))
        ok, coeffs = member((1, 0), lat)
        assert not ok and coeffs is None

    def test_zero_vector(self):
        lat = cy_dimensions((6, 7), (-2, -3))
        ok, coeffs = member((0, 0), lat)
        assert ok and coeffs == (0, 0)

    @given(st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
           st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
           st.tuples(st.integers(-6, 6), st.integers(-6, 6)))
    @settings(max_examples=100, deadline=None)
    def test_matches_bruteforce(self, g1, g2, target):
        lat = build_lattice(g1, g2)
        ok, coeffs = member(target, lat)
        assert ok == member_bruteforce(target, g1, g2)
        if ok:
            a, b = coeffs
            assert (a * g1[0] + b * g2[0], a * g1[1] + b * g2[1]) == tuple(target)

    @given(st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
           st.tuples(st.integers(-5, 5), st.integers(-5, 5)))
    @settings(max_examples=60, deadline=None)
    def test_hnf_mutual_membership(self, g1, g2):
        lat = build_lattice(g1, g2)  # constructor validates HNF both ways
        for row in lat.hnf:
            assert member_bruteforce(row, g1, g2)


class TestSolveRatio:
    def test_ratio_two(self):
        lat = cy_dimensions((6, 7), (-2, -3))
        assert solve_ratio(2, lat) == CYFraction(2, 1)

    def test_ratio_half_with_scan_oracle(self):
        lat = cy_dimensions((6, 7), (-2, -3))
        got = solve_ratio(Fraction(1, 2), lat)
        # oracle: scan e = 1.. for the first certified (e/2, e)
        expected = None
        for e in range(1, 200):
            if e % 2 == 0 and member_certified((e // 2, e), lat):
                expected = CYFraction(e // 2, e)
                break
        assert got == expected == CYFraction(4, 8)

    def test_output_always_member_with_exact_ratio(self):
        import random
        rng = random.Random(83)
        for _ in range(60):
            g1 = (rng.randint(-6, 6), rng.randint(-6, 6))
            g2 = (rng.randint(-6, 6), rng.randint(-6, 6))
            if g1 == (0, 0) or not hom_finite(g1, g2)[0]:
                continue
            lat = cy_dimensions(g1, g2)
            r = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
            got = solve_ratio(r, lat)
            assert member_certified((got.d, got.e), lat)
            assert Fraction(got.d, got.e) == r
            assert got.e >= 1

    def test_rank_one_rejected(self):
        lat = build_lattice((2, 2), (4, 4))
        with pytest.raises(ValueError):
            solve_ratio(1, lat)


class TestDynkinData:
    def test_d_even(self):
        assert dynkin_cy_data("D8") == ((6, 7), None)

    def test_d_odd(self):
        assert dynkin_cy_data("D7") == ((10, 12), None)

    def test_e8(self):
        assert dynkin_cy_data("E8") == ((14, 15), None)

    def test_extensions_flagged(self):
        for label in ("A5", "E6", "E7"):
            pair, note = dynkin_cy_data(label)
            assert note is not None and "extension" in note

    def test_a_n_values(self):
        assert dynkin_cy_data("A5")[0] == (4, 6)

    def test_unsupported(self):
        with pytest.raises(ValueError):
            dynkin_cy_data("F4")
