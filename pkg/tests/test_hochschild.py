"""Degreewise homology: rotation classes, invariants, and the norm-induced map."""
import pytest

from quiverforge.algebra import AlgebraElement as AE, norm_map, sigma
from quiverforge.fields import GF, QQ
from quiverforge.hochschild import (b_rank, connes_B, hh0_basis, hh1_basis,
                                    hochschild_table, in_image_of_B)
from quiverforge.quiver import cycle_quiver, g2_quiver, loop_quiver

LOOP = loop_quiver()
Q2 = cycle_quiver(2)
Q4 = cycle_quiver(4)


def orbit_count_oracle(quiver, d):
    """Independent rotation-orbit count: partition cycles by repeated rotation."""
    cycles = set(quiver.cycles_of_length(d))
    seen, count = set(), 0
    for c in sorted(cycles, key=lambda p: p.sort_key()):
        if c in seen:
            continue
        count += 1
        cur = c
        for _ in range(max(1, d)):
            seen.add(cur)
            cur = quiver.rotate_cycle(cur)
    return count


class TestHH0:
    def test_loop_degree3(self):
        basis = hh0_basis(LOOP, QQ, 3)
        assert basis.dimension == 1
        assert basis.vectors[0] == AE.from_word(LOOP, QQ, 4, "1", ["b"] * 3)

    def test_q4_degree4(self):
        basis = hh0_basis(Q4, QQ, 4)
        assert basis.dimension == 1

    def test_q4_degree3_empty(self):
        assert hh0_basis(Q4, QQ, 3).dimension == 0

    def test_degree0_counts_vertices(self):
        assert hh0_basis(Q4, GF(2), 0).dimension == 4

    @pytest.mark.parametrize("quiver", [LOOP, Q2, Q4, g2_quiver()])
    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
    def test_matches_orbit_oracle(self, quiver, d):
        assert hh0_basis(quiver, QQ, d).dimension == orbit_count_oracle(quiver, d)


class TestHH1:
    def test_loop_degree4(self):
        basis, hypers = hh1_basis(LOOP, QQ, 4)
        assert basis.dimension == 1
        assert hypers[0].rho["b"] == AE.from_word(LOOP, QQ, 4, "1", ["b"] * 3)
        assert hypers[0].check().ok

    def test_two_cycle_degree2(self):
        basis, _ = hh1_basis(Q2, QQ, 2)
        assert basis.dimension == 1
        expected = AE.from_word(Q2, QQ, 3, "1", ["a1", "a2"]) + \
            AE.from_word(Q2, QQ, 3, "2", ["a2", "a1"])
        assert basis.vectors[0] == expected

    def test_q4_degree3_empty(self):
        assert hh1_basis(Q4, QQ, 3)[0].dimension == 0

    def test_vectors_are_invariant(self):
        for d in (2, 4, 6):
            basis, _ = hh1_basis(Q2, GF(3), d)
            for v in basis.vectors:
                assert sigma(v) == v

    @pytest.mark.parametrize("quiver", [LOOP, Q2, Q4])
    @pytest.mark.parametrize("field", [QQ, GF(2), GF(5)])
    def test_rank_nullity_per_degree(self, quiver, field):
        # dim coker(id - sigma) + dim ker(id - sigma) == dim of the cycle space
        from quiverforge import linalg
        for d in range(1, 7):
            cycles = quiver.cycles_of_length(d)
            if not cycles:
                continue
            idx = {p: i for i, p in enumerate(cycles)}
            rows = []
            for p in cycles:
                x = AE.from_path(quiver, field, d + 1, p)
                diff = x - sigma(x)
                row = [field.zero] * len(cycles)
                for q, c in diff.terms.items():
                    row[idx[q]] = c
                rows.append(row)
            r = linalg.rank(rows, field)
            coker = len(cycles) - r
            ker = len(cycles) - r
            assert hh0_basis(quiver, field, d).dimension == coker
            assert hh1_basis(quiver, field, d)[0].dimension == ker


class TestConnesB:
    def test_loop_rational(self):
        w = AE.from_word(LOOP, QQ, 6, "1", ["b"] * 4)
        h = connes_B(w)
        assert h.rho["b"] == AE.from_word(LOOP, QQ, 5, "1", ["b"] * 3).scale(4)

    def test_loop_gf2_vanishes(self):
        w = AE.from_word(LOOP, GF(2), 6, "1", ["b"] * 4)
        assert connes_B(w).is_zero()

    def test_q4_square(self):
        w = AE.from_word(Q4, QQ, 10, "1", ["a1", "a2", "a3", "a4"] * 2)
        h = connes_B(w)
        expected = AE.from_word(Q4, QQ, 9, "2",
                                ["a2", "a3", "a4", "a1", "a2", "a3", "a4"]).scale(2)
        assert h.rho["a1"] == expected

    @pytest.mark.parametrize("quiver", [LOOP, Q2, Q4])
    @pytest.mark.parametrize("field", [QQ, GF(2), GF(3)])
    def test_equals_norm_map(self, quiver, field):
        # B of a cycle class, read as sum_a a*rho_a, is the norm of the cycle
        for d in range(1, 7):
            for orbitrep in hh0_basis(quiver, field, d).vectors:
                h = connes_B(orbitrep)
                got = h.hh1_element()
                assert got == norm_map(orbitrep).truncate(got.trunc)

    def test_output_is_valid_hyperpotential(self):
        for field in (QQ, GF(2), GF(5)):
            w = AE.from_word(Q4, field, 10, "1", ["a1", "a2", "a3", "a4"] * 2)
            assert connes_B(w).check().ok


class TestImageOfB:
    def test_gf2_no_preimage(self):
        h = AE.from_word(LOOP, GF(2), 6, "1", ["b"] * 4)
        ok, pre = in_image_of_B(h)
        assert not ok and pre is None

    def test_rational_preimage(self):
        h = AE.from_word(LOOP, QQ, 6, "1", ["b"] * 4)
        ok, pre = in_image_of_B(h)
        assert ok
        assert pre.element == AE.from_word(LOOP, QQ, 5, "1", ["b"] * 4).scale(QQ("1/4"))

    def test_zero_trivially_in_image(self):
        ok, pre = in_image_of_B(AE.zero(LOOP, GF(2), 5))
        assert ok and pre.is_zero()

    @pytest.mark.parametrize("quiver", [LOOP, Q2, Q4])
    def test_rational_surjectivity(self, quiver):
        # over Q every invariant of degree >= 1 has a preimage
        for d in range(1, 7):
            basis, _ = hh1_basis(quiver, QQ, d)
            for v in basis.vectors:
                ok, pre = in_image_of_B(v)
                assert ok
                assert norm_map(pre.element).truncate(d + 1) == v

    def test_gf3_norm_collapses_degree_six(self):
        # the degree-6 class scales by 6 == 0 mod 3: no preimage exists
        basis, _ = hh1_basis(LOOP, GF(3), 6)
        ok, pre = in_image_of_B(basis.vectors[0])
        assert not ok and pre is None

    def test_gf3_preimage_in_coprime_degree(self):
        basis, _ = hh1_basis(LOOP, GF(3), 5)
        ok, pre = in_image_of_B(basis.vectors[0])
        assert ok
        assert norm_map(pre.element).truncate(6) == basis.vectors[0]


def test_table_shape():
    rows = hochschild_table(LOOP, GF(2), 4)
    assert rows == [
        {"degree": 0, "hh0": 1, "hh1": 0, "B_rank": 0},
        {"degree": 1, "hh0": 1, "hh1": 1, "B_rank": 1},
        {"degree": 2, "hh0": 1, "hh1": 1, "B_rank": 0},
        {"degree": 3, "hh0": 1, "hh1": 1, "B_rank": 1},
        {"degree": 4, "hh0": 1, "hh1": 1, "B_rank": 0},
    ]


def test_b_rank_q4_gf2():
    # degree 8: the rotation class of the squared 4-cycle has orbit size 4,
    # so the norm sums 8/4 = 2 copies of the orbit sum: rank 0 over GF(2)
    assert b_rank(Q4, GF(2), 8) == 0
    assert b_rank(Q4, QQ, 8) == 1
    assert b_rank(Q4, GF(3), 8) == 1
