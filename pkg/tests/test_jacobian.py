"""Quotient dimensions, the truncated cycle family, and potential analysis."""
import random

import pytest

from quiverforge.algebra import AlgebraElement as AE
from quiverforge.fields import GF, QQ
from quiverforge.hyperpotential import Hyperpotential, Potential, from_potential, transport
from quiverforge.jacobian import (InconclusiveTruncation, analyze_cycle_potential,
                                  analyze_potential, g2_algebra, g2_hyperpotential,
                                  g2_potential, jacobian_dimensions,
                                  truncated_cycle_algebra,
                                  truncated_cycle_hyperpotential,
                                  truncated_cycle_potential)
from quiverforge.quiver import cycle_quiver, loop_quiver

from conftest import random_invertible_substitution

LOOP = loop_quiver()


def path_count_oracle(m, e):
    """Independent dimension count: paths of length < me-1 on the m-cycle."""
    q = cycle_quiver(m)
    return sum(len(q.paths_from(v, m * e - 1)) for v in q.vertices)


class TestJacobianDimensions:
    def test_42_gf2(self):
        qb = jacobian_dimensions(truncated_cycle_hyperpotential(4, 2, GF(2)), 10)
        assert qb.stabilized and qb.dimension == 28
        assert qb.dims == [4, 8, 12, 16, 20, 24, 28, 28, 28, 28]

    def test_loop_cube(self):
        for field in (QQ, GF(2), GF(3)):
            h = Hyperpotential(LOOP, field, 6,
                               {"b": AE.from_word(LOOP, field, 6, "1", ["b"] * 3)})
            qb = jacobian_dimensions(h, 6)
            assert qb.stabilized and qb.dimension == 3
            assert [p.length for p in qb.basis] == [0, 1, 2]

    def test_zero_family_never_stabilizes(self):
        h = Hyperpotential(cycle_quiver(4), QQ, 9, {})
        qb = jacobian_dimensions(h, 9)
        assert not qb.stabilized
        assert qb.dims == [4 * d for d in range(1, 10)]

    def test_budget_exceeding_truncation_rejected(self):
        h = truncated_cycle_hyperpotential(4, 2, QQ)
        with pytest.raises(ValueError):
            jacobian_dimensions(h, h.trunc + 1)

    @pytest.mark.parametrize("m,e", [(m, e) for m in range(1, 6)
                                     for e in range(1, 5) if m * e >= 3])
    @pytest.mark.parametrize("field", [QQ, GF(2), GF(3), GF(5)])
    def test_family_dimension_formula(self, m, e, field):
        h = truncated_cycle_hyperpotential(m, e, field)
        qb = jacobian_dimensions(h, m * e + 2)
        assert qb.stabilized
        assert qb.dimension == m * (m * e - 1) == path_count_oracle(m, e)

    def test_direct_algebra_matches_hyperpotential_route(self):
        for m, e, field in [(3, 2, QQ), (4, 2, GF(2)), (2, 3, GF(3))]:
            direct = truncated_cycle_algebra(m, e, field)
            via_h = jacobian_dimensions(
                truncated_cycle_hyperpotential(m, e, field), m * e + 2)
            assert direct.dimension == via_h.dimension
            assert direct.basis == via_h.basis


class TestCharacteristicObstruction:
    def test_potential_vanishes_when_p_divides_e(self):
        for m, e, p in [(4, 2, 2), (3, 3, 3), (2, 2, 2)]:
            h = from_potential(truncated_cycle_potential(m, e, GF(p)))
            assert h.is_zero()
            qb = jacobian_dimensions(h, m * e + 2)
            assert not qb.stabilized

    def test_routes_agree_when_p_coprime_e(self):
        for m, e, p in [(4, 3, 2), (4, 2, 3), (2, 3, 2)]:
            field = GF(p)
            hp = from_potential(truncated_cycle_potential(m, e, field))
            hh = truncated_cycle_hyperpotential(m, e, field)
            qp = jacobian_dimensions(hp, m * e + 2)
            qh = jacobian_dimensions(hh, m * e + 2)
            assert qp.stabilized and qh.stabilized
            assert qp.dimension == qh.dimension == m * (m * e - 1)
            assert qp.basis == qh.basis

    def test_rational_route_always_works(self):
        hp = from_potential(truncated_cycle_potential(4, 2, QQ))
        assert jacobian_dimensions(hp, 10).dimension == 28


class TestCyclePotentialAnalysis:
    def test_square_over_q(self):
        a = analyze_cycle_potential(4, [0, 0, 1], QQ)
        assert a.finite and a.d == 2
        assert a.verdict == "truncated_cycle(4,2)"

    def test_square_over_gf2(self):
        a = analyze_cycle_potential(4, [0, 0, 1], GF(2))
        assert not a.finite
        assert a.verdict == "completed_path_algebra"

    def test_gf5_skips_killed_term(self):
        a = analyze_cycle_potential(1, [0, 0, 0, 0, 0, 1, 0, 1], GF(5))
        assert a.finite and a.d == 7

    def test_verdict_never_divisible_by_char(self):
        rng = random.Random(71)
        for _ in range(200):
            p = rng.choice([2, 3, 5])
            coeffs = [0] + [rng.randrange(p) for _ in range(rng.randint(1, 8))]
            try:
                a = analyze_cycle_potential(3, coeffs, GF(p))
            except ValueError:
                continue
            if a.finite:
                assert a.d % p != 0

    def test_inconclusive_truncation(self):
        with pytest.raises(InconclusiveTruncation):
            analyze_cycle_potential(4, [0, 0, 2], GF(2), truncated=True)

    def test_constant_term_rejected(self):
        with pytest.raises(ValueError):
            analyze_cycle_potential(4, [1, 0, 1], QQ)

    def test_potential_collection(self):
        w = truncated_cycle_potential(4, 2, QQ)
        a = analyze_potential(w)
        assert a.finite and a.d == 2

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_base_arrow_independence(self, m):
        # rotating every term of W leaves the analysis unchanged
        q = cycle_quiver(m)
        rng = random.Random(73)
        for _ in range(10):
            terms = AE.zero(q, QQ, 3 * m + 1)
            coeffs = {0: 0, 1: 0, 2: 0, 3: 0}
            for k in (1, 2, 3):
                if rng.random() < 0.7:
                    c = rng.randint(-2, 2)
                    word = [f"a{i}" for i in range(1, m + 1)] * k
                    start = rng.randrange(m) + 1
                    rot = word[start - 1:] + word[:start - 1]
                    terms = terms + AE.from_word(q, QQ, 3 * m + 1, str(start),
                                                 rot, c)
                    coeffs[k] += c
            if terms.is_zero():
                continue
            expected = analyze_cycle_potential(
                m, [coeffs[k] for k in range(4)], QQ)
            assert analyze_potential(Potential(terms)).verdict == expected.verdict


class TestG2Algebra:
    @pytest.mark.parametrize("field", [QQ, GF(2), GF(3)])
    def test_dimension_seven(self, field):
        qb = g2_algebra(field)
        assert qb.stabilized and qb.dimension == 7

    def test_basis_words(self):
        qb = g2_algebra(QQ)
        words = sorted((p.start, p.arrows) for p in qb.basis)
        assert words == [("1", ()), ("1", ("a",)), ("1", ("a", "b")),
                         ("1", ("a", "b", "b")), ("2", ()), ("2", ("b",)),
                         ("2", ("b", "b"))]

    def test_rational_potential_route(self):
        h = from_potential(g2_potential(QQ))
        assert jacobian_dimensions(h, 6).dimension == 7

    def test_gf2_hyperpotential_route(self):
        assert g2_hyperpotential(GF(2)).check().ok
        assert jacobian_dimensions(g2_hyperpotential(GF(2)), 6).dimension == 7

    def test_gf2_potential_fails(self):
        h = from_potential(g2_potential(GF(2)))
        assert h.is_zero()


class TestTransportInvariance:
    @pytest.mark.parametrize("field", [QQ, GF(3)])
    def test_dims_invariant_under_invertible_transport(self, field):
        rng = random.Random(79)
        for m, e in [(1, 4), (3, 2)]:
            h = truncated_cycle_hyperpotential(m, e, field)
            for _ in range(5):
                phi = random_invertible_substitution(rng, h.quiver, field, h.trunc)
                qb1 = jacobian_dimensions(h, m * e + 2)
                qb2 = jacobian_dimensions(transport(phi, h), m * e + 2)
                assert qb1.dims == qb2.dims
                assert qb1.dimension == qb2.dimension


def test_json_report():
    qb = jacobian_dimensions(truncated_cycle_hyperpotential(1, 4, GF(2)), 6)
    obj = qb.to_json_obj()
    assert obj["stabilized"] is True
    assert obj["dimension"] == 3
    assert obj["dims"][:4] == [1, 2, 3, 3]
    assert {"start": "1", "path": ["a1"]} in obj["basis"]
