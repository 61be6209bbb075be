"""Shared fixtures and independent oracles for the test suite."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from quiverforge.algebra import AlgebraElement, Substitution
from quiverforge.fields import GF, QQ
from quiverforge.mesh import (OrbitCategory, TranslationWindow, _rref_frac,
                              cycle_family_spec, g2_orbit_spec)
from quiverforge.quiver import Path, Quiver, cycle_quiver, g2_quiver, loop_quiver


# -- stock objects -----------------------------------------------------------

@pytest.fixture(scope="session")
def loop():
    return loop_quiver()


@pytest.fixture(scope="session")
def q2():
    return cycle_quiver(2)


@pytest.fixture(scope="session")
def q4():
    return cycle_quiver(4)


@pytest.fixture(scope="session")
def g2q():
    return g2_quiver()


@pytest.fixture(scope="session")
def g2_category():
    return OrbitCategory(g2_orbit_spec())


@pytest.fixture(scope="session")
def c42_category():
    return OrbitCategory(cycle_family_spec(4, 2))


# -- random generators (deterministic seeds; hypothesis covers the rest) ------

def random_scalar(rng: random.Random, field, nonzero=False):
    while True:
        if field is QQ:
            s = field(Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2, 3])))
        else:
            s = field(rng.randrange(field.characteristic))
        if s or not nonzero:
            return s


def random_element(rng: random.Random, quiver: Quiver, field, trunc: int,
                   max_terms: int = 4, min_len: int = 0, cycles_only=False):
    pool = []
    for v in quiver.vertices:
        for p in quiver.paths_from(v, trunc):
            if p.length < min_len:
                continue
            if cycles_only and (p.is_trivial or not quiver.is_cycle(p)):
                continue
            pool.append(p)
    out = AlgebraElement.zero(quiver, field, trunc)
    for _ in range(rng.randint(1, max_terms)):
        if not pool:
            break
        p = rng.choice(pool)
        out = out + AlgebraElement.from_path(quiver, field, trunc, p,
                                             random_scalar(rng, field))
    return out


def random_invertible_substitution(rng: random.Random, quiver: Quiver, field,
                                   trunc: int) -> Substitution:
    """Arrow images c*a + (higher terms in the same block), c a unit."""
    images = {}
    for a in quiver.arrows:
        img = AlgebraElement.from_path(
            quiver, field, trunc, Path(a.source, (a.name,)),
            random_scalar(rng, field, nonzero=True))
        for p in quiver.enumerate_paths(a.source, a.target, trunc):
            if p.length >= 2 and rng.random() < 0.4:
                img = img + AlgebraElement.from_path(quiver, field, trunc, p,
                                                     random_scalar(rng, field))
        images[a.name] = img
    return Substitution(quiver, quiver, field, trunc, images)


def random_block_pair(rng: random.Random, quiver: Quiver, field, trunc: int):
    """x supported on s->t paths, y on t->s paths: the commutator lemma's
    domain of validity (boundary idempotents act as identities there)."""
    s = rng.choice(quiver.vertices)
    t = rng.choice(quiver.vertices)
    xs = [p for p in quiver.enumerate_paths(s, t, trunc) if p.length >= 1]
    ys = quiver.enumerate_paths(t, s, trunc)
    x = AlgebraElement.zero(quiver, field, trunc)
    y = AlgebraElement.zero(quiver, field, trunc)
    for _ in range(rng.randint(1, 3)):
        if xs:
            x = x + AlgebraElement.from_path(quiver, field, trunc, rng.choice(xs),
                                             random_scalar(rng, field))
        if ys:
            y = y + AlgebraElement.from_path(quiver, field, trunc, rng.choice(ys),
                                             random_scalar(rng, field))
    return x, y


def commutator_lemma_lhs(quiver, field, trunc, x, y):
    """sum_a [a, Delta_a(x) <> y], computed at a fixed working truncation."""
    from quiverforge.algebra import commutator, double_derivation
    total = AlgebraElement.zero(quiver, field, trunc)
    for a in quiver.arrows:
        xa = AlgebraElement.from_word(quiver, field, trunc, a.source, [a.name])
        total = total + commutator(
            xa, double_derivation(x, a.name, trunc=trunc).diamond(y))
    return total


def commutator_lemma_sharp_rhs(quiver, field, trunc, x, y):
    """The boundary-corrected form sum_p c_p (p y e_{s(p)} - e_{t(p)} y p);
    equals [x, y] when x and y live on complementary blocks."""
    total = AlgebraElement.zero(quiver, field, trunc)
    for p, c in x.terms.items():
        pe = AlgebraElement.from_path(quiver, field, trunc, p)
        es = AlgebraElement.idempotent(quiver, field, trunc, p.start)
        et = AlgebraElement.idempotent(quiver, field, trunc, quiver.path_end(p))
        total = total + (pe * y * es - et * y * pe).scale(c)
    return total


# -- independent oracles -------------------------------------------------------

def brute_force_paths(quiver: Quiver, frm: str, to: str, max_len: int):
    """All walks as raw arrow-id products, independent of the BFS enumerator."""
    found = []
    for length in range(max_len):
        for combo in itertools.product([a.name for a in quiver.arrows],
                                       repeat=length):
            at = frm
            ok = True
            for name in combo:
                arr = quiver.arrow(name)
                if arr.source != at:
                    ok = False
                    break
                at = arr.target
            if ok and at == to:
                found.append(Path(frm, combo))
    return sorted(found, key=Path.sort_key)


def mesh_hom_dim_bruteforce(window: TranslationWindow, X, Y) -> int:
    """dim of (span of paths X->Y) / (mesh ideal), by literal elimination."""

    def paths(frm, to):
        out = []
        stack = [(frm, (frm,))]
        while stack:
            v, pth = stack.pop()
            if v == to:
                out.append(pth)
                continue
            if window.x(v) >= window.x(to):
                continue
            for w in window.out_neighbors(v):
                stack.append((w, pth + (w,)))
        return sorted(set(out))

    ps = paths(X, Y)
    if not ps:
        return 0
    idx = {p: i for i, p in enumerate(ps)}
    rows = []
    for Z in window.vertices():
        try:
            tv, mids = window.mesh(Z)
        except ValueError:
            continue
        for u in paths(X, tv):
            for w in paths(Z, Y):
                row = [Fraction(0)] * len(ps)
                for E in mids:
                    full = u + (E,) + w
                    if full in idx:
                        row[idx[full]] += 1
                if any(row):
                    rows.append(row)
    _, pivots = _rref_frac(rows)
    return len(ps) - len(pivots)
