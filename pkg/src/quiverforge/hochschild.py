"""Degreewise Hochschild data for truncated completed path algebras.

Everything is computed on the finite-dimensional graded piece of path length
d: HH0 in degree d is the cokernel of (id - sigma) on degree-d cycles
("cycles modulo rotation"), HH1 the kernel ("rotation-invariant
combinations"), and the degree-d component of Connes' map B is induced by
the norm map.  Rotation-invariant elements are in bijection with
hyperpotentials via ``h = sum_a a * rho_a``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from . import linalg
from .algebra import AlgebraElement, cyclic_derivative, norm_map, sigma
from .fields import Field
from .hyperpotential import Hyperpotential, Potential
from .quiver import Path, Quiver


@dataclass
class GradedSubspaceBasis:
    degree: int
    field: Field
    vectors: list[AlgebraElement] = dc_field(default_factory=list)

    def __post_init__(self):
        if self.vectors:
            paths = sorted({p for v in self.vectors for p in v.terms},
                           key=Path.sort_key)
            idx = {p: i for i, p in enumerate(paths)}
            rows = []
            for v in self.vectors:
                row = [self.field.zero] * len(paths)
                for p, c in v.terms.items():
                    row[idx[p]] = c
                rows.append(row)
            if linalg.rank(rows, self.field) != len(self.vectors):
                raise ValueError("basis vectors are linearly dependent")

    @property
    def dimension(self) -> int:
        return len(self.vectors)


def _rotation_classes(quiver: Quiver, d: int) -> list[list[Path]]:
    """Degree-d cycles partitioned into rotation orbits (lex-min rep first)."""
    cycles = quiver.cycles_of_length(d)
    seen: set[Path] = set()
    classes: list[list[Path]] = []
    for p in cycles:
        if p in seen:
            continue
        orbit = []
        cur = p
        for _ in range(max(1, p.length)):
            if cur in seen:
                break
            seen.add(cur)
            orbit.append(cur)
            cur = quiver.rotate_cycle(cur)
        orbit.sort(key=Path.sort_key)
        classes.append(orbit)
    classes.sort(key=lambda orb: orb[0].sort_key())
    return classes


def hh0_basis(quiver: Quiver, field: Field, d: int) -> GradedSubspaceBasis:
    """Degree-d piece of coker(id - sigma): one lex-minimal cycle per rotation class."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    trunc = d + 1
    if d == 0:
        vecs = [AlgebraElement.idempotent(quiver, field, trunc, v)
                for v in quiver.vertices]
        return GradedSubspaceBasis(d, field, vecs)
    vecs = [AlgebraElement.from_path(quiver, field, trunc, orb[0])
            for orb in _rotation_classes(quiver, d)]
    return GradedSubspaceBasis(d, field, vecs)


def hh1_basis(quiver: Quiver, field: Field, d: int
              ) -> tuple[GradedSubspaceBasis, list[Hyperpotential]]:
    """Degree-d piece of ker(id - sigma) on nontrivial cycles.

    Each basis vector is the orbit sum of a rotation class; it is returned
    together with its hyperpotential form, read off from ``sum_a a*rho_a``.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    trunc = d + 1
    basis_vectors = []
    hypers = []
    for orb in _rotation_classes(quiver, d):
        vec = AlgebraElement(quiver, field, trunc,
                             {p: field.one for p in orb})
        # solve nothing: the orbit sum spans the kernel on this orbit's span
        basis_vectors.append(vec)
        hypers.append(invariant_to_hyperpotential(vec))
    return GradedSubspaceBasis(d, field, basis_vectors), hypers


def invariant_to_hyperpotential(h: AlgebraElement) -> Hyperpotential:
    """Write a rotation-invariant element as sum_a a * rho_a and return (rho_a)."""
    q = h.quiver
    if sigma(h) != h:
        raise ValueError("element is not rotation-invariant")
    rho: dict[str, dict[Path, object]] = {a.name: {} for a in q.arrows}
    for p, c in h.terms.items():
        if p.is_trivial:
            raise ValueError("invariant element must be supported on nontrivial cycles")
        first = p.arrows[0]
        rest = Path(q.arrow(first).target, p.arrows[1:])
        rho[first][rest] = rho[first].get(rest, h.field.zero) + c
    n = max(1, h.trunc - 1)
    return Hyperpotential(
        q, h.field, n,
        {a: AlgebraElement(q, h.field, n, terms) for a, terms in rho.items()})


def connes_B(w: AlgebraElement) -> Hyperpotential:
    """Connes' map on a cycle class: the hyperpotential (d_a w)_a.

    As an invariant element this equals norm_map(w); both routes are exact.
    """
    q = w.quiver
    if not w.support_is_cycles():
        raise ValueError("connes_B expects a cycle-supported element")
    rho = {a.name: cyclic_derivative(w, a.name) for a in q.arrows}
    h = Hyperpotential(q, w.field, max(1, w.trunc - 1), rho)
    return h


def in_image_of_B(h: AlgebraElement, field: Optional[Field] = None
                  ) -> tuple[bool, Optional[Potential]]:
    """Decide whether a homogeneous rotation-invariant element is B of a cycle class.

    Solves B(x) = h over the degree-d rotation classes; returns a preimage
    potential when solvable.
    """
    if field is None:
        field = h.field
    q = h.quiver
    if h.is_zero():
        return True, Potential(AlgebraElement.zero(q, field, h.trunc))
    if not h.is_homogeneous() or not h.support_is_cycles():
        raise ValueError("expected a homogeneous cycle-supported element")
    if sigma(h) != h:
        raise ValueError("element is not rotation-invariant")
    d = h.min_degree()
    classes = _rotation_classes(q, d)
    cycles = q.cycles_of_length(d)
    idx = {p: i for i, p in enumerate(cycles)}

    def coords(x: AlgebraElement):
        row = [field.zero] * len(cycles)
        for p, c in x.terms.items():
            row[idx[p]] = c
        return row

    rows = []
    reps = []
    for orb in classes:
        rep = AlgebraElement.from_path(q, field, d + 1, orb[0])
        reps.append(rep)
        rows.append(coords(norm_map(rep)))
    sol = linalg.solve(rows, coords(h), field)
    if sol is None:
        return False, None
    pre = AlgebraElement.zero(q, field, d + 1)
    for c, rep in zip(sol, reps):
        pre = pre + rep.scale(c)
    return True, Potential(pre)


def b_rank(quiver: Quiver, field: Field, d: int) -> int:
    """Rank of the degree-d component of B over the given field."""
    if d < 1:
        return 0
    classes = _rotation_classes(quiver, d)
    cycles = quiver.cycles_of_length(d)
    idx = {p: i for i, p in enumerate(cycles)}
    rows = []
    for orb in classes:
        rep = AlgebraElement.from_path(quiver, field, d + 1, orb[0])
        row = [field.zero] * len(cycles)
        for p, c in norm_map(rep).terms.items():
            row[idx[p]] = c
        rows.append(row)
    return linalg.rank(rows, field) if rows else 0


def hochschild_table(quiver: Quiver, field: Field, max_degree: int) -> list[dict]:
    """Per-degree dimension rows {degree, hh0, hh1, B_rank}."""
    rows = []
    for d in range(max_degree + 1):
        hh0 = hh0_basis(quiver, field, d).dimension
        hh1 = hh1_basis(quiver, field, d)[0].dimension if d >= 1 else 0
        rows.append({"degree": d, "hh0": hh0, "hh1": hh1,
                     "B_rank": b_rank(quiver, field, d)})
    return rows
