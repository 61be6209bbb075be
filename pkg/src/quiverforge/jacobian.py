"""Jacobian algebras as truncated quotients, the truncated cycle algebra
family, and the cycle-quiver potential analysis.

Finite-dimensionality certificate: working modulo length-d budgets, a single
stabilization step dim_d == dim_{d+1} proves m^d lies in the ideal plus
m^{d+1}; multiplying by the arrow ideal iterates this to arbitrary depth, so
in the complete quotient m^d lies in the closure of the ideal and the total
dimension equals dim_d.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from . import linalg
from .algebra import AlgebraElement
from .fields import Field, QQ, Scalar
from .hyperpotential import Hyperpotential, Potential, from_potential
from .quiver import Path, Quiver, cycle_quiver, g2_quiver


@dataclass
class QuotientBasis:
    """Per-budget dimensions of A/(I + m^d) and the stabilization verdict."""

    quiver: Quiver
    field: Field
    trunc: int
    dims: list[int] = dc_field(default_factory=list)  # index d-1 holds budget d
    stabilized: bool = False
    stabilized_at: Optional[int] = None
    dimension: Optional[int] = None
    basis: Optional[list[Path]] = None

    def to_json_obj(self) -> dict:
        obj = {
            "field": self.field.name,
            "trunc": self.trunc,
            "dims": list(self.dims),
            "stabilized": self.stabilized,
        }
        if self.stabilized:
            obj["dimension"] = self.dimension
            obj["basis"] = [{"start": p.start, "path": list(p.arrows)}
                            for p in (self.basis or [])]
        return obj


def quotient_dimensions(quiver: Quiver, field: Field, relations: Sequence[AlgebraElement],
                        n: int) -> QuotientBasis:
    """Dimensions of (paths of length < d) modulo the spanned ideal, d = 1..n."""
    if n < 2:
        raise ValueError("need truncation budget >= 2")
    rels = [r for r in relations if not r.is_zero()]
    for r in rels:
        if r.trunc < n:
            raise ValueError(
                f"relation known only modulo m^{r.trunc}, budget {n} requested")
    out = QuotientBasis(quiver, field, n)
    basis_at: dict[int, list[Path]] = {}
    for d in range(1, n + 1):
        paths = quiver.all_paths(d)
        idx = {p: i for i, p in enumerate(paths)}
        rows = []
        for r in rels:
            lmin = r.min_degree()
            budget = d - 1 - lmin
            if budget < 0:
                continue
            starts = {p.start for p in r.terms}
            ends = {quiver.path_end(p) for p in r.terms}
            relem = r.truncate(d) if r.trunc > d else r
            lefts = sorted({p for v in starts for p in quiver.paths_into(v, budget + 1)},
                           key=Path.sort_key)
            for p in lefts:
                left = AlgebraElement.from_path(quiver, field, d, p) * relem
                if left.is_zero():
                    continue
                rights = sorted(
                    {qq for v in ends
                     for qq in quiver.paths_from(v, budget + 1 - p.length)},
                    key=Path.sort_key)
                for q in rights:
                    vec = left * AlgebraElement.from_path(quiver, field, d, q)
                    if vec.is_zero():
                        continue
                    row = [field.zero] * len(paths)
                    for pp, c in vec.terms.items():
                        row[idx[pp]] = c
                    rows.append(row)
        ech, pivots = linalg.rref(rows, field)
        dim_d = len(paths) - len(pivots)
        out.dims.append(dim_d)
        basis_at[d] = [p for i, p in enumerate(paths) if i not in set(pivots)]
        if not out.stabilized and d >= 2 and out.dims[d - 2] == dim_d:
            out.stabilized = True
            out.stabilized_at = d - 1
            out.dimension = out.dims[d - 2]
            out.basis = basis_at[d - 1]
    return out


def jacobian_dimensions(h: Hyperpotential, n: Optional[int] = None) -> QuotientBasis:
    """Quotient by the closure of the ideal generated by the rho_a."""
    if n is None:
        n = h.trunc
    if n > h.trunc:
        raise ValueError(f"budget {n} exceeds hyperpotential truncation {h.trunc}")
    return quotient_dimensions(h.quiver, h.field,
                               [h.rho[a.name] for a in h.quiver.arrows], n)


# -- the truncated cycle algebra family ---------------------------------------

def _check_me(m: int, e: int):
    if m < 1 or e < 1 or m * e < 3:
        raise ValueError("need m, e >= 1 and m*e >= 3")


def truncated_cycle_hyperpotential(m: int, e: int, field: Field = QQ,
                                   trunc: Optional[int] = None) -> Hyperpotential:
    """On the m-cycle: rho for arrow a_i is the unique path of length m*e-1
    from vertex i+1 back to vertex i."""
    _check_me(m, e)
    if trunc is None:
        trunc = m * e + 3
    q = cycle_quiver(m)
    rho = {}
    for i in range(1, m + 1):
        start = str(i % m + 1)
        arrows = [f"a{(i + k - 1) % m + 1}" for k in range(1, m)]
        loop = [f"a{(i + k - 1) % m + 1}" for k in range(0, m)]
        word = arrows + loop * (e - 1)
        rho[f"a{i}"] = AlgebraElement.from_word(q, field, trunc, start, word)
    return Hyperpotential(q, field, trunc, rho)


def truncated_cycle_potential(m: int, e: int, field: Field = QQ,
                              trunc: Optional[int] = None) -> Potential:
    """The e-th power of the full cycle a1 a2 ... am."""
    _check_me(m, e)
    if trunc is None:
        trunc = m * e + 4
    q = cycle_quiver(m)
    word = [f"a{i}" for i in range(1, m + 1)] * e
    return Potential(AlgebraElement.from_word(q, field, trunc, "1", word))


def truncated_cycle_algebra(m: int, e: int, field: Field = QQ) -> QuotientBasis:
    """Basis: all paths of length < m*e - 1; dimension m(me-1).

    Constructed directly from the defining relations (all paths of length
    m*e - 1); agreement with the hyperpotential route is a test oracle.
    """
    _check_me(m, e)
    q = cycle_quiver(m)
    n = m * e + 2
    rels = []
    for v in q.vertices:
        for p in q.paths_from(v, m * e):
            if p.length == m * e - 1:
                rels.append(AlgebraElement.from_path(q, field, n, p))
    return quotient_dimensions(q, field, rels, n)


# -- potential analysis on the cycle quiver -----------------------------------

@dataclass
class CyclePotentialAnalysis:
    """Outcome of differentiating a series P with W = P(cycle)."""

    m: int
    coefficients: list[Scalar]
    finite: bool
    d: Optional[int] = None
    conclusive: bool = True

    @property
    def verdict(self) -> str:
        if not self.conclusive:
            return "inconclusive"
        if self.finite:
            return f"truncated_cycle({self.m},{self.d})"
        return "completed_path_algebra"

    def to_json_obj(self) -> dict:
        return {"m": self.m, "finite": self.finite, "d": self.d,
                "verdict": self.verdict, "conclusive": self.conclusive}


class InconclusiveTruncation(ValueError):
    pass


def analyze_cycle_potential(m: int, coefficients, field: Field,
                            truncated: bool = False) -> CyclePotentialAnalysis:
    """Classify the Jacobian quotient of W = sum_k c_k (cycle)^k on the m-cycle.

    The termwise derivative P'(x) = sum k c_k x^{k-1} decides everything: if
    it vanishes the quotient is the whole completed path algebra; otherwise
    the lowest surviving term k*c_k x^{k-1} gives the truncated cycle algebra
    with parameter d = k (never divisible by the characteristic, since
    k * c_k != 0 in the field).
    """
    coeffs = [field(c) for c in coefficients]
    if coeffs and coeffs[0]:
        raise ValueError("constant term is not a potential")
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if field(k) * c:
            if m * k - 1 < 1:
                raise ValueError("relation of length 0: degenerate potential")
            return CyclePotentialAnalysis(m, coeffs, True, d=k)
    if truncated:
        raise InconclusiveTruncation(
            "inconclusive at this truncation: derivative vanishes so far")
    return CyclePotentialAnalysis(m, coeffs, False)


def potential_to_series(w: Potential) -> list[Scalar]:
    """Collect a cycle-quiver potential into coefficients of cycle powers.

    Every cycle of length m*k on the m-cycle is a rotation of the k-th power
    of the full cycle, so the canonical-rotation form reads off directly.
    """
    q = w.quiver
    m = len(q.vertices)
    coeffs: dict[int, Scalar] = {}
    for p, c in w.element.terms.items():
        if p.length % m != 0:
            raise ValueError(f"cycle of length {p.length} on an {m}-cycle?")
        k = p.length // m
        coeffs[k] = coeffs.get(k, w.field.zero) + c
    top = max(coeffs) if coeffs else 0
    return [coeffs.get(k, w.field.zero) for k in range(top + 1)]


def analyze_potential(w: Potential, truncated: bool = False) -> CyclePotentialAnalysis:
    m = len(w.quiver.vertices)
    return analyze_cycle_potential(m, potential_to_series(w), w.field,
                                   truncated=truncated)


# -- the two-vertex example with a loop ----------------------------------------

def g2_hyperpotential(field: Field = QQ, trunc: int = 6) -> Hyperpotential:
    """On 1 -> 2 with loop b at 2: rho_b = b^3, rho_a = 0.  Valid in any field."""
    q = g2_quiver()
    rho = {"b": AlgebraElement.from_word(q, field, trunc, "2", ["b", "b", "b"])}
    return Hyperpotential(q, field, trunc, rho)


def g2_potential(field: Field = QQ, trunc: int = 7) -> Potential:
    """The fourth power of the loop; its derivative family is 4 b^3."""
    q = g2_quiver()
    return Potential(AlgebraElement.from_word(q, field, trunc, "2", ["b"] * 4))


def g2_algebra(field: Field = QQ) -> QuotientBasis:
    """Quotient of the two-vertex quiver by b^3: dimension 7."""
    return jacobian_dimensions(g2_hyperpotential(field), 6)
